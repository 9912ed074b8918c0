"""Exception hierarchy shared by every module of the package."""


class CigError(Exception):
    """Base class for all errors raised by ``cig``."""


class DelocationError(CigError):
    """A vertex renaming is partial or not injective."""


class WebError(CigError):
    """An element or pair does not belong to the web of a coherence relation."""


class InterfaceError(CigError):
    """Two graphs do not share the vertex set an operation requires."""


class LocationError(CigError):
    """Two graphs that must be vertex-disjoint overlap; delocate one first."""


class DivergentExecution(CigError):
    """Execution would contain infinitely many edges.

    Raised when a coherent alternating walk between boundary vertices can be
    pumped through a coherent alternating cycle. ``walk`` is the prefix that
    first re-entered an edge and ``cycle`` the pumpable segment.
    """

    def __init__(self, message, walk=None, cycle=None):
        super().__init__(message)
        self.walk = walk
        self.cycle = cycle


class NotOrthogonalError(CigError):
    """A required orthogonality fails; ``witness`` is a coherent alternating cycle."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FormulaSyntaxError(CigError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class LinkError(CigError):
    """Axiom links do not form a perfect matching of the leaves."""


class DualityError(CigError):
    """Two linked leaves do not carry dual atoms."""


class CycleError(CigError):
    """Cut elimination met an alternating cycle between the two matchings."""

    def __init__(self, message, cycle=None):
        super().__init__(message)
        self.cycle = cycle


class FormatError(CigError):
    """Malformed ``.cig`` graph file or command-line value."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
