"""Coherent interaction graphs: execution, orthogonality and cographic proof nets."""
from .coherence import (
    CoherenceRelation,
    CoherentGraph,
    chordless_coherence,
    coh_plus,
    coh_with,
    is_clique,
    is_simple,
    maximal_cliques,
    simple_coherence,
)
from .conducts import (
    Generator,
    boxplus,
    canonical_form,
    conduct_par_test,
    conduct_tensor_test,
    equiv_R,
    is_principal_generator,
    linear_apply,
    member_of,
    par_graph,
    tensor_graph,
)
from .errors import *  # noqa: F401,F403
from .execution import (
    ExecutedGraph,
    Walk,
    coherent_cycles,
    coherent_walks,
    cycle_witness,
    execute,
    execute_simple,
    orthogonal,
    orthogonal_simple,
)
from .graph import DirectedMultigraph, Plugging, graphs_equiv, plug, plug3, rename_vertices

__version__ = "0.1.0"
