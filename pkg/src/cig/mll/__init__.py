from .formula import Atom, Formula, Par, Tensor, dual, leaves, parse_formula, to_text
from .proofnet import (
    CographicProof,
    Matching,
    Verdict,
    admissible_matchings,
    build_proof,
    check_correctness,
    cut_eliminate,
    formula_cograph,
    nondet_proof,
)
from .sequent import sequent_oracle

__all__ = [
    "Atom", "CographicProof", "Formula", "Matching", "Par", "Tensor", "Verdict",
    "admissible_matchings", "build_proof", "check_correctness", "cut_eliminate", "dual",
    "formula_cograph", "leaves", "nondet_proof", "parse_formula", "sequent_oracle", "to_text",
]
