"""Equitable (ceil(delta/2)+1)-colorings of bipartite graphs."""

from ._core import (
    Coloring,
    ColoringParameters,
    Constants,
    Cover,
    DegreeTooSmall,
    Error,
    FeasibilityReport,
    Graph,
    Infeasible,
    InfeasibleSplit,
    InvalidEdge,
    NormalizedForm,
    OddCycle,
    ParseError,
    PreconditionViolation,
    SizeMismatch,
    TooLarge,
    VerificationReport,
    ZetaTooSmall,
    brute_chi_e,
    brute_equitable_k,
    brute_normal_forms,
    color_equitably,
    compute_constants,
    derive_parameters,
    generate,
    hypotheses_hold,
    normalize,
    split,
    verify,
    verify_colors,
)

__all__ = [name for name in dir() if not name.startswith("_")]
