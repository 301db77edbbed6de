"""Kirillov-Reshetikhin crystals of types D_n^(1), B_n^(1) and A_{2n-1}^(2)."""

from ._core import (
    AmbiguousMatching,
    KRCrystal,
    ResourceLimit,
    check_axioms,
    check_containment,
    check_sigma,
    decompose_diagrammatic,
    fermionic_table,
    graph_to_dot,
    norm_eu,
    norm_sweep,
    norm_u,
    verify_rigidity,
)

__all__ = [
    "AmbiguousMatching",
    "KRCrystal",
    "ResourceLimit",
    "check_axioms",
    "check_containment",
    "check_sigma",
    "decompose_diagrammatic",
    "fermionic_table",
    "graph_to_dot",
    "norm_eu",
    "norm_sweep",
    "norm_u",
    "verify_rigidity",
]
