"""Exact Minkowski arithmetic on lattice polytopes."""

from ._polynorm import (
    Polytope,
    PolynormError,
    decompose,
    element_eq,
    is_integral_norm,
    newton_polytope,
    norm_difference,
    verify_norm_identity,
)

__all__ = [
    "Polytope",
    "PolynormError",
    "decompose",
    "element_eq",
    "is_integral_norm",
    "newton_polytope",
    "norm_difference",
    "verify_norm_identity",
]
