"""Exact computations with finite-dimensional Hopf and Frobenius categories over the rationals."""

from .linalg import Q, NoSolution, NotInvertible
from .vcat import AxiomReport, AxiomSet, MissingLayer, VCatData, VGraphShape, verify_axioms

__all__ = [
    "Q",
    "NoSolution",
    "NotInvertible",
    "AxiomReport",
    "AxiomSet",
    "MissingLayer",
    "VCatData",
    "VGraphShape",
    "verify_axioms",
]
