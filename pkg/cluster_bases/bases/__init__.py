"""Chebyshev and annulus bases, distinguished functions and the triangular-basis verifier."""

from .annulus import KRONECKER_B, annulus_element, loop_element
from .base import (
    AnnulusKind,
    ChebyshevKind,
    DegreeAdjustmentError,
    DistinguishedExpansion,
    MemberVerdict,
    NotExpandableError,
    SeedShapeError,
    TriangularReport,
    Verdict,
)
from .chebyshev import chebyshev, evaluate
from .distinguished import DistinguishedFunctions, distinguished_function, expand_in_distinguished, reassemble
from .triangular import verify_triangular

__all__ = [
    "KRONECKER_B",
    "AnnulusKind",
    "ChebyshevKind",
    "DegreeAdjustmentError",
    "DistinguishedExpansion",
    "DistinguishedFunctions",
    "MemberVerdict",
    "NotExpandableError",
    "SeedShapeError",
    "TriangularReport",
    "Verdict",
    "annulus_element",
    "chebyshev",
    "distinguished_function",
    "evaluate",
    "expand_in_distinguished",
    "loop_element",
    "reassemble",
    "verify_triangular",
]
