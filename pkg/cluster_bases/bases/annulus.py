"""Bangles, bracelets and bands around the core of the annulus, in the Kronecker chart."""

from cluster_bases.errors import InvalidArgumentError
from cluster_bases.ring import TorusElement
from cluster_bases.seed import Seed, local_frame

from .base import AnnulusKind, ChebyshevKind, SeedShapeError
from .chebyshev import chebyshev, evaluate

KRONECKER_B = ((0, -2), (2, 0))


def loop_element(s: Seed) -> TorusElement:
    if s.b_full != KRONECKER_B or s.unfrozen != (0, 1):
        raise SeedShapeError(f"expected the coefficient-free Kronecker seed, got b={[list(r) for r in s.b_full]}")
    return TorusElement(local_frame(s), {(1, -1): 1, (-1, -1): 1, (-1, 1): 1})


def annulus_element(kind: AnnulusKind, k: int, s: Seed) -> TorusElement:
    if k <= 0:
        raise InvalidArgumentError(f"curve multiplicity must be positive, got {k}")
    loop = loop_element(s)
    kind = AnnulusKind(kind)
    if kind is AnnulusKind.BANGLE:
        return loop**k
    if kind is AnnulusKind.BRACELET:
        return evaluate(chebyshev(ChebyshevKind.FIRST, k), loop)
    return evaluate(chebyshev(ChebyshevKind.SECOND, k), loop)
