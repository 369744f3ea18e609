"""Exact solves against the extended exchange matrix B~ and pointed decompositions."""

from collections.abc import Sequence
from functools import lru_cache
from typing import NamedTuple

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from cluster_bases.errors import ClusterError
from cluster_bases.ring import Exponent, Matrix, ScalarPoly, TorusElement


class NotPointedError(ClusterError):
    pass


class PointedDecomposition(NamedTuple):
    g: Exponent
    "Extended degree (g-vector) of the element."
    f_poly: dict[tuple[int, ...], ScalarPoly]
    "Coefficient of Y^n for n in N^unfrozen; the constant term is 1."


def extended_columns(b_full: Matrix, unfrozen: Sequence[int]) -> tuple[Exponent, ...]:
    """Columns of B~, one per unfrozen vertex."""
    return tuple(tuple(row[k] for row in b_full) for k in unfrozen)


def b_tilde_rank(b_full: Matrix, unfrozen: Sequence[int]) -> int:
    if not unfrozen:
        return 0
    return sympy.Matrix([[row[k] for k in unfrozen] for row in b_full]).rank()


@lru_cache(maxsize=512)
def _left_inverse(b_full: Matrix, unfrozen: tuple[int, ...]) -> DomainMatrix:
    b_tilde = DomainMatrix.from_list([[row[k] for k in unfrozen] for row in b_full], QQ)
    return (b_tilde.transpose() * b_tilde).inv() * b_tilde.transpose()


def _rational_offset(inverse: DomainMatrix, delta: Exponent) -> tuple:
    """Least-squares n with B~ n = delta, entries in QQ."""
    return tuple((inverse * DomainMatrix.from_list([[d] for d in delta], QQ)).to_list_flat())


def solve_offset(delta: Exponent, b_full: Matrix, unfrozen: tuple[int, ...]) -> tuple[int, ...] | None:
    """Return the integer n with B~ n == delta, or None when there is none."""
    if not unfrozen:
        return () if not any(delta) else None
    n = _rational_offset(_left_inverse(b_full, unfrozen), delta)
    if any(x.denominator != 1 for x in n):
        return None
    result = tuple(int(x) for x in n)
    columns = extended_columns(b_full, unfrozen)
    image = tuple(sum(c[i] * x for c, x in zip(columns, result)) for i in range(len(delta)))
    if image != tuple(delta):
        return None
    return result


def apply_b(n: Sequence[int], b_full: Matrix, unfrozen: Sequence[int]) -> Exponent:
    return tuple(sum(row[k] * x for k, x in zip(unfrozen, n)) for row in b_full)


def decompose(z: TorusElement, b_full: Matrix, unfrozen: tuple[int, ...]) -> PointedDecomposition:
    """Find the degree dominating the whole support of ``z`` and the F-polynomial around it."""
    if not z:
        raise NotPointedError("the zero element is not pointed")
    support = z.support()
    base = support[0]
    if not unfrozen:
        if len(support) > 1:
            raise NotPointedError(f"{len(support)} terms but no unfrozen direction to dominate them")
        offsets = {base: ()}
    else:
        inverse = _left_inverse(b_full, unfrozen)
        offsets = {}
        for m in support:
            delta = tuple(a - b for a, b in zip(m, base))
            offsets[m] = _rational_offset(inverse, delta)
    lowest = tuple(min(values) for values in zip(*offsets.values())) if unfrozen else ()
    candidates = [m for m, n in offsets.items() if n == lowest]
    if len(candidates) != 1:
        raise NotPointedError(f"no support exponent of {z.render()} dominates all others")
    (g,) = candidates
    f_poly: dict[tuple[int, ...], ScalarPoly] = {}
    for m, coeff in z.items():
        n = solve_offset(tuple(a - b for a, b in zip(m, g)), b_full, unfrozen)
        if n is None or any(x < 0 for x in n):
            raise NotPointedError(f"X{list(m)} is not of the form X^g Y^n with n >= 0 for g = {list(g)}")
        f_poly[n] = coeff
    if z.coefficient(g) != 1:
        raise NotPointedError(f"leading coefficient {z.coefficient(g).render()} at {list(g)} is not 1")
    return PointedDecomposition(g=g, f_poly=f_poly)


def dominates(lower: Exponent, upper: Exponent, b_full: Matrix, unfrozen: tuple[int, ...]) -> bool:
    """True iff lower = upper + B~ n for some nonzero n >= 0."""
    n = solve_offset(tuple(a - b for a, b in zip(lower, upper)), b_full, unfrozen)
    return n is not None and all(x >= 0 for x in n) and any(n)


def offset_norm(lower: Exponent, upper: Exponent, b_full: Matrix, unfrozen: tuple[int, ...]) -> int | None:
    """|n|_1 of the dominance offset, None when lower is not upper + B~ N^unfrozen."""
    n = solve_offset(tuple(a - b for a, b in zip(lower, upper)), b_full, unfrozen)
    if n is None or any(x < 0 for x in n):
        return None
    return sum(n)
