"""Point counts of quiver Grassmannians and their Euler characteristics."""

import logging
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from math import prod

import sympy
import tenacity
from sympy.polys.polyfuncs import interpolate

from cluster_bases.errors import InvalidArgumentError
from cluster_bases.settings import get_settings

from .base import (
    BadReductionError,
    EnumerationBudgetError,
    InterpolationError,
    QuiverRep,
    from_sympy,
    to_sympy,
    topological_order,
)
from .finite_field import contains, echelon, gaussian_binomial, images, rank_mod_p, reduce_matrix, subspaces
from .injective import hom_system

logger = logging.getLogger(__name__)

q = sympy.Symbol("q")


def _check_dimension_vector(rep: QuiverRep, n: Sequence[int]) -> tuple[int, ...]:
    n = tuple(n)
    if len(n) != len(rep.dims) or any(not 0 <= a <= d for a, d in zip(n, rep.dims)):
        raise InvalidArgumentError(f"dimension vector {list(n)} does not fit inside {list(rep.dims)}")
    return n


def submodule_count(rep: QuiverRep, n: Sequence[int], budget: int | None = None) -> int:
    """Number of F_p-points of the quiver Grassmannian of ``n``-dimensional subrepresentations."""
    if rep.field is None:
        raise InvalidArgumentError("submodule_count needs a representation over a prime field")
    p = rep.field
    n = _check_dimension_vector(rep, n)
    budget = budget if budget is not None else get_settings().enumeration_budget
    quiver = rep.quiver
    matrices = [reduce_matrix(m, p) for m in rep.maps]
    order = topological_order(quiver)
    branching = [x for x in order if quiver.outgoing(x)]
    sinks = [x for x in order if not quiver.outgoing(x)]
    estimate = prod(gaussian_binomial(rep.dims[x], n[x], p) for x in branching)
    if estimate > budget:
        raise EnumerationBudgetError(f"{estimate} subspace tuples over F_{p} exceed the budget of {budget}")

    chosen: dict[int, list[list[int]]] = {}

    def required(x: int) -> list[list[int]]:
        vectors = [v for a in quiver.incoming(x) for v in images(matrices[a], chosen[quiver.arrows[a][0]], p)]
        return echelon(vectors, p) if vectors else []

    def count(position: int) -> int:
        if position == len(branching):
            total = 1
            for x in sinks:
                w = len(required(x))
                total *= gaussian_binomial(rep.dims[x] - w, n[x] - w, p)
                if not total:
                    break
            return total
        x = branching[position]
        needed = required(x)
        if len(needed) > n[x]:
            return 0
        total = 0
        for basis in subspaces(rep.dims[x], n[x], p):
            if contains(basis, needed, p):
                chosen[x] = basis
                total += count(position + 1)
        chosen.pop(x, None)
        return total

    return count(0)


@lru_cache(maxsize=64)
def _rational_ranks(rep: QuiverRep) -> tuple[tuple[int, ...], int]:
    arrow_ranks = tuple(to_sympy(m, len(m), len(m[0])).rank() if m and m[0] else 0 for m in rep.maps)
    system = hom_system(rep, rep)
    return arrow_ranks, (system.rank() if system.rows and system.cols else 0)


@lru_cache(maxsize=1024)
def reduce_rep(rep: QuiverRep, p: int) -> QuiverRep:
    """Reduction modulo ``p``; raises BadReductionError when ranks or endomorphisms change."""
    maps = tuple(tuple(tuple(Fraction(x) for x in row) for row in reduce_matrix(m, p)) for m in rep.maps)
    arrow_ranks, end_rank = _rational_ranks(rep)
    for a, (matrix, expected) in enumerate(zip(maps, arrow_ranks)):
        if matrix and matrix[0] and rank_mod_p([[int(x) for x in row] for row in matrix], p) != expected:
            raise BadReductionError(f"arrow {a} changes rank modulo {p}")
    system = hom_system(rep, rep)
    if system.rows and system.cols:
        if rank_mod_p(reduce_matrix(from_sympy(system), p), p) != end_rank:
            raise BadReductionError(f"endomorphism algebra changes modulo {p}")
    return QuiverRep(rep.quiver, rep.dims, maps, field=p)


def _point_counts(rep: QuiverRep, n: tuple[int, ...], needed: int, start: int, budget: int) -> tuple[list, int]:
    points = []
    p = start
    while len(points) < needed:
        p = sympy.nextprime(p)
        try:
            reduced = reduce_rep(rep, p)
        except BadReductionError as e:
            logger.debug("skipping prime %d: %s", p, e)
            continue
        points.append((p, submodule_count(reduced, n, budget)))
    return points, p


def _fit(points: list[tuple[int, int]], degree: int) -> sympy.Poly:
    fitted = sympy.Poly(interpolate(points[:-1], q), q) if len(points) > 2 else sympy.Poly(points[0][1], q)
    if fitted.degree() > degree or any(not c.is_integer for c in fitted.all_coeffs()):
        raise BadReductionError(f"point counts {points} do not fit an integer polynomial of degree <= {degree}")
    check_p, check_count = points[-1]
    if fitted.eval(check_p) != check_count:
        raise BadReductionError(f"point count {check_count} at {check_p} disagrees with {fitted.as_expr()}")
    return fitted


def counting_polynomial(
    rep: QuiverRep, n: Sequence[int], attempts: int | None = None, budget: int | None = None
) -> sympy.Poly:
    settings = get_settings()
    attempts = attempts if attempts is not None else settings.prime_attempts
    budget = budget if budget is not None else settings.enumeration_budget
    n = _check_dimension_vector(rep, n)
    degree = sum(a * (d - a) for a, d in zip(n, rep.dims))
    start = 1
    try:
        for attempt in tenacity.Retrying(
            stop=tenacity.stop_after_attempt(attempts),
            retry=tenacity.retry_if_exception_type(BadReductionError),
            reraise=True,
        ):
            with attempt:
                points, start = _point_counts(rep, n, degree + 2, start, budget)
                logger.debug("counts for n=%s: %s", list(n), points)
                fitted = _fit(points, degree)
    except BadReductionError as e:
        raise InterpolationError(f"no counting polynomial for n={list(n)} after {attempts} prime windows: {e}") from e
    return fitted


def euler_char(rep: QuiverRep, n: Sequence[int], attempts: int | None = None, budget: int | None = None) -> int:
    """Euler characteristic of the quiver Grassmannian, as the counting polynomial at q = 1."""
    return int(counting_polynomial(rep, n, attempts, budget).eval(1))
