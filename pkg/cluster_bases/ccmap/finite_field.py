"""Linear algebra over prime fields F_p, on sympy's GF(p) domain matrices."""

import itertools
from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache

from sympy import GF
from sympy.polys.domains import FiniteField
from sympy.polys.matrices import DomainMatrix

from .base import BadReductionError, RationalMatrix

Rows = list[list[int]]


@lru_cache(maxsize=64)
def prime_field(p: int) -> FiniteField:
    return GF(p, symmetric=False)


def _domain(rows: Sequence[Sequence[int]], p: int, width: int) -> DomainMatrix:
    field = prime_field(p)
    return DomainMatrix([[field(x) for x in row] for row in rows], (len(rows), width), field)


def _rows(matrix: DomainMatrix) -> Rows:
    return [[int(x) for x in row] for row in matrix.to_list()]


def reduce_matrix(matrix: RationalMatrix, p: int) -> Rows:
    field = prime_field(p)
    rows = []
    for row in matrix:
        reduced = []
        for x in row:
            x = Fraction(x)
            if x.denominator % p == 0:
                raise BadReductionError(f"denominator {x.denominator} vanishes modulo {p}")
            reduced.append(int(field(x.numerator) / field(x.denominator)))
        rows.append(reduced)
    return rows


def echelon(rows: Sequence[Sequence[int]], p: int) -> Rows:
    """Reduced row echelon basis of the row span, zero rows dropped."""
    if not rows:
        return []
    reduced, pivots = _domain(rows, p, len(rows[0])).rref()
    return _rows(reduced)[: len(pivots)]


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    return _domain(rows, p, len(rows[0])).rank()


def images(matrix: Rows, vectors: Rows, p: int) -> Rows:
    """Images of ``vectors`` under ``matrix``, one row per vector."""
    if not matrix or not vectors:
        return []
    product = _domain(vectors, p, len(vectors[0])) * _domain(matrix, p, len(matrix[0])).transpose()
    return _rows(product)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    numerator, denominator = 1, 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def subspaces(n: int, k: int, p: int) -> Iterator[Rows]:
    """Every k-dimensional subspace of F_p^n, once each, as its RREF basis."""
    if k == 0:
        yield []
        return
    for pivots in itertools.combinations(range(n), k):
        free = [(r, c) for r, pivot in enumerate(pivots) for c in range(pivot + 1, n) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            basis = [[0] * n for _ in range(k)]
            for r, pivot in enumerate(pivots):
                basis[r][pivot] = 1
            for (r, c), value in zip(free, values):
                basis[r][c] = value
            yield basis


def contains(basis: Rows, vectors: Rows, p: int) -> bool:
    if not vectors:
        return True
    return rank_mod_p(basis + vectors, p) == len(basis)
