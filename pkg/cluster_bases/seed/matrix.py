"""Exchange-matrix mutation and compatibility of quantization matrices."""

import itertools
import logging
from collections.abc import Sequence
from math import gcd, lcm

import sympy

from cluster_bases.lattice import b_tilde_rank
from cluster_bases.ring import Matrix, VertexRangeError

from .base import (
    FrozenVertexError,
    IncompatibleLambdaError,
    LambdaSearchError,
    RankDeficiencyError,
    SkewSymmetrizabilityError,
)

logger = logging.getLogger(__name__)

SEARCH_RADIUS = 2


def mutate_b(b_full: Matrix, k: int, unfrozen: Sequence[int] | None = None) -> Matrix:
    size = len(b_full)
    if not 0 <= k < size:
        raise VertexRangeError(f"vertex out of range: index {k} for a {size}x{size} matrix")
    if unfrozen is not None and k not in unfrozen:
        raise FrozenVertexError(f"vertex index {k} is frozen")
    return tuple(
        tuple(
            -b_full[i][j]
            if k in (i, j)
            else b_full[i][j] + b_full[i][k] * max(b_full[k][j], 0) + max(-b_full[i][k], 0) * b_full[k][j]
            for j in range(size)
        )
        for i in range(size)
    )


def check_skew_symmetrizable(b_full: Matrix, d: Sequence[int]) -> None:
    size = len(d)
    if len(b_full) != size or any(len(row) != size for row in b_full):
        raise SkewSymmetrizabilityError(f"b must be a {size}x{size} matrix")
    for i in range(size):
        for j in range(i, size):
            if b_full[i][j] * d[j] != -b_full[j][i] * d[i]:
                raise SkewSymmetrizabilityError(
                    f"b is not skew-symmetrizable at ({i},{j}): b[{i}][{j}]={b_full[i][j]}, b[{j}][{i}]={b_full[j][i]}"
                )


def check_full_rank(b_full: Matrix, unfrozen: Sequence[int]) -> None:
    rank = b_tilde_rank(b_full, unfrozen)
    if rank != len(unfrozen):
        raise RankDeficiencyError(f"extended exchange matrix has rank {rank}, expected {len(unfrozen)}")


def check_compatibility(lam: Matrix, b_full: Matrix, unfrozen: Sequence[int]) -> tuple[int, ...]:
    """Verify Λ B~ = -diag(δ) stacked over zero and return δ."""
    size = len(b_full)
    delta = []
    for k in unfrozen:
        for i in range(size):
            pairing = sum(lam[i][j] * b_full[j][k] for j in range(size))
            if i == k:
                if pairing >= 0:
                    raise IncompatibleLambdaError(f"delta at ({i},{k}) is {-pairing}, must be positive")
                delta.append(-pairing)
            elif pairing:
                raise IncompatibleLambdaError(f"pairing at ({i},{k}) is {pairing}, must vanish")
    return tuple(delta)


def _integer_vector(vector: sympy.Matrix) -> list[int]:
    scale = lcm(*[int(sympy.fraction(x)[1]) for x in vector])
    values = [int(x * scale) for x in vector]
    common = gcd(*values) or 1
    return [x // common for x in values]


def find_compatible_lambda(b_full: Matrix, unfrozen: Sequence[int]) -> Matrix:
    """Smallest compatible Λ: minimal Σδ, then minimal δ, then lexicographically smallest Λ."""
    size = len(b_full)
    unfrozen = tuple(unfrozen)
    if not unfrozen:
        raise LambdaSearchError("no unfrozen vertices to quantize")
    check_full_rank(b_full, unfrozen)
    pairs = list(itertools.combinations(range(size), 2))
    columns = len(pairs) + len(unfrozen)
    rows = []
    for position, k in enumerate(unfrozen):
        for i in range(size):
            row = [0] * columns
            for p, (a, b) in enumerate(pairs):
                if a == i:
                    row[p] += b_full[b][k]
                elif b == i:
                    row[p] -= b_full[a][k]
            if i == k:
                row[len(pairs) + position] = 1
            rows.append(row)
    basis = [_integer_vector(v) for v in sympy.Matrix(rows).nullspace()]
    if not basis:
        raise LambdaSearchError("the compatibility system has no nonzero solution")
    radius = SEARCH_RADIUS if len(basis) <= 6 else 1
    best: tuple | None = None
    for weights in itertools.product(range(-radius, radius + 1), repeat=len(basis)):
        if not any(weights):
            continue
        solution = [sum(w * v[c] for w, v in zip(weights, basis)) for c in range(columns)]
        delta = solution[len(pairs) :]
        if any(x <= 0 for x in delta):
            continue
        common = gcd(*solution)
        solution = [x // common for x in solution]
        delta = tuple(solution[len(pairs) :])
        key = (sum(delta), delta, tuple(solution[: len(pairs)]))
        if best is None or key < best:
            best = key
    if best is None:
        raise LambdaSearchError(f"no integer solution with positive delta within radius {radius}")
    lam = [[0] * size for _ in range(size)]
    for (a, b), value in zip(pairs, best[2]):
        lam[a][b], lam[b][a] = value, -value
    logger.info("found compatible lambda with delta %s", list(best[1]))
    return tuple(tuple(row) for row in lam)
