"""Injective representations, homomorphism spaces, kernels and injective copresentations."""

from collections.abc import Sequence
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

import networkx as nx
import sympy

from cluster_bases.errors import ClusterError

from .base import Quiver, QuiverMismatchError, QuiverRep, RationalMatrix, from_sympy, to_sympy, topological_order

Hom = tuple[RationalMatrix, ...]
"One matrix per vertex, each dims_W[x] x dims_V[x]."


class Copresentation(NamedTuple):
    socle: tuple[int, ...]
    "Multiplicities m of the injective envelope I^m."
    cosocle: tuple[int, ...]
    "Multiplicities m' of the second term I^m'."


def paths_to(quiver: Quiver, x: int, k: int) -> list[tuple[int, ...]]:
    """Paths x -> k as arrow sequences, in a fixed order."""
    if x == k:
        return [()]
    return sorted(
        tuple(key for _, _, key in path) for path in nx.all_simple_edge_paths(quiver.graph(), x, k)
    )


def injective_module(quiver: Quiver, k: int) -> QuiverRep:
    bases = [paths_to(quiver, x, k) for x in range(len(quiver.vertices))]
    maps = []
    for a, (source, target) in enumerate(quiver.arrows):
        index = {path: i for i, path in enumerate(bases[target])}
        matrix = [[Fraction(0)] * len(bases[source]) for _ in bases[target]]
        for column, path in enumerate(bases[source]):
            if path and path[0] == a:
                matrix[index[path[1:]]][column] = Fraction(1)
        maps.append(tuple(tuple(row) for row in matrix))
    return QuiverRep(quiver, tuple(len(b) for b in bases), tuple(maps))


def direct_sum(quiver: Quiver, summands: Sequence[QuiverRep]) -> QuiverRep:
    if not summands:
        return QuiverRep.zero(quiver)
    dims = tuple(sum(s.dims[x] for s in summands) for x in range(len(quiver.vertices)))
    maps = []
    for a, (source, target) in enumerate(quiver.arrows):
        matrix = [[Fraction(0)] * dims[source] for _ in range(dims[target])]
        row_offset = col_offset = 0
        for summand in summands:
            for r, row in enumerate(summand.maps[a]):
                for c, value in enumerate(row):
                    matrix[row_offset + r][col_offset + c] = value
            row_offset += summand.dims[target]
            col_offset += summand.dims[source]
        maps.append(tuple(tuple(row) for row in matrix))
    return QuiverRep(quiver, dims, tuple(maps))


def _offsets(v: QuiverRep, w: QuiverRep) -> list[int]:
    offsets, total = [], 0
    for x in range(len(v.dims)):
        offsets.append(total)
        total += w.dims[x] * v.dims[x]
    offsets.append(total)
    return offsets


def hom_system(v: QuiverRep, w: QuiverRep) -> sympy.Matrix:
    """Linear conditions W_a f_x = f_y V_a on the entries of (f_x), row-major per vertex."""
    offsets = _offsets(v, w)
    rows = []
    for a, (x, y) in enumerate(v.quiver.arrows):
        for r in range(w.dims[y]):
            for c in range(v.dims[x]):
                row = [Fraction(0)] * offsets[-1]
                for s in range(w.dims[x]):
                    value = w.maps[a][r][s]
                    if value:
                        row[offsets[x] + s * v.dims[x] + c] += value
                for t in range(v.dims[y]):
                    value = v.maps[a][t][c]
                    if value:
                        row[offsets[y] + r * v.dims[y] + t] -= value
                rows.append(row)
    return to_sympy(rows, len(rows), offsets[-1])


def hom_basis(v: QuiverRep, w: QuiverRep) -> list[Hom]:
    """Integral basis of Hom(V, W)."""
    offsets = _offsets(v, w)
    unknowns = offsets[-1]
    if not unknowns:
        return []
    system = hom_system(v, w)
    if system.rows:
        vectors = system.nullspace()
    else:
        vectors = [sympy.Matrix([1 if i == j else 0 for i in range(unknowns)]) for j in range(unknowns)]
    basis = []
    for vector in vectors:
        scale = lcm(*[int(sympy.fraction(x)[1]) for x in vector])
        values = [int(x * scale) for x in vector]
        common = gcd(*values) or 1
        values = [x // common for x in values]
        hom = []
        for x in range(len(v.dims)):
            block = values[offsets[x] : offsets[x + 1]]
            hom.append(
                tuple(tuple(Fraction(block[r * v.dims[x] + c]) for c in range(v.dims[x])) for r in range(w.dims[x]))
            )
        basis.append(tuple(hom))
    return basis


def kernel(f: Hom, v: QuiverRep, w: QuiverRep) -> QuiverRep:
    """Kernel of f: V -> W as a representation in the coordinates of its nullspace bases."""
    bases = []
    for x in range(len(v.dims)):
        if not v.dims[x]:
            bases.append(sympy.zeros(0, 0))
            continue
        fx = to_sympy(f[x], w.dims[x], v.dims[x])
        columns = fx.nullspace() if w.dims[x] else [sympy.eye(v.dims[x])[:, i] for i in range(v.dims[x])]
        bases.append(sympy.Matrix.hstack(*columns) if columns else sympy.zeros(v.dims[x], 0))
    dims = tuple(b.cols for b in bases)
    maps = []
    for a, (x, y) in enumerate(v.quiver.arrows):
        if not dims[x] or not dims[y]:
            maps.append(tuple(tuple(Fraction(0) for _ in range(dims[x])) for _ in range(dims[y])))
            continue
        image = to_sympy(v.maps[a], v.dims[y], v.dims[x]) * bases[x]
        ky = bases[y]
        coordinates = (ky.T * ky).inv() * ky.T * image
        if ky * coordinates != image:
            raise ClusterError(f"kernel is not closed under arrow {a}")
        maps.append(from_sympy(coordinates))
    return QuiverRep(v.quiver, dims, tuple(maps))


def socle_dims(rep: QuiverRep) -> tuple[int, ...]:
    dims = []
    for x in range(len(rep.dims)):
        outgoing = rep.quiver.outgoing(x)
        stacked = [row for a in outgoing for row in rep.maps[a]]
        rank = to_sympy(stacked, len(stacked), rep.dims[x]).rank() if stacked else 0
        dims.append(rep.dims[x] - (rank if rep.dims[x] else 0))
    return tuple(dims)


def injective_copresentation(rep: QuiverRep) -> Copresentation:
    """Multiplicities of the minimal injective copresentation 0 -> V -> I^m -> I^m' -> 0."""
    quiver = rep.quiver
    size = len(quiver.vertices)
    socle = socle_dims(rep)
    injective_dims = [[len(paths_to(quiver, x, k)) for x in range(size)] for k in range(size)]
    excess = [sum(socle[k] * injective_dims[k][x] for k in range(size)) - rep.dims[x] for x in range(size)]
    # dim I(k)_k = 1, and I(k)_x vanishes unless k is reachable from x.
    cosocle = [0] * size
    for x in reversed(topological_order(quiver)):
        known = sum(cosocle[k] * injective_dims[k][x] for k in range(size) if k != x)
        cosocle[x] = excess[x] - known
    if any(m < 0 for m in cosocle):
        raise ClusterError(f"negative cosocle multiplicities {cosocle}")
    return Copresentation(socle=socle, cosocle=tuple(cosocle))


def injective_g_vector(rep: QuiverRep, quiver: Quiver | None = None) -> tuple[int, ...]:
    if quiver is not None and quiver != rep.quiver:
        raise QuiverMismatchError("representation lives on a different quiver")
    presentation = injective_copresentation(rep)
    return tuple(b - a for a, b in zip(presentation.socle, presentation.cosocle))
