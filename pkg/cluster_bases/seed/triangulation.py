from collections.abc import Sequence

from cluster_bases.ring import Frame, Matrix

from .base import Seed, Triangulation, TriangulationError
from .mutation import initial_seed


def make_triangulation(
    arcs: Sequence[str], frozen_arcs: Sequence[str], triangles: Sequence[Sequence[str]]
) -> Triangulation:
    arcs = tuple(arcs)
    if len(set(arcs)) != len(arcs):
        raise TriangulationError("arc ids must be distinct")
    for arc in frozen_arcs:
        if arc not in arcs:
            raise TriangulationError(f"frozen arc {arc!r} is not declared")
    checked = []
    for position, triangle in enumerate(triangles):
        if len(triangle) != 3:
            raise TriangulationError(f"triangle {position} has {len(triangle)} sides")
        for arc in triangle:
            if arc not in arcs:
                raise TriangulationError(f"triangle {position} uses undeclared arc {arc!r}")
        if len(set(triangle)) != 3:
            raise TriangulationError(f"triangle {position} is self-folded: {list(triangle)}")
        checked.append((triangle[0], triangle[1], triangle[2]))
    return Triangulation(arcs=arcs, frozen_arcs=tuple(frozen_arcs), triangles=tuple(checked))


def triangulation_to_b(tri: Triangulation) -> tuple[Matrix, frozenset[str]]:
    """Exchange matrix of a triangulation: +1 for every clockwise-consecutive pair of sides."""
    index = {arc: i for i, arc in enumerate(tri.arcs)}
    b = [[0] * len(tri.arcs) for _ in tri.arcs]
    for triangle in tri.triangles:
        for position, arc in enumerate(triangle):
            if arc not in index:
                raise TriangulationError(f"arc {arc!r} is not declared")
            i, j = index[arc], index[triangle[(position + 1) % 3]]
            b[i][j] += 1
            b[j][i] -= 1
    return tuple(tuple(row) for row in b), frozenset(tri.frozen_arcs)


def seed_from_triangulation(tri: Triangulation) -> Seed:
    b_full, frozen = triangulation_to_b(tri)
    frame = Frame.create(tri.arcs, frozen=[arc for arc in tri.arcs if arc in frozen])
    return initial_seed(frame, b_full)
