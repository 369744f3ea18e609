from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, TypeAlias

import networkx as nx
import sympy

from cluster_bases.errors import ClusterError

RationalMatrix: TypeAlias = tuple[tuple[Fraction, ...], ...]


class CyclicQuiverError(ClusterError):
    pass


class EnumerationBudgetError(ClusterError):
    pass


class InterpolationError(ClusterError):
    pass


class BadReductionError(ClusterError):
    pass


class UnstableCharacterError(ClusterError):
    pass


class QuiverMismatchError(ClusterError):
    pass


class ClassicalFrameRequiredError(ClusterError):
    pass


class Quiver(NamedTuple):
    vertices: tuple[str, ...]
    arrows: tuple[tuple[int, int], ...]
    "(source, target) vertex positions, one entry per arrow."

    def graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(len(self.vertices)))
        for key, (source, target) in enumerate(self.arrows):
            graph.add_edge(source, target, key=key)
        return graph

    def outgoing(self, x: int) -> list[int]:
        return [a for a, (source, _) in enumerate(self.arrows) if source == x]

    def incoming(self, x: int) -> list[int]:
        return [a for a, (_, target) in enumerate(self.arrows) if target == x]


def make_quiver(vertices: Sequence[str], arrows: Sequence[Sequence[str]]) -> Quiver:
    vertices = tuple(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    resolved = []
    for position, arrow in enumerate(arrows):
        if len(arrow) != 2 or arrow[0] not in index or arrow[1] not in index:
            raise ValueError(f"arrow {position} {list(arrow)} does not join declared vertices")
        resolved.append((index[arrow[0]], index[arrow[1]]))
    quiver = Quiver(vertices, tuple(resolved))
    if not nx.is_directed_acyclic_graph(quiver.graph()):
        raise CyclicQuiverError("quiver has an oriented cycle")
    return quiver


def topological_order(quiver: Quiver) -> list[int]:
    return list(nx.lexicographical_topological_sort(quiver.graph()))


def to_fraction_matrix(rows: Sequence[Sequence[int | Fraction]]) -> RationalMatrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def to_sympy(matrix: RationalMatrix, rows: int, cols: int) -> sympy.Matrix:
    """Stored entries are Fractions; sympy only sees them as Rationals."""
    return sympy.Matrix(rows, cols, [sympy.Rational(x.numerator, x.denominator) for row in matrix for x in row])


def from_sympy(matrix: sympy.Matrix) -> RationalMatrix:
    return tuple(tuple(Fraction(int(x.p), int(x.q)) for x in matrix.row(r)) for r in range(matrix.rows))


@dataclass(frozen=True)
class QuiverRep:
    """Matrices on the arrows of an acyclic quiver; the map of arrow x -> y is dims[y] x dims[x]."""

    quiver: Quiver
    dims: tuple[int, ...]
    maps: tuple[RationalMatrix, ...]
    field: int | None = None
    "Characteristic of the prime field, ``None`` for the rationals."

    def __post_init__(self) -> None:
        if len(self.dims) != len(self.quiver.vertices):
            raise ValueError(f"expected {len(self.quiver.vertices)} dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions must be nonnegative")
        if len(self.maps) != len(self.quiver.arrows):
            raise ValueError(f"expected {len(self.quiver.arrows)} maps, got {len(self.maps)}")
        for a, ((source, target), matrix) in enumerate(zip(self.quiver.arrows, self.maps)):
            if len(matrix) != self.dims[target] or any(len(row) != self.dims[source] for row in matrix):
                raise ValueError(
                    f"map of arrow {a} must be {self.dims[target]}x{self.dims[source]} "
                    f"({self.quiver.vertices[source]} -> {self.quiver.vertices[target]})"
                )

    @classmethod
    def create(
        cls, quiver: Quiver, dims: Sequence[int], maps: Sequence[Sequence[Sequence[int | Fraction]]]
    ) -> "QuiverRep":
        return cls(quiver, tuple(dims), tuple(to_fraction_matrix(m) for m in maps))

    @classmethod
    def zero(cls, quiver: Quiver) -> "QuiverRep":
        return cls(quiver, (0,) * len(quiver.vertices), tuple(() for _ in quiver.arrows))

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)
