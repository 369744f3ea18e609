from dataclasses import dataclass, field
from typing import NamedTuple

from cluster_bases.errors import ClusterError
from cluster_bases.ring import Exponent, Frame, Matrix, TorusElement, VertexRangeError

__all__ = [
    "FrozenVertexError",
    "IncompatibleLambdaError",
    "LambdaSearchError",
    "RankDeficiencyError",
    "Seed",
    "SkewSymmetrizabilityError",
    "Triangulation",
    "TriangulationError",
    "VertexRangeError",
]


class FrozenVertexError(ClusterError):
    pass


class SkewSymmetrizabilityError(ClusterError):
    pass


class RankDeficiencyError(ClusterError):
    pass


class IncompatibleLambdaError(ClusterError):
    pass


class LambdaSearchError(ClusterError):
    pass


class TriangulationError(ClusterError):
    pass


@dataclass(frozen=True)
class Seed:
    frame: Frame
    "The initial frame; every variable is expanded in it."
    b_full: Matrix
    variables: tuple[TorusElement, ...]
    lambda_local: Matrix | None
    "Quantization on this seed's own lattice."
    history: tuple[int, ...] = field(default=(), compare=False)
    initial_b: Matrix = field(default=(), compare=False)
    degrees: tuple[Exponent, ...] = field(default=(), compare=False)
    "Extended g-vectors of ``variables`` with respect to the initial seed."

    @property
    def rank(self) -> int:
        return self.frame.rank

    @property
    def unfrozen(self) -> tuple[int, ...]:
        return self.frame.unfrozen

    @property
    def is_quantum(self) -> bool:
        return self.frame.is_quantum

    def check_vertex(self, k: int) -> None:
        if not 0 <= k < self.rank:
            raise VertexRangeError(f"vertex out of range: index {k} for a seed of rank {self.rank}")
        if k not in self.frame.unfrozen:
            raise FrozenVertexError(f"vertex {self.frame.vertices[k]!r} is frozen")

    def label(self, k: int) -> str:
        return self.frame.vertices[k]


class Triangulation(NamedTuple):
    arcs: tuple[str, ...]
    frozen_arcs: tuple[str, ...]
    triangles: tuple[tuple[str, str, str], ...]
    "Each triple lists arcs so that the second is immediately clockwise of the first."
