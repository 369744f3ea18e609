from collections.abc import Sequence
from dataclasses import dataclass
from typing import TypeAlias

from cluster_bases.errors import ClusterError

Exponent: TypeAlias = tuple[int, ...]
Matrix: TypeAlias = tuple[tuple[int, ...], ...]


class FrameMismatchError(ClusterError):
    pass


class NormalizationError(ClusterError):
    pass


class InexactDivisionError(ClusterError):
    pass


class VertexRangeError(ClusterError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def unit_vector(size: int, index: int) -> Exponent:
    return tuple(1 if i == index else 0 for i in range(size))


def add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def sub_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def scale_exponent(c: int, a: Exponent) -> Exponent:
    return tuple(c * x for x in a)


@dataclass(frozen=True)
class Frame:
    """Ambient lattice of a computation.

    Vertices are addressed by position; ``vertices`` holds their string ids. ``lam`` is the
    quantization matrix, ``None`` for a classical (commutative) frame.
    """

    vertices: tuple[str, ...]
    unfrozen: tuple[int, ...]
    d: tuple[int, ...]
    lam: Matrix | None = None

    def __post_init__(self) -> None:
        size = len(self.vertices)
        if len(set(self.vertices)) != size:
            raise ValueError("vertex ids must be distinct")
        if len(self.d) != size:
            raise ValueError(f"expected {size} skew-symmetrizers, got {len(self.d)}")
        for i, value in enumerate(self.d):
            if value <= 0:
                raise ValueError(f"skew-symmetrizer d[{i}]={value} is not positive")
        if any(not 0 <= k < size for k in self.unfrozen) or list(self.unfrozen) != sorted(set(self.unfrozen)):
            raise ValueError(f"unfrozen indices {self.unfrozen} are not a sorted subset of 0..{size - 1}")
        if self.lam is not None:
            if len(self.lam) != size or any(len(row) != size for row in self.lam):
                raise ValueError(f"lambda must be a {size}x{size} matrix")
            for i in range(size):
                for j in range(size):
                    if self.lam[i][j] != -self.lam[j][i]:
                        raise ValueError(f"lambda is not skew-symmetric at ({i},{j})")

    @classmethod
    def create(
        cls,
        vertices: Sequence[str],
        frozen: Sequence[str] = (),
        d: Sequence[int] | None = None,
        lam: Sequence[Sequence[int]] | None = None,
    ) -> "Frame":
        vertices = tuple(vertices)
        unknown = [v for v in frozen if v not in vertices]
        if unknown:
            raise ValueError(f"frozen vertices {unknown} are not declared")
        unfrozen = tuple(i for i, v in enumerate(vertices) if v not in frozen)
        return cls(
            vertices=vertices,
            unfrozen=unfrozen,
            d=tuple(d) if d is not None else (1,) * len(vertices),
            lam=as_matrix(lam) if lam is not None else None,
        )

    @property
    def rank(self) -> int:
        return len(self.vertices)

    @property
    def frozen(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if i not in self.unfrozen)

    @property
    def is_quantum(self) -> bool:
        return self.lam is not None

    def index(self, vertex: str) -> int:
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise VertexRangeError(f"vertex out of range: {vertex!r} is not one of {list(self.vertices)}") from None

    def pairing(self, a: Exponent, b: Exponent) -> int:
        """Return a^T Λ b, zero on a classical frame."""
        if self.lam is None:
            return 0
        return sum(x * sum(row[j] * b[j] for j in range(len(b)) if b[j]) for x, row in zip(a, self.lam) if x)

    def classical(self) -> "Frame":
        return Frame(self.vertices, self.unfrozen, self.d, None)

    def with_lambda(self, lam: Matrix | None) -> "Frame":
        return Frame(self.vertices, self.unfrozen, self.d, lam)
