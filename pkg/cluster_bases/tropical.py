"""Pointedness, dominance order and piecewise-linear transport of degrees."""

import logging
from collections.abc import Sequence
from typing import NamedTuple

from cluster_bases.errors import ClusterError
from cluster_bases.lattice import NotPointedError, PointedDecomposition, decompose, dominates
from cluster_bases.ring import Exponent, Matrix, TorusElement
from cluster_bases.seed import Seed, express_in, local_frame, mutate_b

logger = logging.getLogger(__name__)

__all__ = [
    "AnchorMismatchError",
    "NotPointedError",
    "PointedDecomposition",
    "TropicalPoint",
    "dominance_less",
    "extract_pointed",
    "render_decomposition",
    "same_tropical_point",
    "to_initial",
    "transport",
    "tropical_transform",
    "y_variable",
]


class AnchorMismatchError(ClusterError):
    pass


class TropicalPoint(NamedTuple):
    anchor: tuple[int, ...]
    "Mutation sequence from the initial seed to the seed the degree lives at."
    g: Exponent


def y_variable(s: Seed, k: int) -> TorusElement:
    s.check_vertex(k)
    return TorusElement.monomial(local_frame(s), tuple(row[k] for row in s.b_full))


def extract_pointed(z: TorusElement, s: Seed, chart: Seed | None = None) -> PointedDecomposition:
    """Degree and F-polynomial of ``z`` (given in the initial frame) as seen from seed ``s``."""
    return decompose(express_in(z, s, chart), s.b_full, s.unfrozen)


def dominance_less(g1: Exponent, g2: Exponent, s: Seed) -> bool:
    return dominates(tuple(g1), tuple(g2), s.b_full, s.unfrozen)


def tropical_transform(g: Exponent, k: int, b_full: Matrix) -> Exponent:
    gk = g[k]
    if gk >= 0:
        return tuple(-gk if i == k else g[i] + max(b_full[i][k], 0) * gk for i in range(len(g)))
    return tuple(-gk if i == k else g[i] + max(-b_full[i][k], 0) * gk for i in range(len(g)))


def transport(p: TropicalPoint, sequence: Sequence[int], seed: Seed) -> TropicalPoint:
    """Move ``p`` from ``seed`` (its anchor) along ``sequence``."""
    if tuple(seed.history) != tuple(p.anchor):
        raise AnchorMismatchError(f"point anchored at {list(p.anchor)} cannot start from seed {list(seed.history)}")
    b, g = seed.b_full, tuple(p.g)
    for k in sequence:
        seed.check_vertex(k)
        g = tropical_transform(g, k, b)
        b = mutate_b(b, k, seed.unfrozen)
    return TropicalPoint(anchor=(*p.anchor, *sequence), g=g)


def to_initial(p: TropicalPoint, seed: Seed) -> Exponent:
    """Representative of ``p`` at the initial seed of ``seed``'s pattern."""
    matrices = [seed.initial_b or seed.b_full]
    for k in p.anchor:
        matrices.append(mutate_b(matrices[-1], k, seed.unfrozen))
    g = tuple(p.g)
    for step in range(len(p.anchor), 0, -1):
        g = tropical_transform(g, p.anchor[step - 1], matrices[step])
    return g


def same_tropical_point(p: TropicalPoint, q: TropicalPoint, seed: Seed) -> bool:
    return to_initial(p, seed) == to_initial(q, seed)


def render_decomposition(decomposition: PointedDecomposition) -> str:
    terms = []
    for n, coeff in sorted(decomposition.f_poly.items(), key=lambda item: (sum(item[0]), item[0])):
        monomial = "Y[" + ",".join(str(x) for x in n) + "]"
        if not any(n):
            body = coeff.render() if coeff.is_integer else f"({coeff.render()})"
        elif coeff.is_integer:
            value = coeff.coefficient(0)
            body = monomial if value == 1 else f"-{monomial}" if value == -1 else f"{value}*{monomial}"
        else:
            body = f"({coeff.render()})*{monomial}"
        terms.append(body)
    text = terms[0]
    for body in terms[1:]:
        text += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
    return "g=[" + ",".join(str(x) for x in decomposition.g) + "]; F = " + text
