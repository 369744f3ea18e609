import itertools
import logging
import random
from collections.abc import Sequence
from fractions import Fraction

from cluster_bases.errors import InvalidArgumentError
from cluster_bases.lattice import apply_b
from cluster_bases.ring import TorusElement
from cluster_bases.seed import Seed, local_frame
from cluster_bases.settings import get_settings

from .base import (
    ClassicalFrameRequiredError,
    Quiver,
    QuiverMismatchError,
    QuiverRep,
    UnstableCharacterError,
    make_quiver,
)
from .grassmannian import euler_char
from .injective import direct_sum, hom_basis, injective_g_vector, injective_module, kernel

logger = logging.getLogger(__name__)


def quiver_of(s: Seed) -> Quiver:
    """Representation quiver of a skew-symmetric seed: the opposite of its principal quiver."""
    unfrozen = s.unfrozen
    arrows = []
    for i in unfrozen:
        for j in unfrozen:
            if s.b_full[i][j] != -s.b_full[j][i]:
                raise QuiverMismatchError(f"principal part is not skew-symmetric at ({s.label(i)},{s.label(j)})")
            arrows.extend([(s.label(j), s.label(i))] * max(s.b_full[i][j], 0))
    return make_quiver([s.label(k) for k in unfrozen], arrows)


def _check_quiver(rep: QuiverRep, s: Seed) -> None:
    expected = quiver_of(s)
    if rep.quiver.vertices != expected.vertices or sorted(rep.quiver.arrows) != sorted(expected.arrows):
        raise QuiverMismatchError("representation quiver does not match the seed's principal part")


def cc(rep: QuiverRep, s: Seed, degree: Sequence[int] | None = None) -> TorusElement:
    """X^g * sum_n chi(Gr_n V) Y^n, with g the injective g-vector of V unless ``degree`` is given."""
    if s.is_quantum:
        raise ClassicalFrameRequiredError("the cluster character is computed on a classical seed")
    _check_quiver(rep, s)
    principal = tuple(degree) if degree is not None else injective_g_vector(rep)
    g = [0] * s.rank
    for k, value in zip(s.unfrozen, principal):
        g[k] = value
    terms = {}
    for n in itertools.product(*(range(d + 1) for d in rep.dims)):
        trivial = not any(n) or tuple(n) == rep.dims
        chi = 1 if trivial else euler_char(rep, n)
        if chi:
            shift = apply_b(n, s.b_full, s.unfrozen)
            terms[tuple(a + b for a, b in zip(g, shift))] = chi
    return TorusElement(local_frame(s), terms)


def _combine(weights: Sequence[int], basis, domain: QuiverRep, codomain: QuiverRep):
    def entry(x: int, r: int, c: int) -> Fraction:
        return sum((w * hom[x][r][c] for w, hom in zip(weights, basis)), Fraction(0))

    return tuple(
        tuple(tuple(entry(x, r, c) for c in range(domain.dims[x])) for r in range(codomain.dims[x]))
        for x in range(len(domain.dims))
    )


def generic_character(
    g: Sequence[int],
    quiver: Quiver,
    s: Seed,
    samples: int = 4,
    rng_seed: int = 0,
    bound: int | None = None,
) -> TorusElement:
    """Cluster character of ker f for sampled f in Hom(I^[-g]_+, I^[g]_+)."""
    if samples < 2:
        raise InvalidArgumentError("at least two samples are needed to detect instability")
    bound = bound if bound is not None else get_settings().sample_bound
    g = tuple(g)
    if all(e >= 0 for e in g):
        return cc(QuiverRep.zero(quiver), s, degree=g)
    if all(e <= 0 for e in g):
        # the map lands in zero, so the kernel is the whole direct sum of injectives
        value = TorusElement.one(local_frame(s))
        for k, e in enumerate(g):
            if e:
                value = value * cc(injective_module(quiver, k), s) ** -e
        logger.debug("g=%s is sign-coherent, no sampling needed", list(g))
        return value
    domain = direct_sum(
        quiver, [injective_module(quiver, k) for k, e in enumerate(g) for _ in range(max(-e, 0))]
    )
    codomain = direct_sum(quiver, [injective_module(quiver, k) for k, e in enumerate(g) for _ in range(max(e, 0))])
    basis = hom_basis(domain, codomain)
    rng = random.Random(rng_seed)
    values = []
    for sample in range(samples):
        weights = [rng.randint(-bound, bound) for _ in basis]
        f = _combine(weights, basis, domain, codomain)
        module = kernel(f, domain, codomain)
        logger.info("sample %d: kernel of dimension %s", sample, list(module.dims))
        values.append(cc(module, s, degree=g))
    distinct = set(values)
    if len(distinct) == samples:
        raise UnstableCharacterError(f"all {samples} samples for g={list(g)} disagree (rng seed {rng_seed})")
    if len(distinct) > 1:
        logger.warning("samples for g=%s disagree: %d distinct values (rng seed %d)", list(g), len(distinct), rng_seed)
    # B~ has full rank, so the terms of X^g F are in bijection with the support of F.
    return max(values, key=lambda value: len(value.support()))


KRONECKER_QUIVER = make_quiver(("1", "2"), [("1", "2"), ("1", "2")])


def band_module(k: int, lam: int | Fraction, quiver: Quiver = KRONECKER_QUIVER) -> QuiverRep:
    """Indecomposable Kronecker representation of dimension (k, k): identity and a Jordan block."""
    if k <= 0:
        raise InvalidArgumentError(f"band length must be positive, got {k}")
    identity = [[1 if r == c else 0 for c in range(k)] for r in range(k)]
    jordan = [[lam if r == c else 1 if c == r + 1 else 0 for c in range(k)] for r in range(k)]
    return QuiverRep.create(quiver, (k, k), [identity, jordan])


def loop_module(lam: int | Fraction, quiver: Quiver = KRONECKER_QUIVER) -> QuiverRep:
    return band_module(1, lam, quiver)
