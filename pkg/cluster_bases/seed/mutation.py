import logging
from collections.abc import Iterable, Sequence

from cluster_bases.errors import InvalidArgumentError
from cluster_bases.lattice import NotPointedError, decompose
from cluster_bases.ring import (
    Exponent,
    Frame,
    FrameMismatchError,
    Matrix,
    TorusElement,
    exact_divide,
    twisted_mul,
    unit_vector,
)

from .base import Seed
from .matrix import check_compatibility, check_full_rank, check_skew_symmetrizable, mutate_b

logger = logging.getLogger(__name__)


def initial_seed(frame: Frame, b_full: Matrix) -> Seed:
    check_skew_symmetrizable(b_full, frame.d)
    check_full_rank(b_full, frame.unfrozen)
    if frame.lam is not None:
        check_compatibility(frame.lam, b_full, frame.unfrozen)
    return Seed(
        frame=frame,
        b_full=b_full,
        variables=tuple(TorusElement.variable(frame, i) for i in range(frame.rank)),
        lambda_local=frame.lam,
        history=(),
        initial_b=b_full,
        degrees=tuple(unit_vector(frame.rank, i) for i in range(frame.rank)),
    )


def ordered_product(factors: Sequence[TorusElement], exponents: Sequence[int], lam: Matrix | None) -> TorusElement:
    """Normalized monomial in pairwise quasi-commuting ``factors`` whose mutual twist is ``lam``.

    Equals v^(-Σ_{i<j} m_i m_j lam_ij) times the ordered product of factor powers.
    """
    result = TorusElement.one(factors[0].frame)
    for factor, e in zip(factors, exponents):
        if e < 0:
            raise InvalidArgumentError("ordered products take nonnegative exponents")
        if e:
            result = twisted_mul(result, factor**e)
    if lam is None:
        return result
    twist = sum(
        exponents[i] * exponents[j] * lam[i][j]
        for i in range(len(exponents))
        for j in range(i + 1, len(exponents))
        if exponents[i] and exponents[j]
    )
    return result.shift(-twist)


def cluster_monomial(s: Seed, m: Sequence[int]) -> TorusElement:
    return ordered_product(s.variables, m, s.lambda_local)


def degrees(s: Seed) -> tuple[Exponent, ...]:
    return s.degrees


def _local_pairing(lam: Matrix | None, a: Exponent, b: Exponent) -> int:
    if lam is None:
        return 0
    return sum(a[i] * lam[i][j] * b[j] for i in range(len(a)) if a[i] for j in range(len(b)) if b[j])


def mutate_seed(s: Seed, k: int) -> Seed:
    s.check_vertex(k)
    b = s.b_full
    size = s.rank
    negative = tuple(max(-b[j][k], 0) for j in range(size))
    positive = tuple(max(b[i][k], 0) for i in range(size))
    f_k = unit_vector(size, k)
    exchange = cluster_monomial(s, negative).shift(_local_pairing(s.lambda_local, negative, f_k)) + cluster_monomial(
        s, positive
    ).shift(_local_pairing(s.lambda_local, positive, f_k))
    new_variable = exact_divide(exchange, s.variables[k], side="right")

    initial_b = s.initial_b or s.b_full
    try:
        degree = decompose(new_variable, initial_b, s.frame.unfrozen).g
    except NotPointedError as e:
        raise NotPointedError(f"mutation at {s.label(k)!r} produced a non-pointed variable: {e}") from e
    new_degrees = s.degrees[:k] + (degree,) + s.degrees[k + 1 :]
    lambda_local = None
    if s.frame.lam is not None:
        lambda_local = tuple(tuple(s.frame.pairing(a, c) for c in new_degrees) for a in new_degrees)
    logger.debug("mutated at %s after %s", s.label(k), [s.label(i) for i in s.history])
    return Seed(
        frame=s.frame,
        b_full=mutate_b(b, k, s.frame.unfrozen),
        variables=s.variables[:k] + (new_variable,) + s.variables[k + 1 :],
        lambda_local=lambda_local,
        history=(*s.history, k),
        initial_b=initial_b,
        degrees=new_degrees,
    )


def mutate_sequence(s: Seed, sequence: Iterable[int]) -> Seed:
    for k in sequence:
        s = mutate_seed(s, k)
    return s


def local_frame(s: Seed) -> Frame:
    """Frame of the lattice of ``s`` itself."""
    return s.frame.with_lambda(s.lambda_local)


def rebase(s: Seed) -> Seed:
    """View ``s`` as an initial seed in its own coordinates."""
    frame = local_frame(s)
    return Seed(
        frame=frame,
        b_full=s.b_full,
        variables=tuple(TorusElement.variable(frame, i) for i in range(frame.rank)),
        lambda_local=s.lambda_local,
        history=(),
        initial_b=s.b_full,
        degrees=tuple(unit_vector(frame.rank, i) for i in range(frame.rank)),
    )


def initial_variables_in(s: Seed) -> Seed:
    """The initial seed re-expressed in the chart of ``s``.

    Its variables are the initial cluster variables written as Laurent polynomials in the
    variables of ``s``.
    """
    return mutate_sequence(rebase(s), reversed(s.history))


def express_in(z: TorusElement, s: Seed, chart: Seed | None = None) -> TorusElement:
    """Rewrite ``z``, given in the initial frame, in the coordinates of seed ``s``.

    ``chart`` may carry a precomputed ``initial_variables_in(s)``.
    """
    if z.frame != s.frame:
        raise FrameMismatchError("element and seed live in different frames")
    if not s.history:
        return z
    back = chart or initial_variables_in(s)
    size = s.rank
    shift = tuple(max([0] + [-m[i] for m in z.support()]) for i in range(size))
    cleared = twisted_mul(z, TorusElement.monomial(s.frame, shift))
    image = TorusElement.zero(back.frame)
    powers: dict[tuple[int, int], TorusElement] = {}

    def image_of(m: Exponent) -> TorusElement:
        factors = []
        for i, e in enumerate(m):
            if (i, e) not in powers:
                powers[(i, e)] = back.variables[i] ** e
            factors.append(powers[(i, e)])
        return ordered_product(factors, (1,) * size, _twist_of_powers(s.frame.lam, m))

    for m, coeff in cleared.items():
        image += image_of(m).scale(coeff)
    return exact_divide(image, image_of(shift), side="right")


def _twist_of_powers(lam: Matrix | None, m: Exponent) -> Matrix | None:
    if lam is None:
        return None
    return tuple(tuple(m[i] * m[j] * lam[i][j] for j in range(len(m))) for i in range(len(m)))
