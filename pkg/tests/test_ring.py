"""Tests for scalars, torus elements, rendering and exact division."""

import random

import pytest

from cluster_bases.errors import FormatError
from cluster_bases.ring import (
    Frame,
    FrameMismatchError,
    InexactDivisionError,
    NormalizationError,
    ScalarPoly,
    TorusElement,
    VertexRangeError,
    bar,
    exact_divide,
    parse_element,
    parse_scalar,
    pointed_normalize,
    specialize_classical,
    twisted_mul,
)

QUANTUM = Frame.create(["1", "2"], lam=[[0, -1], [1, 0]])
CLASSICAL = Frame.create(["1", "2"])
RANK3 = Frame.create(["1", "2", "3"], lam=[[0, 1, -2], [-1, 0, 3], [2, -3, 0]])


def x(frame: Frame, i: int) -> TorusElement:
    return TorusElement.variable(frame, i)


def random_element(rng: random.Random, frame: Frame) -> TorusElement:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        exponent = tuple(rng.randint(-2, 2) for _ in range(frame.rank))
        terms[exponent] = ScalarPoly({rng.randint(-2, 2): rng.randint(-3, 3)})
    return TorusElement(frame, terms)


def test_scalar_arithmetic():
    """(v + v^-1)^2 expands with a constant term of 2."""
    s = ScalarPoly.v(1) + ScalarPoly.v(-1)
    assert (s * s).render() == "v^-2+2+v^2"
    assert (s * s).at_one() == 4
    assert (s - s).render() == "0"


def test_scalar_bar_and_units():
    """Bar inverts v; units are signed powers of v."""
    s = ScalarPoly({-3: 2, 1: -1})
    assert s.bar() == ScalarPoly({3: 2, -1: -1})
    assert not s.is_bar_invariant
    assert ScalarPoly.v(2).unit() == (1, 2)
    assert ScalarPoly.v(-1, -1).unit() == (-1, -1)
    assert ScalarPoly({0: 2}).unit() is None
    assert ScalarPoly({-1: 3, -4: 1}).is_strictly_negative
    assert not ScalarPoly({0: 1}).is_strictly_negative


def test_parse_scalar():
    """Scalars parse back from their rendering."""
    assert parse_scalar("v^-2+2+v^2") == ScalarPoly({-2: 1, 0: 2, 2: 1})
    assert parse_scalar("-3*v") == ScalarPoly.v(1, -3)


def test_twisted_product_quasi_commutes():
    """X1 X2 = v^-1 X[1,1] and X1 X2 = v^-2 X2 X1 in the quantum Kronecker frame."""
    x1, x2 = x(QUANTUM, 0), x(QUANTUM, 1)
    assert (x1 * x2).render() == "(v^-1)*X[1,1]"
    assert (x2 * x1).render() == "(v)*X[1,1]"
    assert x1 * x2 == (x2 * x1).shift(-2)


def test_classical_product_commutes():
    """The classical frame has no twist."""
    x1, x2 = x(CLASSICAL, 0), x(CLASSICAL, 1)
    assert x1 * x2 == x2 * x1
    assert ((x1 + x2) ** 2).render() == "X[2,0] + 2*X[1,1] + X[0,2]"


def test_render_orders_terms_and_parses_back():
    """Canonical text lists exponents in descending lexicographic order."""
    text = "3*X[1,1] - X[0,-1] + (v^-2+v^2)*X[-2,1]"
    element = parse_element(text, QUANTUM)
    assert element.render() == text
    assert element.coefficient((-2, 1)) == ScalarPoly({-2: 1, 2: 1})
    assert parse_element("X[0,-1] + 3*X[1,1]", QUANTUM).render() == "3*X[1,1] + X[0,-1]"
    assert parse_element("0", QUANTUM).render() == "0"


@pytest.mark.parametrize("text", ["X[1,0] X[0,1]", "X[1]", "Y[1,0]", "(w)*X[1,0]"])
def test_parse_element_rejects_malformed_text(text):
    """Malformed elements raise FormatError."""
    with pytest.raises(FormatError):
        parse_element(text, QUANTUM)


def test_bar_and_specialization():
    """Bar acts on coefficients of normalized monomials; specialization sets v = 1."""
    element = parse_element("(v^-2+v^2)*X[-2,1] + (v)*X[0,1]", QUANTUM)
    assert bar(element).render() == "(v^-1)*X[0,1] + (v^-2+v^2)*X[-2,1]"
    assert not element.is_bar_invariant
    assert specialize_classical(element).render() == "X[0,1] + 2*X[-2,1]"
    assert specialize_classical(element).frame == CLASSICAL


def test_exact_division_both_sides():
    """Right and left division undo the corresponding products."""
    a = x(QUANTUM, 0) + x(QUANTUM, 1) * x(QUANTUM, 1)
    d = x(QUANTUM, 0) - TorusElement.one(QUANTUM)
    assert exact_divide(twisted_mul(a, d), d, side="right") == a
    assert exact_divide(twisted_mul(d, a), d, side="left") == a


def test_exact_division_by_monomial_is_always_exact():
    """Monomials are units of the torus."""
    numerator = TorusElement.one(QUANTUM) + x(QUANTUM, 1)
    quotient = exact_divide(numerator, x(QUANTUM, 0))
    assert twisted_mul(quotient, x(QUANTUM, 0)) == numerator


def test_inexact_division_raises():
    """X2 is not a multiple of 1 + X1."""
    with pytest.raises(InexactDivisionError, match="nonzero remainder"):
        exact_divide(x(CLASSICAL, 1), TorusElement.one(CLASSICAL) + x(CLASSICAL, 0))


def test_pointed_normalize():
    """A v-power leading coefficient is scaled away; anything else is rejected."""
    element = TorusElement(QUANTUM, {(1, 0): ScalarPoly.v(3), (0, 1): 1})
    assert pointed_normalize(element, (1, 0)).render() == "X[1,0] + (v^-3)*X[0,1]"
    with pytest.raises(NormalizationError):
        pointed_normalize(TorusElement(QUANTUM, {(1, 0): 2}), (1, 0))
    with pytest.raises(NormalizationError):
        pointed_normalize(element, (5, 5))


def test_frame_mismatch():
    """Elements of different frames do not multiply."""
    with pytest.raises(FrameMismatchError):
        twisted_mul(x(QUANTUM, 0), x(CLASSICAL, 0))


def test_frame_validation():
    """Lambda must be skew-symmetric and vertex lookups name the vertex."""
    with pytest.raises(ValueError, match="skew-symmetric"):
        Frame.create(["1", "2"], lam=[[0, 1], [1, 0]])
    with pytest.raises(VertexRangeError, match="vertex out of range"):
        QUANTUM.index("7")
    assert QUANTUM.pairing((1, 0), (0, 1)) == -1
    assert CLASSICAL.pairing((1, 0), (0, 1)) == 0


def test_random_products_are_associative():
    """(a b) c == a (b c) for random elements of classical and twisted frames."""
    rng = random.Random(0)
    for _ in range(100):
        frame = rng.choice([QUANTUM, CLASSICAL, RANK3])
        a, b, c = (random_element(rng, frame) for _ in range(3))
        assert twisted_mul(twisted_mul(a, b), c) == twisted_mul(a, twisted_mul(b, c))


def test_bar_reverses_random_products():
    """Bar is a ring anti-automorphism: bar(a b) == bar(b) bar(a)."""
    rng = random.Random(1)
    for _ in range(100):
        frame = rng.choice([QUANTUM, RANK3])
        a, b = random_element(rng, frame), random_element(rng, frame)
        assert bar(twisted_mul(a, b)) == twisted_mul(bar(b), bar(a))
        assert bar(bar(a)) == a


def test_exact_division_of_random_products():
    """Dividing a product by a random factor on either side recovers the other factor."""
    rng = random.Random(2)
    for _ in range(100):
        frame = rng.choice([QUANTUM, CLASSICAL, RANK3])
        a, d = random_element(rng, frame), random_element(rng, frame)
        if not a or not d or d.coefficient(d.leading_exponent()).unit() is None:
            continue
        assert exact_divide(twisted_mul(a, d), d, side="right") == a
        assert exact_divide(twisted_mul(d, a), d, side="left") == a
