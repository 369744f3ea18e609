"""Tests for Chebyshev polynomials, annulus elements, distinguished functions and triangular checks."""

import itertools

import pytest

from cluster_bases.bases import (
    AnnulusKind,
    ChebyshevKind,
    DistinguishedFunctions,
    SeedShapeError,
    Verdict,
    annulus_element,
    chebyshev,
    distinguished_function,
    evaluate,
    expand_in_distinguished,
    loop_element,
    reassemble,
    verify_triangular,
)
from cluster_bases.errors import InvalidArgumentError
from cluster_bases.explore import explore, find_injective_copy
from cluster_bases.ring import ScalarPoly, TorusElement, bar, parse_element
from cluster_bases.seed import Seed, cluster_monomial, mutate_sequence


@pytest.mark.parametrize(
    ("kind", "k", "coefficients"),
    [
        (ChebyshevKind.FIRST, 0, [2]),
        (ChebyshevKind.FIRST, 2, [1, 0, -2]),
        (ChebyshevKind.FIRST, 3, [1, 0, -3, 0]),
        (ChebyshevKind.SECOND, 0, [1]),
        (ChebyshevKind.SECOND, 2, [1, 0, -1]),
        (ChebyshevKind.SECOND, 3, [1, 0, -2, 0]),
    ],
)
def test_chebyshev(kind, k, coefficients):
    """Normalized Chebyshev polynomials T_k (T_0 = 2) and U_k."""
    assert chebyshev(kind, k).all_coeffs() == coefficients


def test_loop_element(kronecker):
    """The loop around the annulus core has three terms in the Kronecker chart."""
    assert loop_element(kronecker).render() == "X[1,-1] + X[-1,1] + X[-1,-1]"


def test_annulus_elements(kronecker):
    """Bangles are powers of the loop; bracelets and bands are Chebyshev polynomials in it."""
    loop = loop_element(kronecker)
    assert annulus_element(AnnulusKind.BANGLE, 2, kronecker) == loop * loop
    assert annulus_element(AnnulusKind.BRACELET, 2, kronecker) == loop * loop - 2
    assert annulus_element(AnnulusKind.BAND, 2, kronecker) == loop * loop - 1
    assert annulus_element(AnnulusKind.BRACELET, 2, kronecker).coefficient((0, 0)) == 0
    assert annulus_element(AnnulusKind.BAND, 2, kronecker).coefficient((0, 0)) == 1
    assert annulus_element(AnnulusKind.BRACELET, 3, kronecker) == evaluate(
        chebyshev(ChebyshevKind.FIRST, 3), loop
    )


def test_quantum_annulus_elements_are_bar_invariant(kronecker_quantum):
    """Bracelets and bands of the quantum loop are bar-invariant."""
    for kind in AnnulusKind:
        element = annulus_element(kind, 3, kronecker_quantum)
        assert bar(element) == element


def test_annulus_requires_kronecker(sl3, kronecker):
    """Other seeds and non-positive multiplicities are rejected."""
    with pytest.raises(SeedShapeError):
        loop_element(sl3)
    with pytest.raises(InvalidArgumentError):
        annulus_element(AnnulusKind.BAND, 0, kronecker)


def test_distinguished_functions_kronecker(kronecker):
    """I_g is a cluster monomial times injective copies, normalized at degree g."""
    witness = find_injective_copy(kronecker, 4)
    functions = DistinguishedFunctions(kronecker, witness)
    x3, x4 = mutate_sequence(kronecker, [0, 1]).variables
    assert functions((1, 0)).render() == "X[1,0]"
    assert functions((-1, 0)) == x3
    assert functions((0, -1)) == x4
    assert functions((1, -1)) == TorusElement.variable(kronecker.frame, 0) * x4
    assert distinguished_function(kronecker, witness, (-1, 1)).render() == "X[-1,3] + X[-1,1]"


def test_loop_expands_into_two_distinguished_functions(kronecker):
    """Classically the loop is I_(1,-1) - I_(-1,1)."""
    witness = find_injective_copy(kronecker, 4)
    functions = DistinguishedFunctions(kronecker, witness)
    expansion = expand_in_distinguished(loop_element(kronecker), kronecker, witness, functions=functions)
    assert expansion.base_g == (1, -1)
    assert expansion.terms == {(1, -1): 1, (-1, 1): -1}
    assert not expansion.remainder
    assert reassemble(expansion, functions) == loop_element(kronecker)


def test_truncated_expansion_keeps_a_remainder(kronecker):
    """Terms beyond the window stay in the remainder and reassembly is still exact."""
    witness = find_injective_copy(kronecker, 4)
    functions = DistinguishedFunctions(kronecker, witness)
    square = loop_element(kronecker) * loop_element(kronecker)
    expansion = expand_in_distinguished(square, kronecker, witness, truncation=1, functions=functions)
    assert expansion.truncation == 1
    assert reassemble(expansion, functions) == square


def test_quantum_distinguished_functions(kronecker_quantum):
    """Quantum injective copies are the quantum cluster variables; same-sign degrees stay bar-invariant."""
    witness = find_injective_copy(kronecker_quantum, 4)
    functions = DistinguishedFunctions(kronecker_quantum, witness)
    assert functions((-1, 0)).render() == "X[-1,2] + X[-1,0]"
    for g in [(2, 1), (-1, -1), (0, -2), (-2, 0)]:
        element = functions(g)
        assert bar(element) == element
        assert element.coefficient(g) == 1


def test_verify_triangular_on_monomials(kronecker_quantum):
    """Normalized monomials pass where their neighbours are present and are inconclusive at the edge."""
    frame = kronecker_quantum.frame
    family = [TorusElement.monomial(frame, (a, b)) for a in range(3) for b in range(3)]
    family.append(parse_element("X[1,0] + X[0,1]", frame))
    report = verify_triangular(family, kronecker_quantum, truncation=4)
    by_degree = {member.degree: member for member in report.members}
    assert by_degree[(0, 0)].triangular is Verdict.PASS
    assert by_degree[(1, 1)].triangular is Verdict.PASS
    assert by_degree[(2, 0)].triangular is Verdict.INCONCLUSIVE
    assert report.members[-1].pointed is Verdict.FAIL
    assert report.all("bar_invariant")
    assert not report.all("pointed")
    frame_report = report.to_frame()
    assert frame_report.height == len(family)
    assert frame_report.columns == ["member", "degree", "pointed", "bar_invariant", "triangular", "detail"]


def cluster_monomials(s: Seed, depth: int) -> list[TorusElement]:
    """Normalized monomials with exponents up to 2 in every seed within ``depth`` mutations."""
    family = {}
    for seed in explore(s, depth).seeds:
        for m in itertools.product(range(3), repeat=len(seed.unfrozen)):
            family[cluster_monomial(seed, m)] = None
    return list(family)


@pytest.mark.parametrize("kind", list(ChebyshevKind))
def test_chebyshev_product_rules(kind):
    """T_i T_j = T_(i+j) + T_|i-j| and U_i U_j is the sum of U_(i+j-2m) for m <= min(i, j)."""
    for i, j in itertools.product(range(11), repeat=2):
        product = chebyshev(kind, i) * chebyshev(kind, j)
        if kind is ChebyshevKind.FIRST:
            expected = chebyshev(kind, i + j) + chebyshev(kind, abs(i - j))
        else:
            expected = chebyshev(kind, i + j)
            for m in range(1, min(i, j) + 1):
                expected = expected + chebyshev(kind, i + j - 2 * m)
        assert product == expected, (i, j)


def test_first_kind_from_second_kind():
    """T_k = U_k - U_(k-2)."""
    for k in range(2, 11):
        assert chebyshev(ChebyshevKind.FIRST, k) == chebyshev(ChebyshevKind.SECOND, k) - chebyshev(
            ChebyshevKind.SECOND, k - 2
        )


def test_band_between_bracelet_and_bangle(kronecker):
    """The band of multiplicity two is the mean of bracelet and bangle; bracelets are differences of bands."""
    band = annulus_element(AnnulusKind.BAND, 2, kronecker)
    bracelet = annulus_element(AnnulusKind.BRACELET, 2, kronecker)
    bangle = annulus_element(AnnulusKind.BANGLE, 2, kronecker)
    assert band.scale(2) == bracelet + bangle
    for k in range(3, 7):
        bands = annulus_element(AnnulusKind.BAND, k, kronecker) - annulus_element(AnnulusKind.BAND, k - 2, kronecker)
        assert annulus_element(AnnulusKind.BRACELET, k, kronecker) == bands


@pytest.mark.parametrize("kind", [AnnulusKind.BRACELET, AnnulusKind.BAND])
def test_annulus_elements_are_positive(kronecker, kind):
    """Bracelets and bands have positive Laurent coefficients in the initial chart."""
    for k in range(1, 7):
        element = annulus_element(kind, k, kronecker)
        assert element
        assert all(c > 0 for _, coeff in element.items() for _, c in coeff.items()), k


def test_quantum_cluster_monomials_are_triangular(kronecker_quantum):
    """Cluster monomials within three mutations are pointed, bar-invariant and never fail triangularity."""
    family = cluster_monomials(kronecker_quantum, 3)
    report = verify_triangular(family, kronecker_quantum, truncation=6)
    assert report.all("pointed")
    assert report.all("bar_invariant")
    assert not any(member.triangular is Verdict.FAIL for member in report.members)
    by_degree = {member.degree: member for member in report.members}
    assert by_degree[(0, 0)].triangular is Verdict.PASS
    assert by_degree[(1, 0)].triangular is Verdict.PASS


def test_quantum_bands_are_triangular(kronecker_quantum):
    """Bands join the cluster monomials without a failure; a planted v X^0 is caught."""
    frame = kronecker_quantum.frame
    bands = [annulus_element(AnnulusKind.BAND, k, kronecker_quantum) for k in range(1, 4)]
    planted = TorusElement.monomial(frame, (0, 0), ScalarPoly.v(1))
    family = [*cluster_monomials(kronecker_quantum, 3), *bands, planted]
    report = verify_triangular(family, kronecker_quantum, truncation=6)
    *_, loop, band2, band3, fake = report.members
    for member in (loop, band2, band3):
        assert member.pointed is Verdict.PASS
        assert member.bar_invariant is Verdict.PASS
        assert member.triangular is not Verdict.FAIL
    assert loop.degree == (1, -1)
    assert loop.triangular is Verdict.PASS
    assert fake.bar_invariant is Verdict.FAIL
    assert fake.pointed is Verdict.FAIL


def test_cluster_monomial_check_with_witness(kronecker_quantum):
    """With an injective copy the family must hold the cluster monomials of both seeds."""
    witness = find_injective_copy(kronecker_quantum, 4)
    family = cluster_monomials(kronecker_quantum, 3)
    report = verify_triangular(family, kronecker_quantum, witness, truncation=4)
    assert report.monomials is Verdict.PASS
    assert report.monomial_detail == ""

    x1 = TorusElement.variable(kronecker_quantum.frame, 0)
    without = [member for member in family if member != x1]
    report = verify_triangular(without, kronecker_quantum, witness, truncation=4)
    assert report.monomials is Verdict.INCONCLUSIVE
    assert "[1, 0]" in report.monomial_detail


def test_cluster_monomial_check_catches_a_wrong_member(kronecker_quantum):
    """A member pointed at a cluster monomial's degree but differing from it fails the check."""
    witness = find_injective_copy(kronecker_quantum, 4)
    x3 = mutate_sequence(kronecker_quantum, [0]).variables[0]
    wrong = x3 + TorusElement.monomial(kronecker_quantum.frame, (-1, 4))
    family = [wrong if member == x3 else member for member in cluster_monomials(kronecker_quantum, 3)]
    assert wrong in family
    report = verify_triangular(family, kronecker_quantum, witness, truncation=4)
    assert report.monomials is Verdict.FAIL
    assert "[-1, 0]" in report.monomial_detail


def test_cluster_monomial_check_needs_a_witness(kronecker_quantum):
    report = verify_triangular(cluster_monomials(kronecker_quantum, 1), kronecker_quantum, truncation=2)
    assert report.monomials is None
