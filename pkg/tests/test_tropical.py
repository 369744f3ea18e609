"""Tests for y-variables, pointed decompositions and tropical transport."""

import random

import pytest

from cluster_bases.explore import explore
from cluster_bases.lattice import apply_b
from cluster_bases.ring import ONE, TorusElement
from cluster_bases.seed import FrozenVertexError, initial_variables_in, mutate_b, mutate_seed, mutate_sequence
from cluster_bases.tropical import (
    AnchorMismatchError,
    NotPointedError,
    TropicalPoint,
    dominance_less,
    extract_pointed,
    render_decomposition,
    same_tropical_point,
    transport,
    tropical_transform,
    y_variable,
)


def test_y_variables(kronecker, sl3):
    """Y_k is the monomial of the k-th column of the extended exchange matrix."""
    assert y_variable(kronecker, 0).render() == "X[0,2]"
    assert y_variable(kronecker, 1).render() == "X[-2,0]"
    assert y_variable(sl3, 0).render() == "X[0,1,-1]"
    with pytest.raises(FrozenVertexError):
        y_variable(sl3, 2)


def test_extract_pointed_sl3(sl3):
    """X1' has degree (-1,0,1) and F = 1 + Y1."""
    decomposition = extract_pointed(mutate_seed(sl3, 0).variables[0], sl3)
    assert decomposition.g == (-1, 0, 1)
    assert decomposition.f_poly == {(0,): ONE, (1,): ONE}
    assert render_decomposition(decomposition) == "g=[-1,0,1]; F = 1 + Y[1]"


def test_extract_pointed_kronecker(kronecker):
    """X4 has degree (0,-1) with F = 1 + Y2 + 2 Y1 Y2 + Y1^2 Y2."""
    x4 = mutate_sequence(kronecker, [0, 1]).variables[1]
    decomposition = extract_pointed(x4, kronecker)
    assert decomposition.g == (0, -1)
    assert decomposition.f_poly == {(0, 0): 1, (0, 1): 1, (1, 1): 2, (2, 1): 1}
    assert render_decomposition(decomposition) == "g=[0,-1]; F = 1 + Y[0,1] + 2*Y[1,1] + Y[2,1]"


def test_monomials_are_pointed_at_themselves(sl3):
    """A monomial is its own degree with F = 1."""
    decomposition = extract_pointed(TorusElement.monomial(sl3.frame, (2, -1, 3)), sl3)
    assert decomposition.g == (2, -1, 3)
    assert decomposition.f_poly == {(0,): 1}


@pytest.mark.parametrize("terms", [{(1, 0): 1, (0, 1): 1}, {(1, 0): 2}, {}])
def test_not_pointed(kronecker, terms):
    """Elements without a dominating degree, a unit leading coefficient, or any terms are rejected."""
    with pytest.raises(NotPointedError):
        extract_pointed(TorusElement(kronecker.frame, terms), kronecker)


def test_dominance(kronecker, sl3):
    """(-2,2) lies strictly below (0,0) via n = (1,1); the order is irreflexive."""
    assert dominance_less((-2, 2), (0, 0), kronecker)
    assert not dominance_less((0, 0), (-2, 2), kronecker)
    assert not dominance_less((0, 0), (0, 0), kronecker)
    assert not dominance_less((-1, 1), (0, 0), kronecker)
    assert dominance_less((0, 1, -1), (0, 0, 0), sl3)


def test_tropical_transform_sl3(sl3):
    """The degree of X1' becomes the unit vector after mutating at 1."""
    assert tropical_transform((-1, 0, 1), 0, sl3.b_full) == (1, 0, 0)
    assert tropical_transform((0, 0, 0), 0, sl3.b_full) == (0, 0, 0)


@pytest.mark.parametrize("rng_seed", range(100))
def test_tropical_transform_is_an_involution(kronecker, sl3, annulus, rng_seed):
    """Transforming twice at k, with the mutated matrix the second time, is the identity."""
    rng = random.Random(rng_seed)
    for seed in (kronecker, sl3, annulus):
        g = tuple(rng.randint(-4, 4) for _ in range(seed.rank))
        k = rng.choice(seed.unfrozen)
        once = tropical_transform(g, k, seed.b_full)
        assert tropical_transform(once, k, mutate_b(seed.b_full, k)) == g


def test_transport(sl3):
    """Transport along [k,k] is trivial; along [1] it matches degrees recomputed at the new seed."""
    p = TropicalPoint(anchor=(), g=(2, -1, 1))
    assert transport(p, [], sl3) == p
    assert transport(p, [0, 0], sl3).g == p.g
    mutated = mutate_seed(sl3, 0)
    chart = initial_variables_in(mutated)
    for z in (*sl3.variables, mutated.variables[0]):
        before = extract_pointed(z, sl3).g
        assert transport(TropicalPoint((), before), [0], sl3).g == extract_pointed(z, mutated, chart).g


def test_transport_checks_anchor(sl3):
    """A point can only be transported from the seed it is anchored at."""
    with pytest.raises(AnchorMismatchError):
        transport(TropicalPoint(anchor=(0,), g=(1, 0, 0)), [0], sl3)


def test_same_tropical_point(sl3):
    """The unit vector at mu_1 and (-1,0,1) at the initial seed are the same point."""
    assert same_tropical_point(TropicalPoint((0,), (1, 0, 0)), TropicalPoint((), (-1, 0, 1)), sl3)
    assert not same_tropical_point(TropicalPoint((0,), (1, 0, 0)), TropicalPoint((), (1, 0, 0)), sl3)


def test_degrees_follow_tropical_transformations(kronecker):
    """For every explored cluster variable, the degree at mu_k t is the transform of the degree at t."""
    for seed in explore(kronecker, 2, mode="labeled").seeds:
        chart = initial_variables_in(seed)
        for k in seed.unfrozen:
            child = mutate_seed(seed, k)
            child_chart = initial_variables_in(child)
            for z in seed.variables:
                before = extract_pointed(z, seed, chart).g
                assert extract_pointed(z, child, child_chart).g == tropical_transform(before, k, seed.b_full)


def test_distinct_variables_have_distinct_degrees(kronecker):
    """Cluster variables are separated by their degrees at the initial seed."""
    catalog = explore(kronecker, 4)
    degrees = {extract_pointed(z, kronecker).g for z in catalog.variables}
    assert len(degrees) == len(catalog.variables)


def below(g, n, seed):
    return tuple(a + b for a, b in zip(g, apply_b(n, seed.b_full, seed.unfrozen)))


def test_dominance_is_strict_on_random_offsets(kronecker, sl3):
    """g + B~n lies strictly below g for every nonzero n >= 0 and never above it."""
    rng = random.Random(0)
    for _ in range(100):
        for seed in (kronecker, sl3):
            g = tuple(rng.randint(-3, 3) for _ in range(seed.rank))
            n = [rng.randint(0, 3) for _ in seed.unfrozen]
            if not any(n):
                n[0] = 1
            lower = below(g, n, seed)
            assert dominance_less(lower, g, seed)
            assert not dominance_less(g, lower, seed)
            assert not dominance_less(g, g, seed)
            assert dominance_less(below(lower, n, seed), g, seed)


def test_random_pointed_elements_decompose_uniquely(kronecker, sl3):
    """An element assembled as X^g F(Y) decomposes back to exactly that g and F."""
    rng = random.Random(1)
    for _ in range(100):
        for seed in (kronecker, sl3):
            g = tuple(rng.randint(-3, 3) for _ in range(seed.rank))
            f_poly = {(0,) * len(seed.unfrozen): 1}
            for _ in range(rng.randint(0, 4)):
                n = tuple(rng.randint(0, 2) for _ in seed.unfrozen)
                if any(n):
                    f_poly[n] = rng.randint(1, 3)
            element = TorusElement(seed.frame, {below(g, n, seed): c for n, c in f_poly.items()})
            decomposition = extract_pointed(element, seed)
            assert decomposition.g == g
            assert decomposition.f_poly == f_poly
