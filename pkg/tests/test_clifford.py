import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import worked_examples as wx
from conftest import random_skew
from isoblow.exact_linalg import DomainError, RationalMatrix, pfaffian_submatrix
from isoblow.isotropic_models import chart_point_O, random_chart_coords
from isoblow.clifford import (CliffordVector, ExtElement, annihilation_check, chart_skew_matrix, clifford_act,
                              contract, pure_spinor, spinor_embed, wedge_left)


def e(n, *subset, c=1):
    return ExtElement.monomial(n, subset, c)


def unit(n, i):
    return [1 if j == i else 0 for j in range(1, n + 1)]


def random_ext(n, rng):
    terms = {}
    for k in range(n + 1):
        for s in combinations(range(1, n + 1), k):
            if rng.random() < 0.5:
                terms[s] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return ExtElement(n, terms)


def random_cvec(n, rng):
    r = lambda: Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return CliffordVector(tuple(r() for _ in range(n)), tuple(r() for _ in range(n)))


def test_wedge_signs():
    assert wedge_left(unit(3, 1), e(3, 2)) == e(3, 1, 2)
    assert wedge_left(unit(3, 2), e(3, 1)) == e(3, 1, 2, c=-1)
    assert wedge_left(unit(3, 2), e(3, 1, 3)) == e(3, 1, 2, 3, c=-1)
    assert wedge_left(unit(3, 1), e(3, 1, 3)).is_zero()


def test_contract_signs():
    assert contract(unit(3, 1), e(3, 1, 2)) == e(3, 2)
    assert contract(unit(3, 2), e(3, 1, 2)) == e(3, 1, c=-1)
    assert contract(unit(3, 3), e(3, 1, 2)).is_zero()
    assert contract(unit(3, 1), ExtElement.one(3)).is_zero()


def test_monomial_sorting_sign():
    assert e(4, 3, 1) == e(4, 1, 3, c=-1)
    assert e(4, 2, 2).is_zero()
    with pytest.raises(DomainError):
        ExtElement(2, {(3,): 1})


@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_clifford_relation(n, seed):
    rng = random.Random(seed)
    x, y, phi = random_cvec(n, rng), random_cvec(n, rng), random_ext(n, rng)
    lhs = clifford_act(x, clifford_act(y, phi)) + clifford_act(y, clifford_act(x, phi))
    pairing = (x + y).quadratic() - x.quadratic() - y.quadratic()
    assert lhs == phi.scale(pairing)


def test_two_dimensional_spinor():
    w = Fraction(-7, 3)
    a = RationalMatrix([[0, w], [-w, 0]])
    assert pure_spinor(2, 0, a) == ExtElement.one(2) + e(2, 1, 2, c=w)


def test_open_cell_spinor_coefficients_are_pfaffians():
    rng = random.Random(3)
    for n in range(2, 7):
        a = random_skew(n, rng)
        phi = pure_spinor(n, 0, a)
        for k in range(0, n + 1, 2):
            for s in combinations(range(n), k):
                assert phi.coefficient(tuple(i + 1 for i in s)) == pfaffian_submatrix(a, s)


def test_non_skew_rejected():
    a = RationalMatrix([[0, 1], [2, 0]])
    with pytest.raises(DomainError):
        pure_spinor(2, 0, a)
    assert not annihilation_check(2, 0, a, force=True)


@pytest.mark.parametrize("n", range(1, 7))
def test_annihilation_and_parity(n):
    rng = random.Random(50 + n)
    for l in range(0, n + 1, 2):
        for _ in range(8):
            a = random_skew(n, rng)
            assert annihilation_check(n, l, a)
            phi = pure_spinor(n, l, a)
            assert not phi.is_zero()
            assert all(d % 2 == 0 for d in phi.degrees())


def test_odd_chart_gives_odd_spinor():
    a = random_skew(3, random.Random(0))
    assert annihilation_check(3, 1, a)
    assert all(d % 2 == 1 for d in pure_spinor(3, 1, a).degrees())


def test_spinor_embed_of_chart_origin():
    for n in range(2, 7):
        for l in range(0, n + 1, 2):
            rows = [[0] * (2 * n) for _ in range(n)]
            for i in range(n):
                rows[i][n + i if i < l else i] = 1
            assert spinor_embed(RationalMatrix(rows), l) == e(n, *range(1, l + 1))


@pytest.mark.parametrize("seed", range(4))
def test_spinor_embed_of_worked_orthogonal_chart(seed):
    c, m = wx.og_l0(seed)
    b1, b2 = c.b[1], c.b[2]
    s13, s14, s23, s24 = (c.xi[k] for k in [(1, 3), (1, 4), (2, 3), (2, 4)])
    # A = M^T on the e* block: A_ij = m[j, 4 + i]
    expected = ExtElement(4, {
        (): 1,
        (1, 2): -b1, (1, 3): -b1 * s13, (1, 4): -b1 * s14,
        (2, 3): -b1 * s23, (2, 4): -b1 * s24,
        (3, 4): b1 * (s14 * s23 - s13 * s24 - b2),
        (1, 2, 3, 4): b1 ** 2 * b2,
    })
    assert spinor_embed(m, 0) == expected
    assert annihilation_check(4, 0, chart_skew_matrix(m, 0))


def test_spinor_embed_matches_recovered_matrix():
    rng = random.Random(8)
    for n in range(2, 6):
        for l in range(0, n + 1, 2):
            for _ in range(3):
                p = chart_point_O(n, l, random_chart_coords("OG", n, l, None, rng))
                a = chart_skew_matrix(p.matrix, l)
                assert spinor_embed(p, l) == pure_spinor(n, l, a).normalized()
                assert annihilation_check(n, l, a)


@pytest.mark.parametrize("n", range(2, 7))
def test_orthogonal_generators_vanish_with_the_spinor_degree(n):
    from isoblow.isotropic_models import IdealSpec, chart_layout, ideal_generators

    rng = random.Random(300 + n)
    for l in range(0, n + 1, 2):
        lay = chart_layout("OG", n, l)
        for _ in range(8):
            c = random_chart_coords("OG", n, l, None, rng, generic=True)
            for _ in range(rng.randint(0, 2)):
                groups = [g for g in "ab" if lay[g]]
                if groups:
                    g = rng.choice(groups)
                    c = c.replace(g, rng.choice(lay[g]), 0)
            phi = pure_spinor(n, l, chart_skew_matrix(chart_point_O(n, l, c).matrix, l))
            for k in range(n // 2 + 1):
                gens = ideal_generators(IdealSpec("OG", n, l, k), c)
                assert all(v == 0 for v in gens) == (2 * k not in phi.degrees())
