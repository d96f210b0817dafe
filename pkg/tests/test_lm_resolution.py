import random
from fractions import Fraction

import pytest

from isoblow.clifford import ExtElement
from isoblow.exact_linalg import DomainError, RationalMatrix, minor, rank
from isoblow.isotropic_models import ChartCoords, PluckerVector, is_isotropic, plucker_embed
from isoblow.lm_resolution import (CenterIdealSpec, LMPoint, _interpolate, center_generators, fiber_coords_template,
                                   fiber_degree, kal_project, lm_eval, lm_image, lm_invert, random_lm_point,
                                   weight_one_index, weight_one_signs)

# P_{[n] - {i} + {n+j}} = s(i, j) x00^(n-1) x_ij; frozen from unit-point expansions
SIGNS_3 = {(1, 1): 1, (1, 2): 1, (1, 3): 1, (2, 1): -1, (2, 2): -1, (2, 3): -1, (3, 1): 1, (3, 2): 1, (3, 3): 1}
SIGNS_4 = {(i, j): (-1 if i in (1, 3) else 1) for i in range(1, 5) for j in range(1, 5)}


def sym(rows):
    return RationalMatrix(rows)


def test_sign_fixture():
    assert weight_one_signs(3) == SIGNS_3
    assert weight_one_signs(4) == SIGNS_4
    for n in range(1, 7):
        assert weight_one_signs(n) == {(i, j): (-1) ** (n - i) for i in range(1, n + 1) for j in range(1, n + 1)}


def test_weight_one_coordinates_are_scaled_entries():
    rng = random.Random(1)
    for n in range(1, 6):
        p = random_lm_point("LG", n, rng)
        v = lm_image("LG", p)
        assert v[tuple(range(1, n + 1))] == p.x00 ** n
        for (i, j), s in weight_one_signs(n).items():
            assert v[weight_one_index(n, i, j)] == s * p.x00 ** (n - 1) * p.X[i - 1, j - 1]


def test_lm_eval_examples():
    p = LMPoint(1, RationalMatrix.zeros(3, 3))
    assert lm_eval("LG", p).matrix == RationalMatrix.hstack(RationalMatrix.identity(3), RationalMatrix.zeros(3, 3))
    m = lm_eval("LG", LMPoint(1, sym([[1, 1], [1, 1]]))).matrix
    assert m == RationalMatrix([[1, 0, 1, 1], [0, 1, 1, 1]])
    v = plucker_embed(m)
    assert v.coords == {(1, 2): 1, (1, 3): 1, (1, 4): 1, (2, 3): -1, (2, 4): -1, (3, 4): 0}
    for idx, val in v.coords.items():
        assert val == minor(m, [0, 1], [c - 1 for c in idx])


def test_point_validation():
    with pytest.raises(DomainError):
        LMPoint(1, RationalMatrix([[0, 1], [2, 0]]), "LG")
    with pytest.raises(DomainError):
        LMPoint(1, RationalMatrix([[1, 1], [1, 1]]), "OG")
    with pytest.raises(DomainError):
        LMPoint(0, RationalMatrix.zeros(2, 2))
    with pytest.raises(DomainError):
        lm_eval("OG", LMPoint(1, RationalMatrix.zeros(2, 2), "LG"))


def test_base_locus():
    with pytest.raises(DomainError, match="base locus"):
        lm_eval("LG", LMPoint(0, sym([[1, 1], [1, 1]])))
    with pytest.raises(DomainError, match="base locus"):
        lm_invert("LG", PluckerVector(2, {(1, 3): 1}))
    with pytest.raises(DomainError, match="base locus"):
        lm_invert("OG", ExtElement(2, {(1, 2): 1}))


def test_kal_projection_of_origin():
    v = plucker_embed(RationalMatrix.hstack(RationalMatrix.identity(3), RationalMatrix.zeros(3, 3)))
    t = kal_project(v)
    assert t.support() == [(1, 2, 3)] and t[(1, 2, 3)] == 1
    assert len(t.coords) == 1 + 9
    phi = ExtElement(4, {(): 1, (1, 2): 3, (1, 2, 3, 4): 5})
    assert kal_project(phi) == ExtElement(4, {(): 1, (1, 2): 3})


def test_unit_inverse():
    v = PluckerVector(3, {(1, 2, 3): 1})
    p = lm_invert("LG", v)
    assert p.x00 == 1 and p.X == RationalMatrix.zeros(3, 3)
    q = lm_invert("OG", ExtElement.one(4))
    assert q.x00 == 1 and q.X == RationalMatrix.zeros(4, 4)


@pytest.mark.parametrize("family", ["LG", "OG"])
@pytest.mark.parametrize("n", range(2, 7))
def test_round_trip(family, n):
    rng = random.Random(hash((family, n)) % 1000)
    for _ in range(20 if n < 6 else 5):
        p = random_lm_point(family, n, rng)
        assert is_isotropic(lm_eval(family, p))
        back = lm_invert(family, kal_project(lm_image(family, p)))
        assert back.projectively_equal(p)


def test_projective_equality():
    p = LMPoint(2, sym([[2, 4], [4, 6]]))
    assert p.projectively_equal(LMPoint(1, sym([[1, 2], [2, 3]])))
    assert p.projectively_equal(LMPoint(-1, sym([[-1, -2], [-2, -3]])))
    assert not p.projectively_equal(LMPoint(1, sym([[1, 2], [2, 4]])))


def low_rank_symmetric(n, r, rng):
    vs = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(r)]
    ws = [Fraction(rng.choice([-2, -1, 1, 3])) for _ in range(r)]
    return RationalMatrix([[sum(w * v[i] * v[j] for w, v in zip(ws, vs)) for j in range(n)] for i in range(n)], n)


def low_rank_skew(n, r2, rng):
    # sum of r2 rank-2 pieces u ^ v
    m = [[Fraction(0)] * n for _ in range(n)]
    for _ in range(r2):
        u = [rng.randint(-2, 2) for _ in range(n)]
        v = [rng.randint(-2, 2) for _ in range(n)]
        for i in range(n):
            for j in range(n):
                m[i][j] += u[i] * v[j] - u[j] * v[i]
    return RationalMatrix(m, n)


@pytest.mark.parametrize("n", range(1, 6))
def test_Y_ideals_detect_rank(n):
    rng = random.Random(40 + n)
    for _ in range(12):
        X = low_rank_symmetric(n, rng.randint(0, n), rng)
        p = LMPoint(1, X)
        for l in range(n):
            gens = center_generators(CenterIdealSpec("LG", n, "Y", l), p)
            assert all(g == 0 for g in gens) == (rank(X) <= l)


@pytest.mark.parametrize("n", range(4, 8))
def test_orthogonal_Y_ideals_detect_rank(n):
    rng = random.Random(60 + n)
    for _ in range(12):
        X = low_rank_skew(n, rng.randint(0, n // 2), rng)
        p = LMPoint(1, X, "OG")
        for l in range(n // 2):
            gens = center_generators(CenterIdealSpec("OG", n, "Y", l), p)
            assert all(g == 0 for g in gens) == (rank(X) <= 2 * l)


def test_Z_ideals():
    rng = random.Random(5)
    n = 4
    for _ in range(10):
        X = low_rank_symmetric(n, rng.randint(1, n), rng)
        for x00 in (0, 1):
            p = LMPoint(x00, X)
            for l in range(n):
                gens = center_generators(CenterIdealSpec("LG", n, "Z", l), p)
                expect = x00 == 0 and (l == 0 or rank(X) <= n - l)
                assert all(g == 0 for g in gens) == expect
    assert center_generators(CenterIdealSpec("LG", 3, "Z", 0), LMPoint(0, sym([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))) == [0]


def test_generic_point_is_off_every_centre():
    rng = random.Random(6)
    for family, n in [("LG", 4), ("OG", 6)]:
        p = random_lm_point(family, n, rng)
        top = n if family == "LG" else n // 2
        for which in "YZ":
            for l in range(top):
                assert any(g != 0 for g in center_generators(CenterIdealSpec(family, n, which, l), p))


def test_centre_spec_ranges():
    assert CenterIdealSpec("OG", 6, "Y", 1).size() == 4
    assert CenterIdealSpec("OG", 6, "Z", 1).size() == 6
    assert CenterIdealSpec("LG", 5, "Z", 2).size() == 4
    with pytest.raises(DomainError):
        CenterIdealSpec("LG", 3, "Y", 3)
    with pytest.raises(DomainError):
        CenterIdealSpec("LG", 3, "W", 0)


def test_interpolation():
    xs = [Fraction(t) for t in range(4)]
    assert _interpolate(xs, [1 + 2 * x - x ** 3 for x in xs]) == [1, 2, 0, -1]
    assert _interpolate(xs, [0] * 4) == []


@pytest.mark.parametrize("n", range(1, 7))
def test_lagrangian_fibre_degree(n):
    rng = random.Random(n)
    for _ in range(20 if n < 6 else 5):
        r = fiber_degree("LG", n, fiber_coords_template("LG", n, rng))
        assert r.degree == n
        assert tuple(range(1, n + 1)) in r.constant_one


@pytest.mark.parametrize("n", range(2, 7))
def test_orthogonal_fibre_degree(n):
    rng = random.Random(n)
    for _ in range(10):
        q = fiber_coords_template("OG", n, rng)
        r = fiber_degree("OG", n, q)
        assert r.degree == n // 2
        assert () in r.constant_one
        assert fiber_degree("OG", n, q, embedding="plucker").degree == 2 * (n // 2)


def test_special_fibre_is_a_pure_power():
    for n in range(1, 7):
        q = ChartCoords(b={i: 1 for i in range(2, n + 1)}, xi={(i, j): 0 for i in range(1, n + 1)
                                                              for j in range(i + 1, n + 1)})
        r = fiber_degree("LG", n, q)
        top = [k for k, d in r.table if d == n]
        assert top == [tuple(range(n + 1, 2 * n + 1))]
