from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from isoblow.exact_linalg import DimensionError, DomainError
from isoblow.polyhedra import (RationalCone, brute_force_rays, cones_equal, double_description, in_cone,
                               lp_feasible, primitive)


def test_primitive():
    assert primitive([2, 4, -6]) == (1, 2, -3)
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert primitive([0, 0]) == (0, 0)


def test_orthant():
    eye = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert set(double_description(eye, 3)) == set(eye)


def test_square_cone():
    # cone over the unit square: x <= h, y <= h, x, y >= 0
    ineqs = [(1, -1, 0), (1, 0, -1), (0, 1, 0), (0, 0, 1)]
    want = {(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)}
    assert set(double_description(ineqs, 3)) == want
    assert set(brute_force_rays(ineqs, 3)) == want


def test_rays_come_sorted():
    ineqs = [(1, -1, 0), (1, 0, -1), (0, 1, 0), (0, 0, 1)]
    rays = double_description(ineqs, 3)
    assert rays == sorted(rays, reverse=True)


@given(st.integers(2, 4), st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), max_size=4))
def test_double_description_matches_brute_force(dim, extra):
    # nonnegativity keeps the cone pointed; extra rows cut it further
    ineqs = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    ineqs += [tuple(r[:dim]) for r in extra if any(r[:dim])]
    assert set(double_description(ineqs, dim)) == set(brute_force_rays(ineqs, dim))


def test_lp_feasible():
    x = lp_feasible([[1, 1], [1, -1]], [3, 1])
    assert x == [2, 1]
    assert lp_feasible([[1, 1]], [-1]) is None
    assert lp_feasible([[1, 0], [0, 1]], [0, 0]) == [0, 0]


def test_membership():
    c = RationalCone.from_rays([(1, 0), (1, 1)], 2)
    assert in_cone((0, 0), c)
    assert in_cone((1, 1), c)
    assert in_cone((3, 1), c)
    assert not in_cone((-1, 0), c)
    assert not in_cone((0, 1), c)
    f = RationalCone.from_facets([(0, 1), (1, -1)], 2)
    assert in_cone((3, 1), f) and not in_cone((0, 1), f)
    with pytest.raises(DimensionError):
        in_cone((1, 0, 0), c)


def test_cones_equal():
    a = RationalCone.from_rays([(1, 0), (1, 1)], 2)
    assert cones_equal(a, RationalCone.from_rays([(1, 1), (1, 0)], 2))
    assert cones_equal(a, RationalCone.from_rays([(2, 2), (3, 0), (2, 1)], 2))
    assert not cones_equal(a, RationalCone.from_rays([(1, 0)], 2))
    assert cones_equal(a, RationalCone.from_facets([(0, 1), (1, -1)], 2))


def test_cone_normalises_rays():
    c = RationalCone.from_rays([(2, 2), (1, 1), (0, 0)], 2)
    assert c.rays == ((1, 1),)
    with pytest.raises(DomainError):
        RationalCone(2)
    with pytest.raises(DimensionError):
        RationalCone.from_rays([(1, 0, 0)], 2)
