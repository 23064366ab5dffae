import pytest

import polynorm
from polynorm import Polytope


def box(*sides):
    pts = [()]
    for lo, hi in sides:
        pts = [p + (c,) for p in pts for c in (lo, hi)]
    return Polytope(pts)


def test_hull_and_sum():
    p = Polytope([(0, 0), (1, 1), (2, 2)])
    assert p.vertices == [(0, 0), (2, 2)]
    s = Polytope([(0, 0), (2, 1)]) + Polytope([(0, 0), (0, 1)])
    assert s.vertices == [(0, 0), (0, 1), (2, 1), (2, 2)]
    assert box((-1, 1), (-1, 1)).contains((1, 0))
    assert len(box((-1, 1), (-1, 1)).lattice_points()) == 9


def test_big_coordinates_round_trip():
    big = 10**40
    p = Polytope([(-big,), (big,)])
    assert p.vertices == [(-big,), (big,)]
    assert p.is_symmetric()


def test_decompose_square():
    p = box((-1, 1), (-1, 1))
    q, r = polynorm.decompose(p)
    assert q == box((0, 3), (0, 2))
    assert r == box((-1, 3), (0, 3))
    assert polynorm.verify_norm_identity(p, q, r)


def test_counterexample_is_not_a_norm():
    p = Polytope([(1, 0), (1, 1), (-1, 0), (-1, -1)])
    assert polynorm.is_integral_norm(p) is None
    q, r = polynorm.decompose(p)
    assert polynorm.verify_norm_identity(p, q, r)


def test_norm_difference_and_group():
    square = box((-1, 1), (-1, 1))
    u, v = polynorm.norm_difference(square, Polytope.origin(2))
    assert polynorm.element_eq(square, Polytope.origin(2), u + u.mirror(), v + v.mirror())


def test_newton():
    assert polynorm.newton_polytope("(1+x)*(1+y)", ["x", "y"]) == box((0, 1), (0, 1))


def test_errors_carry_codes():
    with pytest.raises(polynorm.PolynormError) as info:
        polynorm.decompose(box((0, 1)))
    assert info.value.code == "NotSymmetric"
    with pytest.raises(ValueError):
        polynorm.newton_polytope("x +", ["x"])
