"""Structural checks for the root system layer."""

import random
from fractions import Fraction

import pytest

from tmcv.errors import NotARoot, NotDominant, WrongSystem
from tmcv.rootsystems import SYSTEMS, root_system, wadd, wneg, wscale, wsub

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "G2": 12}
NUM_POS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "G2": 6}
COXETER = {"A1": 2, "A2": 3, "A3": 4, "B2": 4, "G2": 6}


@pytest.mark.parametrize("name", SYSTEMS)
def test_group_order_and_roots(name):
    rs = root_system(name)
    assert len(rs.weyl) == ORDERS[name]
    assert rs.num_positive_roots == NUM_POS[name]
    assert rs.coxeter_number == COXETER[name]
    assert sorted(rs.lengths)[0] == 0
    assert sorted(rs.lengths)[-1] == NUM_POS[name]
    # longest element is unique
    assert rs.lengths.count(NUM_POS[name]) == 1


@pytest.mark.parametrize("name", SYSTEMS)
def test_covectors_integral_and_consistent(name):
    rs = root_system(name)
    rng = random.Random(20260814)
    for beta in rs.positive_roots:
        for _ in range(8):
            lam = tuple(rng.randint(-6, 6) for _ in range(rs.rank))
            # pairing must equal 2(lam, beta)/(beta, beta) exactly
            expected = 2 * rs.bilinear(lam, beta) / rs.bilinear(beta, beta)
            assert expected == Fraction(rs.pairing(lam, beta))


@pytest.mark.parametrize("name", SYSTEMS)
def test_reflections(name):
    rs = root_system(name)
    rng = random.Random(7)
    for beta in rs.positive_roots:
        assert rs.reflect(beta, beta) == wneg(beta)
        for _ in range(6):
            lam = tuple(rng.randint(-9, 9) for _ in range(rs.rank))
            assert rs.reflect(rs.reflect(lam, beta), beta) == lam


def test_longest_element_action():
    for name in ("A1", "B2", "G2"):
        rs = root_system(name)
        lam = tuple(range(1, rs.rank + 1))
        assert rs.apply(rs.w0, lam) == wneg(lam)
    rs = root_system("A3")
    assert rs.apply(rs.w0, (1, 2, 3)) == (-3, -2, -1)
    rs = root_system("A2")
    assert rs.apply(rs.w0, (1, 2)) == (-2, -1)


def test_highest_roots():
    assert root_system("A2").highest_root == (1, 1)
    assert root_system("A3").highest_root == (1, 0, 1)
    assert root_system("B2").highest_root == (0, 2)
    assert root_system("B2").highest_short_root == (1, 0)
    assert root_system("G2").highest_root == (0, 1)
    assert root_system("G2").highest_short_root == (1, 0)


def test_b2_simple_reflections_and_orbit():
    rs = root_system("B2")
    a1, a2 = rs.simple_roots
    assert rs.reflect((4, 4), a1) == (-4, 12)
    assert rs.reflect((4, 4), a2) == (8, -4)
    assert rs.orbit((4, 4)) == frozenset(
        {(4, 4), (-4, 12), (8, -4), (8, -12), (-8, 12), (-8, 4), (4, -12), (-4, -4)}
    )


def test_g2_pairings():
    rs = root_system("G2")
    # covectors on (a, b), listed against root coordinates
    want = {
        (2, -1): (1, 0),
        (-3, 2): (0, 1),
        (-1, 1): (1, 3),
        (1, 0): (2, 3),
        (3, -1): (1, 1),
        (0, 1): (1, 2),
    }
    for beta, cv in want.items():
        assert rs.covector(beta) == cv
    assert rs.pairing(rs.rho, rs.highest_short_root) == 5


@pytest.mark.parametrize("name", SYSTEMS)
def test_orbit_and_dominant_rep(name):
    rs = root_system(name)
    rng = random.Random(99)
    for _ in range(20):
        lam = tuple(rng.randint(-8, 8) for _ in range(rs.rank))
        orb = rs.orbit(lam)
        doms = [m for m in orb if rs.is_dominant(m)]
        assert len(doms) == 1
        assert rs.dominant_rep(lam) == doms[0]
        assert len(orb) <= len(rs.weyl)


@pytest.mark.parametrize("name", SYSTEMS)
def test_strict_dominantize(name):
    rs = root_system(name)
    rng = random.Random(3)
    strictly_dominant = tuple(rng.randint(1, 5) for _ in range(rs.rank))
    for w in rs.weyl:
        moved = rs.apply(w, strictly_dominant)
        rep, sign = rs.strict_dominantize(moved)
        assert rep == strictly_dominant
        assert sign == rs.det(w)
    on_wall = (0,) + (1,) * (rs.rank - 1)
    for w in rs.weyl:
        rep, sign = rs.strict_dominantize(rs.apply(w, on_wall))
        assert sign == 0


def test_dot_action_is_group_action():
    rs = root_system("G2")
    rng = random.Random(1234)
    for _ in range(10):
        lam = tuple(rng.randint(-5, 5) for _ in range(2))
        for w in rs.weyl:
            got = rs.dot(w, lam)
            assert wadd(got, rs.rho) == rs.apply(w, wadd(lam, rs.rho))


def test_dominance_order_enumeration():
    rs = root_system("A2")
    assert rs.dominant_weights_below((1, 1)) == [(1, 1), (0, 0)]
    rs = root_system("G2")
    below = rs.dominant_weights_below((1, 1))
    assert set(below) == {(1, 1), (2, 0), (0, 1), (1, 0), (0, 0)}
    assert below[0] == (1, 1)
    rs = root_system("B2")
    assert set(rs.dominant_weights_below((0, 2))) == {(0, 2), (1, 0), (0, 0)}


def test_restricted_split():
    rs = root_system("A3")
    assert rs.restricted_split((2, 3, 3), 3) == ((2, 0, 0), (0, 1, 1))
    assert rs.restricted_split((0, 0, 0), 5) == ((0, 0, 0), (0, 0, 0))
    with pytest.raises(NotDominant):
        rs.restricted_split((-1, 0, 0), 3)
    rs = root_system("G2")
    assert rs.is_restricted((6, 6), 7)
    assert not rs.is_restricted((7, 0), 7)


def test_root_lattice_membership():
    rs = root_system("B2")
    assert rs.in_root_lattice((0, 2))
    assert rs.in_root_lattice((3, 4))
    assert not rs.in_root_lattice((0, 1))
    rs = root_system("A2")
    assert rs.in_root_lattice((1, 1))
    assert not rs.in_root_lattice((1, 0))


def test_bad_inputs():
    with pytest.raises(WrongSystem):
        root_system("C2")
    rs = root_system("A2")
    with pytest.raises(WrongSystem):
        rs.check_weight((1, 2, 3))
    with pytest.raises(NotARoot):
        rs.covector((5, 5))
    with pytest.raises(NotDominant):
        rs.dominant_weights_below((-1, 2))
