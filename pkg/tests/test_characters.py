"""Character arithmetic checks, including the dual-method oracle."""

import random

import pytest

from tmcv.characters import (
    Character,
    SimpleCharacters,
    alt_weyl_character_full,
    chi_resolve,
    dom_dimension,
    expand_dom,
    g2_half_twist_full,
    jantzen_character_dom,
    jantzen_multipliers,
    mul_full,
    twist_full,
    weyl_character_dom,
    weyl_character_full,
    weyl_dimension,
    weyl_expansion,
)
from tmcv.errors import MissingKey, NotDominant, OracleMismatch, SchemaError, WrongSystem
from tmcv.rootsystems import SYSTEMS, root_system

KNOWN_DIMS = [
    ("A1", (1,), 2),
    ("A1", (4,), 5),
    ("A2", (1, 0), 3),
    ("A2", (1, 1), 8),
    ("A3", (1, 0, 0), 4),
    ("A3", (0, 1, 0), 6),
    ("A3", (1, 0, 1), 15),
    ("B2", (1, 0), 5),
    ("B2", (0, 1), 4),
    ("B2", (0, 2), 10),
    ("G2", (1, 0), 7),
    ("G2", (0, 1), 14),
]


@pytest.mark.parametrize("name,lam,dim", KNOWN_DIMS)
def test_known_dimensions(name, lam, dim):
    assert weyl_dimension(name, lam) == dim
    assert dom_dimension(name, weyl_character_dom(name, lam)) == dim


@pytest.mark.parametrize("name", SYSTEMS)
def test_dual_method_oracle(name):
    rs = root_system(name)
    rng = random.Random(sum(map(ord, name)))
    picks = {(0,) * rs.rank, (1,) * rs.rank}
    while len(picks) < min(8, 4**rs.rank):
        picks.add(tuple(rng.randint(0, 3) for _ in range(rs.rank)))
    for lam in sorted(picks):
        freudenthal = weyl_character_full(name, lam)
        division = alt_weyl_character_full(name, lam)
        assert freudenthal == division
        assert sum(freudenthal.values()) == weyl_dimension(name, lam)


def test_zero_weight_multiplicities():
    assert weyl_character_dom("A2", (1, 1))[(0, 0)] == 2
    assert weyl_character_dom("G2", (0, 1))[(0, 0)] == 2
    assert weyl_character_dom("G2", (1, 1))[(0, 0)] == 4
    assert weyl_dimension("G2", (1, 1)) == 64


def test_tensor_product_rule():
    a = weyl_character_full("A2", (1, 0))
    b = weyl_character_full("A2", (0, 1))
    prod = mul_full(a, b)
    want = dict(weyl_character_full("A2", (1, 1)))
    want[(0, 0)] = want.get((0, 0), 0) + 1
    assert prod == want


def test_chi_resolve():
    # one reflection away from a dominant weight costs a sign
    assert chi_resolve("A2", (-4, 4)) == ((2, 1), -1)
    # shifted weight on a wall kills the character
    assert chi_resolve("A2", (-1, 1)) == (None, 0)
    assert chi_resolve("A3", (-1, 1, -2)) == (None, 0)
    assert chi_resolve("G2", (0, 0)) == ((0, 0), 1)


def test_character_invariance_and_ops():
    chi = Character.weyl("G2", (1, 0))
    assert chi.is_invariant()
    assert chi.dimension() == 7
    assert (chi - chi) == Character.zero("G2")
    assert (2 * chi).dimension() == 14
    shifted = Character.line("G2", (1, 0)) * chi
    assert not shifted.is_invariant()
    with pytest.raises(WrongSystem):
        chi + Character.weyl("A2", (1, 0))
    with pytest.raises(WrongSystem):
        Character.weyl("A2", (1, 0)).half_twist()


def test_half_twist_squares_to_cube_stretch():
    rng = random.Random(31)
    for _ in range(20):
        coeffs = {
            (rng.randint(-6, 6), rng.randint(-6, 6)): rng.randint(-3, 3)
            for _ in range(10)
        }
        once = g2_half_twist_full(coeffs)
        twice = g2_half_twist_full(once)
        assert twice == twist_full({w: c for w, c in coeffs.items() if c}, 3)


JANTZEN_EMPTY = [
    ("A3", 3, (2, 2, 2)),
    ("G2", 7, (3, 0)),
    ("G2", 7, (0, 2)),
    ("G2", 7, (2, 1)),
    ("G2", 7, (4, 0)),
    ("B2", 5, (1, 0)),
]


@pytest.mark.parametrize("name,p,lam", JANTZEN_EMPTY)
def test_jantzen_sum_vanishes(name, p, lam):
    assert jantzen_multipliers(name, p, lam) == {}


def test_jantzen_sum_values():
    assert jantzen_multipliers("A3", 3, (1, 1, 0)) == {(0, 0, 1): 1}
    assert jantzen_multipliers("G2", 3, (0, 1)) == {(1, 0): 1}
    got = jantzen_character_dom("G2", 3, (0, 1))
    assert got == weyl_character_dom("G2", (1, 0))
    with pytest.raises(NotDominant):
        jantzen_multipliers("A2", 3, (-1, 0))


def test_weyl_expansion_roundtrip():
    rng = random.Random(8)
    for name in ("A2", "B2"):
        combo = {}
        for _ in range(3):
            mu = (rng.randint(0, 3), rng.randint(0, 3))
            combo[mu] = combo.get(mu, 0) + rng.randint(-2, 2)
        dom = {}
        for mu, c in combo.items():
            for w, m in weyl_character_dom(name, mu).items():
                dom[w] = dom.get(w, 0) + c * m
        got = weyl_expansion(name, dom)
        assert got == {mu: c for mu, c in combo.items() if c}


def _toy_a1_table():
    return SimpleCharacters(
        "A1", 2, {(0,): {(0,): 1}, (1,): {(1,): 1}, (2,): {(2,): 1, (0,): 1}}
    )


def test_simple_characters_toy_table():
    sc = _toy_a1_table()
    assert sc.simple_dom((2,)) == {(2,): 1}
    assert sc.decompose(weyl_character_dom("A1", (2,))) == {(2,): 1, (0,): 1}
    assert sc.decompose_weyl((2,)) == {(2,): 1, (0,): 1}
    # twisted tensor fallback for weights beyond the stored range
    assert sc.simple_dom((3,)) == {(3,): 1, (1,): 1}
    assert sc.simple_dimension((3,)) == 4
    assert weyl_expansion("A1", sc.simple_dom((2,))) == {(2,): 1, (0,): -1}
    with pytest.raises(MissingKey):
        _toy_a1_table().decomposition_row((3,))


def test_simple_characters_rejects_bad_tables():
    with pytest.raises(SchemaError):
        SimpleCharacters("A1", 2, {(0,): {(0,): 2}})
    with pytest.raises(SchemaError):
        SimpleCharacters("A1", 2, {(2,): {(2,): 1, (0,): -1}})
    bad = SimpleCharacters("A1", 2, {(0,): {(0,): 1}, (2,): {(2,): 1, (0,): 3}})
    with pytest.raises(OracleMismatch):
        bad.simple_dom((2,))


def test_expand_dom_orbit_sizes():
    # expand_dom spreads orbit sums, so the short-root orbit contributes
    # four weights and nothing at zero
    full = expand_dom("B2", {(1, 0): 1, (0, 0): 2})
    assert full[(0, 0)] == 2
    assert full[(-1, 2)] == 1
    assert sum(full.values()) == 4 + 2
