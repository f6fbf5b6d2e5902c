"""Derived-induction fragment: decision rules and the reflection precheck."""

import pytest

from tmcv.bcohomology import (
    CohomologyKind,
    CohomologyResult,
    dot_reflect_simple,
    r1_nonvanishing_possible,
    r_ind,
)
from tmcv.rootsystems import root_system


def test_dot_reflection_is_an_involution():
    for name in ("A2", "B2", "G2"):
        rank = root_system(name).rank
        for wt in [(-4, 3), (5, -2), (0, 0), (2, 1)]:
            wt = wt[:rank]
            for i in range(rank):
                back = dot_reflect_simple(name, i, dot_reflect_simple(name, i, wt))
                assert back == wt


def test_dot_reflection_examples():
    # reflecting drops the shifted pairing to its negative
    assert dot_reflect_simple("G2", 0, (-2, 1)) == (0, 0)
    assert dot_reflect_simple("G2", 1, (3, -2)) == (0, 0)
    assert dot_reflect_simple("G2", 0, (-4, 3)) == (2, 0)
    assert dot_reflect_simple("G2", 1, (5, -2)) == (2, 0)
    assert dot_reflect_simple("B2", 1, (1, -2)) == (0, 0)


def test_dominant_weights_induce_in_degree_zero_only():
    res = r_ind("G2", (1, 1), 0)
    assert res.is_costandard and res.weight == (1, 1)
    assert r_ind("G2", (1, 1), 1).is_zero
    assert r_ind("G2", (1, 1), 2).is_zero


def test_minus_one_pairing_kills_every_degree():
    for degree in (0, 1, 2):
        assert r_ind("G2", (-1, 4), degree).is_zero
        assert r_ind("A2", (3, -1), degree).is_zero


def test_single_reflection_case_concentrates_in_degree_one():
    res = r_ind("G2", (-2, 1), 1)
    assert res.is_costandard and res.weight == (0, 0)
    assert r_ind("G2", (-2, 1), 0).is_zero
    assert r_ind("G2", (-2, 1), 2).is_zero
    res = r_ind("G2", (5, -2), 1)
    assert res.is_costandard and res.weight == (2, 0)


def test_reflected_minus_one_pairing_kills_low_degrees():
    # (-3, 1) reflects at root 0 to (1, -1): zero without further work
    assert dot_reflect_simple("G2", 0, (-3, 1)) == (1, -1)
    for degree in (0, 1, 2):
        assert r_ind("G2", (-3, 1), degree).is_zero


def test_out_of_fragment_weights_stay_unknown():
    res = r_ind("G2", (-2, -2), 1)
    assert res.is_unknown
    assert r_ind("B2", (-4, -5), 2).is_unknown


def test_degree_validation():
    with pytest.raises(ValueError):
        r_ind("G2", (0, 0), 3)


def test_costandard_result_requires_dominant_weight():
    with pytest.raises(ValueError):
        CohomologyResult(1, CohomologyKind.COSTANDARD, (-1, 0))
    with pytest.raises(ValueError):
        CohomologyResult(0, CohomologyKind.ZERO, (1, 0))


def test_precheck_is_a_sound_filter():
    # a false precheck must come with a decided zero in degree one
    for a in range(-5, 6):
        for b in range(-5, 6):
            sigma = (a, b)
            if not r1_nonvanishing_possible("G2", sigma):
                assert r_ind("G2", sigma, 1).is_zero


def test_precheck_examples():
    assert not r1_nonvanishing_possible("G2", (2, 0))
    assert not r1_nonvanishing_possible("G2", (-1, 3))
    assert r1_nonvanishing_possible("G2", (-2, 1))
    assert r1_nonvanishing_possible("G2", (-4, 2))
