"""Verification procedures: duality, gap bounds, scans, linkage searches,
the half-twist calculus, and the layer analysis."""

import random

import pytest

from tmcv.characters import SimpleCharacters
from tmcv.data import bundle
from tmcv.errors import (
    CharacterMismatch,
    NotRestricted,
    OracleMismatch,
    UnknownCohomology,
    UnsupportedCase,
)
from tmcv.rootsystems import root_system, wadd, wscale
from tmcv.verify import (
    FiltrationVerdict,
    Resolution,
    a3p5_linkage_check,
    ext_gap_data,
    filtration_condition_check,
    g2p3_isogeny_checks,
    g2p7_case_analysis,
    g2p7_filtration_verdicts,
    g2p7_sigma1_classification,
    generic_gap_bound_holds,
    hat,
    jantzen_bound_check,
    min_linked_pairing,
    r_reduction_identity,
    residual_character,
    series_factors,
    steinberg_support,
    steinberg_support_pairing_floor,
    steinberg_weight_scan,
)

# per-simple-root minima over the weight support of the restricted
# Steinberg character
SUPPORT_FLOORS = {
    ("A2", 2): (-2, -2),
    ("A2", 3): (-4, -4),
    ("A3", 2): (-3, -3, -3),
    ("A3", 3): (-6, -6, -6),
    ("B2", 2): (-2, -3),
    ("B2", 5): (-8, -12),
    ("G2", 5): (-20, -12),
    ("G2", 7): (-30, -18),
}

# full rank-three scan in characteristic three:
# (support weight, offset, twist, reflected twist, target)
A3_P3_SCAN = {
    ((-6, 2, 2), (0, 1, 1), (-2, 1, 1), (0, 0, 1), (2, 3, 3)),
    ((2, 2, -6), (1, 1, 0), (1, 1, -2), (1, 0, 0), (3, 3, 2)),
    ((4, -6, 4), (2, 0, 2), (2, -2, 2), (1, 0, 1), (4, 2, 4)),
    ((-6, 4, -2), (0, 2, 2), (-2, 2, 0), (0, 1, 0), (2, 4, 4)),
    ((-2, 4, -6), (2, 2, 0), (0, 2, -2), (0, 1, 0), (4, 4, 2)),
    ((2, -6, 2), (1, 0, 1), (1, -2, 1), (0, 0, 0), (3, 2, 3)),
    ((0, 3, -6), (0, 0, 0), (0, 1, -2), (0, 0, 0), (2, 2, 2)),
    ((-6, 3, 0), (0, 0, 0), (-2, 1, 0), (0, 0, 0), (2, 2, 2)),
    ((3, -6, 3), (0, 0, 0), (1, -2, 1), (0, 0, 0), (2, 2, 2)),
}


def test_hat_moves_the_steinberg_range_across_the_box():
    assert hat("G2", 7, (5, 5)) == (7, 7)
    assert hat("G2", 7, (0, 0)) == (12, 12)
    assert hat("G2", 7, (3, 5)) == (9, 7)
    assert hat("B2", 5, (4, 4)) == (4, 4)
    assert hat("A3", 3, (2, 2, 2)) == (2, 2, 2)


def test_hat_is_an_involution_on_random_restricted_weights():
    rng = random.Random(20260814)
    for _ in range(60):
        name = rng.choice(["A1", "A2", "A3", "B2", "G2"])
        p = rng.choice([2, 3, 5, 7])
        rs = root_system(name)
        lam = tuple(rng.randrange(p) for _ in range(rs.rank))
        image = hat(name, p, lam)
        back = wadd(wscale(2 * (p - 1), rs.rho), rs.apply(rs.w0, image))
        assert back == lam


def test_hat_rejects_unrestricted_weights():
    with pytest.raises(NotRestricted):
        hat("G2", 7, (7, 0))
    with pytest.raises(UnsupportedCase):
        hat("G2", 7, (0, 0), r=0)
    assert hat("G2", 7, (48, 0), r=2) == (48, 96)


def test_depth_reduction_identity():
    for name, p, lam in [("G2", 7, (3, 1)), ("B2", 5, (2, 4)), ("A3", 3, (1, 0, 2))]:
        for r in (2, 3):
            assert r_reduction_identity(name, p, r, lam)
    with pytest.raises(UnsupportedCase):
        r_reduction_identity("G2", 7, 1, (0, 0))


def test_extension_gap_data_and_bound():
    data = {(d.system, d.prime): d for d in ext_gap_data()}
    assert set(data) == {("B2", 3), ("G2", 3), ("G2", 5)}
    assert data[("B2", 3)].gap == 6 and data[("B2", 3)].witness == (1, 4)
    assert data[("G2", 3)].gap == 5
    assert data[("G2", 5)].gap == 15 and data[("G2", 5)].witness is None
    assert jantzen_bound_check(data[("B2", 3)])
    assert jantzen_bound_check(data[("G2", 5)])
    assert not jantzen_bound_check(data[("G2", 3)])


def test_generic_bound_needs_a_large_prime():
    assert generic_gap_bound_holds("G2", 11)
    assert generic_gap_bound_holds("A1", 2)
    with pytest.raises(UnsupportedCase):
        generic_gap_bound_holds("G2", 7)


def test_support_floors_match_the_orbit_of_the_steinberg_weight():
    for (name, p), floor in SUPPORT_FLOORS.items():
        assert steinberg_support_pairing_floor(name, p) == floor
        rs = root_system(name)
        orbit = rs.orbit(wscale(p - 1, rs.rho))
        orbit_floor = tuple(
            min(w[i] for w in orbit) for i in range(rs.rank)
        )
        assert floor == orbit_floor
        assert orbit <= steinberg_support(name, p)


def test_scan_is_empty_where_the_floor_clears_the_threshold():
    for name, p in [("A1", 2), ("A1", 3), ("A1", 5), ("A2", 2), ("A2", 3),
                    ("A3", 2), ("B2", 2)]:
        assert steinberg_weight_scan(name, p) == []


def test_rank_three_scan_matches_the_published_rows():
    rows = steinberg_weight_scan("A3", 3)
    got = {
        (v.steinberg_weight, v.target_offset, v.twist, v.reflected_twist, v.target)
        for v in rows
    }
    assert got == A3_P3_SCAN
    assert all(v.recheck() for v in rows)
    assert all(v.restricted_part == (0, 0, 0) for v in rows)


def test_rank_two_scan_in_characteristic_five():
    full = steinberg_weight_scan("B2", 5)
    assert len(full) == 12
    assert all(v.root_index == 1 for v in full)
    block = steinberg_weight_scan(
        "B2", 5, target_offsets=[(1, 2), (2, 2), (2, 4), (4, 4)]
    )
    got = {(v.steinberg_weight, v.target_offset) for v in block}
    assert got == {((4, -12), (1, 2)), ((8, -12), (2, 2))}


def test_recheck_rejects_forged_rows():
    v = steinberg_weight_scan("A3", 3)[0]
    forged = type(v)(
        system=v.system,
        prime=v.prime,
        steinberg_weight=v.steinberg_weight,
        root_index=v.root_index,
        target_offset=v.target_offset,
        restricted_part=v.restricted_part,
        twist=wadd(v.twist, (1, 0, 0)),
        reflected_twist=v.reflected_twist,
        target=v.target,
    )
    assert not forged.recheck()


def test_minimal_linked_pairing_and_witness():
    assert min_linked_pairing("A3", 5) == (4, (2, 0, 2))
    assert min_linked_pairing("B2", 5) == (4, (2, 0))
    assert min_linked_pairing("G2", 7) == (4, (2, 0))
    with pytest.raises(UnsupportedCase):
        min_linked_pairing("G2", 5)


def test_rank_three_pairing_bound():
    rep = a3p5_linkage_check()
    assert rep.ceiling == (7, 8, 7)
    assert rep.bound == 10
    assert rep.exceptional == (3, 4, 3)
    assert rep.entries == (
        ((1, 2, 5), 8),
        ((2, 0, 2), 4),
        ((3, 0, 3), 6),
        ((3, 4, 3), 10),
        ((5, 2, 1), 8),
    )


def test_half_twist_identities_hold_and_detect_corruption():
    decomp = bundle().decomposition("G2", 3)
    lines = g2p3_isogeny_checks(decomp)
    assert len(lines) == 13
    assert any("729" in line for line in lines)
    rows = {lam: dict(row) for lam, row in decomp.rows.items()}
    rows[(0, 2)][(0, 0)] += 1
    broken = SimpleCharacters("G2", 3, rows)
    with pytest.raises(CharacterMismatch):
        g2p3_isogeny_checks(broken)


def test_twist_classification():
    b = bundle()
    r1_nonzero, nonsimple = g2p7_sigma1_classification(
        b.radical_tables(), b.decomposition("G2", 7)
    )
    assert r1_nonzero == (
        (-4, 3), (-3, 2), (-3, 3), (-2, 1), (-2, 2), (-2, 3),
        (3, -2), (4, -2), (5, -2),
    )
    assert nonsimple == ((1, 1), (2, 0))


def test_case_analysis_findings():
    b = bundle()
    findings = g2p7_case_analysis(b.radical_tables(), b.decomposition("G2", 7))
    assert len(findings) == 28
    assert not any(f.resolution is Resolution.UNRESOLVED for f in findings)
    by_case = {}
    for f in findings:
        by_case.setdefault(f.case_id, []).append(f)
    assert sorted(by_case) == [1, 2, 3, 4]
    assert {f.alcove for f in by_case[1]} == {1, 2}
    assert all(f.resolution is Resolution.HIGHER_LAYER for f in by_case[1])
    assert {f.alcove for f in by_case[2]} == {1, 2, 3, 4, 5, 6, 7, 8}
    assert {f.restricted_part for f in by_case[2]} == {
        (0, 0), (1, 1), (1, 2), (2, 0), (2, 2)
    }
    for f in by_case[2]:
        if f.resolution is Resolution.SAME_LAYER_CHAIN_ABSENT:
            assert f.absent_weights == ((-5, 3),)
    (c3,) = by_case[3]
    assert (c3.alcove, c3.absent_weights) == (4, ((-7, 5), (-5, 4), (-3, 3)))
    (c4,) = by_case[4]
    assert (c4.alcove, c4.absent_weights) == (11, ((7, -3),))


def test_filtration_verdicts_on_the_bundled_series():
    b = bundle()
    verdicts = g2p7_filtration_verdicts(
        b.radical_tables(), b.decomposition("G2", 7)
    )
    iso = {n for n, v in verdicts.items() if v is FiltrationVerdict.ISO_ONLY_THREATS}
    inconclusive = {
        n for n, v in verdicts.items() if v is FiltrationVerdict.INCONCLUSIVE
    }
    assert iso == {5, 6, 13, 15, 16}
    assert inconclusive == {1, 2, 3, 4, 7, 8, 11}


def test_filtration_check_on_synthetic_series():
    decomp = bundle().decomposition("G2", 7)
    # every twist induces to zero
    factors = [((0, 0), (1, 1)), ((2, 0), (0, 0))]
    assert (
        filtration_condition_check("G2", factors, decomp)
        is FiltrationVerdict.DEGREE_ONE_VANISHES
    )
    # a companion exists but no dominant source shares its restricted part
    factors = [((0, 0), (1, 1)), ((2, 0), (-2, 1))]
    assert (
        filtration_condition_check("G2", factors, decomp)
        is FiltrationVerdict.NO_THREATENING_PAIRS
    )
    # the only threat is the target itself, one layer above the companion
    factors = [((0, 0), (0, 0)), ((0, 0), (-2, 1))]
    assert (
        filtration_condition_check("G2", factors, decomp)
        is FiltrationVerdict.ISO_ONLY_THREATS
    )
    # a source strictly containing the target: could be a proper map
    factors = [((0, 0), (1, 1)), ((0, 0), (-4, 3))]
    assert (
        filtration_condition_check("G2", factors, decomp)
        is FiltrationVerdict.INCONCLUSIVE
    )
    with pytest.raises(UnknownCohomology):
        filtration_condition_check("G2", [((0, 0), (-2, -2))], decomp)


def test_series_factors_are_head_first():
    t = bundle().radical_tables()[1]
    rows = series_factors(t)
    assert rows[0][2] == 0
    assert rows[-1][2] == t.max_layer
    assert [r[2] for r in rows] == sorted(r[2] for r in rows)


def test_residual_vanishes_exactly_at_the_steinberg_weight():
    b = bundle()
    for name, p in [("A3", 3), ("B2", 5), ("G2", 7)]:
        decomp = b.decomposition(name, p)
        rs = root_system(name)
        st = wscale(p - 1, rs.rho)
        assert residual_character(name, p, st, decomp).dimension() == 0
    decomp = b.decomposition("G2", 7)
    res = residual_character("G2", 7, (5, 5), decomp)
    assert res.dimension() == 235242


def test_residual_flags_corrupted_decomposition_data():
    decomp = bundle().decomposition("G2", 7)
    rows = {lam: dict(row) for lam, row in decomp.rows.items()}
    rows[(1, 1)][(2, 0)] = 5
    broken = SimpleCharacters("G2", 7, rows)
    with pytest.raises(OracleMismatch):
        residual_character("G2", 7, (5, 5), broken)
