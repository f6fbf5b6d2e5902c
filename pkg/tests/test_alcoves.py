"""Alcove geometry checks against frozen rank-2 values."""

import random

import pytest

from tmcv.alcoves import (
    alcove_label,
    alcove_levels,
    box_bottom,
    box_of,
    box_reflect,
    box_weights,
    canonical_dot_rep,
    distance,
    is_regular,
    linked,
    reflections_up,
    strongly_linked,
    strongly_linked_below,
    to_restricted_box,
)
from tmcv.errors import OnBoxWall, OnWall, UnlabeledAlcove
from tmcv.rootsystems import root_system, wadd, wscale

# restricted G2 alcove representatives at p = 7 with their separation from
# the bottom alcove
G2_DISTANCES = {
    (0, 0): 0,
    (2, 0): 1,
    (1, 1): 2,
    (1, 2): 3,
    (2, 2): 4,
    (0, 4): 5,
    (5, 1): 5,
    (3, 3): 6,
    (4, 3): 7,
    (4, 4): 8,
    (3, 5): 9,
    (5, 5): 10,
}

G2_BOX_REFLECTIONS = {
    (0, 0): (-2, -2),
    (2, 0): (-4, -2),
    (1, 1): (-3, -3),
    (1, 2): (-3, -4),
    (2, 2): (-4, -4),
    (0, 4): (-2, -6),
    (5, 1): (-7, -3),
    (3, 3): (-5, -5),
    (4, 3): (-6, -5),
    (4, 4): (-6, -6),
    (3, 5): (-5, -7),
    (5, 5): (-7, -7),
}


def test_g2_distances_from_bottom():
    for lam, d in G2_DISTANCES.items():
        assert distance("G2", 7, (0, 0), lam) == d
        assert distance("G2", 7, lam, (0, 0)) == -d


def test_g2_box_reflections():
    for lam, img in G2_BOX_REFLECTIONS.items():
        assert box_of("G2", 7, lam) == (-1, -1)
        assert box_reflect("G2", 7, lam) == img


def test_distance_additivity_sample():
    reps = list(G2_DISTANCES)
    rng = random.Random(5)
    for _ in range(30):
        a, b, c = rng.choice(reps), rng.choice(reps), rng.choice(reps)
        ab = distance("G2", 7, a, b)
        bc = distance("G2", 7, b, c)
        assert ab + bc == distance("G2", 7, a, c)


def test_box_arithmetic():
    assert box_of("G2", 7, (7, 0)) == (6, -1)
    assert box_bottom("G2", 7, (-1, -1)) == (0, 0)
    assert box_bottom("G2", 7, (6, -1)) == (7, 0)
    with pytest.raises(OnBoxWall):
        box_of("G2", 7, (6, 0))
    with pytest.raises(OnBoxWall):
        box_bottom("G2", 7, (0, 0))
    box = list(box_weights("B2", 3, (-1, -1)))
    assert box == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert to_restricted_box("G2", 7, wadd((4, 3), wscale(7, (2, 5)))) == (4, 3)


def test_regularity_and_walls():
    assert is_regular("G2", 7, (0, 0))
    assert not is_regular("G2", 7, (6, 6))
    assert not is_regular("G2", 7, (3, 0))
    with pytest.raises(OnWall):
        alcove_levels("G2", 7, (3, 0))
    assert alcove_levels("G2", 7, (5, 5)) == (0, 0, 3, 4, 1, 2)


def test_alcove_labels():
    labels = {k + 1: lam for k, lam in enumerate(G2_DISTANCES)}
    assert alcove_label("G2", 7, (5, 5), labels) == 12
    assert alcove_label("G2", 7, (0, 0), labels) == 1
    # translation invariance across boxes
    moved = wadd((1, 2), wscale(7, (1, 1)))
    assert alcove_label("G2", 7, moved, labels) == 4
    with pytest.raises(UnlabeledAlcove):
        alcove_label("G2", 7, (5, 5), {1: (0, 0)})


def test_canonical_dot_rep_is_orbit_invariant():
    rs = root_system("B2")
    rng = random.Random(17)
    p = 5
    for _ in range(25):
        lam = (rng.randint(-8, 8), rng.randint(-8, 8))
        rep = canonical_dot_rep("B2", p, lam)
        for _ in range(4):
            beta = rng.choice(rs.positive_roots)
            n = rng.randint(-2, 2)
            lam = rs.affine_reflect_dot(lam, beta, n, p)
        assert canonical_dot_rep("B2", p, lam) == rep
    assert canonical_dot_rep("B2", p, (0, 0)) == (0, 0)


def test_linked():
    assert linked("G2", 7, (0, 0), (5, 5))
    assert not linked("G2", 7, (0, 0), (1, 0))
    # a singular pair in the same orbit
    rs = root_system("G2")
    img = rs.affine_reflect_dot((3, 0), rs.positive_roots[0], 1, 7)
    assert linked("G2", 7, (3, 0), img)


def test_reflection_steps_b2():
    ups = reflections_up("B2", 5, (1, 0), (2, 8))
    assert (1, 4) in ups
    assert all(u != (1, 0) for u in ups)
    assert strongly_linked("B2", 5, (1, 0), (1, 4))
    assert not strongly_linked("B2", 5, (0, 1), (1, 0))
    below = strongly_linked_below("B2", 5, (1, 4))
    assert {(1, 4), (1, 0)} <= below


def test_strong_linkage_matches_orbit_on_small_g2_sample():
    # inside one box, downward reachability lands exactly on the linked
    # dominant weights below the start
    start = (5, 5)
    below = strongly_linked_below("G2", 7, start)
    doms = {w for w in below if all(x >= 0 for x in w)}
    for lam in G2_DISTANCES:
        assert lam in doms
