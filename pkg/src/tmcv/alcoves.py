"""Affine alcove geometry for the dot action at a fixed prime.

Levels, boxes and distances all refer to the rho-shifted picture: the
relevant hyperplanes for a weight w are pairings of w + rho with positive
coroots falling on multiples of p.  Weights on such a hyperplane have no
alcove and most functions below refuse them with OnWall.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping

from .errors import OnBoxWall, OnWall, UnlabeledAlcove, UnsupportedCase
from .rootsystems import (
    RootSystem,
    Weight,
    root_system,
    wadd,
    wscale,
    wsub,
)


def _shifted_pairings(rs: RootSystem, lam: Weight) -> list[int]:
    lr = wadd(rs.check_weight(lam), rs.rho)
    return [rs.pairing(lr, beta) for beta in rs.positive_roots]


def is_regular(name: str, p: int, lam: Weight) -> bool:
    """True when lam + rho avoids every p-divisible reflection hyperplane."""
    rs = root_system(name)
    return all(c % p for c in _shifted_pairings(rs, lam))


def alcove_levels(name: str, p: int, lam: Weight) -> tuple[int, ...]:
    """Hyperplane counts below lam, one entry per positive root in the
    order of rs.positive_roots."""
    rs = root_system(name)
    out = []
    for c in _shifted_pairings(rs, lam):
        if c % p == 0:
            raise OnWall(f"{lam} lies on a reflecting hyperplane for p={p}")
        out.append(c // p)
    return tuple(out)


@dataclass(frozen=True)
class Alcove:
    """Alcove of a p-regular weight, identified by its hyperplane levels,
    one per positive root in the root order of the system."""

    system: str
    prime: int
    levels: tuple[int, ...]


def alcove_of(name: str, lam: Weight, p: int) -> Alcove:
    rs = root_system(name)
    lr = wadd(rs.check_weight(lam), rs.rho)
    out = []
    for beta in rs.positive_roots:
        c = rs.pairing(lr, beta)
        if c % p == 0:
            raise OnWall(f"{lam} lies on the wall of {beta} at level {c // p} for p={p}")
        out.append(c // p)
    return Alcove(name, p, tuple(out))


def is_p_regular(name: str, lam: Weight, p: int) -> bool:
    return is_regular(name, p, lam)


def affine_reflect(name: str, alpha: Weight, n: int, p: int, lam: Weight) -> Weight:
    """Dot reflection of lam across the hyperplane of alpha at level n*p."""
    return root_system(name).affine_reflect_dot(lam, alpha, n, p)


def distance(name: str, p: int, start: "Weight | Alcove", end: "Weight | Alcove") -> int:
    """Signed number of p-hyperplanes separating the two alcoves."""
    a = start.levels if isinstance(start, Alcove) else alcove_levels(name, p, start)
    b = end.levels if isinstance(end, Alcove) else alcove_levels(name, p, end)
    return sum(y - x for x, y in zip(a, b))


# -- boxes -------------------------------------------------------------------


def box_of(name: str, p: int, lam: Weight) -> Weight:
    """Label of the box containing lam: the lower corner shifted by -rho.
    Boxes tile the weights by the simple-root levels only."""
    rs = root_system(name)
    lam = rs.check_weight(lam)
    out = []
    for x in lam:
        if (x + 1) % p == 0:
            raise OnBoxWall(f"{lam} lies on a box wall for p={p}")
        out.append(p * ((x + 1) // p) - 1)
    return tuple(out)


def box_bottom(name: str, p: int, nu: Weight) -> Weight:
    """The weight sitting in the lowest alcove of the box labelled nu."""
    rs = root_system(name)
    nu = rs.check_weight(nu)
    if any((x + 1) % p for x in nu):
        raise OnBoxWall(f"{nu} is not a box label for p={p}")
    return wadd(nu, rs.rho)


def box_reflect(name: str, p: int, lam: Weight) -> Weight:
    """Image of lam under the order-two affine element turning its box
    upside down: lam goes to 2 nu - lam for the box label nu."""
    nu = box_of(name, p, lam)
    return wsub(wscale(2, nu), lam)


def box_weights(name: str, p: int, nu: Weight) -> Iterator[Weight]:
    """All weights inside the box labelled nu (box walls excluded)."""
    rs = root_system(name)
    nu = rs.check_weight(nu)
    if any((x + 1) % p for x in nu):
        raise OnBoxWall(f"{nu} is not a box label for p={p}")
    for offs in product(range(1, p), repeat=rs.rank):
        yield tuple(n + o for n, o in zip(nu, offs))


def to_restricted_box(name: str, p: int, lam: Weight) -> Weight:
    """Translate lam by p times a weight so it lands in the box of the
    restricted region."""
    nu = box_of(name, p, lam)
    return wsub(lam, wadd(nu, root_system(name).rho))


def alcove_label(
    name: str, p: int, lam: Weight, labels: Mapping[int, Weight]
) -> int:
    """Match the alcove of lam against a table of labelled representatives
    (after translating into the restricted box)."""
    res = to_restricted_box(name, p, lam)
    target = alcove_levels(name, p, res)
    for label, rep in labels.items():
        if alcove_levels(name, p, rep) == target:
            return int(label)
    raise UnlabeledAlcove(
        f"the alcove of {lam} (levels {target}) has no label in the table"
    )


# -- the affine orbit of the dot action --------------------------------------


def canonical_dot_rep(name: str, p: int, lam: Weight) -> Weight:
    """Representative of the affine orbit of lam under the dot action:
    walk lam + rho into the closed fundamental simplex and undo the shift.
    Weights on walls normalise fine; their orbit is just smaller."""
    rs = root_system(name)
    x = wadd(rs.check_weight(lam), rs.rho)
    theta = rs.highest_short_root
    guard = 0
    while True:
        guard += 1
        if guard > 10000:
            raise OnWall(f"normalisation runaway at {lam}")  # pragma: no cover
        for i in range(rs.rank):
            if x[i] < 0:
                x = wsub(x, wscale(x[i], rs.simple_roots[i]))
                break
        else:
            c = rs.pairing(x, theta)
            if c > p:
                # reflect across the affine wall at level p
                x = wsub(x, wscale(c - p, theta))
                continue
            return wsub(x, rs.rho)


def linked(name: str, p: int, a: Weight, b: Weight) -> bool:
    """Same affine orbit under the dot action."""
    return canonical_dot_rep(name, p, a) == canonical_dot_rep(name, p, b)


def _cone_geq(rs: RootSystem, mu: Weight, floor: Weight) -> bool:
    """mu - floor lies in the nonnegative rational span of the simple roots."""
    return all(c >= 0 for c in rs.root_coords(wsub(mu, floor)))


def reflections_up(
    name: str, p: int, lam: Weight, ceiling: Weight
) -> list[Weight]:
    """All single dot-reflection images of lam strictly above it, capped at
    the cone below the ceiling."""
    rs = root_system(name)
    lam = rs.check_weight(lam)
    lr = wadd(lam, rs.rho)
    out = set()
    for beta in rs.positive_roots:
        c = rs.pairing(lr, beta)
        k = c // p + 1
        while True:
            mu = wadd(lam, wscale(k * p - c, beta))
            if not _cone_geq(rs, ceiling, mu):
                break
            out.add(mu)
            k += 1
    return sorted(out)


def strongly_linked_below(
    name: str, p: int, lam: Weight, floor: Weight | None = None
) -> frozenset[Weight]:
    """Transitive closure of lam under downward single dot reflections,
    pruned to the cone above floor (above the origin, if none is given).
    Monotone chains never leave that cone, so the closure is complete for
    deciding whether anything above the floor is reachable.  Includes lam."""
    rs = root_system(name)
    lam = rs.check_weight(lam)
    if floor is None:
        floor = (0,) * rs.rank
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for cur in frontier:
            lr = wadd(cur, rs.rho)
            for beta in rs.positive_roots:
                c = rs.pairing(lr, beta)
                k = c // p if c % p else c // p - 1
                while True:
                    # every hyperplane level below the pairing, including
                    # negative ones; the cone prune terminates the walk
                    mu = wsub(cur, wscale(c - k * p, beta))
                    if not _cone_geq(rs, mu, floor):
                        break
                    if mu not in seen:
                        seen.add(mu)
                        nxt.append(mu)
                    k -= 1
        frontier = nxt
    return frozenset(seen)


def strongly_linked(name: str, p: int, mu: Weight, lam: Weight) -> bool:
    """Whether mu is reachable from lam by a monotone chain of downward
    dot reflections (equality included)."""
    rs = root_system(name)
    mu = rs.check_weight(mu)
    if not _cone_geq(rs, lam, mu):
        return False
    return mu in strongly_linked_below(name, p, lam, floor=mu)


def w_nu_dot(name: str, p: int, nu: Weight, lam: Weight) -> Weight:
    """Order-two element of the box around the special point nu: lam goes
    to 2 nu - lam.  Only defined strictly inside the box."""
    rs = root_system(name)
    nu = rs.check_weight(nu)
    lam = rs.check_weight(lam)
    if any((x + 1) % p for x in nu):
        raise OnBoxWall(f"{nu} is not a special point for p={p}")
    for i in range(rs.rank):
        c = lam[i] - nu[i]
        if not 0 < c < p:
            raise OnBoxWall(
                f"{lam} is not interior to the box of {nu} on simple root {i}"
            )
    return wsub(wscale(2, nu), lam)


def box_alcoves(name: str, p: int, nu: Weight) -> list[Alcove]:
    """All alcoves meeting the interior of the box labelled nu, via the
    regular weights it contains."""
    seen: dict[tuple[int, ...], Alcove] = {}
    for w in box_weights(name, p, nu):
        if is_regular(name, p, w):
            a = alcove_of(name, w, p)
            seen[a.levels] = a
    return [seen[k] for k in sorted(seen)]


def g2_alcove_label(lam: Weight, p: int = 7) -> int:
    """Label of the alcove of lam in the bundled numbering, after moving
    into the restricted box.  The level patterns inside a box do not depend
    on the prime, so any p at least 7 works."""
    if p < 7:
        raise UnsupportedCase(f"the alcove labelling needs p >= 7, got {p}")
    from .data import g2_alcove_labels

    res = to_restricted_box("G2", p, lam)
    target = alcove_levels("G2", p, res)
    for label, rep in g2_alcove_labels().items():
        if alcove_levels("G2", 7, rep) == target:
            return label
    raise UnlabeledAlcove(f"the alcove of {lam} (levels {target}) has no label")


def g2_alcove_from_label(label: int) -> Weight:
    """The regular restricted representative at p = 7 for a bundled label."""
    from .data import g2_alcove_labels

    try:
        return g2_alcove_labels()[int(label)]
    except KeyError:
        raise UnlabeledAlcove(f"no alcove labelled {label}") from None
