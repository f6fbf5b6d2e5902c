"""Exact character arithmetic for the supported root systems.

Two dict representations are used.  A full map sends every weight of the
support to its multiplicity.  Orbit-invariant characters are mostly kept
collapsed: a dominant map holds only the dominant weights, one per orbit.
All multiplicities are ints; intermediate divisions run through Fraction
and must come out exact, otherwise OracleMismatch is raised.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Callable, Mapping

from .errors import (
    MissingKey,
    NotDominant,
    OracleMismatch,
    SchemaError,
    WrongSystem,
)
from .rootsystems import Weight, root_system, wadd, wneg, wscale, wsub

DomMap = dict[Weight, int]
FullMap = dict[Weight, int]


def _clean(m: Mapping[Weight, int]) -> dict[Weight, int]:
    return {w: c for w, c in m.items() if c}


@functools.lru_cache(maxsize=None)
def _orbit_cached(name: str, wt: Weight) -> frozenset[Weight]:
    return root_system(name).orbit(wt)


@functools.lru_cache(maxsize=None)
def _orbit_size(name: str, wt: Weight) -> int:
    return len(_orbit_cached(name, wt))


# -- irreducible characters of the ambient reductive group ------------------


@functools.lru_cache(maxsize=None)
def _weyl_dom(name: str, lam: Weight) -> DomMap:
    """Dominant map of the characteristic-zero irreducible with highest
    weight lam, by the Freudenthal multiplicity recursion.  Treat the
    returned dict as read-only; public callers get copies."""
    rs = root_system(name)
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    top = rs.bilinear_scaled(wadd(lam, rs.rho), wadd(lam, rs.rho))
    mult: DomMap = {}
    for mu in rs.dominant_weights_below(lam):
        if mu == lam:
            mult[lam] = 1
            continue
        acc = 0
        for beta in rs.positive_roots:
            k = 1
            while True:
                nu = wadd(mu, wscale(k, beta))
                m = mult.get(rs.dominant_rep(nu))
                if m is None:
                    break
                acc += m * rs.bilinear_scaled(nu, beta)
                k += 1
        denom = top - rs.bilinear_scaled(wadd(mu, rs.rho), wadd(mu, rs.rho))
        num = 2 * acc
        if denom <= 0 or num <= 0 or num % denom:
            raise OracleMismatch(
                f"multiplicity recursion broke at {mu} below {lam} in {name}"
            )
        mult[mu] = num // denom
    return mult


def weyl_character_dom(name: str, lam: Weight) -> DomMap:
    return dict(_weyl_dom(name, tuple(lam)))


def expand_dom(name: str, dom: Mapping[Weight, int]) -> FullMap:
    """Spread a dominant map over full Weyl orbits."""
    out: FullMap = {}
    for mu, m in dom.items():
        if not m:
            continue
        for w in _orbit_cached(name, mu):
            out[w] = out.get(w, 0) + m
    return _clean(out)


@functools.lru_cache(maxsize=None)
def _weyl_full(name: str, lam: Weight) -> FullMap:
    return expand_dom(name, _weyl_dom(name, lam))


def weyl_character_full(name: str, lam: Weight) -> FullMap:
    return dict(_weyl_full(name, tuple(lam)))


def dom_dimension(name: str, dom: Mapping[Weight, int]) -> int:
    return sum(m * _orbit_size(name, mu) for mu, m in dom.items())


def weyl_dimension(name: str, lam: Weight) -> int:
    rs = root_system(name)
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    prod = Fraction(1)
    lr = wadd(lam, rs.rho)
    for beta in rs.positive_roots:
        prod *= Fraction(rs.pairing(lr, beta), rs.pairing(rs.rho, beta))
    if prod.denominator != 1:
        raise OracleMismatch(f"dimension product not integral for {lam}")
    return int(prod)


def alt_weyl_character_full(name: str, lam: Weight) -> FullMap:
    """Independent oracle for weyl_character_full: quotient of alternating
    orbit sums, divided exactly as Laurent polynomials under the lex group
    order.  Intended for modest weights; the Freudenthal route is primary."""
    rs = root_system(name)
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    num: FullMap = {}
    den: FullMap = {}
    for w, out in ((wadd(lam, rs.rho), num), (rs.rho, den)):
        for mat in rs.weyl:
            img = rs.apply(mat, w)
            out[img] = out.get(img, 0) + rs.det(mat)
    return _exact_divide(num, den)


def _exact_divide(num: FullMap, den: FullMap) -> FullMap:
    num = dict(_clean(num))
    den = _clean(den)
    if not den:
        raise OracleMismatch("division by the zero character")
    dlead = max(den)
    dcoeff = den[dlead]
    quot: FullMap = {}
    while num:
        nlead = max(num)
        q, r = divmod(num[nlead], dcoeff)
        if r:
            raise OracleMismatch("inexact character division")
        shift = wsub(nlead, dlead)
        if shift in quot:
            raise OracleMismatch("character division does not terminate")
        quot[shift] = q
        for w, c in den.items():
            key = wadd(shift, w)
            nv = num.get(key, 0) - q * c
            if nv:
                num[key] = nv
            else:
                num.pop(key, None)
    return _clean(quot)


# -- generic full-map algebra ------------------------------------------------


def mul_full(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> FullMap:
    if len(a) > len(b):
        a, b = b, a
    out: FullMap = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            key = wadd(wa, wb)
            out[key] = out.get(key, 0) + ca * cb
    return _clean(out)


def add_full(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> FullMap:
    out = dict(a)
    for w, c in b.items():
        nv = out.get(w, 0) + c
        if nv:
            out[w] = nv
        else:
            out.pop(w, None)
    return _clean(out)


def scale_full(c: int, a: Mapping[Weight, int]) -> FullMap:
    if not c:
        return {}
    return {w: c * m for w, m in a.items()}


def twist_full(a: Mapping[Weight, int], p: int) -> FullMap:
    """Stretch every weight by p (composition with the p-power map)."""
    return {wscale(p, w): m for w, m in a.items()}


def g2_half_twist_full(a: Mapping[Weight, int]) -> FullMap:
    """Weight map of the exceptional isogeny square root of the cube map
    in type G2: (a, b) goes to (3b, a).  Applying it twice stretches by 3."""
    out: FullMap = {}
    for (x, y), m in a.items():
        key = (3 * y, x)
        out[key] = out.get(key, 0) + m
    return _clean(out)


def dom_restrict(name: str, full: Mapping[Weight, int]) -> DomMap:
    rs = root_system(name)
    return {w: c for w, c in full.items() if c and rs.is_dominant(w)}


# -- the chi basis -----------------------------------------------------------


def chi_resolve(name: str, lam: Weight) -> tuple[Weight | None, int]:
    """Rewrite a possibly non-dominant Euler character as sign times a
    dominant one; (None, 0) when the shifted weight sits on a wall."""
    rs = root_system(name)
    nu, sign = rs.strict_dominantize(wadd(rs.check_weight(lam), rs.rho))
    if sign == 0:
        return None, 0
    return wsub(nu, rs.rho), sign


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def jantzen_multipliers(name: str, p: int, lam: Weight) -> dict[Weight, int]:
    """Coefficients, on the dominant chi basis, of the sum of the positive
    layers of the standard filtration of the Weyl module with highest
    weight lam in characteristic p."""
    rs = root_system(name)
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    out: dict[Weight, int] = {}
    lr = wadd(lam, rs.rho)
    for beta in rs.positive_roots:
        n = rs.pairing(lr, beta)
        for c in range(p, n, p):
            mu, sign = chi_resolve(name, wsub(lam, wscale(n - c, beta)))
            if sign:
                out[mu] = out.get(mu, 0) + sign * _valuation(c, p)
    return _clean(out)


def jantzen_character_dom(name: str, p: int, lam: Weight) -> DomMap:
    """The same filtration sum as an honest dominant character map."""
    out: DomMap = {}
    for mu, a in jantzen_multipliers(name, p, lam).items():
        for w, m in _weyl_dom(name, mu).items():
            nv = out.get(w, 0) + a * m
            if nv:
                out[w] = nv
            else:
                out.pop(w, None)
    return out


@functools.lru_cache(maxsize=None)
def _two_rho_covector(name: str) -> Weight:
    rs = root_system(name)
    acc = (0,) * rs.rank
    for beta in rs.positive_roots:
        acc = wadd(acc, rs.covector(beta))
    return acc


def _peel(
    name: str,
    dom: Mapping[Weight, int],
    basis: Callable[[Weight], Mapping[Weight, int]],
    allow_negative: bool,
) -> dict[Weight, int]:
    """Expand a dominant map over a triangular basis by repeatedly removing
    the maximal remaining weight.  The basis callable must return a dominant
    map with leading coefficient 1 at its argument."""
    f = _two_rho_covector(name)

    def rank_key(w: Weight) -> tuple[int, Weight]:
        return sum(a * b for a, b in zip(f, w)), w

    rem = dict(_clean(dom))
    out: dict[Weight, int] = {}
    while rem:
        mu = max(rem, key=rank_key)
        m = rem[mu]
        if m < 0 and not allow_negative:
            raise OracleMismatch(
                f"peeling hit a negative multiplicity {m} at {mu} in {name}"
            )
        out[mu] = m
        for w, c in basis(mu).items():
            nv = rem.get(w, 0) - m * c
            if nv:
                rem[w] = nv
            else:
                rem.pop(w, None)
    return out


def weyl_expansion(name: str, dom: Mapping[Weight, int]) -> dict[Weight, int]:
    """Coefficients of a dominant map on the chi basis (may be negative)."""
    return _peel(name, dom, lambda mu: _weyl_dom(name, mu), allow_negative=True)


# -- simple characters driven by a decomposition table ----------------------


class SimpleCharacters:
    """Characters of the simple modules of a fixed system in a fixed
    characteristic, generated from a table of standard-module composition
    multiplicities.  Rows absent from the table are filled in through the
    twisted tensor factorisation when the weight is not restricted."""

    def __init__(self, name: str, p: int, rows: Mapping[Weight, Mapping[Weight, int]]):
        self.rs = root_system(name)
        self.name = name
        self.p = int(p)
        if self.p < 2:
            raise SchemaError(f"bad characteristic {p}")
        self.rows: dict[Weight, dict[Weight, int]] = {}
        for lam, row in rows.items():
            lam = self.rs.check_weight(lam)
            row = {self.rs.check_weight(w): int(c) for w, c in row.items()}
            if row.get(lam) != 1:
                raise SchemaError(f"row {lam} lacks leading multiplicity 1")
            if any(c < 0 for c in row.values()):
                raise SchemaError(f"row {lam} has a negative multiplicity")
            self.rows[lam] = row
        self._dom: dict[Weight, DomMap] = {}
        self._full: dict[Weight, FullMap] = {}

    def has_row(self, lam: Weight) -> bool:
        return tuple(lam) in self.rows

    def decomposition_row(self, lam: Weight) -> dict[Weight, int]:
        lam = self.rs.check_weight(lam)
        try:
            return dict(self.rows[lam])
        except KeyError:
            raise MissingKey(
                f"no stored composition row for {lam} in {self.name}, p={self.p}"
            ) from None

    def simple_dom(self, lam: Weight) -> DomMap:
        lam = self.rs.check_weight(lam)
        cached = self._dom.get(lam)
        if cached is not None:
            return dict(cached)
        if not self.rs.is_dominant(lam):
            raise NotDominant(f"{lam} is not dominant")
        if lam in self.rows:
            acc = dict(_weyl_dom(self.name, lam))
            for nu, c in self.rows[lam].items():
                if nu == lam:
                    continue
                for w, m in self.simple_dom(nu).items():
                    nv = acc.get(w, 0) - c * m
                    if nv:
                        acc[w] = nv
                    else:
                        acc.pop(w, None)
            if any(c < 0 for c in acc.values()) or acc.get(lam) != 1:
                raise OracleMismatch(
                    f"composition row for {lam} in {self.name}, p={self.p} "
                    "does not leave a genuine character"
                )
        else:
            base, rest = self.rs.restricted_split(lam, self.p)
            if not any(rest):
                raise MissingKey(
                    f"no stored composition row for restricted {lam} "
                    f"in {self.name}, p={self.p}"
                )
            prod = mul_full(
                self.simple_full(base), twist_full(self.simple_full(rest), self.p)
            )
            acc = dom_restrict(self.name, prod)
        self._dom[lam] = acc
        return dict(acc)

    def simple_full(self, lam: Weight) -> FullMap:
        lam = self.rs.check_weight(lam)
        cached = self._full.get(lam)
        if cached is None:
            cached = expand_dom(self.name, self.simple_dom(lam))
            self._full[lam] = cached
        return dict(cached)

    def simple_dimension(self, lam: Weight) -> int:
        return dom_dimension(self.name, self.simple_dom(lam))

    def decompose(self, dom: Mapping[Weight, int]) -> dict[Weight, int]:
        """Composition multiplicities of a genuine character given as a
        dominant map; raises OracleMismatch if the input is not a
        nonnegative combination of simple characters."""
        return _peel(self.name, dom, self.simple_dom, allow_negative=False)

    def decompose_weyl(self, lam: Weight) -> dict[Weight, int]:
        """Composition multiplicities of the standard module of highest
        weight lam, computed by peeling rather than table lookup."""
        return self.decompose(_weyl_dom(self.name, tuple(lam)))


# -- public wrapper ----------------------------------------------------------


class Character:
    """A virtual character with full weight support, tagged by its system."""

    __slots__ = ("system", "coeffs")

    def __init__(self, system: str, coeffs: Mapping[Weight, int]):
        rs = root_system(system)
        self.system = system
        self.coeffs: dict[Weight, int] = {
            rs.check_weight(w): int(c) for w, c in coeffs.items() if c
        }

    @classmethod
    def zero(cls, system: str) -> "Character":
        return cls(system, {})

    @classmethod
    def weyl(cls, system: str, lam: Weight) -> "Character":
        return cls(system, _weyl_full(system, tuple(lam)))

    @classmethod
    def line(cls, system: str, lam: Weight) -> "Character":
        """The character of the one-dimensional weight space e(lam)."""
        return cls(system, {tuple(lam): 1})

    def _check_same(self, other: "Character") -> None:
        if self.system != other.system:
            raise WrongSystem(f"mixing {self.system} with {other.system}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Character)
            and self.system == other.system
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.system, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Character") -> "Character":
        self._check_same(other)
        return Character(self.system, add_full(self.coeffs, other.coeffs))

    def __sub__(self, other: "Character") -> "Character":
        self._check_same(other)
        return Character(
            self.system, add_full(self.coeffs, scale_full(-1, other.coeffs))
        )

    def __mul__(self, other: "Character | int") -> "Character":
        if isinstance(other, int):
            return Character(self.system, scale_full(other, self.coeffs))
        self._check_same(other)
        return Character(self.system, mul_full(self.coeffs, other.coeffs))

    def __rmul__(self, other: int) -> "Character":
        return self.__mul__(other)

    def mult(self, wt: Weight) -> int:
        return self.coeffs.get(tuple(wt), 0)

    def support(self) -> frozenset[Weight]:
        return frozenset(self.coeffs)

    def dimension(self) -> int:
        return sum(self.coeffs.values())

    def twist(self, p: int) -> "Character":
        return Character(self.system, twist_full(self.coeffs, p))

    def half_twist(self) -> "Character":
        if self.system != "G2":
            raise WrongSystem("the half twist only exists in type G2")
        return Character(self.system, g2_half_twist_full(self.coeffs))

    def dominant_part(self) -> DomMap:
        return dom_restrict(self.system, self.coeffs)

    def is_invariant(self) -> bool:
        """True when the character is constant on Weyl orbits."""
        rs = root_system(self.system)
        seen: set[Weight] = set()
        for w, c in self.coeffs.items():
            if w in seen:
                continue
            orb = _orbit_cached(self.system, w)
            seen.update(orb)
            if any(self.coeffs.get(x, 0) != c for x in orb):
                return False
        return True

    def __repr__(self) -> str:
        head = sorted(self.coeffs.items())[:4]
        body = ", ".join(f"{w}: {c}" for w, c in head)
        more = "" if len(self.coeffs) <= 4 else f", +{len(self.coeffs) - 4} more"
        return f"Character({self.system}, {{{body}{more}}})"


# -- functional entry points over the wrapper --------------------------------


def weyl_character(name: str, lam: Weight) -> Character:
    return Character.weyl(name, lam)


def weyl_dim(name: str, lam: Weight) -> int:
    return weyl_dimension(name, lam)


def tensor(a: Character, b: Character) -> Character:
    return a * b


def twist(c: Character, p: int) -> Character:
    return c.twist(p)


def g2_half_twist(c: Character) -> Character:
    return c.half_twist()


def jantzen_sum(name: str, p: int, lam: Weight) -> Character:
    """Sum of the positive layers of the standard filtration, as a virtual
    character with full support."""
    return Character(name, expand_dom(name, jantzen_character_dom(name, p, lam)))


def simple_character(name: str, p: int, lam: Weight, table: SimpleCharacters) -> Character:
    if (table.name, table.p) != (name, p):
        raise WrongSystem(f"table is for {table.name} p={table.p}, not {name} p={p}")
    return Character(name, table.simple_full(lam))


def decompose(c: Character, table: SimpleCharacters) -> dict[Weight, int]:
    """Composition multiplicities of a genuine character."""
    if c.system != table.name:
        raise WrongSystem(f"mixing {c.system} with {table.name}")
    return table.decompose(c.dominant_part())
