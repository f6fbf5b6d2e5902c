"""Baby Verma characters for the Frobenius kernel tied to the torus, and
the bundled radical-layer tables that refine them.

A twisted factor is a pair: a restricted highest weight together with a
twist weight; the module is the simple with the restricted highest weight
tensored with the one-dimensional character stretched by the prime.  A
radical table lists, for one base weight, every twisted factor of every
radical layer of the dual baby Verma module, with multiplicities.  The
master oracle here checks the whole table at once: summing the factor
characters must reproduce the dual baby Verma character exactly.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .alcoves import distance, is_regular
from .characters import DomMap, FullMap, SimpleCharacters, mul_full
from .errors import (
    MissingKey,
    NegativeResidue,
    OracleMismatch,
    ParityViolation,
    SchemaError,
)
from .rootsystems import Weight, root_system, wadd, wscale, wsub

LaurentPoly = dict[int, int]

# layers of a dual baby Verma radical series never exceed this bound here
MAX_LAYER = 12

_BUNDLED_DIR = Path(__file__).parent / "data" / "radical_tables"


def zhat_character(name: str, p: int, mu: Weight) -> FullMap:
    """Weight map of the dual baby Verma module with highest weight mu:
    e(mu) times, over the positive roots a, the sum of e(-i a) for
    0 <= i < p."""
    rs = root_system(name)
    acc: FullMap = {rs.check_weight(mu): 1}
    for beta in rs.positive_roots:
        ladder = {wscale(-i, beta): 1 for i in range(p)}
        acc = mul_full(acc, ladder)
    return acc


def zhat_dimension(name: str, p: int) -> int:
    return p ** len(root_system(name).positive_roots)


def twisted_split(name: str, p: int, wt: Weight) -> tuple[Weight, Weight]:
    """Unique split wt = base + p * twist with base restricted.  Accepts
    any weight, unlike the dominant-only split on the root system."""
    rs = root_system(name)
    wt = rs.check_weight(wt)
    base = tuple(x % p for x in wt)
    twist = tuple((x - r) // p for x, r in zip(wt, base))
    return base, twist


@dataclass(frozen=True)
class TableEntry:
    restricted_part: Weight
    layer: int
    twisted_part: Weight
    mult: int

    def composite(self, p: int) -> Weight:
        return wadd(self.restricted_part, wscale(p, self.twisted_part))


@dataclass(frozen=True)
class RadicalTable:
    system: str
    prime: int
    label: int
    base_weight: Weight
    entries: tuple[TableEntry, ...]

    @property
    def max_layer(self) -> int:
        return max(e.layer for e in self.entries)

    def layer_entries(self, layer: int) -> tuple[TableEntry, ...]:
        return tuple(e for e in self.entries if e.layer == layer)

    def twist_set(self) -> frozenset[Weight]:
        return frozenset(e.twisted_part for e in self.entries)

    def occurrences(self, twist: Weight) -> dict[Weight, tuple[int, ...]]:
        """Restricted parts under which the twist appears, each with the
        sorted layers where it does."""
        found: dict[Weight, list[int]] = {}
        for e in self.entries:
            if e.twisted_part == twist:
                found.setdefault(e.restricted_part, []).append(e.layer)
        return {k: tuple(sorted(v)) for k, v in found.items()}

    def total_multiplicity(self, restricted_part: Weight, twisted_part: Weight) -> int:
        return sum(
            e.mult
            for e in self.entries
            if e.restricted_part == tuple(restricted_part)
            and e.twisted_part == tuple(twisted_part)
        )

    def rho_shifted(self) -> "RadicalTable":
        """Companion table for the base weight moved up by p times rho.
        Valid because the dual baby Verma character of the moved weight is
        the one of the base times the p-stretch of e(rho), so every factor
        just gains rho in its twist."""
        rho = root_system(self.system).rho
        return RadicalTable(
            self.system,
            self.prime,
            self.label,
            wadd(self.base_weight, wscale(self.prime, rho)),
            tuple(
                TableEntry(e.restricted_part, e.layer, wadd(e.twisted_part, rho), e.mult)
                for e in self.entries
            ),
        )


def table_from_mapping(obj: Mapping) -> RadicalTable:
    keys = {"system", "prime", "label", "base_weight", "entries"}
    if set(obj) != keys:
        raise SchemaError(f"radical table fields must be {sorted(keys)}, got {sorted(obj)}")
    name = obj["system"]
    rs = root_system(name)
    p = int(obj["prime"])
    if p < 2:
        raise SchemaError(f"bad characteristic {p}")
    label = int(obj["label"])
    base = rs.check_weight(tuple(obj["base_weight"]))
    entries = []
    for raw in obj["entries"]:
        ekeys = {"restricted_part", "layer", "twisted_part", "mult"}
        if set(raw) != ekeys:
            raise SchemaError(f"entry fields must be {sorted(ekeys)}, got {sorted(raw)}")
        entries.append(
            TableEntry(
                rs.check_weight(tuple(raw["restricted_part"])),
                int(raw["layer"]),
                rs.check_weight(tuple(raw["twisted_part"])),
                int(raw["mult"]),
            )
        )
    entries.sort(key=lambda e: (e.layer, e.restricted_part, e.twisted_part))
    table = RadicalTable(name, p, label, base, tuple(entries))
    validate_structure(table)
    return table


def load_radical_tables(
    source: str | Path | Iterable[Mapping] | None = None,
) -> dict[int, RadicalTable]:
    """Radical tables keyed by alcove label, from a directory of JSON
    files, an iterable of parsed mappings, or the bundled data."""
    if source is None:
        source = _BUNDLED_DIR
    if isinstance(source, (str, Path)):
        root = Path(source)
        objs = []
        for path in sorted(root.glob("*.json")):
            with open(path, encoding="utf-8") as fh:
                objs.append(json.load(fh))
        if not objs:
            raise MissingKey(f"no radical table files under {root}")
    else:
        objs = list(source)
    out: dict[int, RadicalTable] = {}
    for obj in objs:
        t = table_from_mapping(obj)
        if t.label in out:
            raise SchemaError(f"duplicate radical table label {t.label}")
        out[t.label] = t
    return out


def validate_structure(table: RadicalTable) -> None:
    """Shape checks that need no character data: restricted parts really
    restricted, one head of multiplicity one in layer zero, and the socle
    equal to the base weight with trivial twist, alone in the last layer."""
    rs = root_system(table.system)
    p = table.prime
    if not table.entries:
        raise SchemaError(f"radical table {table.label} is empty")
    if not rs.is_restricted(table.base_weight, p):
        raise SchemaError(f"base weight {table.base_weight} is not restricted")
    for e in table.entries:
        if e.mult < 1:
            raise SchemaError(f"nonpositive multiplicity at {e}")
        if not 0 <= e.layer <= MAX_LAYER:
            raise SchemaError(f"layer out of range at {e}")
        if not rs.is_restricted(e.restricted_part, p):
            raise SchemaError(f"restricted part {e.restricted_part} is not restricted")
    head = table.layer_entries(0)
    if len(head) != 1 or head[0].mult != 1:
        raise SchemaError(f"table {table.label} lacks a simple head in layer zero")
    zero = (0,) * rs.rank
    socle = table.layer_entries(table.max_layer)
    if socle != (TableEntry(table.base_weight, table.max_layer, zero, 1),):
        raise SchemaError(f"table {table.label} lacks a simple socle at the base weight")


def check_layer_parity(table: RadicalTable) -> None:
    """Every regular factor must sit at alcove distance from the base of
    the same parity as its layer."""
    name, p = table.system, table.prime
    for e in table.entries:
        w = e.composite(p)
        if not is_regular(name, p, w):
            continue
        d = distance(name, p, table.base_weight, w)
        if (d - e.layer) % 2:
            raise ParityViolation(
                f"table {table.label}: layer {e.layer} factor at {w} "
                f"sits at distance {d} from the base"
            )


def validate_table(table: RadicalTable, simples: SimpleCharacters) -> None:
    """Master oracle: the factor characters, twisted and summed with their
    multiplicities, must equal the dual baby Verma character of the base."""
    name, p = table.system, table.prime
    got: FullMap = {}
    for e in table.entries:
        shift = wscale(p, e.twisted_part)
        for w, c in simples.simple_full(e.restricted_part).items():
            key = wadd(w, shift)
            nv = got.get(key, 0) + e.mult * c
            if nv:
                got[key] = nv
            else:
                got.pop(key, None)
    want = zhat_character(name, p, table.base_weight)
    if got != want:
        for w in sorted(set(got) | set(want)):
            if got.get(w, 0) != want.get(w, 0):
                raise OracleMismatch(
                    f"table {table.label}: factor sum has {got.get(w, 0)} "
                    f"at {w} but the baby Verma character has {want.get(w, 0)}"
                )


@functools.lru_cache(maxsize=None)
def _height_vector(name: str) -> Weight:
    rs = root_system(name)
    acc = (0,) * rs.rank
    for beta in rs.positive_roots:
        acc = wadd(acc, rs.covector(beta))
    return acc


def g1t_factors(
    name: str, p: int, mu: Weight, simples: SimpleCharacters
) -> dict[tuple[Weight, Weight], int]:
    """Total multiplicities of the twisted simple factors of the dual baby
    Verma module of mu, peeled greedily off its character.  Layer placement
    is not recoverable this way; radical tables carry that extra data."""
    f = _height_vector(name)

    def rank_key(w: Weight) -> tuple[int, Weight]:
        return sum(a * b for a, b in zip(f, w)), w

    rem = zhat_character(name, p, mu)
    out: dict[tuple[Weight, Weight], int] = {}
    while rem:
        top = max(rem, key=rank_key)
        m = rem[top]
        if m < 0:
            raise NegativeResidue(f"greedy factor removal went negative ({m}) at {top}")
        base, twist = twisted_split(name, p, top)
        shift = wscale(p, twist)
        for w, c in simples.simple_full(base).items():
            key = wadd(w, shift)
            nv = rem.get(key, 0) - m * c
            if nv:
                rem[key] = nv
            else:
                rem.pop(key, None)
        out[(base, twist)] = out.get((base, twist), 0) + m
    return out


def recover_Q(
    table: RadicalTable, nu: Weight, target: Weight
) -> tuple[LaurentPoly, int]:
    """Graded multiplicity attached to a regular target weight: reflect the
    target through nu, split off the twist, and read one term per matching
    layer, with exponent half of (distance from base to target minus the
    layer).  Returns the exponent-to-coefficient map and the distance."""
    rs = root_system(table.system)
    p = table.prime
    lam = rs.check_weight(target)
    w = wsub(wscale(2, rs.check_weight(nu)), lam)
    s0, s1 = twisted_split(table.system, p, w)
    d = distance(table.system, p, table.base_weight, lam)
    q: LaurentPoly = {}
    for e in table.entries:
        if e.restricted_part == s0 and e.twisted_part == s1:
            k = d - e.layer
            if k % 2:
                raise ParityViolation(
                    f"distance {d} and layer {e.layer} disagree in parity at {w}"
                )
            q[k // 2] = q.get(k // 2, 0) + e.mult
    return q, d


def solve_simples_from_tables(
    tables: Mapping[int, RadicalTable]
) -> dict[Weight, DomMap]:
    """Rederive the simple characters at the base weights from the tables
    alone.  Each baby Verma character equation is solved for its socle
    term; the recursion terminates because the gap from the queried weight
    up to the base weight strictly shrinks in the root order."""
    ts = list(tables.values())
    if not ts:
        raise MissingKey("no radical tables given")
    name, p = ts[0].system, ts[0].prime
    rs = root_system(name)
    by_base: dict[Weight, RadicalTable] = {}
    for t in ts:
        if (t.system, t.prime) != (name, p):
            raise SchemaError("mixed systems or primes in one table set")
        by_base[t.base_weight] = t
    zh = {b: zhat_character(name, p, b) for b in by_base}
    memo: dict[tuple[Weight, Weight], int] = {}
    active: set[tuple[Weight, Weight]] = set()

    def coeff(s0: Weight, w: Weight) -> int:
        nu = rs.dominant_rep(w)
        if any(c < 0 for c in rs.root_coords(wsub(s0, nu))):
            return 0
        key = (s0, nu)
        if key in memo:
            return memo[key]
        if key in active:
            raise OracleMismatch(f"cyclic dependency between table rows at {key}")
        active.add(key)
        t = by_base.get(s0)
        if t is None:
            raise MissingKey(f"no radical table with base weight {s0}")
        top = t.max_layer
        total = zh[s0].get(nu, 0)
        for e in t.entries:
            if e.layer == top:
                continue
            total -= e.mult * coeff(
                e.restricted_part, wsub(nu, wscale(p, e.twisted_part))
            )
        active.discard(key)
        memo[key] = total
        return total

    out: dict[Weight, DomMap] = {}
    for s0 in by_base:
        dom: DomMap = {}
        for nu in rs.dominant_weights_below(s0):
            c = coeff(s0, nu)
            if c < 0:
                raise OracleMismatch(
                    f"rederived multiplicity {c} at {nu} below {s0} is negative"
                )
            if c:
                dom[nu] = c
        out[s0] = dom
    return out
