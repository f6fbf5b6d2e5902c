"""Verification procedures over the bundled datasets.

Everything here is an exact, finite check: the weight-duality map and its
power-reduction identity, extension-gap inequalities, scans over the weight
support of the restricted Steinberg character, bounded linkage searches, the
exceptional-isogeny character calculus in characteristic three, and the
layer analysis that certifies good-filtration conditions for the
characteristic-seven radical tables.  Checks that cannot be decided from
the bundled data report an inconclusive verdict or raise, never guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .alcoves import linked, strongly_linked
from .babyverma import RadicalTable
from .bcohomology import dot_reflect_simple, r_ind
from .characters import (
    Character,
    SimpleCharacters,
    expand_dom,
    g2_half_twist_full,
    mul_full,
    weyl_character_dom,
    weyl_character_full,
)
from .data import bundle
from .errors import (
    CharacterMismatch,
    CounterexampleFound,
    NegativityDetected,
    NotRestricted,
    SearchExhausted,
    UnknownCohomology,
    UnresolvedCase,
    UnsupportedCase,
)
from .rootsystems import Weight, root_system, wadd, wscale

# -- weight duality ----------------------------------------------------------


def hat(name: str, p: int, lam: Weight, r: int = 1) -> Weight:
    """Dual weight 2(p^r - 1)rho + w0(lam) of a twist-restricted weight.

    Sends lam to the highest weight of the dual object in the same block;
    always dominant, and an involution on the twist-restricted range.
    """
    rs = root_system(name)
    lam = rs.check_weight(lam)
    if r < 1:
        raise UnsupportedCase(f"twist depth must be at least 1, got {r}")
    top = p**r - 1
    if not all(0 <= c <= top for c in lam):
        raise NotRestricted(f"{lam} is not restricted for p^r = {p}^{r}")
    return wadd(wscale(2 * top, rs.rho), rs.apply(rs.w0, lam))


def r_reduction_identity(name: str, p: int, r: int, lam: Weight) -> bool:
    """Weight identity letting depth-r duals reduce to the depth-1 case.

    Checks (p^(r-1) - 1)rho + p^(r-1) * hat(lam, r=1) against
    hat((p^(r-1) - 1)rho + p^(r-1) * lam, r); lam must be restricted.
    """
    rs = root_system(name)
    lam = rs.check_weight(lam)
    if r < 2:
        raise UnsupportedCase(f"reduction needs depth at least 2, got {r}")
    q = p ** (r - 1)
    step = wadd(wscale(q - 1, rs.rho), wscale(q, hat(name, p, lam, r=1)))
    whole = hat(name, p, wadd(wscale(q - 1, rs.rho), wscale(q, lam)), r=r)
    return step == whole


# -- extension-gap inequality ------------------------------------------------


@dataclass(frozen=True)
class ExtGapDatum:
    """Cited lower bound for the smallest pairing of a dominant weight
    carrying a nonzero first self-extension of the trivial module."""

    system: str
    prime: int
    gap: int
    witness: Weight | None = None

    def __post_init__(self) -> None:
        rs = root_system(self.system)
        if self.witness is not None:
            object.__setattr__(self, "witness", rs.check_weight(self.witness))
        if self.gap < 1:
            raise UnsupportedCase(f"gap must be positive, got {self.gap}")


def ext_gap_data(root: str | None = None) -> tuple[ExtGapDatum, ...]:
    """Bundled extension-gap records, in file order."""
    out = []
    for row in bundle(root).ext_gap():
        wit = row.get("witness")
        out.append(
            ExtGapDatum(
                system=row["system"],
                prime=int(row["prime"]),
                gap=int(row["gap"]),
                witness=None if wit is None else tuple(wit),
            )
        )
    return tuple(out)


def jantzen_bound_check(datum: ExtGapDatum) -> bool:
    """Strict inequality p * gap > 2(p - 1)(h - 1) for the datum's system.

    When it holds, the contraction argument applies in that characteristic.
    """
    h = root_system(datum.system).coxeter_number
    return datum.prime * datum.gap > 2 * (datum.prime - 1) * (h - 1)


def generic_gap_bound_holds(name: str, p: int) -> bool:
    """The inequality with the generic floor gap = 2(p - h + 1).

    Meaningful for p >= 2h - 2, where the floor is what linkage alone
    guarantees; reduces to 2p(h-1) > 2(p-1)(h-1), hence always true there.
    """
    h = root_system(name).coxeter_number
    if p < 2 * h - 2:
        raise UnsupportedCase(f"generic floor needs p >= 2h-2 = {2 * h - 2}")
    return jantzen_bound_check(ExtGapDatum(name, p, 2 * (p - h + 1)))


# -- Steinberg support scans ---------------------------------------------


@dataclass(frozen=True)
class ScanViolation:
    """One solution of the twist-inequality scan.

    A support weight of the restricted Steinberg character plus a restricted
    offset landing in p times the weight lattice, with some simple pairing
    at most -2p.  Such a solution is exactly what permits a nonzero
    degree-one induction for a twist appearing under the target weight.
    """

    system: str
    prime: int
    steinberg_weight: Weight
    root_index: int
    target_offset: Weight
    restricted_part: Weight
    twist: Weight
    reflected_twist: Weight
    target: Weight

    def recheck(self) -> bool:
        """Recompute the defining conditions from the raw fields alone."""
        p = self.prime
        total = wadd(self.steinberg_weight, self.target_offset)
        if total != wscale(p, self.twist):
            return False
        if any(c != 0 for c in self.restricted_part):
            return False
        i = self.root_index
        if self.steinberg_weight[i] + self.target_offset[i] > -2 * p:
            return False
        rs = root_system(self.system)
        if self.target != wadd(wscale(p - 1, rs.rho), self.target_offset):
            return False
        return self.reflected_twist == dot_reflect_simple(
            self.system, i, self.twist
        )


def steinberg_support(name: str, p: int) -> frozenset[Weight]:
    """Weight support of the restricted Steinberg character."""
    rs = root_system(name)
    st = weyl_character_full(name, wscale(p - 1, rs.rho))
    return frozenset(st)


def steinberg_support_pairing_floor(name: str, p: int) -> Weight:
    """Per-simple-root minimum pairing over the Steinberg support."""
    supp = steinberg_support(name, p)
    rank = root_system(name).rank
    return tuple(min(g[i] for g in supp) for i in range(rank))


def steinberg_weight_scan(
    name: str,
    p: int,
    target_offsets: Iterable[Weight] | None = None,
) -> list[ScanViolation]:
    """All scan solutions, in (offset, support weight, root index) order.

    By default the offset ranges over every restricted weight; passing an
    explicit iterable restricts the scan to those offsets (sorted first,
    so the output order stays deterministic).
    """
    rs = root_system(name)
    if target_offsets is None:
        offsets = list(rs.restricted_weights(p))
    else:
        offsets = sorted(rs.check_weight(m) for m in target_offsets)
    support = sorted(steinberg_support(name, p))
    shift = wscale(p - 1, rs.rho)
    zero = (0,) * rs.rank
    out: list[ScanViolation] = []
    for mu in offsets:
        for gamma in support:
            total = wadd(gamma, mu)
            if any(c % p for c in total):
                continue
            twist = tuple(c // p for c in total)
            for i in range(rs.rank):
                if gamma[i] + mu[i] > -2 * p:
                    continue
                out.append(
                    ScanViolation(
                        system=name,
                        prime=p,
                        steinberg_weight=gamma,
                        root_index=i,
                        target_offset=mu,
                        restricted_part=zero,
                        twist=twist,
                        reflected_twist=dot_reflect_simple(name, i, twist),
                        target=wadd(shift, mu),
                    )
                )
    return out


# -- bounded linkage searches ----------------------------------------------


def min_linked_pairing(name: str, p: int) -> tuple[int, Weight]:
    """Smallest highest-short-root pairing over nonzero dominant weights
    linked to zero, searched exhaustively up to pairing 4h.

    Returns the minimum and the first witness in (pairing, lex) order.
    """
    rs = root_system(name)
    if p < rs.coxeter_number:
        raise UnsupportedCase(f"search assumes p >= h = {rs.coxeter_number}")
    bound = 4 * rs.coxeter_number
    alpha0 = rs.highest_short_root
    zero = (0,) * rs.rank
    candidates = sorted(
        (rs.pairing(mu, alpha0), mu)
        for mu in _dominant_box(rs.rank, bound)
        if any(mu) and rs.pairing(mu, alpha0) <= bound
    )
    for pairing, mu in candidates:
        if linked(name, p, mu, zero):
            return pairing, mu
    raise SearchExhausted(f"no nonzero linked weight under pairing {bound}")


def _dominant_box(rank: int, top: int) -> Iterable[Weight]:
    if rank == 1:
        for a in range(top + 1):
            yield (a,)
    elif rank == 2:
        for a in range(top + 1):
            for b in range(top + 1):
                yield (a, b)
    else:
        for a in range(top + 1):
            for rest in _dominant_box(rank - 1, top):
                yield (a, *rest)


@dataclass(frozen=True)
class LinkageBoundReport:
    """Outcome of the rank-three, characteristic-five pairing bound."""

    ceiling: Weight
    bound: int
    exceptional: Weight
    entries: tuple[tuple[Weight, int], ...]


def a3p5_linkage_check() -> LinkageBoundReport:
    """Pairing bound for rank-three weights strongly linked below the
    ceiling one short of twice the Steinberg weight, at p = 5.

    Every dominant lam with (p-1)rho + lam strongly linked to and under the
    ceiling satisfies pairing(lam) < 10, except the single weight whose
    shift equals the ceiling itself, where the pairing is exactly 10.
    """
    name, p = "A3", 5
    rs = root_system(name)
    st = wscale(p - 1, rs.rho)
    alpha0 = rs.highest_short_root
    ceiling = wadd(wscale(2 * (p - 1), rs.rho), wscale(-1, alpha0))
    exceptional = wadd(st, wscale(-1, alpha0))
    bound = p * (rs.coxeter_number - 2)
    entries: list[tuple[Weight, int]] = []
    for nu in rs.dominant_weights_below(ceiling):
        lam = tuple(a - b for a, b in zip(nu, st))
        if any(c < 0 for c in lam):
            continue
        if not strongly_linked(name, p, nu, ceiling):
            continue
        pairing = rs.pairing(lam, alpha0)
        entries.append((lam, pairing))
        if lam == exceptional:
            if pairing != bound:
                raise CounterexampleFound(f"exceptional weight pairing {pairing}")
        elif pairing >= bound:
            raise CounterexampleFound(f"{lam} has pairing {pairing} >= {bound}")
    entries.sort()
    return LinkageBoundReport(ceiling, bound, exceptional, tuple(entries))


# -- exceptional isogeny in characteristic three -----------------------------


def g2p3_isogeny_checks(decomp: SimpleCharacters) -> list[str]:
    """Character identities forced by the exceptional isogeny at p = 3.

    Verifies every restricted simple character factors as the short-root
    part times the half twist of the long-root part, that the three
    short-root weights stay simple as induced modules, and the dimension
    of the restricted top weight.  Returns evidence lines.
    """
    if decomp.name != "G2" or decomp.p != 3:
        raise UnsupportedCase("isogeny factorisation is specific to G2, p = 3")
    lines: list[str] = []
    for a in range(3):
        for b in range(3):
            lhs = decomp.simple_full((a, b))
            rhs = mul_full(
                decomp.simple_full((a, 0)),
                g2_half_twist_full(decomp.simple_full((b, 0))),
            )
            if lhs != rhs:
                raise CharacterMismatch(f"half-twist factorisation fails at {(a, b)}")
            lines.append(
                f"ch L{(a, b)} = ch L{(a, 0)} * halftwist(ch L{(b, 0)})"
                f"  [dim {sum(lhs.values())}]"
            )
    for lam in ((0, 0), (1, 0), (2, 0)):
        if decomp.simple_dom(lam) != weyl_character_dom("G2", lam):
            raise CharacterMismatch(f"induced module at {lam} is not simple")
        lines.append(f"L{lam} carries the full induced character")
    d = decomp.simple_dimension((2, 2))
    if d != 729:
        raise CharacterMismatch(f"restricted Steinberg dimension {d} != 729")
    lines.append("dim L(2, 2) = 729 = 27^2")
    return lines


# -- twist classification over the radical tables ---------------------------


def _sorted_tables(tables: Mapping[int, RadicalTable] | Iterable[RadicalTable]) -> list[RadicalTable]:
    if isinstance(tables, Mapping):
        pool = [tables[k] for k in sorted(tables)]
    else:
        pool = sorted(tables, key=lambda t: t.label)
    if not pool:
        raise UnsupportedCase("no radical tables supplied")
    return pool


def g2p7_sigma1_classification(
    tables: Mapping[int, RadicalTable] | Iterable[RadicalTable],
    decomp: SimpleCharacters,
) -> tuple[tuple[Weight, ...], tuple[Weight, ...]]:
    """Split the twists of the shifted radical series into the two lists
    the layer analysis needs.

    Returns (twists with nonzero degree-one induction, dominant twists
    whose induced module is not simple).  Every twist must be decidable by
    the induction fragment, else UnknownCohomology.
    """
    twists: set[Weight] = set()
    for table in _sorted_tables(tables):
        twists.update(table.rho_shifted().twist_set())
    r1_nonzero: list[Weight] = []
    nonsimple: list[Weight] = []
    for sigma in sorted(twists):
        res = r_ind("G2", sigma, 1)
        if res.is_unknown:
            raise UnknownCohomology(f"cannot decide degree-one induction of {sigma}")
        if res.is_costandard:
            r1_nonzero.append(sigma)
        if all(c >= 0 for c in sigma):
            if decomp.decompose_weyl(sigma) != {sigma: 1}:
                nonsimple.append(sigma)
    return tuple(r1_nonzero), tuple(nonsimple)


# -- layer case analysis -----------------------------------------------------


class Resolution(Enum):
    """How one potentially threatening co-occurrence was discharged."""

    HIGHER_LAYER = "higher-layer"
    SAME_LAYER_CHAIN_ABSENT = "same-layer-chain-absent"
    UNRESOLVED = "unresolved"


# (source twist, companion twist) pairs where the costandard module of the
# source could map nontrivially into the degree-one induction of the
# companion: derived below, frozen here for naming the finding.
_CASE_PATTERNS: dict[tuple[Weight, Weight], int] = {
    ((2, 0), (3, -2)): 1,
    ((2, 0), (-2, 1)): 2,
    ((1, 1), (-4, 3)): 3,
    ((1, 1), (5, -2)): 4,
}


@dataclass(frozen=True)
class CaseFinding:
    """One co-occurrence of a threatening twist pair in one table.

    The source twist is dominant and its costandard module contains the
    simple of the companion's degree-one induction strictly below the top,
    so a nonzero noninvertible map could exist.  Layers are indexed from
    the head (zero) down to the socle; a threat needs the companion at the
    source's layer or deeper.
    """

    case_id: int
    alcove: int
    restricted_part: Weight
    twist: Weight
    companion_twist: Weight
    twist_layer: int
    companion_layer: int
    resolution: Resolution
    absent_weights: tuple[Weight, ...] = ()


def _chain_walk(table: RadicalTable, start: Weight, target: Weight) -> tuple[Weight, ...]:
    """Walk upward from the companion by simple roots until the target.

    At each step exactly one of the two simple-root successors may occur
    among the table's twists; the other is recorded as absent.  A step
    with both successors present leaves the map unexcluded and raises.
    """
    roots = root_system(table.system).simple_roots
    present = table.twist_set()
    absent: list[Weight] = []
    cur = start
    for _ in range(24):
        if cur == target:
            return tuple(absent)
        successors = [wadd(cur, a) for a in roots]
        found = [s for s in successors if s in present]
        absent.extend(s for s in successors if s not in present)
        if len(found) > 1:
            raise UnresolvedCase(
                f"both successors of {cur} occur in table {table.label}"
            )
        if not found:
            return tuple(absent)
        cur = found[0]
    raise UnresolvedCase(f"chain from {start} to {target} did not terminate")


def g2p7_case_analysis(
    tables: Mapping[int, RadicalTable] | Iterable[RadicalTable],
    decomp: SimpleCharacters,
) -> list[CaseFinding]:
    """Locate and discharge every threatening twist co-occurrence.

    For each shifted table, a companion twist with nonzero degree-one
    induction of highest weight w is paired against each dominant source
    twist whose induced character contains w strictly below the top.  Any
    such pair sharing a restricted part is a finding; it must match one of
    the four known patterns.  Resolution: the companion occurs strictly
    nearer the head than every source occurrence (higher layer), or a
    shared layer exists and the upward chain from the companion dies on a
    weight absent from the table.
    """
    findings: list[CaseFinding] = []
    for table in _sorted_tables(tables):
        sh = table.rho_shifted()
        twists = sorted(sh.twist_set())
        dominant = [s for s in twists if all(c >= 0 for c in s)]
        for companion in twists:
            res = r_ind("G2", companion, 1)
            if res.is_unknown:
                raise UnknownCohomology(
                    f"cannot decide degree-one induction of {companion}"
                )
            if not res.is_costandard:
                continue
            w = res.weight
            occ_c = sh.occurrences(companion)
            for source in dominant:
                if source == w:
                    continue  # any nonzero map would be invertible; harmless
                if decomp.decompose_weyl(source).get(w, 0) == 0:
                    continue
                occ_s = sh.occurrences(source)
                shared = sorted(set(occ_c) & set(occ_s))
                if not shared:
                    continue
                case_id = _CASE_PATTERNS.get((source, companion))
                if case_id is None:
                    raise UnresolvedCase(
                        f"unclassified pair {source}/{companion} "
                        f"in table {table.label}"
                    )
                for part in shared:
                    findings.append(
                        _resolve_finding(
                            sh, case_id, part, source, companion, w,
                            occ_s[part], occ_c[part],
                        )
                    )
    findings.sort(key=lambda f: (f.case_id, f.alcove, f.restricted_part))
    return findings


def _resolve_finding(
    sh: RadicalTable,
    case_id: int,
    part: Weight,
    source: Weight,
    companion: Weight,
    w: Weight,
    source_layers: tuple[int, ...],
    companion_layers: tuple[int, ...],
) -> CaseFinding:
    threats = [
        (ls, lc)
        for ls in source_layers
        for lc in companion_layers
        if lc >= ls
    ]
    if not threats:
        return CaseFinding(
            case_id,
            sh.label,
            part,
            source,
            companion,
            min(source_layers),
            max(companion_layers),
            Resolution.HIGHER_LAYER,
        )
    absent = _chain_walk(sh, companion, w)
    ls, lc = min(threats)
    return CaseFinding(
        case_id,
        sh.label,
        part,
        source,
        companion,
        ls,
        lc,
        Resolution.SAME_LAYER_CHAIN_ABSENT,
        absent,
    )


# -- residual character ------------------------------------------------------


def residual_character(
    name: str, p: int, lam: Weight, decomp: SimpleCharacters
) -> Character:
    """Character of the kernel of the evaluation onto the simple module.

    The induced module of the dual weight surjects onto the simple module
    of the restricted weight; the difference of characters must therefore
    be coefficientwise nonnegative, else the data is corrupt.
    """
    rs = root_system(name)
    lam = rs.check_weight(lam)
    dom = dict(weyl_character_dom(name, hat(name, p, lam)))
    for w, c in decomp.simple_dom(lam).items():
        left = dom.get(w, 0) - c
        if left < 0:
            raise NegativityDetected(
                f"simple character of {lam} exceeds the induced one at {w}"
            )
        if left:
            dom[w] = left
        else:
            dom.pop(w, None)
    return Character(name, expand_dom(name, dom))


# -- good-filtration conditions ---------------------------------------------


class FiltrationVerdict(Enum):
    """Strongest decidable filtration condition for one factor series."""

    DEGREE_ONE_VANISHES = "degree-one-vanishes"
    NO_THREATENING_PAIRS = "no-threatening-pairs"
    ISO_ONLY_THREATS = "iso-only-threats"
    INCONCLUSIVE = "inconclusive"


FactorItem = tuple  # (restricted_part, twist) or (restricted_part, twist, layer)


def series_factors(table: RadicalTable) -> tuple[tuple[Weight, Weight, int], ...]:
    """Factor list of a table as (restricted part, twist, layer) triples,
    head first, for feeding the filtration condition check."""
    return tuple(
        (e.restricted_part, e.twisted_part, e.layer)
        for e in sorted(
            table.entries, key=lambda e: (e.layer, e.restricted_part, e.twisted_part)
        )
    )


def filtration_condition_check(
    name: str,
    factors: Sequence[FactorItem],
    decomp: SimpleCharacters,
) -> FiltrationVerdict:
    """Decide the strongest sufficient condition a factor series meets.

    Items are (restricted part, twist) with list position as the series
    position (head first), or (restricted part, twist, layer) when factors
    within one layer are order-ambiguous.  Verdicts, strongest first:

      DEGREE_ONE_VANISHES   every twist has zero degree-one induction;
      NO_THREATENING_PAIRS  nonzero degree-one inductions exist, but no
                            dominant twist with a matching restricted part
                            sits at the companion's layer or above it with
                            a character containing the companion's target;
      ISO_ONLY_THREATS      threats exist but each has source equal to the
                            target, so any nonzero map is invertible, and
                            degree two vanishes everywhere;
      INCONCLUSIVE          at least one threat could be noninvertible.

    Raises UnknownCohomology when the fragment cannot decide some twist.
    """
    root_system(name)
    rows: list[tuple[Weight, Weight, int]] = []
    for pos, item in enumerate(factors):
        if len(item) == 3:
            part, twist, layer = item
        else:
            part, twist = item
            layer = pos
        rows.append((tuple(part), tuple(twist), int(layer)))
    companions: list[tuple[Weight, Weight, int, Weight]] = []
    for part, twist, layer in rows:
        for degree in (1, 2):
            if r_ind(name, twist, degree).is_unknown:
                raise UnknownCohomology(
                    f"cannot decide degree-{degree} induction of {twist}"
                )
        res = r_ind(name, twist, 1)
        if res.is_costandard:
            companions.append((part, twist, layer, res.weight))
    if not companions:
        return FiltrationVerdict.DEGREE_ONE_VANISHES
    iso_only = True
    found_threat = False
    for part, companion, clayer, w in companions:
        for spart, source, slayer in rows:
            if spart != part or slayer > clayer:
                continue
            if any(c < 0 for c in source):
                continue
            if source == w:
                found_threat = True
            elif decomp.decompose_weyl(source).get(w, 0):
                found_threat = True
                iso_only = False
    if not found_threat:
        return FiltrationVerdict.NO_THREATENING_PAIRS
    if iso_only:
        return FiltrationVerdict.ISO_ONLY_THREATS
    return FiltrationVerdict.INCONCLUSIVE


def g2p7_filtration_verdicts(
    tables: Mapping[int, RadicalTable] | Iterable[RadicalTable],
    decomp: SimpleCharacters,
) -> dict[int, FiltrationVerdict]:
    """Filtration verdict of every shifted table, keyed by alcove label."""
    out: dict[int, FiltrationVerdict] = {}
    for table in _sorted_tables(tables):
        sh = table.rho_shifted()
        out[table.label] = filtration_condition_check(
            "G2", series_factors(sh), decomp
        )
    return out
