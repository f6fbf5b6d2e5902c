"""Command line interface.

Subcommands: validate (run every loader and oracle over a data directory),
report (emit the evidence chain for one system and prime), chars, scan,
babyverma, and alcoves (inspection helpers).  Exit codes: 0 success,
1 check failure, 2 usage or data error.  The data directory comes from
--data-dir, then the TMCV_DATA_DIR environment variable, then the bundled
copy.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import Callable, Sequence

from .alcoves import (
    alcove_of,
    box_of,
    g2_alcove_label,
    is_regular,
)
from .babyverma import (
    recover_Q,
    solve_simples_from_tables,
    twisted_split,
    validate_structure,
    check_layer_parity,
    validate_table,
    zhat_character,
    zhat_dimension,
)
from .characters import weyl_dimension
from .data import DECOMPOSITION_KEYS, bundle, canonical_dumps
from .errors import (
    MissingData,
    MissingKey,
    NotDominant,
    NotRestricted,
    OnWall,
    OracleMismatch,
    TmcvError,
    UnlabeledAlcove,
    UnsupportedCase,
    WrongSystem,
)
from .report import build_report
from .rootsystems import SYSTEMS, Weight, root_system
from .verify import (
    ext_gap_data,
    g2p3_isogeny_checks,
    residual_character,
    steinberg_weight_scan,
)

_USAGE_ERRORS = (
    UnsupportedCase,
    WrongSystem,
    NotDominant,
    NotRestricted,
    OnWall,
    UnlabeledAlcove,
    MissingData,
    MissingKey,
)


def _parse_weight(text: str) -> Weight:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"weight must be comma-separated integers, got {text!r}"
        )


def _w(wt: Weight) -> str:
    return "(" + ", ".join(str(c) for c in wt) + ")"


# -- validate ----------------------------------------------------------------


def _check_decompositions(root: str | None) -> list[str]:
    b = bundle(root)
    out = []
    for name, p in DECOMPOSITION_KEYS:
        table = b.decomposition(name, p)
        out.append(f"{name} p={p}: {len(table.rows)} rows")
    return out


def _check_radical_structure(root: str | None) -> list[str]:
    tables = bundle(root).radical_tables()
    for n in sorted(tables):
        validate_structure(tables[n])
    return [f"{len(tables)} series structurally sound"]


def _check_layer_parity(root: str | None) -> list[str]:
    tables = bundle(root).radical_tables()
    for n in sorted(tables):
        check_layer_parity(tables[n])
    return ["layer indices agree with alcove distances in parity"]


def _check_master_oracle(root: str | None) -> list[str]:
    b = bundle(root)
    decomp = b.decomposition("G2", 7)
    tables = b.radical_tables()
    for n in sorted(tables):
        validate_table(tables[n], decomp)
    return [f"{len(tables)} series match the closed-form character exactly"]


def _check_isogeny(root: str | None) -> list[str]:
    lines = g2p3_isogeny_checks(bundle(root).decomposition("G2", 3))
    return [f"{len(lines)} character identities hold under the half twist"]


def _check_alcove_labels(root: str | None) -> list[str]:
    labels = bundle(root).alcove_labels()
    if len(set(labels.values())) != len(labels):
        raise OracleMismatch("alcove label weights are not distinct")
    for n in sorted(labels):
        w = labels[n]
        if not is_regular("G2", 7, w):
            raise OracleMismatch(f"alcove weight {w} is singular")
        if g2_alcove_label(w, 7) != n:
            raise OracleMismatch(f"weight {w} does not lie in alcove {n}")
    return [f"{len(labels)} alcove labels match the geometric labeling"]


def _check_graded_recovery(root: str | None) -> list[str]:
    b = bundle(root)
    t1 = b.radical_tables()[1]
    labels = b.alcove_labels()
    nu = (-1, -1)
    for n in sorted(labels):
        q, d = recover_Q(t1, nu, labels[n])
        reflected = tuple(2 * a - b for a, b in zip(nu, labels[n]))
        total = t1.total_multiplicity(*twisted_split("G2", 7, reflected))
        if not q or sum(q.values()) != total:
            raise OracleMismatch(
                f"graded multiplicity at {labels[n]} disagrees with the table"
            )
        layers = [d - 2 * k for k in q]
        if any(j < 0 or j > t1.max_layer for j in layers):
            raise OracleMismatch(
                f"graded degrees at {labels[n]} fall outside the layer range"
            )
    return [f"{len(labels)} graded multiplicities recovered consistently"]


def _check_sf_consistency(root: str | None) -> list[str]:
    b = bundle(root)
    decomp = b.decomposition("G2", 7)
    solved = solve_simples_from_tables(b.radical_tables())
    for w in sorted(solved):
        if solved[w] != decomp.simple_dom(w):
            raise OracleMismatch(
                f"rederived simple character at {w} disagrees with the"
                " decomposition data"
            )
    return [f"{len(solved)} simple characters rederived from the series alone"]


def _check_ext_gap(root: str | None) -> list[str]:
    data = ext_gap_data(root)
    return [f"{len(data)} extension-gap values loaded"]


def _check_ext_self(root: str | None) -> list[str]:
    table = bundle(root).ext_self("A3", 3)
    rs = root_system("A3")
    for w in table:
        if not rs.is_restricted(w, 3):
            raise OracleMismatch(f"self-extension key {w} is not restricted")
    return [f"{len(table)} self-extension rows loaded"]


def _check_errata(root: str | None) -> list[str]:
    entries = bundle(root).errata()
    ids = [e["id"] for e in entries]
    if len(set(ids)) != len(ids):
        raise OracleMismatch("erratum identifiers are not unique")
    return [f"{len(entries)} errata on record"]


def _check_manifest(root: str | None) -> list[str]:
    checks = bundle(root).manifest_check()
    bad = sorted(name for name, ok in checks.items() if not ok)
    if bad:
        raise OracleMismatch(f"file {bad[0]} does not match its pinned digest")
    return [f"{len(checks)} files match their pinned digests"]


# Content oracles run before the manifest so a corrupted value is reported
# at the weight where it breaks an identity, not as a bare hash mismatch.
VALIDATION_CHECKS: tuple[tuple[str, Callable[[str | None], list[str]]], ...] = (
    ("decomposition-tables", _check_decompositions),
    ("radical-structure", _check_radical_structure),
    ("layer-parity", _check_layer_parity),
    ("master-oracle", _check_master_oracle),
    ("isogeny-identities", _check_isogeny),
    ("alcove-labels", _check_alcove_labels),
    ("graded-recovery", _check_graded_recovery),
    ("sf-consistency", _check_sf_consistency),
    ("ext-gap-data", _check_ext_gap),
    ("ext-self-table", _check_ext_self),
    ("errata", _check_errata),
    ("manifest", _check_manifest),
)


def cmd_validate(args: argparse.Namespace) -> int:
    root = args.data_dir
    for name, check in VALIDATION_CHECKS:
        try:
            lines = check(root)
        except TmcvError as exc:
            print(f"FAIL {name}: {exc}")
            return 1
        for line in lines:
            print(f"ok {name}: {line}")
    print("all checks passed")
    return 0


# -- report ------------------------------------------------------------------


def cmd_report(args: argparse.Namespace) -> int:
    report = build_report(args.type, args.prime, args.data_dir)
    if args.format == "json":
        sys.stdout.write(report.render_json())
    else:
        sys.stdout.write(report.render_text())
    return report.exit_status


# -- inspection commands -----------------------------------------------------


def _decomposition_if_bundled(name: str, p: int, root: str | None):
    if (name, p) not in DECOMPOSITION_KEYS:
        return None
    return bundle(root).decomposition(name, p)


def cmd_chars(args: argparse.Namespace) -> int:
    name, p, lam = args.type, args.prime, args.weight
    rs = root_system(name)
    lam = rs.check_weight(lam)
    dim = weyl_dimension(name, lam)
    decomp = _decomposition_if_bundled(name, p, args.data_dir)
    factors = decomp.decompose_weyl(lam) if decomp is not None else None
    residual_dim = None
    if decomp is not None and rs.is_restricted(lam, p):
        residual_dim = residual_character(name, p, lam, decomp).dimension()
    if args.format == "json":
        payload = {
            "system": name,
            "prime": p,
            "weight": list(lam),
            "dimension": dim,
            "factors": None
            if factors is None
            else {",".join(map(str, k)): v for k, v in sorted(factors.items())},
            "residual_dimension": residual_dim,
        }
        sys.stdout.write(canonical_dumps(payload))
        return 0
    print(f"weyl character at {_w(lam)}: dimension {dim}")
    if factors is not None:
        for nu in sorted(factors):
            print(f"factor {_w(nu)}: multiplicity {factors[nu]}")
    if residual_dim is not None:
        print(f"residual of the dual weight: dimension {residual_dim}")
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    rows = steinberg_weight_scan(args.type, args.prime)
    if args.format == "json":
        payload = [
            {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(r).items()}
            for r in rows
        ]
        sys.stdout.write(canonical_dumps(payload))
        return 0
    for v in rows:
        print(
            f"offset {_w(v.target_offset)}: support weight"
            f" {_w(v.steinberg_weight)} at root {v.root_index}:"
            f" twist {_w(v.twist)} reflects to {_w(v.reflected_twist)},"
            f" target {_w(v.target)}"
        )
    print(f"{len(rows)} admissible pairs")
    return 0


def cmd_babyverma(args: argparse.Namespace) -> int:
    name, p, mu = args.type, args.prime, args.weight
    ch = zhat_character(name, p, mu)
    dim = zhat_dimension(name, p)
    lines = [
        f"dual baby verma at {_w(mu)}: dimension {dim},"
        f" {len(ch)} distinct weights"
    ]
    table = None
    if (name, p) == ("G2", 7):
        tables = bundle(args.data_dir).radical_tables()
        for t in tables.values():
            if t.base_weight == tuple(mu):
                table = t
                break
    if table is not None:
        lines.append(f"bundled series for alcove {table.label}:")
        for layer in range(table.max_layer + 1):
            entries = table.layer_entries(layer)
            total = sum(e.mult for e in entries)
            lines.append(
                f"layer {layer}: {len(entries)} factor kinds,"
                f" total multiplicity {total}"
            )
    if args.format == "json":
        payload = {
            "system": name,
            "prime": p,
            "weight": list(mu),
            "dimension": dim,
            "distinct_weights": len(ch),
            "bundled_series": table.label if table is not None else None,
        }
        sys.stdout.write(canonical_dumps(payload))
        return 0
    for line in lines:
        print(line)
    return 0


def cmd_alcoves(args: argparse.Namespace) -> int:
    name, p, lam = args.type, args.prime, args.weight
    regular = is_regular(name, p, lam)
    levels = alcove_of(name, lam, p).levels if regular else None
    label = None
    if (name, p) == ("G2", 7) and regular:
        try:
            label = g2_alcove_label(lam, p)
        except UnlabeledAlcove:
            label = None
    if args.format == "json":
        payload = {
            "system": name,
            "prime": p,
            "weight": list(lam),
            "levels": None if levels is None else list(levels),
            "regular": regular,
            "box": list(box_of(name, p, lam)),
            "label": label,
        }
        sys.stdout.write(canonical_dumps(payload))
        return 0
    if levels is None:
        print(f"weight {_w(lam)}: on a reflection wall, box {_w(box_of(name, p, lam))}")
    else:
        print(f"weight {_w(lam)}: levels {_w(levels)}, box {_w(box_of(name, p, lam))}")
    print(f"regular: {'yes' if regular else 'no'}")
    if label is not None:
        print(f"alcove label: {label}")
    return 0


# -- argument parsing ---------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser, weight: bool) -> None:
    sub.add_argument("--type", "-t", required=True, choices=sorted(SYSTEMS))
    sub.add_argument("--prime", "-p", required=True, type=int)
    if weight:
        sub.add_argument("--weight", "-w", required=True, type=_parse_weight)
    sub.add_argument("--format", choices=["text", "json"], default="text")
    sub.add_argument("--data-dir", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmcv",
        description="exact verification toolkit for tilting-module lifting"
        " criteria over small root systems",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    validate = subs.add_parser("validate", help="run every loader and oracle")
    validate.add_argument("--data-dir", default=None)
    validate.set_defaults(func=cmd_validate)

    report = subs.add_parser("report", help="emit the evidence chain")
    _add_common(report, weight=False)
    report.set_defaults(func=cmd_report)

    chars = subs.add_parser("chars", help="character data for one weight")
    _add_common(chars, weight=True)
    chars.set_defaults(func=cmd_chars)

    scan = subs.add_parser("scan", help="twist-inequality scan")
    _add_common(scan, weight=False)
    scan.set_defaults(func=cmd_scan)

    babyverma = subs.add_parser("babyverma", help="dual baby verma data")
    _add_common(babyverma, weight=True)
    babyverma.set_defaults(func=cmd_babyverma)

    alcoves = subs.add_parser("alcoves", help="alcove data for one weight")
    _add_common(alcoves, weight=True)
    alcoves.set_defaults(func=cmd_alcoves)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TmcvError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
