"""Command-line interface: subcommands, formats, exit codes, diagnostics."""

import json

import pytest

from tmcv.cli import VALIDATION_CHECKS, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_passes_on_bundled_data(capsys):
    code, out, _ = run(capsys, "validate")
    assert code == 0
    assert "all checks passed" in out
    assert "FAIL" not in out
    for name, _ in VALIDATION_CHECKS:
        assert f"ok {name}:" in out


def test_validation_check_surface():
    names = [name for name, _ in VALIDATION_CHECKS]
    assert set(names) >= {
        "decomposition-tables",
        "radical-structure",
        "layer-parity",
        "master-oracle",
        "isogeny-identities",
        "alcove-labels",
        "graded-recovery",
        "sf-consistency",
        "ext-gap-data",
        "ext-self-table",
        "errata",
        "manifest",
    }
    assert len(names) == len(set(names))
    # content oracles must run before the byte-level manifest check so a
    # corrupted value is reported at the weight where it breaks an identity
    assert names[-1] == "manifest"


def test_report_text_and_json(capsys):
    code, out, _ = run(capsys, "report", "-t", "B2", "-p", "5")
    assert code == 0
    assert out.startswith("verification report: B2, p = 5\n")
    assert "route: scan-and-cancellation" in out
    code, out, _ = run(capsys, "report", "-t", "B2", "-p", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["route"] == "scan-and-cancellation"


def test_chars_restricted_weight(capsys):
    code, out, _ = run(capsys, "chars", "-t", "G2", "-p", "7", "-w", "1,1")
    assert code == 0
    assert "weyl character at (1, 1): dimension 64" in out
    assert "factor (1, 1): multiplicity 1" in out
    assert "factor (2, 0): multiplicity 1" in out
    assert "residual of the dual weight: dimension 2985946" in out


def test_chars_rank_three(capsys):
    code, out, _ = run(capsys, "chars", "-t", "A3", "-p", "3", "-w", "2,3,3")
    assert code == 0
    assert "dimension 2464" in out


def test_chars_zero_weight(capsys):
    code, out, _ = run(capsys, "chars", "-t", "A2", "-p", "2", "-w", "0,0")
    assert code == 0
    assert "dimension 1" in out


def test_scan_counts_admissible_pairs(capsys):
    code, out, _ = run(capsys, "scan", "-t", "B2", "-p", "5")
    assert code == 0
    assert "12 admissible pairs" in out
    code, out, _ = run(capsys, "scan", "-t", "A2", "-p", "3")
    assert code == 0
    assert "0 admissible pairs" in out


def test_scan_json_rows(capsys):
    code, out, _ = run(capsys, "scan", "-t", "A3", "-p", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 9
    assert {tuple(r["target"]) for r in rows} >= {(2, 2, 2), (2, 3, 3)}


def test_alcoves_regular_weight(capsys):
    code, out, _ = run(capsys, "alcoves", "-t", "G2", "-p", "7", "-w", "3,3")
    assert code == 0
    assert "regular: yes" in out
    assert "alcove label: 8" in out


def test_alcoves_wall_weight(capsys):
    code, out, _ = run(capsys, "alcoves", "-t", "G2", "-p", "7", "-w", "2,3")
    assert code == 0
    assert "regular: no" in out
    assert "on a reflection wall" in out
    # a box-wall weight has no box position at all: usage error
    code, _, err = run(capsys, "alcoves", "-t", "G2", "-p", "7", "-w", "6,0")
    assert code == 2
    assert "box wall" in err


def test_babyverma_summary(capsys):
    code, out, _ = run(capsys, "babyverma", "-t", "G2", "-p", "7", "-w", "5,5")
    assert code == 0
    assert "dimension 117649" in out
    assert "bundled series for alcove 16" in out
    assert "layer 0: 1 factor kinds, total multiplicity 1" in out


def test_composite_prime_is_a_usage_error(capsys):
    code, _, err = run(capsys, "report", "-t", "G2", "-p", "6")
    assert code == 2
    assert err.strip()


def test_non_dominant_weight_is_a_usage_error(capsys):
    code, _, err = run(capsys, "chars", "-t", "G2", "-p", "7", "--weight=-1,2")
    assert code == 2
    assert err.strip()


def test_malformed_weight_exits_via_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["chars", "-t", "G2", "-p", "7", "-w", "one,two"])
    assert exc.value.code == 2
