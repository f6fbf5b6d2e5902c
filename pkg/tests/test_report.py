"""Per-configuration reports: routing, statuses, determinism, and content."""

import json

import pytest

from tmcv.errors import UnsupportedCase, WrongSystem
from tmcv.report import Status, build_report

ROUTES = {
    ("A1", 2): "generic-bound",
    ("A1", 3): "generic-bound",
    ("A1", 11): "generic-bound",
    ("A2", 2): "scan-emptiness",
    ("A2", 3): "scan-emptiness",
    ("A2", 5): "generic-bound",
    ("A3", 2): "scan-emptiness",
    ("A3", 3): "scan-and-factors",
    ("A3", 5): "linkage-bound",
    ("A3", 7): "generic-bound",
    ("B2", 2): "scan-emptiness",
    ("B2", 3): "extension-gap",
    ("B2", 5): "scan-and-cancellation",
    ("B2", 7): "generic-bound",
    ("G2", 2): "excluded",
    ("G2", 3): "isogeny-descent",
    ("G2", 5): "extension-gap",
    ("G2", 7): "radical-layers",
    ("G2", 11): "generic-bound",
}


def test_every_configuration_routes_as_frozen():
    for (name, p), route in ROUTES.items():
        rep = build_report(name, p)
        assert rep.route == route, (name, p)
        assert rep.exit_status == 0


def test_unsupported_configurations_are_rejected():
    with pytest.raises(UnsupportedCase):
        build_report("G2", 4)
    with pytest.raises(UnsupportedCase):
        build_report("B2", 1)
    with pytest.raises(WrongSystem):
        build_report("F4", 5)


def test_statuses_follow_the_evidence():
    rep = build_report("G2", 2)
    assert [s.status for s in rep.sections] == [Status.OUT_OF_SCOPE]
    rep = build_report("G2", 7)
    by_id = {s.identifier: s for s in rep.sections}
    assert by_id["filtration-verdicts"].status is Status.DATA_VALIDATED
    assert by_id["layer-analysis"].status is Status.VERIFIED
    # a fully verified section never leans on an undecided outcome
    for other in ROUTES:
        for s in build_report(*other).sections:
            if s.status is Status.VERIFIED:
                assert not any("inconclusive" in line for line in s.lines)


def test_rendering_is_byte_deterministic():
    for name, p in [("A3", 3), ("B2", 5), ("G2", 7)]:
        a, b = build_report(name, p), build_report(name, p)
        assert a.render_text() == b.render_text()
        assert a.render_json() == b.render_json()


def test_json_payload_round_trips():
    rep = build_report("B2", 5)
    payload = json.loads(rep.render_json())
    assert payload["system"] == "B2" and payload["prime"] == 5
    assert payload["route"] == "scan-and-cancellation"
    assert payload["exit_status"] == 0
    ids = [s["identifier"] for s in payload["sections"]]
    assert ids == ["data-attestation", "restricted-scan", "cancellation-exclusion"]
    assert all(s["status"] in {"Verified", "DataValidated"} for s in payload["sections"])


def test_text_layout():
    text = build_report("A2", 2).render_text()
    lines = text.splitlines()
    assert lines[0] == "verification report: A2, p = 2"
    assert lines[1] == "route: scan-emptiness"
    assert lines[-1] == "exit status: 0"
    assert text.endswith("\n")
    assert any(line.startswith("[Verified] ") for line in lines)
    assert all(line.startswith("  - ") for line in lines if line.startswith(" "))


def test_rank_two_scan_report_content():
    text = build_report("B2", 5).render_text()
    assert (
        "offset (1, 2): support weight (4, -12) at root 1: "
        "twist (1, -2) reflects to (0, 0), target (5, 6)" in text
    )
    assert (
        "offset (2, 2): support weight (8, -12) at root 1: "
        "twist (2, -2) reflects to (1, 0), target (6, 6)" in text
    )
    assert "2 admissible pairs on the linked offsets; 12 over the full restricted range" in text
    assert "bundled erratum b2-p5-scan-extra-pair" in text
    assert "smallest dominant weight linked to (0, 0) other than itself: (2, 0)" in text
    assert "smallest dominant weight linked to (1, 0) other than itself: (1, 4)" in text


def test_rank_three_scan_report_content():
    text = build_report("A3", 3).render_text()
    scan_rows = [line for line in text.splitlines() if "support weight" in line]
    assert len(scan_rows) == 9
    assert "9 admissible pairs over the full restricted range" in text
    assert "weyl module at (2, 3, 3): 21 composition factors" in text
    assert "factor (0, 0, 3): multiplicity 3" in text
    assert "12 further factors occur exactly once" in text
    assert "4 carry a nonzero frobenius-kernel self-extension" in text


def test_layer_report_content():
    text = build_report("G2", 7).render_text()
    assert "distance 7, graded multiplicity 2q^2 + q^3" in text
    assert "distance 10, graded multiplicity q^3 + 3q^4" in text
    assert "distance 0, graded multiplicity 1" in text
    assert "alcove 16: weight (5, 5), reflected target (-7, -7)" in text
    # dual pairing of the extreme alcoves
    assert "(5, 5)" in text and "(7, 7)" in text
    assert "(0, 0)" in text and "(12, 12)" in text


def test_report_identifiers_by_route():
    got = {s.identifier for s in build_report("G2", 7).sections}
    assert got == {
        "data-attestation",
        "radical-oracle",
        "graded-multiplicity-recovery",
        "dual-weight-pairs",
        "twist-classification",
        "layer-analysis",
        "filtration-verdicts",
        "scope-notes",
    }
    assert [s.identifier for s in build_report("G2", 3).sections] == [
        "data-attestation",
        "exceptional-isogeny",
        "extension-gap-bound",
    ]
    assert [s.identifier for s in build_report("A3", 5).sections] == [
        "linkage-minimum",
        "pairing-bound-scan",
    ]
