"""Dataset plumbing: loaders, schemas, manifest, canonical form."""

import json
import shutil

import pytest

from tmcv.data import (
    DECOMPOSITION_KEYS,
    bundle,
    canonical_dumps,
    data_dir,
    load_json,
    validate_schema,
)
from tmcv.errors import MissingData, SchemaError


def test_bundled_data_dir_resolution(tmp_path, monkeypatch):
    default = data_dir()
    assert (default / "manifest.json").exists()
    assert data_dir(tmp_path) == tmp_path
    monkeypatch.setenv("TMCV_DATA_DIR", str(tmp_path))
    assert data_dir() == tmp_path
    monkeypatch.delenv("TMCV_DATA_DIR")
    assert data_dir() == default


def test_every_declared_decomposition_loads():
    b = bundle()
    for name, p in DECOMPOSITION_KEYS:
        table = b.decomposition(name, p)
        assert table.name == name and table.p == p
        assert len(table.rows) >= 9


def test_manifest_covers_every_file_and_matches():
    checks = bundle().manifest_check()
    assert checks and all(checks.values())


def test_missing_file_raises_missing_data(tmp_path):
    with pytest.raises(MissingData):
        load_json("ext_gap.json", tmp_path)


def test_schema_rejects_malformed_decomposition():
    with pytest.raises(SchemaError):
        validate_schema("decomposition", {"prime": 3, "rows": [{"weight": [0, 0]}]})
    with pytest.raises(SchemaError):
        validate_schema("ext_gap", [{"system": "B2"}])


def test_canonical_form_is_sorted_and_stable():
    payload = {"b": [1, 2], "a": {"y": 1, "x": 2}}
    text = canonical_dumps(payload)
    assert text == canonical_dumps(json.loads(text))
    assert text.index('"a"') < text.index('"b"')


def test_bundled_files_are_canonical():
    root = data_dir()
    for path in sorted(root.rglob("*.json")):
        if path.parent.name == "schema":
            continue
        raw = path.read_text()
        assert raw == canonical_dumps(json.loads(raw)), path.name


def test_errata_identifiers_are_stable():
    ids = sorted(e["id"] for e in bundle().errata())
    assert ids == [
        "b2-p5-scan-extra-pair",
        "b2-p5-support-floor",
        "g2-p7-alcove-6-pair-weight",
    ]


def test_tampered_copy_fails_the_manifest(tmp_path):
    src = data_dir()
    dst = tmp_path / "data"
    shutil.copytree(src, dst)
    target = dst / "ext_gap.json"
    obj = json.loads(target.read_text())
    obj[0]["gap"] += 1
    target.write_text(canonical_dumps(obj))
    checks = bundle(dst).manifest_check()
    assert checks["ext_gap.json"] is False
