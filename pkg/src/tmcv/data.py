"""Access to the bundled datasets: JSON schema validation, manifest hash
checking, and typed loaders.

The data directory resolves in this order: explicit argument, then the
TMCV_DATA_DIR environment variable, then the copy shipped inside the
package.  Schemas always come from the shipped copy since they define the
formats themselves.  All files are canonical JSON: sorted keys, compact
separators, one trailing newline.
"""

from __future__ import annotations

import functools
import hashlib
import json
import os
from pathlib import Path
from typing import Any

import jsonschema

from .babyverma import RadicalTable, load_radical_tables
from .characters import SimpleCharacters
from .errors import MissingData, SchemaError
from .rootsystems import Weight

_BUNDLED = Path(__file__).parent / "data"
ENV_DATA_DIR = "TMCV_DATA_DIR"

DECOMPOSITION_KEYS = [
    ("A3", 3), ("A3", 5), ("B2", 3), ("B2", 5), ("G2", 3), ("G2", 5), ("G2", 7),
]


def data_dir(override: str | Path | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(ENV_DATA_DIR)
    if env:
        return Path(env)
    return _BUNDLED


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_json(rel: str, root: str | Path | None = None) -> Any:
    path = data_dir(root) / rel
    if not path.is_file():
        raise MissingData(f"no data file {rel} under {data_dir(root)}")
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


@functools.lru_cache(maxsize=None)
def _schema(stem: str) -> dict:
    path = _BUNDLED / "schema" / f"{stem}.json"
    if not path.is_file():
        raise MissingData(f"no schema {stem}")
    return json.loads(path.read_text(encoding="utf-8"))


def validate_schema(stem: str, obj: Any) -> None:
    try:
        jsonschema.validate(obj, _schema(stem))
    except jsonschema.ValidationError as err:
        raise SchemaError(f"{stem}: {err.message}") from None


def file_digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


class DatasetBundle:
    """One resolved data directory with validated, cached loaders."""

    def __init__(self, root: str | Path | None = None):
        self.root = data_dir(root)
        self._cache: dict = {}

    def _load(self, stem: str, rel: str) -> Any:
        obj = load_json(rel, self.root)
        validate_schema(stem, obj)
        return obj

    def decomposition(self, name: str, p: int) -> SimpleCharacters:
        key = ("decomposition", name, p)
        if key not in self._cache:
            obj = self._load("decomposition", f"decomposition/{name.lower()}_p{p}.json")
            if obj["system"] != name or obj["prime"] != p:
                raise SchemaError(
                    f"decomposition file for {name} p={p} labels itself "
                    f"{obj['system']} p={obj['prime']}"
                )
            rows = {
                tuple(row["weight"]): {
                    tuple(f["weight"]): f["mult"] for f in row["factors"]
                }
                for row in obj["rows"]
            }
            self._cache[key] = SimpleCharacters(name, p, rows)
        return self._cache[key]

    def radical_tables(self) -> dict[int, RadicalTable]:
        if "radical_tables" not in self._cache:
            sub = self.root / "radical_tables"
            objs = []
            for path in sorted(sub.glob("*.json")):
                with open(path, encoding="utf-8") as fh:
                    obj = json.load(fh)
                validate_schema("radical_table", obj)
                objs.append(obj)
            if not objs:
                raise MissingData(f"no radical tables under {sub}")
            self._cache["radical_tables"] = load_radical_tables(objs)
        return dict(self._cache["radical_tables"])

    def alcove_labels(self) -> dict[int, Weight]:
        if "alcove_labels" not in self._cache:
            obj = self._load("alcove_labels", "alcove_labels_g2_p7.json")
            self._cache["alcove_labels"] = {
                int(k): tuple(v) for k, v in obj["labels"].items()
            }
        return dict(self._cache["alcove_labels"])

    def ext_gap(self) -> list[dict]:
        if "ext_gap" not in self._cache:
            self._cache["ext_gap"] = self._load("ext_gap", "ext_gap.json")
        return list(self._cache["ext_gap"])

    def ext_self(self, name: str = "A3", p: int = 3) -> dict[Weight, Weight | None]:
        key = ("ext_self", name, p)
        if key not in self._cache:
            obj = self._load("ext_self", f"ext_self_{name.lower()}_p{p}.json")
            self._cache[key] = {
                tuple(row["weight"]): (None if row["value"] is None else tuple(row["value"]))
                for row in obj["rows"]
            }
        return dict(self._cache[key])

    def errata(self) -> list[dict]:
        if "errata" not in self._cache:
            self._cache["errata"] = self._load("errata", "errata.json")
        return list(self._cache["errata"])

    def manifest(self) -> dict[str, str]:
        obj = self._load("manifest", "manifest.json")
        return dict(obj["files"])

    def manifest_check(self) -> dict[str, bool]:
        """Recompute every listed digest; also flag files on disk that the
        manifest does not cover."""
        listed = self.manifest()
        out: dict[str, bool] = {}
        for rel, digest in listed.items():
            path = self.root / rel
            out[rel] = path.is_file() and file_digest(path) == digest
        for path in sorted(self.root.rglob("*.json")):
            rel = path.relative_to(self.root).as_posix()
            if rel != "manifest.json" and rel not in listed:
                out[rel] = False
        return out


@functools.lru_cache(maxsize=None)
def _bundle_for(key: str) -> DatasetBundle:
    return DatasetBundle(key)


def bundle(root: str | Path | None = None) -> DatasetBundle:
    """Shared bundle per resolved directory (cached)."""
    return _bundle_for(str(data_dir(root)))


def g2_alcove_labels() -> dict[int, Weight]:
    return bundle().alcove_labels()
