"""Data bundle loading and saving.

A bundle is a JSON document {schema_version, kind, provenance, payload}.
Three kinds exist: aircraft_profile, factor_table, icing_chart; each
payload is parsed and validated by its owning module at load time, so a
loaded bundle always carries a usable typed object. Serialisation is
canonical (sorted keys, two-space indent, trailing newline) which makes
a load/save round trip byte-identical.

The bundled defaults live in the package data directory; the
FLIGHTCALC_DATA_DIR environment variable points the engine at a
different directory instead.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .carbicing import IcingChart, icing_chart_from_payload
from .errors import CalcError
from .performance import FactorTable, factor_table_from_payload
from .weightbalance import AircraftProfile, profile_from_payload

SCHEMA_VERSION = 1

KINDS = ("aircraft_profile", "factor_table", "icing_chart")

DATA_DIR_ENV = "FLIGHTCALC_DATA_DIR"

_PARSERS = {
    "aircraft_profile": profile_from_payload,
    "factor_table": factor_table_from_payload,
    "icing_chart": icing_chart_from_payload,
}


@dataclass(frozen=True)
class DataBundle:
    schema_version: int
    kind: str
    provenance: str
    payload: dict
    parsed: object  # AircraftProfile | FactorTable | IcingChart

    def document(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "provenance": self.provenance,
            "payload": self.payload,
        }


def parse_bundle(doc: dict, source: str = "<memory>") -> DataBundle:
    if not isinstance(doc, dict):
        raise CalcError(f"{source}: bundle must be a JSON object")
    for field in ("schema_version", "kind", "provenance", "payload"):
        if field not in doc:
            raise CalcError(f"{source}: bundle missing field {field!r}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise CalcError(
            f"{source}: unsupported schema_version {doc['schema_version']!r}, "
            f"this engine reads version {SCHEMA_VERSION}"
        )
    kind = doc["kind"]
    if kind not in KINDS:
        raise CalcError(f"{source}: unknown bundle kind {kind!r}; expected one of {KINDS}")
    provenance = doc["provenance"]
    if not isinstance(provenance, str) or not provenance.strip():
        raise CalcError(f"{source}: provenance must be a non-empty string")
    payload = doc["payload"]
    if not isinstance(payload, dict):
        raise CalcError(f"{source}: payload must be a JSON object")
    parsed = _PARSERS[kind](payload)
    return DataBundle(SCHEMA_VERSION, kind, provenance, payload, parsed)


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def load_bundle(path: str | Path) -> DataBundle:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise CalcError(f"cannot read bundle {p}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CalcError(f"{p}: not valid JSON: {exc}") from None
    return parse_bundle(doc, str(p))


def save_bundle(bundle: DataBundle, path: str | Path, overwrite: bool = False) -> Path:
    p = Path(path)
    if p.exists() and not overwrite:
        raise CalcError(f"refusing to overwrite existing file {p} (pass overwrite)")
    p.write_text(canonical_json(bundle.document()), encoding="utf-8")
    return p


def data_dir() -> Path:
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        p = Path(override)
        if not p.is_dir():
            raise CalcError(f"{DATA_DIR_ENV} points at {p}, which is not a directory")
        return p
    return Path(str(resources.files("flightcalc") / "data"))


@dataclass(frozen=True)
class BundleInfo:
    ident: str
    kind: str
    name: str
    path: str


def list_bundles() -> list[BundleInfo]:
    """Every bundle in the active data directory, sorted by ident."""
    out = []
    for p in sorted(data_dir().glob("*.json")):
        b = load_bundle(p)
        out.append(BundleInfo(p.stem, b.kind, str(b.payload.get("name", p.stem)), str(p)))
    return out


def load_named(ident: str) -> DataBundle:
    p = data_dir() / f"{ident}.json"
    if not p.is_file():
        known = ", ".join(i.ident for i in list_bundles())
        raise CalcError(f"no bundle named {ident!r}; available: {known}")
    return load_bundle(p)


def load_profile(ident: str) -> AircraftProfile:
    b = load_named(ident)
    if b.kind != "aircraft_profile":
        raise CalcError(f"bundle {ident!r} is a {b.kind}, not an aircraft profile")
    return b.parsed  # type: ignore[return-value]


def default_factor_table() -> FactorTable:
    tables = [i for i in list_bundles() if i.kind == "factor_table"]
    if not tables:
        raise CalcError("no factor table bundle in the data directory")
    b = load_bundle(tables[0].path)
    return b.parsed  # type: ignore[return-value]


def default_icing_chart() -> IcingChart:
    charts = [i for i in list_bundles() if i.kind == "icing_chart"]
    if not charts:
        raise CalcError("no icing chart bundle in the data directory")
    b = load_bundle(charts[0].path)
    return b.parsed  # type: ignore[return-value]
