"""Persistent search results: schema, JSON-lines files, CSV round-trip.

A results file is one header line followed by one JSON object per record.
``canonical_record_bytes`` strips volatile fields (timestamps), so records
from runs with different shard counts compare byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field, asdict

SCHEMA_VERSION = 1
WITNESS_CAP = 200
_VOLATILE = ("timestamp",)


def _now() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime())


def engine_id() -> str:
    from . import __version__

    return f"posnum {__version__}"


@dataclass
class SearchRecord:
    """One answered search query with verifiable witnesses."""

    kind: str
    params: dict
    value: object            # int, list of ints, or None when unknown
    status: str               # "exact" | "unknown" | "exists" | "not-exists" | "claimed"
    witness_count: int | None = None
    witnesses: list = field(default_factory=list)
    witness_cap: int = WITNESS_CAP
    search_space: str = ""
    notes: str = ""
    anomalies: list = field(default_factory=list)
    timestamp: str = field(default_factory=_now)
    engine: str = field(default_factory=engine_id)

    record_type = "search"


@dataclass
class BoundsRecord:
    """Lower/upper bounds for an extremal size query; exact when they meet."""

    kind: str
    params: dict
    lower: int | None
    upper: int | None
    exact: bool
    value: int | None = None
    lower_source: str = ""
    upper_source: str = ""
    status: str = "ok"        # "ok" | "unrealizable" | "unknown"
    witness_count: int | None = None
    witnesses: list = field(default_factory=list)
    witness_cap: int = WITNESS_CAP
    search_space: str = ""
    notes: str = ""
    timestamp: str = field(default_factory=_now)
    engine: str = field(default_factory=engine_id)

    record_type = "bounds"


Record = SearchRecord | BoundsRecord


def record_to_dict(rec: Record) -> dict:
    d = asdict(rec)
    d["record_type"] = rec.record_type
    return d


def record_from_dict(d: dict) -> Record:
    d = dict(d)
    rtype = d.pop("record_type")
    cls = SearchRecord if rtype == "search" else BoundsRecord
    return cls(**d)


def canonical_record_bytes(rec: Record) -> bytes:
    d = record_to_dict(rec)
    for key in _VOLATILE:
        d.pop(key, None)
    return json.dumps(d, sort_keys=True, separators=(",", ":")).encode("ascii")


def save_records(path, records: list[Record]):
    with open(path, "w", encoding="ascii") as fh:
        header = {"schema": SCHEMA_VERSION, "engine": engine_id(), "created": _now()}
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        for rec in records:
            fh.write(json.dumps(record_to_dict(rec), sort_keys=True) + "\n")


def append_records(path, records: list[Record]):
    import os

    if not os.path.exists(path) or os.path.getsize(path) == 0:
        save_records(path, records)
        return
    with open(path, "a", encoding="ascii") as fh:
        for rec in records:
            fh.write(json.dumps(record_to_dict(rec), sort_keys=True) + "\n")


def load_records(path) -> list[Record]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        first = fh.readline()
        if first.strip():
            header = json.loads(first)
            if header.get("schema", SCHEMA_VERSION) > SCHEMA_VERSION:
                raise ValueError(f"records schema {header['schema']} is newer than supported")
        for line in fh:
            if line.strip():
                out.append(record_from_dict(json.loads(line)))
    return out


# -- CSV round-trip ---------------------------------------------------------------

_CSV_FIELDS = [
    "record_type", "kind", "params", "value", "status", "lower", "upper", "exact",
    "lower_source", "upper_source", "witness_count", "witness_cap", "witnesses",
    "search_space", "notes", "anomalies", "timestamp", "engine",
]


def records_to_csv(records: list[Record]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_CSV_FIELDS)
    writer.writeheader()
    for rec in records:
        d = record_to_dict(rec)
        row = {}
        for key in _CSV_FIELDS:
            if key not in d:
                row[key] = ""
            elif key in ("params", "value", "witnesses", "anomalies"):
                row[key] = json.dumps(d[key], sort_keys=True)
            elif key == "exact":
                row[key] = "1" if d[key] else "0"
            else:
                row[key] = "" if d[key] is None else str(d[key])
        writer.writerow(row)
    return buf.getvalue()


def records_from_csv(text: str) -> list[Record]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        rtype = row["record_type"]
        common = dict(
            kind=row["kind"],
            params=json.loads(row["params"]),
            witness_count=None if row["witness_count"] == "" else int(row["witness_count"]),
            witnesses=json.loads(row["witnesses"]) if row["witnesses"] else [],
            witness_cap=int(row["witness_cap"]),
            search_space=row["search_space"],
            notes=row["notes"],
            timestamp=row["timestamp"],
            engine=row["engine"],
        )
        if rtype == "search":
            out.append(SearchRecord(
                value=json.loads(row["value"]) if row["value"] else None,
                status=row["status"],
                anomalies=json.loads(row["anomalies"]) if row["anomalies"] else [],
                **common,
            ))
        else:
            out.append(BoundsRecord(
                lower=None if row["lower"] == "" else int(row["lower"]),
                upper=None if row["upper"] == "" else int(row["upper"]),
                exact=row["exact"] == "1",
                value=json.loads(row["value"]) if row["value"] else None,
                lower_source=row["lower_source"],
                upper_source=row["upper_source"],
                status=row["status"],
                **common,
            ))
    return out
