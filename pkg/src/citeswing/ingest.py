"""Readers and writers for citation snapshot files.

Two formats are understood.

Long-format CSV, one row per (item, snapshot)::

    item_id,snapshot,citations[,t]
    a,2019,3
    a,2020,5

JSON::

    {"snapshots": [{"label": "2019", "t": 1,
                    "records": [{"item_id": "a", "citations": 3}]}]}

Without explicit ``t`` values snapshots get t = 1, 2, 3, ... in order of
first appearance. Explicit values must be given for every snapshot and must
strictly increase in file order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import re
from dataclasses import dataclass, field
from typing import IO, Any

from .diffusion import Snapshot
from .errors import DuplicateCell, EmptyInput, ParseError, SchemaError
from .indicators import CitationRecord

__all__ = [
    "CSV_HEADER",
    "ITEM_ID_PATTERN",
    "Dataset",
    "parse_csv",
    "parse_json",
    "load",
    "dataset_to_dict",
    "dataset_to_json",
    "dataset_to_csv",
]

CSV_HEADER = ("item_id", "snapshot", "citations")
ITEM_ID_PATTERN = re.compile(r"[A-Za-z0-9_.:-]+")
_INT = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class Dataset:
    snapshots: tuple[Snapshot, ...]
    source_path: str = field(default="<memory>", compare=False)
    warnings: tuple[str, ...] = ()


def _read_text(source: str | os.PathLike | IO[str]) -> tuple[str, str]:
    if hasattr(source, "read"):
        return source.read(), getattr(source, "name", "<stream>")
    with open(source, encoding="utf-8-sig", newline="") as fh:
        return fh.read(), os.fspath(source)


def _check_item_id(item_id: str, line: int | None = None) -> str:
    if not isinstance(item_id, str) or not ITEM_ID_PATTERN.fullmatch(item_id):
        raise ParseError(f"invalid item_id {item_id!r}", line)
    return item_id


def _parse_t(raw: Any, where: str, line: int | None = None) -> float:
    if isinstance(raw, bool):
        raise SchemaError(f"{where}: t must be a number, got {raw!r}", line)
    try:
        t = float(raw)
    except (TypeError, ValueError):
        raise ParseError(f"{where}: t must be a number, got {raw!r}", line) from None
    if not math.isfinite(t) or t < 1:
        raise SchemaError(f"{where}: t must be a finite number >= 1, got {raw!r}", line)
    return t


def _decrease_warnings(snapshots: list[Snapshot]) -> list[str]:
    last: dict[str, tuple[int, str]] = {}
    out = []
    for snap in snapshots:
        for rec in snap.records:
            prev = last.get(rec.item_id)
            if prev is not None and rec.citations < prev[0]:
                out.append(
                    f"item {rec.item_id!r}: citations decreased from {prev[0]} "
                    f"({prev[1]}) to {rec.citations} ({snap.label})"
                )
            last[rec.item_id] = (rec.citations, snap.label)
    return out


def _assemble(groups: dict[str, list[CitationRecord]], times: dict[str, float | None], source: str) -> Dataset:
    labels = list(groups)
    given = [times[label] for label in labels]
    if all(t is None for t in given):
        ts = [float(i) for i in range(1, len(labels) + 1)]
    elif any(t is None for t in given):
        raise SchemaError("t must be given for every snapshot or for none")
    else:
        ts = given
        for (la, ta), (lb, tb) in zip(zip(labels, ts), zip(labels[1:], ts[1:])):
            if not tb > ta:
                raise SchemaError(f"non-monotonic t: {la!r} t={ta} then {lb!r} t={tb}")
    snapshots = [Snapshot(label, t, groups[label]) for label, t in zip(labels, ts)]
    return Dataset(tuple(snapshots), source, tuple(_decrease_warnings(snapshots)))


def parse_csv(source: str | os.PathLike | IO[str]) -> Dataset:
    text, name = _read_text(source)
    rows = csv.reader(io.StringIO(text), strict=True)
    try:
        header = next(rows, None)
    except csv.Error as exc:
        raise ParseError(str(exc), 1) from None
    if header is None or not any(cell.strip() for cell in header):
        raise EmptyInput(f"{name}: no header")
    header = [cell.strip() for cell in header]
    if tuple(header) == CSV_HEADER:
        has_t = False
    elif tuple(header) == CSV_HEADER + ("t",):
        has_t = True
    else:
        raise ParseError(f"expected header {','.join(CSV_HEADER)}[,t], got {','.join(header)}", 1)

    groups: dict[str, list[CitationRecord]] = {}
    times: dict[str, float | None] = {}
    seen: set[tuple[str, str]] = set()
    width = 4 if has_t else 3
    try:
        for row in rows:
            line = rows.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != width:
                raise ParseError(f"expected {width} fields, got {len(row)}", line)
            item_id, label, raw_cites = (cell.strip() for cell in row[:3])
            _check_item_id(item_id, line)
            if not label:
                raise ParseError("empty snapshot label", line)
            if not _INT.fullmatch(raw_cites):
                raise ParseError(f"citations must be an integer, got {raw_cites!r}", line)
            cites = int(raw_cites)
            if cites < 0:
                raise ParseError(f"negative citations ({cites}) for {item_id!r}", line)
            if (item_id, label) in seen:
                raise DuplicateCell(f"duplicate row for item {item_id!r} in snapshot {label!r}", line)
            seen.add((item_id, label))
            t = _parse_t(row[3].strip(), f"snapshot {label!r}", line) if has_t else None
            if label in times and times[label] != t:
                raise SchemaError(f"snapshot {label!r} has conflicting t values", line)
            times[label] = t
            groups.setdefault(label, []).append(CitationRecord(item_id, cites))
    except csv.Error as exc:
        raise ParseError(str(exc), rows.line_num) from None
    if not groups:
        raise EmptyInput(f"{name}: no data rows")
    return _assemble(groups, times, name)


def parse_json(source: str | os.PathLike | IO[str]) -> Dataset:
    text, name = _read_text(source)
    if not text.strip():
        raise EmptyInput(f"{name}: empty document")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("snapshots"), list):
        raise SchemaError("document must be an object with a 'snapshots' array")
    if not doc["snapshots"]:
        raise EmptyInput(f"{name}: no snapshots")

    groups: dict[str, list[CitationRecord]] = {}
    times: dict[str, float | None] = {}
    for i, snap in enumerate(doc["snapshots"]):
        where = f"snapshots[{i}]"
        if not isinstance(snap, dict):
            raise SchemaError(f"{where} must be an object")
        for key in ("label", "records"):
            if key not in snap:
                raise SchemaError(f"{where} is missing {key!r}")
        label = snap["label"]
        if not isinstance(label, str) or not label:
            raise SchemaError(f"{where}.label must be a nonempty string")
        if label in groups:
            raise DuplicateCell(f"snapshot label {label!r} appears twice")
        if not isinstance(snap["records"], list):
            raise SchemaError(f"{where}.records must be an array")
        times[label] = _parse_t(snap["t"], where) if snap.get("t") is not None else None
        records = []
        ids = set()
        for j, rec in enumerate(snap["records"]):
            rwhere = f"{where}.records[{j}]"
            if not isinstance(rec, dict) or "item_id" not in rec or "citations" not in rec:
                raise SchemaError(f"{rwhere} needs 'item_id' and 'citations'")
            item_id = _check_item_id(rec["item_id"])
            cites = rec["citations"]
            if isinstance(cites, bool) or not isinstance(cites, int):
                raise ParseError(f"{rwhere}: citations must be an integer, got {cites!r}")
            if cites < 0:
                raise ParseError(f"{rwhere}: negative citations ({cites}) for {item_id!r}")
            if item_id in ids:
                raise DuplicateCell(f"duplicate item {item_id!r} in snapshot {label!r}")
            ids.add(item_id)
            records.append(CitationRecord(item_id, cites))
        groups[label] = records
    return _assemble(groups, times, name)


def load(source: str | os.PathLike | IO[str], fmt: str | None = None) -> Dataset:
    """Dispatch on ``fmt`` ("csv"/"json") or, failing that, on content."""
    if fmt is None:
        text, name = _read_text(source)
        fmt = "json" if text.lstrip().startswith("{") else "csv"
        source = io.StringIO(text)
        source.name = name
    if fmt == "json":
        return parse_json(source)
    if fmt == "csv":
        return parse_csv(source)
    raise ValueError(f"unknown format {fmt!r}")


def dataset_to_dict(dataset: Dataset) -> dict:
    return {
        "snapshots": [
            {
                "label": snap.label,
                "t": snap.t,
                "records": [{"item_id": r.item_id, "citations": r.citations} for r in snap.records],
            }
            for snap in dataset.snapshots
        ]
    }


def dataset_to_json(dataset: Dataset, indent: int | None = 2) -> str:
    return json.dumps(dataset_to_dict(dataset), indent=indent)


def dataset_to_csv(dataset: Dataset, with_t: bool = False) -> str:
    """Long-format CSV. Snapshots without records cannot be represented and are skipped."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER + (("t",) if with_t else ()))
    for snap in dataset.snapshots:
        for rec in snap.records:
            row = [rec.item_id, snap.label, rec.citations]
            if with_t:
                row.append(repr(snap.t) if snap.t != int(snap.t) else int(snap.t))
            writer.writerow(row)
    return buf.getvalue()
