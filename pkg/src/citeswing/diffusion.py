"""Diffusion of cited items between the tail, core and excess zones.

Each snapshot is partitioned independently with ``zone_partition``; two
consecutive snapshots are compared item by item. Items missing from one side
are counted in the ABSENT row or column.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    CiteSwingError,
    DomainError,
    DuplicateItemId,
    InsufficientData,
    NonMonotonicTime,
)
from .indicators import CitationRecord, CoreMetrics, Zone, core_metrics, zone_partition
from .swing import CaseLabel, SwingMetrics, classify_case, swing_metrics

__all__ = [
    "STATES",
    "Snapshot",
    "TransitionMatrix",
    "NetFlow",
    "SnapshotMetrics",
    "DiffusionSeries",
    "snapshot_metrics",
    "transitions",
    "diffusion_series",
    "net_flow",
]

STATES = (Zone.TAIL, Zone.CORE, Zone.EXCESS, Zone.ABSENT)
_INDEX = {z: i for i, z in enumerate(STATES)}


@dataclass(frozen=True)
class Snapshot:
    label: str
    t: float
    records: tuple[CitationRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        if not self.t >= 1:
            raise DomainError(f"snapshot {self.label!r}: t must be >= 1, got {self.t}")
        ids = [rec.item_id for rec in self.records]
        if len(set(ids)) != len(ids):
            raise DuplicateItemId(f"snapshot {self.label!r} has duplicate item ids")

    def counts(self) -> dict[str, int]:
        return {rec.item_id: rec.citations for rec in self.records}


@dataclass(frozen=True)
class TransitionMatrix:
    """4x4 item counts, rows = earlier state, columns = later state (order STATES)."""

    counts: np.ndarray
    from_label: str
    to_label: str

    def __eq__(self, other):
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return (
            self.from_label == other.from_label
            and self.to_label == other.to_label
            and np.array_equal(self.counts, other.counts)
        )

    __hash__ = None

    def count(self, before: Zone, after: Zone) -> int:
        return int(self.counts[_INDEX[before], _INDEX[after]])

    def to_dict(self) -> dict:
        return {
            "from_label": self.from_label,
            "to_label": self.to_label,
            "states": [z.value for z in STATES],
            "counts": self.counts.tolist(),
        }


@dataclass(frozen=True)
class NetFlow:
    tail_to_core: int = 0
    core_to_excess: int = 0
    excess_to_core: int = 0
    core_to_tail: int = 0
    tail_to_excess: int = 0
    excess_to_tail: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SnapshotMetrics:
    label: str
    t: float
    core: CoreMetrics
    case_label: CaseLabel
    swing: SwingMetrics | None = None
    # machine-readable reason when swing is None, e.g. "e_sq=0: ..."
    reason: str | None = None


@dataclass(frozen=True)
class DiffusionSeries:
    metrics: list[SnapshotMetrics]
    matrices: list[TransitionMatrix] = field(default_factory=list)


def snapshot_metrics(snapshot: Snapshot) -> SnapshotMetrics:
    core = core_metrics(snapshot.records)
    case = classify_case(snapshot.records, core)
    try:
        swing = swing_metrics(core, snapshot.records)
    except CiteSwingError as exc:
        return SnapshotMetrics(snapshot.label, snapshot.t, core, case, None, str(exc))
    return SnapshotMetrics(snapshot.label, snapshot.t, core, case, swing)


def transitions(earlier: Snapshot, later: Snapshot) -> TransitionMatrix:
    if not later.t > earlier.t:
        raise NonMonotonicTime(
            f"snapshot {later.label!r} (t={later.t}) does not follow {earlier.label!r} (t={earlier.t})"
        )
    before = {z.item_id: z.zone for z in zone_partition(earlier.records)}
    after = {z.item_id: z.zone for z in zone_partition(later.records)}
    counts = np.zeros((4, 4), dtype=np.int64)
    for item in before.keys() | after.keys():
        i = _INDEX[before.get(item, Zone.ABSENT)]
        j = _INDEX[after.get(item, Zone.ABSENT)]
        counts[i, j] += 1
    return TransitionMatrix(counts, earlier.label, later.label)


def diffusion_series(series: Sequence[Snapshot]) -> DiffusionSeries:
    series = list(series)
    if len(series) < 2:
        raise InsufficientData(f"need at least 2 snapshots, got {len(series)}")
    for a, b in zip(series, series[1:]):
        if not b.t > a.t:
            raise NonMonotonicTime(f"t must increase: {a.label!r} t={a.t}, {b.label!r} t={b.t}")
    metrics = [snapshot_metrics(s) for s in series]
    matrices = [transitions(a, b) for a, b in zip(series, series[1:])]
    return DiffusionSeries(metrics, matrices)


def net_flow(matrix: TransitionMatrix) -> NetFlow:
    c = matrix.count
    return NetFlow(
        tail_to_core=c(Zone.TAIL, Zone.CORE),
        core_to_excess=c(Zone.CORE, Zone.EXCESS),
        excess_to_core=c(Zone.EXCESS, Zone.CORE),
        core_to_tail=c(Zone.CORE, Zone.TAIL),
        tail_to_excess=c(Zone.TAIL, Zone.EXCESS),
        excess_to_tail=c(Zone.EXCESS, Zone.TAIL),
    )
