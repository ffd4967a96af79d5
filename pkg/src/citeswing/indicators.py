"""Rank-based decomposition of a citation vector.

The h-core of a ranked citation list holds ``h**2`` "core" citations plus
``e_sq`` excess citations; everything below rank ``h`` is tail::

    d_sq = sum(C_j, j <= h) = h**2 + e_sq
    r    = sqrt(d_sq)
    total = d_sq + tail

All sums are exact integers; only ``r`` is a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DuplicateItemId

__all__ = [
    "CitationRecord",
    "CoreMetrics",
    "Zone",
    "ZoneAssignment",
    "records_from_counts",
    "rank_citations",
    "h_index",
    "core_metrics",
    "zone_partition",
]


@dataclass(frozen=True, order=False)
class CitationRecord:
    item_id: str
    citations: int

    def __post_init__(self):
        if not isinstance(self.item_id, str) or not self.item_id:
            raise ValueError("item_id must be a nonempty string")
        if isinstance(self.citations, bool) or not isinstance(self.citations, int):
            raise TypeError(f"citations must be an int, got {self.citations!r}")
        if self.citations < 0:
            raise ValueError(f"negative citation count for {self.item_id!r}")


@dataclass(frozen=True)
class CoreMetrics:
    h: int
    e_sq: int
    d_sq: int
    r: float
    tail: int
    total: int

    @property
    def e(self) -> float:
        return math.sqrt(self.e_sq)


class Zone(str, Enum):
    TAIL = "TAIL"
    CORE = "CORE"
    EXCESS = "EXCESS"
    # only used by transition matrices for items missing from a snapshot
    ABSENT = "ABSENT"


@dataclass(frozen=True)
class ZoneAssignment:
    item_id: str
    zone: Zone
    rank: int
    citations: int


def records_from_counts(counts: Iterable[int], prefix: str = "p") -> list[CitationRecord]:
    """Wrap bare counts as records with ids ``p0000, p0001, ...``."""
    counts = list(counts)
    width = max(4, len(str(len(counts))))
    return [CitationRecord(f"{prefix}{i:0{width}d}", int(c)) for i, c in enumerate(counts)]


def _check_unique(records: Sequence[CitationRecord]) -> None:
    seen = set()
    for rec in records:
        if rec.item_id in seen:
            raise DuplicateItemId(f"duplicate item_id {rec.item_id!r}")
        seen.add(rec.item_id)


def rank_citations(records: Iterable[CitationRecord]) -> list[CitationRecord]:
    """Sort by citations descending, ties by item_id ascending."""
    records = list(records)
    _check_unique(records)
    return sorted(records, key=lambda rec: (-rec.citations, rec.item_id))


def h_index(ranked: Sequence[CitationRecord]) -> int:
    """Largest ``i`` with ``ranked[i-1].citations >= i``; assumes descending order."""
    h = 0
    for i, rec in enumerate(ranked, start=1):
        if rec.citations >= i:
            h = i
        else:
            break
    return h


def core_metrics(records: Iterable[CitationRecord]) -> CoreMetrics:
    ranked = rank_citations(records)
    h = h_index(ranked)
    d_sq = sum(rec.citations for rec in ranked[:h])
    tail = sum(rec.citations for rec in ranked[h:])
    return CoreMetrics(
        h=h,
        e_sq=d_sq - h * h,
        d_sq=d_sq,
        r=math.sqrt(d_sq),
        tail=tail,
        total=d_sq + tail,
    )


def zone_partition(records: Iterable[CitationRecord]) -> list[ZoneAssignment]:
    """Assign every item to TAIL, CORE or EXCESS, in rank order.

    Items ranked below h are TAIL. Inside the h-core an item is EXCESS when it
    carries more than h citations (it contributes excess mass) and CORE
    otherwise.
    """
    ranked = rank_citations(records)
    h = h_index(ranked)
    out = []
    for rank, rec in enumerate(ranked, start=1):
        if rank > h:
            zone = Zone.TAIL
        elif rec.citations > h:
            zone = Zone.EXCESS
        else:
            zone = Zone.CORE
        out.append(ZoneAssignment(rec.item_id, zone, rank, rec.citations))
    return out
