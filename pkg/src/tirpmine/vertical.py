"""Vertical databases of patterns and the pair support matrix.

A pattern occurrence records where one embedding of a pattern lives inside
one sequence: positions are 1-based, ``eid`` is the position of the last
source interval, and ``start_t``/``end_t`` are the composite envelope.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field

from .model import Constraints, _check_extension, duration_ok
from .database import Database


@dataclass(frozen=True)
class PatternOccurrence:
    sid: int
    eid: int
    start_t: int
    end_t: int
    relations: tuple[str, ...]
    sources: tuple[int, ...]


@dataclass
class VerticalDatabase:
    events: tuple[str, ...]
    rows: list[PatternOccurrence]
    _sid_index: dict | None = field(default=None, repr=False, compare=False)

    def vertical_support(self) -> int:
        return len({r.sid for r in self.rows})

    def horizontal_support(self, sid: int) -> int:
        return sum(1 for r in self.rows if r.sid == sid)

    def supporting_sids(self) -> list[int]:
        return sorted({r.sid for r in self.rows})

    def rows_by_sid(self):
        """Per-sequence index: sid -> (ascending eid list, rows in eid order)."""
        if self._sid_index is None:
            index: dict[int, tuple[list[int], list[PatternOccurrence]]] = {}
            for r in self.rows:
                entry = index.get(r.sid)
                if entry is None:
                    entry = ([], [])
                    index[r.sid] = entry
                entry[0].append(r.eid)
                entry[1].append(r)
            self._sid_index = index
        return self._sid_index


class PairSupportMatrix:
    """Vertical support of ordered event pairs, used as a pruning upper bound."""

    def __init__(self, entries: dict[tuple[str, str], int]):
        self._entries = entries

    def support(self, e1: str, e2: str) -> int:
        return self._entries.get((e1, e2), 0)

    def __len__(self) -> int:
        return len(self._entries)


def build_singleton_vdbs(db: Database, c: Constraints) -> dict[str, VerticalDatabase]:
    """One vertical database per event type; intervals failing the duration
    bounds are dropped."""
    vdbs: dict[str, VerticalDatabase] = {}
    for seq in db.sequences:
        for pos, interval in enumerate(seq.intervals, start=1):
            if not duration_ok(interval, c):
                continue
            vdb = vdbs.get(interval.event)
            if vdb is None:
                vdb = VerticalDatabase((interval.event,), [])
                vdbs[interval.event] = vdb
            vdb.rows.append(
                PatternOccurrence(
                    sid=seq.sid,
                    eid=pos,
                    start_t=interval.start,
                    end_t=interval.end,
                    relations=(),
                    sources=(pos,),
                )
            )
    return vdbs


def build_psm(db: Database, c: Constraints) -> PairSupportMatrix:
    """Count, per ordered event pair, the sequences holding at least one
    interval pair whose merged duration fits max_dura.

    Gap bounds and min_dura are deliberately not checked here: a pair may
    embed inside a longer composite that satisfies them, so screening on
    them would break the downward closure the pruning relies on.
    """
    counts: dict[tuple[str, str], int] = {}
    for seq in db.sequences:
        pairs: set[tuple[str, str]] = set()
        intervals = seq.intervals
        n = len(intervals)
        for i in range(n):
            a = intervals[i]
            for j in range(i + 1, n):
                b = intervals[j]
                key = (a.event, b.event)
                if key in pairs:
                    continue
                if c.max_dura is not None:
                    dura = max(a.end, b.end) - min(a.start, b.start)
                    if dura > c.max_dura:
                        continue
                pairs.add(key)
        for key in pairs:
            counts[key] = counts.get(key, 0) + 1
    return PairSupportMatrix(counts)


def extend_vdb(
    prefix: VerticalDatabase,
    candidate: str,
    singleton: VerticalDatabase,
    c: Constraints,
) -> VerticalDatabase:
    """Join the prefix pattern with a candidate event's singleton rows.

    For each prefix row, candidate rows in the same sequence with a larger
    eid are screened by the extension validity rule against the prefix's
    composite envelope.
    """
    rows: list[PatternOccurrence] = []
    index = singleton.rows_by_sid()
    for r in prefix.rows:
        entry = index.get(r.sid)
        if entry is None:
            continue
        eids, qrows = entry
        for q in qrows[bisect_right(eids, r.eid):]:
            rel = _check_extension(r.start_t, r.end_t, q.start_t, q.end_t, c)
            if rel is None:
                continue
            rows.append(
                PatternOccurrence(
                    sid=r.sid,
                    eid=q.eid,
                    start_t=min(r.start_t, q.start_t),
                    end_t=max(r.end_t, q.end_t),
                    relations=r.relations + (rel,),
                    sources=r.sources + (q.eid,),
                )
            )
    return VerticalDatabase(prefix.events + (candidate,), rows)
