"""Time-interval sequence databases: parsing, validation, sorting, synthesis.

File format: one sequence per line, ``SID|EVENT,START,END EVENT,START,END ...``.
Lines starting with ``#`` and blank lines are ignored. Input order of tokens
does not matter; the parser always re-sorts each sequence.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .model import SymbolicInterval, interval_precedes


class DatabaseError(ValueError):
    """Malformed or invalid database input."""


@dataclass(frozen=True)
class TimeIntervalSequence:
    sid: int
    intervals: tuple[SymbolicInterval, ...]

    @property
    def events(self) -> tuple[str, ...]:
        return tuple(i.event for i in self.intervals)


@dataclass(frozen=True)
class Database:
    sequences: tuple[TimeIntervalSequence, ...]

    def __len__(self) -> int:
        return len(self.sequences)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted({i.event for s in self.sequences for i in s.intervals}))


def sort_intervals(intervals, epsilon: int = 0) -> list[SymbolicInterval]:
    """Order intervals by start, then end, then event name.

    At epsilon 0 this is a strict total order and reduces to a plain key
    sort. For epsilon > 0 quasi-equality is not transitive, so the
    comparator is applied as-is and the result may be comparator-dependent
    for pathological inputs.
    """
    if epsilon == 0:
        return sorted(intervals, key=lambda i: (i.start, i.end, i.event))

    def cmp(a, b):
        if interval_precedes(a, b, epsilon):
            return -1
        if interval_precedes(b, a, epsilon):
            return 1
        return 0

    return sorted(intervals, key=functools.cmp_to_key(cmp))


def _validate(sid: int, intervals, line_no=None) -> None:
    seen = set()
    for i in intervals:
        key = (i.start, i.end, i.event)
        if key in seen:
            where = f" (line {line_no})" if line_no is not None else ""
            raise DatabaseError(
                f"sequence {sid}{where}: duplicate interval ({i.event},{i.start},{i.end})"
            )
        seen.add(key)


def make_sequence(
    sid: int, intervals, epsilon: int = 0
) -> TimeIntervalSequence:
    """Validate and sort raw intervals into a sequence."""
    _validate(sid, intervals)
    return TimeIntervalSequence(sid, tuple(sort_intervals(intervals, epsilon)))


def parse_database(text: str, epsilon: int = 0) -> Database:
    """Parse the line-oriented database format, reporting line numbers on error."""
    sequences = []
    sids = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        sid_part, sep, body = line.partition("|")
        if not sep:
            raise DatabaseError(f"line {line_no}: missing '|' separator")
        try:
            sid = int(sid_part)
        except ValueError:
            raise DatabaseError(f"line {line_no}: bad sequence id {sid_part!r}") from None
        if sid <= 0:
            raise DatabaseError(f"line {line_no}: sequence id must be positive")
        if sid in sids:
            raise DatabaseError(f"line {line_no}: duplicate sequence id {sid}")
        sids.add(sid)
        intervals = []
        for tok in body.split():
            parts = tok.split(",")
            if len(parts) != 3 or not parts[0]:
                raise DatabaseError(f"line {line_no}: malformed token {tok!r}")
            event, start_s, end_s = parts
            try:
                start, end = int(start_s), int(end_s)
            except ValueError:
                raise DatabaseError(
                    f"line {line_no}: non-integer timestamp in {tok!r}"
                ) from None
            if end < start:
                raise DatabaseError(f"line {line_no}: end < start in {tok!r}")
            if start < 0:
                raise DatabaseError(f"line {line_no}: negative time in {tok!r}")
            intervals.append(SymbolicInterval(start, end, event))
        _validate(sid, intervals, line_no)
        sequences.append(TimeIntervalSequence(sid, tuple(sort_intervals(intervals, epsilon))))
    return Database(tuple(sequences))


def serialize_database(db: Database) -> str:
    lines = []
    for seq in db.sequences:
        body = " ".join(f"{i.event},{i.start},{i.end}" for i in seq.intervals)
        lines.append(f"{seq.sid}|{body}")
    return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class GeneratorParams:
    num_sequences: int
    intervals_per_sequence: int
    alphabet_size: int
    max_time: int = 100
    max_duration: int = 10
    seed: int = 0

    def __post_init__(self):
        for name in ("num_sequences", "intervals_per_sequence", "alphabet_size",
                     "max_time", "max_duration"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def generate_synthetic(p: GeneratorParams) -> Database:
    """Deterministic random database: events uniform over the alphabet, start
    uniform in [0, max_time), duration uniform in [1, max_duration]. Exact
    duplicates within a sequence are re-drawn.
    """
    rng = random.Random(p.seed)
    alphabet = [str(i) for i in range(p.alphabet_size)]
    sequences = []
    for sid in range(1, p.num_sequences + 1):
        chosen: set[tuple[int, int, str]] = set()
        while len(chosen) < p.intervals_per_sequence:
            start = rng.randrange(p.max_time)
            end = start + rng.randint(1, p.max_duration)
            chosen.add((start, end, rng.choice(alphabet)))
        intervals = [SymbolicInterval(s, e, ev) for s, e, ev in chosen]
        sequences.append(TimeIntervalSequence(sid, tuple(sort_intervals(intervals))))
    return Database(tuple(sequences))
