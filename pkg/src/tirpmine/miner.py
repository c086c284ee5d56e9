"""Targeted pattern growth with sequence filtering and pair-support pruning.

The miner grows patterns depth-first by appending events after the current
pattern's last interval. Three independently toggleable strategies cut the
search space:

* sequence filtering: drop whole sequences that cannot contain the query;
* query pruning: abandon a branch when the last event cannot frequently
  precede the next unmatched query event;
* extension pruning: skip candidate events whose pair support with the
  last event is below threshold.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .model import Constraints
from .database import Database
from .vertical import (
    PairSupportMatrix,
    VerticalDatabase,
    build_psm,
    build_singleton_vdbs,
    extend_vdb,
)

MODE_TARGETED = "targeted"
MODE_FULL = "full"
MODE_FULL_POST = "full-post"
MODES = (MODE_TARGETED, MODE_FULL, MODE_FULL_POST)


@dataclass(frozen=True)
class StrategyFlags:
    usfp: bool = True
    uqpp: bool = True
    uepp: bool = True


@dataclass(frozen=True)
class MiningConfig:
    min_sup: float
    constraints: Constraints = Constraints()
    max_pattern_length: int | None = None
    strategies: StrategyFlags = StrategyFlags()
    mode: str = MODE_TARGETED
    collect_instances: bool = False
    threads: int = 1

    def __post_init__(self):
        if not 0 < self.min_sup <= 1:
            raise ValueError("min_sup must be in (0, 1]")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.max_pattern_length is not None and self.max_pattern_length < 1:
            raise ValueError("max_pattern_length must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass(frozen=True)
class STirpResult:
    events: tuple[str, ...]
    vsup: int
    supporting_sids: tuple[int, ...]
    instances: tuple[tuple[int, str], ...] | None = None


@dataclass
class MiningStats:
    sequences_filtered: int = 0
    join_operations: int = 0
    pruned_uqpp: int = 0
    pruned_uepp: int = 0
    patterns: int = 0
    elapsed: float = 0.0

    def add(self, other: "MiningStats") -> None:
        self.join_operations += other.join_operations
        self.pruned_uqpp += other.pruned_uqpp
        self.pruned_uepp += other.pruned_uepp


def contains_subsequence(events, qes) -> bool:
    """Greedy left-to-right check that qes embeds order-preservingly in events."""
    qes = tuple(qes)
    if not qes:
        raise ValueError("query event sequence must be nonempty")
    pos = 0
    for e in events:
        if e == qes[pos]:
            pos += 1
            if pos == len(qes):
                return True
    return False


def usfp_filter(db: Database, qes) -> Database:
    """Keep only sequences whose event list contains qes as a subsequence."""
    qes = tuple(qes)
    return Database(
        tuple(s for s in db.sequences if contains_subsequence(s.events, qes))
    )


def post_filter(results, qes) -> list[STirpResult]:
    """Restrict full-mining output to patterns containing the query."""
    qes = tuple(qes)
    return [r for r in results if contains_subsequence(r.events, qes)]


def _result_from_vdb(vdb: VerticalDatabase, collect_instances: bool) -> STirpResult:
    instances = None
    if collect_instances:
        instances = tuple((r.sid, "".join(r.relations)) for r in vdb.rows)
    return STirpResult(
        events=vdb.events,
        vsup=vdb.vertical_support(),
        supporting_sids=tuple(vdb.supporting_sids()),
        instances=instances,
    )


class _Search:
    """Depth-first growth from one seed, with private sink and stats."""

    def __init__(self, qes, sf_events, singletons, psm, threshold, cfg):
        self.qes = qes  # None disables query tracking (full mining)
        self.sf_events = sf_events
        self.singletons = singletons
        self.psm = psm
        self.threshold = threshold
        self.cfg = cfg
        self.sink: list[STirpResult] = []
        self.stats = MiningStats()

    def run(self, seed: VerticalDatabase) -> None:
        self._dfs(seed, 0)

    def _dfs(self, prefix: VerticalDatabase, match: int) -> None:
        last = prefix.events[-1]
        qes = self.qes
        if qes is None:
            self.sink.append(_result_from_vdb(prefix, self.cfg.collect_instances))
        else:
            if match < len(qes) and last == qes[match]:
                match += 1
            if match == len(qes):
                self.sink.append(_result_from_vdb(prefix, self.cfg.collect_instances))
            elif self.cfg.strategies.uqpp and self.psm.support(last, qes[match]) < self.threshold:
                self.stats.pruned_uqpp += 1
                return
        max_len = self.cfg.max_pattern_length
        if max_len is not None and len(prefix.events) >= max_len:
            return
        for f in self.sf_events:
            if self.cfg.strategies.uepp and self.psm.support(last, f) < self.threshold:
                self.stats.pruned_uepp += 1
                continue
            self.stats.join_operations += 1
            ext = extend_vdb(prefix, f, self.singletons[f], self.cfg.constraints)
            if ext.vertical_support() >= self.threshold:
                self._dfs(ext, match)


def _frequent_events(singletons, threshold) -> list[str]:
    """Frequent single events, most frequent first. The output set of the
    miner does not depend on this order; only traversal order does."""
    return sorted(
        (e for e, v in singletons.items() if v.vertical_support() >= threshold),
        key=lambda e: (-singletons[e].vertical_support(), e),
    )


def _mine_emissions(db: Database, qes, cfg: MiningConfig):
    """Run the pipeline and return the raw emission list (pre-dedup) and stats."""
    stats = MiningStats()
    targeted = cfg.mode == MODE_TARGETED
    if targeted or cfg.mode == MODE_FULL_POST:
        qes = tuple(qes) if qes is not None else ()
        if not qes:
            raise ValueError("query event sequence required in targeted/full-post modes")
    if len(db) == 0:
        return [], stats
    threshold = cfg.min_sup * len(db)

    working = db
    if targeted and cfg.strategies.usfp:
        working = usfp_filter(db, qes)
        stats.sequences_filtered = len(db) - len(working)
        if len(working) < threshold:
            return [], stats

    c = cfg.constraints
    singletons = build_singleton_vdbs(working, c)
    sf = _frequent_events(singletons, threshold)
    if not sf:
        return [], stats
    psm = build_psm(working, c)

    search_qes = qes if targeted else None

    def run_seed(event):
        search = _Search(search_qes, sf, singletons, psm, threshold, cfg)
        search.run(singletons[event])
        return search

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            searches = list(pool.map(run_seed, sf))
    else:
        searches = [run_seed(e) for e in sf]

    emissions: list[STirpResult] = []
    for s in searches:  # merge in seed order for deterministic stats
        emissions.extend(s.sink)
        stats.add(s.stats)
    return emissions, stats


def mine(db: Database, qes, cfg: MiningConfig):
    """Mine frequent patterns, returning sorted results and run statistics.

    In targeted mode only patterns containing qes are produced; full mode
    emits every frequent pattern; full-post mode mines fully and then
    filters by the query.
    """
    t0 = time.perf_counter()
    emissions, stats = _mine_emissions(db, qes, cfg)
    # The same event sequence is reachable from a single seed, so this dedup
    # should be a no-op; kept as a defensive guarantee of set semantics.
    by_events = {r.events: r for r in emissions}
    results = [by_events[k] for k in sorted(by_events)]
    if cfg.mode == MODE_FULL_POST:
        results = post_filter(results, qes)
    stats.patterns = len(results)
    stats.elapsed = time.perf_counter() - t0
    return results, stats


def config_for_variant(name: str, base: MiningConfig) -> MiningConfig:
    """Benchmark variant presets differing in mode and strategy toggles."""
    presets = {
        "fasttirp": (MODE_FULL, StrategyFlags(usfp=False, uqpp=False, uepp=True)),
        "fasttirp-post": (MODE_FULL_POST, StrategyFlags(usfp=False, uqpp=False, uepp=True)),
        "tatirp1": (MODE_TARGETED, StrategyFlags(usfp=True, uqpp=False, uepp=True)),
        "tatirp2": (MODE_TARGETED, StrategyFlags(usfp=False, uqpp=True, uepp=True)),
        "tatirp12": (MODE_TARGETED, StrategyFlags(usfp=True, uqpp=True, uepp=True)),
    }
    if name not in presets:
        raise ValueError(f"unknown variant {name!r}")
    mode, flags = presets[name]
    return replace(base, mode=mode, strategies=flags)


VARIANTS = ("fasttirp", "fasttirp-post", "tatirp1", "tatirp2", "tatirp12")
