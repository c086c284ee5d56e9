"""Command-line front end: mine, bench, and gen subcommands."""
from __future__ import annotations

import argparse
import sys

from .model import Constraints
from .database import (
    DatabaseError,
    GeneratorParams,
    generate_synthetic,
    parse_database,
    serialize_database,
)
from .miner import (
    MODES,
    VARIANTS,
    MiningConfig,
    StrategyFlags,
    config_for_variant,
    mine,
)

# Default constraint values for the CLI; min_sup has no default and is required.
DEFAULTS = dict(epsilon=0, min_gap=0, max_gap=30, min_dura=0, max_dura=2000)


def _add_mining_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="database file to mine")
    p.add_argument("--qes", help="comma-separated query event sequence")
    p.add_argument("--min-sup", type=float, required=True,
                   help="minimum support as a fraction of the database size")
    p.add_argument("--epsilon", type=int, default=DEFAULTS["epsilon"])
    p.add_argument("--min-gap", type=int, default=DEFAULTS["min_gap"])
    p.add_argument("--max-gap", type=int, default=DEFAULTS["max_gap"],
                   help="maximum gap for the before relation; -1 for unbounded")
    p.add_argument("--min-dura", type=int, default=DEFAULTS["min_dura"])
    p.add_argument("--max-dura", type=int, default=DEFAULTS["max_dura"],
                   help="maximum pattern duration; -1 for unbounded")
    p.add_argument("--max-length", type=int, default=None,
                   help="cap on events per pattern (default unbounded)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--stats", help="write run statistics to this file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tirpmine",
        description="Targeted mining of time-interval related patterns",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", help="mine patterns from a database file")
    _add_mining_args(p_mine)
    p_mine.add_argument("--mode", choices=MODES, default="targeted")
    p_mine.add_argument("--no-usfp", action="store_true")
    p_mine.add_argument("--no-uqpp", action="store_true")
    p_mine.add_argument("--no-uepp", action="store_true")
    p_mine.add_argument("--output", help="result file (default stdout)")

    p_bench = sub.add_parser("bench", help="compare algorithm variants on one input")
    _add_mining_args(p_bench)
    p_bench.add_argument("--variants", default=",".join(VARIANTS),
                         help="comma-separated variant names")
    p_bench.add_argument("--output", help="comparison table file (default stdout)")

    p_gen = sub.add_parser("gen", help="generate a synthetic database file")
    p_gen.add_argument("--output", help="output file (default stdout)")
    p_gen.add_argument("--sequences", type=int, required=True)
    p_gen.add_argument("--intervals", type=int, required=True)
    p_gen.add_argument("--alphabet", type=int, required=True)
    p_gen.add_argument("--max-time", type=int, default=100)
    p_gen.add_argument("--max-duration", type=int, default=10)
    p_gen.add_argument("--seed", type=int, default=0)
    return parser


def _constraints(args) -> Constraints:
    return Constraints(
        epsilon=args.epsilon,
        min_gap=args.min_gap,
        max_gap=None if args.max_gap < 0 else args.max_gap,
        min_dura=args.min_dura,
        max_dura=None if args.max_dura < 0 else args.max_dura,
    )


def _parse_qes(args) -> tuple[str, ...] | None:
    if args.qes is None:
        return None
    qes = tuple(e for e in args.qes.split(",") if e)
    if not qes:
        raise ValueError("--qes must name at least one event")
    return qes


def _load_db(args):
    with open(args.input, encoding="utf-8") as fh:
        return parse_database(fh.read(), epsilon=args.epsilon)


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _format_results(results) -> str:
    lines = [
        "{}\t{}\t{}".format(
            " ".join(r.events), r.vsup, ",".join(str(s) for s in r.supporting_sids)
        )
        for r in results
    ]
    return "".join(line + "\n" for line in lines)


def _format_stats(stats) -> str:
    return (
        f"sequences_filtered={stats.sequences_filtered}\n"
        f"join_operations={stats.join_operations}\n"
        f"pruned_uqpp={stats.pruned_uqpp}\n"
        f"pruned_uepp={stats.pruned_uepp}\n"
        f"patterns={stats.patterns}\n"
        f"elapsed_ms={stats.elapsed * 1000:.3f}\n"
    )


def _cmd_mine(args) -> int:
    qes = _parse_qes(args)
    cfg = MiningConfig(
        min_sup=args.min_sup,
        constraints=_constraints(args),
        max_pattern_length=args.max_length,
        strategies=StrategyFlags(
            usfp=not args.no_usfp, uqpp=not args.no_uqpp, uepp=not args.no_uepp
        ),
        mode=args.mode,
        threads=args.threads,
    )
    db = _load_db(args)
    results, stats = mine(db, qes, cfg)
    _write(args.output, _format_results(results))
    if args.stats:
        _write(args.stats, _format_stats(stats))
    return 0


def _cmd_bench(args) -> int:
    qes = _parse_qes(args)
    names = [v for v in args.variants.split(",") if v]
    for name in names:
        if name not in VARIANTS:
            raise ValueError(f"unknown variant {name!r} in --variants")
    base = MiningConfig(
        min_sup=args.min_sup,
        constraints=_constraints(args),
        max_pattern_length=args.max_length,
        threads=args.threads,
    )
    db = _load_db(args)

    rows = []
    targeted_outputs = {}
    for name in names:
        cfg = config_for_variant(name, base)
        results, stats = mine(db, qes, cfg)
        rows.append((name, stats.patterns, stats.join_operations, stats.elapsed * 1000))
        if name != "fasttirp":  # full-mode output is deliberately a superset
            targeted_outputs[name] = {(r.events, r.vsup, r.supporting_sids) for r in results}

    table = "variant\tpatterns\tjoin_operations\telapsed_ms\n"
    table += "".join(
        f"{n}\t{p}\t{j}\t{ms:.3f}\n" for n, p, j, ms in rows
    )
    _write(args.output, table)
    if args.stats:
        _write(args.stats, table)

    distinct = {frozenset(v) for v in targeted_outputs.values()}
    if len(distinct) > 1:
        print("bench: variant outputs disagree (bug)", file=sys.stderr)
        return 1
    return 0


def _cmd_gen(args) -> int:
    params = GeneratorParams(
        num_sequences=args.sequences,
        intervals_per_sequence=args.intervals,
        alphabet_size=args.alphabet,
        max_time=args.max_time,
        max_duration=args.max_duration,
        seed=args.seed,
    )
    db = generate_synthetic(params)
    _write(args.output, serialize_database(db))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "mine":
            return _cmd_mine(args)
        if args.command == "bench":
            return _cmd_bench(args)
        return _cmd_gen(args)
    except (DatabaseError, ValueError, OSError) as exc:
        print(f"tirpmine {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
