"""Targeted mining of time-interval related patterns."""

from .model import (
    Constraints,
    RELATIONS,
    Span,
    SymbolicInterval,
    check_extension_validity,
    classify_relation,
    compare_eps,
    interval_precedes,
)
from .database import (
    Database,
    DatabaseError,
    GeneratorParams,
    TimeIntervalSequence,
    generate_synthetic,
    parse_database,
    serialize_database,
    sort_intervals,
)
from .vertical import (
    PairSupportMatrix,
    PatternOccurrence,
    VerticalDatabase,
    build_psm,
    build_singleton_vdbs,
    extend_vdb,
)
from .miner import (
    MiningConfig,
    MiningStats,
    STirpResult,
    StrategyFlags,
    VARIANTS,
    config_for_variant,
    contains_subsequence,
    mine,
    post_filter,
    usfp_filter,
)

__all__ = [
    "Constraints",
    "Database",
    "DatabaseError",
    "GeneratorParams",
    "MiningConfig",
    "MiningStats",
    "PairSupportMatrix",
    "PatternOccurrence",
    "RELATIONS",
    "STirpResult",
    "Span",
    "StrategyFlags",
    "SymbolicInterval",
    "TimeIntervalSequence",
    "VARIANTS",
    "VerticalDatabase",
    "build_psm",
    "build_singleton_vdbs",
    "check_extension_validity",
    "classify_relation",
    "compare_eps",
    "config_for_variant",
    "contains_subsequence",
    "extend_vdb",
    "generate_synthetic",
    "interval_precedes",
    "mine",
    "parse_database",
    "post_filter",
    "serialize_database",
    "sort_intervals",
    "usfp_filter",
]

__version__ = "0.1.0"
