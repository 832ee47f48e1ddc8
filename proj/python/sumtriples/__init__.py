"""Counting partitions of {1,...,3n} into sum-triples {x, y, z} with x+y=z,
and maximum collections of disjoint sum-triples in {1,...,n} (A108235 and
A002849). Thin wrapper over the C++ core."""

from ._core import (
    SearchState,
    SearchStats,
    Triple,
    count,
    count_a002849,
    count_full,
    feasible,
    oracle_a002849,
    oracle_count,
    self_check,
    variant_problem,
)

__all__ = [
    "SearchState",
    "SearchStats",
    "Triple",
    "count",
    "count_a002849",
    "count_full",
    "feasible",
    "oracle_a002849",
    "oracle_count",
    "self_check",
    "variant_problem",
]

__version__ = "1.0.0"
