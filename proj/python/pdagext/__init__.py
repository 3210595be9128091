"""Consistent extensions and maximal orientations of partially directed graphs."""

from ._pdagext import (
    NotExtendableError,
    ParseError,
    Pdag,
    UsageError,
    brute_force_mpdag,
    dag_to_cpdag,
    direct_meek,
    dth_worst_case,
    extend,
    format,
    generate,
    is_consistent_extension,
    maximal_orientation_ce,
    parse,
)

__all__ = [
    "NotExtendableError",
    "ParseError",
    "Pdag",
    "UsageError",
    "brute_force_mpdag",
    "dag_to_cpdag",
    "direct_meek",
    "dth_worst_case",
    "extend",
    "format",
    "generate",
    "is_consistent_extension",
    "maximal_orientation_ce",
    "parse",
]
