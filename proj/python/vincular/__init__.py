"""Vincular pattern avoidance in k-ary words."""

from ._core import (
    DomainError,
    FormulaError,
    GuardrailError,
    ParseError,
    Pattern,
    ValidationError,
    VincularError,
    all_patterns,
    avoider_counts,
    biject,
    classify,
    contains,
    count_avoiders,
    find_occurrences,
    format_pattern,
    gf,
    gf_tags,
    parse_pattern,
    reduce,
    run_criterion,
    run_suite,
    verify_equivalence,
    verify_gf,
)

__all__ = [
    "DomainError",
    "FormulaError",
    "GuardrailError",
    "ParseError",
    "Pattern",
    "ValidationError",
    "VincularError",
    "all_patterns",
    "avoider_counts",
    "biject",
    "classify",
    "contains",
    "count_avoiders",
    "find_occurrences",
    "format_pattern",
    "gf",
    "gf_tags",
    "parse_pattern",
    "reduce",
    "run_criterion",
    "run_suite",
    "verify_equivalence",
    "verify_gf",
]
