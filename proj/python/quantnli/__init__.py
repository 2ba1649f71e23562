"""Symbolic quantitative entailment: parsing, interval algebra, equation search."""

from ._quantnli import (
    Interval,
    IntervalError,
    classify,
    evaluate,
    justify,
    normalize_number,
    parse,
    segment,
)

__all__ = [
    "Interval",
    "IntervalError",
    "classify",
    "evaluate",
    "justify",
    "normalize_number",
    "parse",
    "segment",
]
