# coding=utf-8

"""Rational matrices realizing patterns at low rank."""

from tractrank.realize.epic import epic_lift
from tractrank.realize.result import RealizationResult, exact_rank, verify_realization
from tractrank.realize.sign_pattern import realize_sign_low_rank_via_alt, realize_sign_pattern
from tractrank.realize.zero_pattern import realize_zero_pattern

__all__ = [
    "RealizationResult",
    "epic_lift",
    "exact_rank",
    "realize_sign_low_rank_via_alt",
    "realize_sign_pattern",
    "realize_zero_pattern",
    "verify_realization",
]
