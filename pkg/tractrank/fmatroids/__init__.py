# coding=utf-8

"""Matroids over tracts."""

from tractrank.fmatroids.composition import (
    conformal,
    covector_closure_check,
    covectors,
    sign_compose,
    tropical_compose,
)
from tractrank.fmatroids.fmatroid import (
    FMatroid,
    ValidationReport,
    constant_signatures,
    format_fmatroid,
    from_circuits,
    from_field_matrix,
    parse_fmatroid,
    pushforward,
    validate,
)

__all__ = [
    "FMatroid",
    "ValidationReport",
    "conformal",
    "constant_signatures",
    "covector_closure_check",
    "covectors",
    "format_fmatroid",
    "from_circuits",
    "from_field_matrix",
    "parse_fmatroid",
    "pushforward",
    "sign_compose",
    "tropical_compose",
    "validate",
]
