# coding=utf-8

"""Lookup of catalog tracts by their text tag."""

import re

from tractrank.exceptions import ParseError, UnsupportedTract
from tractrank.tracts.tract import (
    FiniteField,
    GaussianRationals,
    Krasner,
    Phase,
    QuotientOfFiniteField,
    Rational,
    RegularPartialField,
    Sign,
    Tract,
    Triangle,
    Tropical,
)

SIMPLE_TRACTS = {
    "krasner": Krasner,
    "sign": Sign,
    "phase": Phase,
    "triangle": Triangle,
    "tropical": Tropical,
    "rational": Rational,
    "gaussian": GaussianRationals,
    "regular": RegularPartialField,
}

FINITE_FIELD_TAG = re.compile(r"^fp:?(?P<order>\d+)$")
QUOTIENT_TAG = re.compile(r"^quotient:(?P<order>\d+):\{(?P<members>[\d,\s]*)\}$")


def tract_from_tag(tag: str) -> Tract:
    """Build the tract named by a tag such as `sign`, `fp:3` or `quotient:7:{1,2,4}`.

    :param tag: The tract tag.
    :return: The tract.
    """
    text = tag.strip().lower()
    if text in SIMPLE_TRACTS:
        return SIMPLE_TRACTS[text]()
    match = FINITE_FIELD_TAG.match(text)
    if match:
        return FiniteField(int(match.group("order")))
    match = QUOTIENT_TAG.match(text)
    if match:
        members = [m for m in match.group("members").replace(" ", "").split(",") if m]
        if not members:
            raise ParseError(f"Empty subgroup in tract tag '{tag}'.")
        return QuotientOfFiniteField(
            int(match.group("order")), frozenset(int(m) for m in members)
        )
    raise UnsupportedTract(f"Unknown tract tag '{tag}'.")
