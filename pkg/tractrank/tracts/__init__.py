# coding=utf-8

"""Catalog of tracts and their homomorphisms."""

from tractrank.tracts.catalog import tract_from_tag
from tractrank.tracts.homomorphisms import (
    FqToKrasner,
    GaussianRationalToPhase,
    LaurentDegreeToTropical,
    QuotientMap,
    RationalToKrasner,
    RationalToSign,
    RationalToTriangleAbs,
    TractHom,
    hom_to,
)
from tractrank.tracts.tract import (
    FieldTract,
    FiniteField,
    FormalSum,
    GaussianRationals,
    Krasner,
    Laurent,
    Phase,
    QuotientOfFiniteField,
    Rational,
    RegularPartialField,
    Sign,
    Tract,
    TractElement,
    Triangle,
    Tropical,
)

__all__ = [
    "FieldTract",
    "FiniteField",
    "FormalSum",
    "FqToKrasner",
    "GaussianRationalToPhase",
    "GaussianRationals",
    "Krasner",
    "Laurent",
    "LaurentDegreeToTropical",
    "Phase",
    "QuotientMap",
    "QuotientOfFiniteField",
    "Rational",
    "RationalToKrasner",
    "RationalToSign",
    "RationalToTriangleAbs",
    "RegularPartialField",
    "Sign",
    "Tract",
    "TractElement",
    "TractHom",
    "Triangle",
    "Tropical",
    "hom_to",
    "tract_from_tag",
]
