# coding=utf-8

"""Homomorphisms between catalog tracts."""

import abc
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Union

from tractrank import constants
from tractrank.exceptions import UnsupportedTract
from tractrank.tracts.numbers import GaussianRational
from tractrank.tracts.tract import (
    FiniteField,
    GaussianRationals,
    Krasner,
    Laurent,
    Phase,
    QuotientOfFiniteField,
    Rational,
    Sign,
    Tract,
    TractElement,
    Triangle,
    Tropical,
)


class TractHom(abc.ABC):
    """A map of tracts sending null sums to null sums."""

    tag: str = ""

    @property
    @abc.abstractmethod
    def source(self) -> Tract:
        """The domain tract."""

    @property
    @abc.abstractmethod
    def target(self) -> Tract:
        """The codomain tract."""

    def apply(self, element: TractElement) -> TractElement:
        """Image of a source element.

        :param element: An element of the source tract.
        :return: Its image in the target tract.
        """
        self.source.check(element)
        if element.is_zero:
            return self.target.zero
        return self.target.element(self._apply(element.value))

    def fibre(self, element: TractElement) -> Union[List[TractElement], str]:
        """All source elements mapping to `element`, or `constants.INFINITE`."""
        self.target.check(element)
        source_elements = self.source.elements()
        if source_elements == constants.INFINITE:
            if element.is_zero:
                return [self.source.zero]
            return constants.INFINITE
        return [value for value in source_elements if self.apply(value) == element]

    @abc.abstractmethod
    def _apply(self, value):
        """Raw image of a nonzero raw value."""

    def __str__(self) -> str:
        return f"{self.tag}: {self.source.tag} -> {self.target.tag}"


@dataclass(frozen=True)
class FqToKrasner(TractHom):
    """GF(q) to K, nonzero to 1."""

    order: int = 2
    tag = "FqToKrasner"

    @property
    def source(self):
        return FiniteField(self.order)

    @property
    def target(self):
        return Krasner()

    def _apply(self, value):
        return 1


@dataclass(frozen=True)
class RationalToKrasner(TractHom):
    """Q to K, nonzero to 1."""

    tag = "RationalToKrasner"

    @property
    def source(self):
        return Rational()

    @property
    def target(self):
        return Krasner()

    def _apply(self, value):
        return 1


@dataclass(frozen=True)
class RationalToSign(TractHom):
    """The sign map Q to S."""

    tag = "RationalToSign"

    @property
    def source(self):
        return Rational()

    @property
    def target(self):
        return Sign()

    def _apply(self, value):
        return 1 if value > 0 else -1


@dataclass(frozen=True)
class GaussianRationalToPhase(TractHom):
    """Q(i) to P, a number to its direction."""

    tag = "GaussianRationalToPhase"

    @property
    def source(self):
        return GaussianRationals()

    @property
    def target(self):
        return Phase()

    def _apply(self, value: GaussianRational):
        return (value.real, value.imag)


@dataclass(frozen=True)
class RationalToTriangleAbs(TractHom):
    """Q to V, the absolute value."""

    tag = "RationalToTriangleAbs"

    @property
    def source(self):
        return Rational()

    @property
    def target(self):
        return Triangle()

    def _apply(self, value: Fraction):
        return abs(value)


@dataclass(frozen=True)
class LaurentDegreeToTropical(TractHom):
    """Laurent polynomials to T, a polynomial to its top degree."""

    tag = "LaurentDegreeToTropical"

    @property
    def source(self):
        return Laurent()

    @property
    def target(self):
        return Tropical()

    def _apply(self, value):
        return Fraction(value.degree)


@dataclass(frozen=True)
class QuotientMap(TractHom):
    """GF(q) onto GF(q) / H, an element to its coset."""

    order: int = 3
    subgroup: FrozenSet[int] = frozenset({1})
    tag = "QuotientMap"

    @property
    def source(self):
        return FiniteField(self.order)

    @property
    def target(self):
        return QuotientOfFiniteField(self.order, frozenset(self.subgroup))

    def _apply(self, value):
        return value


def hom_to(source_tag: str, target: Tract) -> TractHom:
    """Pick the catalog homomorphism from a source tag into `target`.

    Accepts `fp:q` (or the short `fpq`), `rational`, `gaussian` and
    `laurent` as source tags.

    :param source_tag: The tag of the source tract.
    :param target: The target tract.
    :return: The homomorphism.
    """
    tag = source_tag.strip().lower()
    if tag.startswith("fp"):
        order = int(tag[2:].lstrip(":"))
        if isinstance(target, Krasner):
            return FqToKrasner(order)
        if isinstance(target, QuotientOfFiniteField) and target.order == order:
            return QuotientMap(order, target.subgroup)
    homs = {
        ("rational", Krasner): RationalToKrasner,
        ("rational", Sign): RationalToSign,
        ("rational", Triangle): RationalToTriangleAbs,
        ("gaussian", Phase): GaussianRationalToPhase,
        ("laurent", Tropical): LaurentDegreeToTropical,
    }
    factory = homs.get((tag, type(target)))
    if factory is None:
        raise UnsupportedTract(f"No homomorphism from '{source_tag}' to {target.tag}.")
    return factory()
