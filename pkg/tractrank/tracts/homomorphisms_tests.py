# coding=utf-8

"""Tract homomorphism tests."""

import random
from fractions import Fraction
from unittest import TestCase

import pytest

from tractrank import constants
from tractrank.exceptions import TagMismatch, UnsupportedTract
from tractrank.tracts import (
    FiniteField,
    FormalSum,
    FqToKrasner,
    GaussianRationalToPhase,
    Krasner,
    LaurentDegreeToTropical,
    QuotientMap,
    QuotientOfFiniteField,
    RationalToKrasner,
    RationalToSign,
    RationalToTriangleAbs,
    Sign,
    hom_to,
)
from tractrank.tracts.numbers import GaussianRational, LaurentPolynomial


def _source_sample(hom, rng):
    source = hom.source
    if source.finite:
        return rng.choice(source.elements())
    if isinstance(hom, GaussianRationalToPhase):
        return source.element(GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3)))
    if isinstance(hom, LaurentDegreeToTropical):
        return source.element(
            {rng.randint(-2, 2): rng.randint(-2, 2) for _ in range(rng.randint(0, 3))}
        )
    return source.element(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))


def _null_sample(hom, rng):
    """A null formal sum of the source: some terms and the negation of their sum."""
    source = hom.source
    terms = [_source_sample(hom, rng) for _ in range(rng.randint(1, 3))]
    if isinstance(hom, LaurentDegreeToTropical):
        total = source.zero
        for term in terms:
            total = source.add(total, term)
        return FormalSum.of(source, terms + [source.neg(total)])
    return FormalSum.of(source, terms + [source.neg(source.sum(terms))])


HOMS = [
    FqToKrasner(2),
    FqToKrasner(5),
    RationalToKrasner(),
    RationalToSign(),
    GaussianRationalToPhase(),
    RationalToTriangleAbs(),
    LaurentDegreeToTropical(),
    QuotientMap(7, frozenset({1, 2, 4})),
    QuotientMap(5, frozenset({1, 4})),
]


@pytest.mark.unit
class Tests(TestCase):
    """Tract homomorphism tests."""

    def test_examples(self):
        """Images of the documented examples."""
        sign = RationalToSign()
        self.assertEqual(
            Sign().epsilon, sign.apply(sign.source.element(Fraction(-7, 2)))
        )
        hom = GaussianRationalToPhase()
        self.assertEqual((2, 1), hom.apply(hom.source.parse("2+i")).value)
        degree = LaurentDegreeToTropical()
        image = degree.apply(
            degree.source.element(LaurentPolynomial.from_mapping({3: 1, 1: 2}))
        )
        self.assertEqual(Fraction(3), image.value)
        self.assertEqual(Krasner().one, FqToKrasner(3).apply(FiniteField(3).element(2)))

    def test_homomorphism_axioms(self):
        """Zero, products and null sums are preserved."""
        rng = random.Random(11)
        for hom in HOMS:
            with self.subTest(hom=str(hom)):
                self.assertEqual(hom.target.zero, hom.apply(hom.source.zero))
                self.assertEqual(hom.target.one, hom.apply(hom.source.one))
                for _ in range(25):
                    a, b = _source_sample(hom, rng), _source_sample(hom, rng)
                    self.assertEqual(hom.apply(a * b), hom.apply(a) * hom.apply(b))
                    null = _null_sample(hom, rng)
                    self.assertTrue(hom.source.is_null(null))
                    image = FormalSum.of(hom.target, [hom.apply(t) for t in null])
                    self.assertTrue(hom.target.is_null(image))

    def test_fibres(self):
        """Finite sources have finite fibres."""
        quotient = QuotientMap(7, frozenset({1, 2, 4}))
        fibre = quotient.fibre(quotient.target.element(3))
        self.assertEqual([3, 5, 6], [element.value for element in fibre])
        self.assertEqual(
            [1, 2, 3, 4], [e.value for e in FqToKrasner(5).fibre(Krasner().one)]
        )
        self.assertEqual(constants.INFINITE, RationalToSign().fibre(Sign().one))
        self.assertEqual(
            [RationalToSign().source.zero], RationalToSign().fibre(Sign().zero)
        )

    def test_source_checked(self):
        """Elements outside the source are rejected."""
        with self.assertRaises(TagMismatch):
            RationalToSign().apply(Sign().one)

    def test_hom_to(self):
        """Source tags select the catalog homomorphism."""
        self.assertEqual(FqToKrasner(2), hom_to("fp2", Krasner()))
        self.assertEqual(FqToKrasner(3), hom_to("fp:3", Krasner()))
        target = QuotientOfFiniteField(7, frozenset({1, 2, 4}))
        self.assertEqual(QuotientMap(7, frozenset({1, 2, 4})), hom_to("fp:7", target))
        self.assertEqual(RationalToSign(), hom_to("rational", Sign()))
        with self.assertRaises(UnsupportedTract):
            hom_to("gaussian", Sign())
