# coding=utf-8

"""Lift-minimum rank tests."""

from unittest import TestCase

import pytest
from django.test import override_settings

from tractrank.exceptions import GuardExceeded, TagMismatch, UnsupportedTract
from tractrank.linalg.matrix import TractMatrix
from tractrank.ranks.relative import r_preimage
from tractrank.tracts import (
    FqToKrasner,
    GaussianRationalToPhase,
    Krasner,
    Phase,
    RationalToKrasner,
    RationalToSign,
    Sign,
)

EXS = TractMatrix.of(Sign(), [[1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]])
F2_PATTERN = TractMatrix.of(
    Krasner(), [[1, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1], [0, 1, 1, 1]]
)


@pytest.mark.unit
class Tests(TestCase):
    """Lift-minimum rank tests."""

    def test_binary_lift(self):
        """The only GF(2) lift of the pattern is non-singular."""
        result = r_preimage(FqToKrasner(2), F2_PATTERN)
        self.assertEqual(result.value, 4)
        self.assertEqual(result.witness["lifts"], 1)
        self.assertEqual(result.witness["hom"], "FqToKrasner")

    def test_ternary_lifts(self):
        """Every GF(3) lift is tried and the smallest rank kept."""
        result = r_preimage(FqToKrasner(3), TractMatrix.of(Krasner(), [[1, 1], [1, 1]]))
        self.assertEqual(result.value, 1)
        self.assertEqual(result.witness["lifts"], 16)

    def test_lift_guard(self):
        """Too many lifts are refused."""
        with override_settings(TRACTRANK_GUARDS={"lift_count": 3}):
            with self.assertRaises(GuardExceeded):
                r_preimage(FqToKrasner(3), TractMatrix.of(Krasner(), [[1, 1]]))

    def test_rational_lift_of_binary_pattern(self):
        """Over Q the pattern has a rank 3 lift from the binary witness."""
        result = r_preimage(RationalToKrasner(), F2_PATTERN, seed=1)
        self.assertEqual(result.value, 3)
        self.assertEqual(result.witness["lower"], {"mat": 3})
        self.assertIn(result.witness["upper"]["construction"], ("vandermonde", "epic"))

    def test_rational_lift_vandermonde(self):
        """Dense rows lift through the Vandermonde construction; zero rows stay zero."""
        result = r_preimage(RationalToKrasner(), TractMatrix.of(Krasner(), [[1, 1, 1], [0, 0, 0]]))
        self.assertEqual(result.value, 1)
        self.assertEqual(result.witness["upper"]["lift"][1], ["0", "0", "0"])

    def test_rational_lift_of_zero(self):
        """The zero pattern lifts to the zero matrix."""
        result = r_preimage(RationalToKrasner(), TractMatrix.of(Krasner(), [[0, 0]]))
        self.assertEqual(result.value, 0)
        self.assertEqual(result.witness["upper"]["construction"], "zero")

    def test_sign_lift(self):
        """The sign example lifts at its matroidal rank."""
        result = r_preimage(RationalToSign(), EXS)
        self.assertEqual(result.value, 3)
        self.assertEqual(result.witness["lower"], {"mat": 3})

    def test_sign_lift_column_fallback(self):
        """Past the signature search guard the column rank is the lower end."""
        matrix = TractMatrix.of(Sign(), [[1, 1, 1], [1, 1, 1]])
        with override_settings(TRACTRANK_GUARDS={"sign_matroid_columns": 2}):
            result = r_preimage(RationalToSign(), matrix)
        self.assertEqual(result.value, 1)
        self.assertEqual(result.witness["lower"], {"col": 1})

    def test_mismatch(self):
        """The homomorphism must end at the matrix tract and be searchable."""
        with self.assertRaises(TagMismatch):
            r_preimage(FqToKrasner(2), EXS)
        with self.assertRaises(UnsupportedTract):
            r_preimage(GaussianRationalToPhase(), TractMatrix.of(Phase(), [[(1, 0)]]))
