# coding=utf-8

"""Sign pattern realization tests."""

import random
from unittest import TestCase

import pytest
import sympy

from tractrank.exceptions import ConstructionFailure, PreconditionViolation, UnsupportedTract
from tractrank.linalg.matrix import TractMatrix
from tractrank.ranks.sign_changes import sigma
from tractrank.realize.sign_pattern import (
    realize_sign_low_rank_via_alt,
    realize_sign_pattern,
    row_polynomial,
)
from tractrank.realize.zero_pattern import evaluation_points
from tractrank.tracts import Krasner, RationalToSign, Sign


def _random_pattern(generator, m, n, k):
    """A sign pattern whose rows have fewer than `k` generalized sign changes."""
    rows = []
    while len(rows) < m:
        row = [generator.choice((0, 1, -1)) for _ in range(n)]
        if sigma(row) < k:
            rows.append(row)
    return TractMatrix.of(Sign(), rows)


@pytest.mark.unit
class Tests(TestCase):
    """Sign pattern realization tests."""

    def test_row_polynomial(self):
        """Zero entries are roots; sign changes add midpoint roots."""
        points = evaluation_points(3)
        self.assertEqual(row_polynomial([1, 0, -1], points).degree(), 1)
        polynomial = row_polynomial([1, 0, 1], points)
        self.assertEqual(polynomial.degree(), 2)
        self.assertEqual([sympy.sign(polynomial.eval(p)) for p in points], [1, 0, 1])
        self.assertEqual(row_polynomial([-1, -1, 1], points).degree(), 1)
        self.assertIsNone(row_polynomial([0, 0, 0], points))

    def test_realize(self):
        """The realization has the pattern and rank at most k."""
        chi = TractMatrix.of(Sign(), [[1, 0, -1], [1, 0, 1], [-1, -1, -1], [0, 0, 0]])
        result = realize_sign_pattern(chi, 3)
        self.assertTrue(result.verified)
        self.assertLessEqual(result.rank, 3)
        self.assertEqual(result.matrix.map(RationalToSign()), chi)

    def test_full_patterns(self):
        """Full sign patterns with at most k sign changes per row have rank at most k + 1."""
        generator = random.Random(5)
        for _ in range(20):
            rows = []
            while len(rows) < 4:
                row = [generator.choice((1, -1)) for _ in range(6)]
                if sigma(row) <= 2:
                    rows.append(row)
            result = realize_sign_pattern(TractMatrix.of(Sign(), rows), 3)
            self.assertLessEqual(result.rank, 3)

    def test_routes_agree(self):
        """Both constructions give the same signs below the same bound."""
        generator = random.Random(9)
        for _ in range(15):
            chi = _random_pattern(generator, 4, 5, 3)
            polynomial = realize_sign_pattern(chi, 3)
            alternating = realize_sign_low_rank_via_alt(chi, 3)
            self.assertLessEqual(polynomial.rank, 3)
            self.assertLessEqual(alternating.rank, 3)
            self.assertEqual(
                polynomial.matrix.map(RationalToSign()), alternating.matrix.map(RationalToSign())
            )

    def test_random_shapes(self):
        """Fifty patterns up to 6 x 8 realize with their signs below the bound."""
        generator = random.Random(31)
        for _ in range(50):
            m, n = generator.randint(1, 6), generator.randint(2, 8)
            k = generator.randint(2, n)
            chi = _random_pattern(generator, m, n, k)
            result = realize_sign_pattern(chi, k)
            self.assertTrue(result.verified)
            self.assertLessEqual(result.rank, k)
            self.assertEqual(result.matrix.map(RationalToSign()), chi)

    def test_alt_route_wide_bound(self):
        """A bound of at least n keeps the pattern itself."""
        chi = TractMatrix.of(Sign(), [[1, -1], [1, 1]])
        result = realize_sign_low_rank_via_alt(chi, 2)
        self.assertEqual(result.matrix.values(), [[1, -1], [1, 1]])

    def test_preconditions(self):
        """Rows with k sign changes are refused."""
        chi = TractMatrix.of(Sign(), [[1, -1, 1]])
        with self.assertRaises(PreconditionViolation):
            realize_sign_pattern(chi, 2)
        with self.assertRaises(PreconditionViolation):
            realize_sign_low_rank_via_alt(chi, 2)
        with self.assertRaises(UnsupportedTract):
            realize_sign_pattern(TractMatrix.of(Krasner(), [[1]]), 1)

    def test_construction_failure_is_an_error(self):
        """Construction failures are library errors."""
        self.assertTrue(issubclass(ConstructionFailure, ValueError))
