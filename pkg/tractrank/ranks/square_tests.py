# coding=utf-8

"""Square full rank tests."""

import random
from fractions import Fraction
from unittest import TestCase

import pytest
from django.test import override_settings

from tractrank.exceptions import (
    GuardExceeded,
    PreconditionViolation,
    TagMismatch,
    UnsupportedTract,
)
from tractrank.linalg.matrix import TractMatrix, TractVector
from tractrank.ranks.square import (
    camion_hoffman,
    is_colopsided,
    square_fullrank_quotient,
    verify_phase_singular_certificate,
)
from tractrank.tracts import Krasner, Phase, Rational, Sign, Triangle, Tropical

ONE, ZERO, MINUS = (1, 0), (0, 0), (-1, 0)


@pytest.mark.unit
class Tests(TestCase):
    """Square full rank tests."""

    def test_square_only(self):
        """Rectangular matrices are refused."""
        with self.assertRaises(PreconditionViolation):
            square_fullrank_quotient(TractMatrix.of(Krasner(), [[1, 1]]))

    def test_krasner(self):
        """A pattern forces non-singular lifts iff its columns are independent."""
        identity = square_fullrank_quotient(TractMatrix.of(Krasner(), [[1, 0], [0, 1]]))
        self.assertTrue(identity.full_rank)
        full = square_fullrank_quotient(TractMatrix.of(Krasner(), [[1, 1], [1, 1]]))
        self.assertFalse(full.full_rank)
        self.assertIn("dependence", full.certificate)

    def test_sign(self):
        """Sign decisions agree with the determinantal rank."""
        decision = square_fullrank_quotient(TractMatrix.of(Sign(), [[1, 1], [1, -1]]))
        self.assertTrue(decision.full_rank)
        self.assertTrue(decision.certificate["det_agrees"])
        self.assertEqual(decision.certificate["det_rank"], 2)
        self.assertIn("minor", decision.certificate)
        decision = square_fullrank_quotient(TractMatrix.of(Sign(), [[1, 1], [1, 1]]))
        self.assertFalse(decision.full_rank)
        self.assertTrue(decision.certificate["det_agrees"])

    def test_tropical(self):
        """A tropical matrix with a unique maximal permutation is non-singular."""
        decision = square_fullrank_quotient(TractMatrix.of(Tropical(), [[1, 0], [0, 0]]))
        self.assertTrue(decision.full_rank)
        decision = square_fullrank_quotient(TractMatrix.of(Tropical(), [[0, 0], [0, 0]]))
        self.assertFalse(decision.full_rank)

    def test_unsupported(self):
        """Fields are not quotient hyperfields here."""
        with self.assertRaises(UnsupportedTract):
            square_fullrank_quotient(TractMatrix.of(Rational(), [[1]]))

    def test_colopsided(self):
        """Zero outside the convex hull of the nonzero directions."""
        self.assertTrue(is_colopsided([(1, 0), (0, 1)]))
        self.assertTrue(is_colopsided([(1, 0), (0, 0)]))
        self.assertFalse(is_colopsided([(1, 0), (-1, 0)]))
        self.assertFalse(is_colopsided([(1, 0), (-1, 1), (-1, -1)]))
        self.assertFalse(is_colopsided([(0, 0)]))
        self.assertFalse(is_colopsided([]))
        phase = Phase()
        self.assertTrue(is_colopsided([phase.element((1, 1)), phase.element((1, -1))]))

    def test_phase_triangular(self):
        """A triangular nonzero pattern certifies non-singular lifts."""
        matrix = TractMatrix.of(Phase(), [[ONE, (0, 1)], [ZERO, (1, 1)]])
        decision = square_fullrank_quotient(matrix)
        self.assertTrue(decision.full_rank)
        self.assertIn("triangular", decision.certificate)

    def test_phase_scaling_search(self):
        """A scaling making every column a null sum shows a singular lift."""
        matrix = TractMatrix.of(Phase(), [[ONE, ONE], [ONE, ONE]])
        decision = square_fullrank_quotient(matrix)
        self.assertFalse(decision.full_rank)
        scaling = TractVector.of(Phase(), [ONE, MINUS])
        self.assertTrue(verify_phase_singular_certificate(matrix, scaling))

    def test_phase_certificate(self):
        """A supplied certificate is checked before any search."""
        phase = Phase()
        matrix = TractMatrix.of(phase, [[ONE, ONE], [ONE, ONE]])
        decision = square_fullrank_quotient(matrix, TractVector.of(phase, [ONE, MINUS]))
        self.assertFalse(decision.full_rank)
        self.assertEqual(len(decision.certificate["scaling"]), 2)
        self.assertFalse(verify_phase_singular_certificate(matrix, TractVector.zeros(phase, 2)))
        self.assertFalse(
            verify_phase_singular_certificate(matrix, TractVector.of(phase, [ONE, ONE]))
        )
        with self.assertRaises(TagMismatch):
            verify_phase_singular_certificate(matrix, TractVector.of(phase, [ONE]))

    def test_phase_certificate_boundary_column(self):
        """Zero on the boundary of a column's hull does not make it singular."""
        phase = Phase()
        matrix = TractMatrix.of(
            phase, [[ONE, ONE, ZERO], [MINUS, MINUS, ONE], [(0, 1), ZERO, MINUS]]
        )
        self.assertFalse(is_colopsided([ONE, MINUS, (0, 1)]))
        self.assertFalse(phase.is_null_of([phase.element(d) for d in (ONE, MINUS, (0, 1))]))
        scaling = TractVector.of(phase, [ONE, ONE, ONE])
        self.assertFalse(verify_phase_singular_certificate(matrix, scaling))
        decision = square_fullrank_quotient(matrix, scaling)
        self.assertIsNot(decision.full_rank, False)

    def test_phase_search_guard(self):
        """The scaling search is bounded."""
        matrix = TractMatrix.of(Phase(), [[ONE, ONE], [ONE, ONE]])
        with override_settings(TRACTRANK_GUARDS={"phase_search_size": 1}):
            with self.assertRaises(GuardExceeded):
                square_fullrank_quotient(matrix)

    def test_camion_hoffman(self):
        """Permutation and scaling making the matrix strictly diagonally dominant."""
        triangle = Triangle()
        result = camion_hoffman(TractMatrix.of(triangle, [[1, 0], [0, 1]]))
        self.assertTrue(result.found)
        self.assertEqual(result.permutation, [1, 2])
        result = camion_hoffman(TractMatrix.of(triangle, [[0, 1], [1, 0]]))
        self.assertTrue(result.found)
        self.assertEqual(result.permutation, [2, 1])
        self.assertFalse(camion_hoffman(TractMatrix.of(triangle, [[1, 1], [1, 1]])).found)

    def test_camion_hoffman_scaling(self):
        """The diagonal makes every row dominant."""
        values = [[3, 1, 1], [Fraction(1, 2), 2, 1], [1, 1, 4]]
        result = camion_hoffman(TractMatrix.of(Triangle(), values))
        self.assertTrue(result.found)
        d = result.diagonal
        for i, source in enumerate(p - 1 for p in result.permutation):
            row = values[source]
            off = sum(row[j] * d[j] for j in range(3) if j != i)
            self.assertGreater(row[i] * d[i], off)

    def test_camion_hoffman_agrees_with_columns(self):
        """Dominance is found exactly when every lift is non-singular."""
        triangle = Triangle()
        for values in ([[1, 0], [0, 1]], [[1, 1], [1, 1]], [[2, 1], [1, 2]], [[1, 2], [2, 1]]):
            matrix = TractMatrix.of(triangle, values)
            self.assertEqual(
                camion_hoffman(matrix).found, square_fullrank_quotient(matrix).full_rank
            )

    @pytest.mark.slow
    def test_camion_hoffman_agrees_on_random_matrices(self):
        """Dominance and column full rank agree on random 3 x 3 and 4 x 4 matrices."""
        generator = random.Random(21)
        triangle = Triangle()
        for _ in range(200):
            size = generator.choice((3, 4))
            values = [
                [generator.choice((0, 1, 2, 3, Fraction(1, 2))) for _ in range(size)]
                for _ in range(size)
            ]
            matrix = TractMatrix.of(triangle, values)
            self.assertEqual(
                camion_hoffman(matrix).found, square_fullrank_quotient(matrix).full_rank, values
            )

    def test_camion_hoffman_triangle_only(self):
        """Dominance needs absolute values."""
        with self.assertRaises(UnsupportedTract):
            camion_hoffman(TractMatrix.of(Sign(), [[1]]))
