# coding=utf-8

"""F-matroid tests."""

import itertools
import random
from fractions import Fraction
from unittest import TestCase

import pytest
from django.test import override_settings

from tractrank.exceptions import GuardExceeded, ParseError, TagMismatch, UnsupportedTract
from tractrank.fmatroids import (
    FMatroid,
    format_fmatroid,
    from_circuits,
    from_field_matrix,
    parse_fmatroid,
    pushforward,
    validate,
)
from tractrank.linalg import TractMatrix, TractVector
from tractrank.linalg.elimination import rank
from tractrank.matroids import fano, fano_matrix, uniform
from tractrank.tracts import (
    FiniteField,
    FqToKrasner,
    GaussianRationals,
    Krasner,
    Rational,
    RationalToKrasner,
    RationalToSign,
    Sign,
)

EXS_ROWS = [[1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]]
EXS_CIRCUITS = [[-1, 1, 1, 0], [0, 1, 1, 1], [-1, 0, 1, 1], [-1, 1, 0, 1]]


def _oriented_u24():
    """The sign matroid of four vectors in general position in the plane."""
    matrix = TractMatrix.of(Rational(), [[1, 0, 1, 1], [0, 1, 1, 2]])
    return pushforward(RationalToSign(), from_field_matrix(matrix))


def _sign_vectors(n):
    return [TractVector.of(Sign(), values) for values in itertools.product((0, 1, -1), repeat=n)]


@pytest.mark.unit
class Tests(TestCase):
    """F-matroid tests."""

    def test_validate_oriented(self):
        """A sign matroid pushed from Q is valid."""
        matroid = _oriented_u24()
        self.assertEqual(uniform(2, 4), matroid.underlying)
        self.assertTrue(validate(matroid).valid)
        self.assertEqual(4, len(matroid.circuits()))
        self.assertEqual(4, len(matroid.cocircuits()))

    def test_validate_flipped_sign(self):
        """Flipping one entry of one circuit breaks orthogonality."""
        matroid = _oriented_u24()
        support, circuit = sorted(matroid.circuit_sigs.items(), key=lambda item: sorted(item[0]))[0]
        last = max(support)
        entries = list(circuit.entries)
        entries[last] = -entries[last]
        circuits = dict(matroid.circuit_sigs)
        circuits[support] = TractVector(Sign(), tuple(entries))
        broken = FMatroid(Sign(), matroid.underlying, circuits, matroid.cocircuit_sigs)
        report = validate(broken)
        self.assertFalse(report)
        self.assertTrue(any("not orthogonal" in v for v in report.violations))

    def test_validate_incomplete_signatures(self):
        """Missing or misplaced signatures are reported."""
        matroid = _oriented_u24()
        report = validate(FMatroid(Sign(), matroid.underlying, matroid.circuit_sigs, {}))
        self.assertEqual(4, len(report.violations))
        self.assertTrue(all(v.startswith("No cocircuit") for v in report.violations))

    def test_sign_circuits_without_orientation(self):
        """The four 3-term sign circuits of the rows below admit no cocircuits."""
        circuits = [TractVector.of(Sign(), c) for c in EXS_CIRCUITS]
        matroid = from_circuits(Sign(), 4, circuits)
        self.assertEqual(uniform(2, 4), matroid.underlying)
        self.assertNotIn(frozenset({0, 1, 2}), matroid.cocircuit_sigs)
        self.assertFalse(validate(matroid))
        for row in EXS_ROWS:
            self.assertTrue(matroid.is_covector(TractVector.of(Sign(), row)))

    def test_dual(self):
        """Duality is an involution and swaps vectors with covectors."""
        matroid = _oriented_u24()
        self.assertEqual(matroid, matroid.dual.dual)
        self.assertEqual(2, matroid.dual.rank)
        self.assertTrue(validate(matroid.dual))
        for vector in _sign_vectors(4):
            self.assertEqual(matroid.is_covector(vector), matroid.dual.is_vector(vector))
            self.assertEqual(matroid.is_vector(vector), matroid.dual.is_covector(vector))

    def test_covectors(self):
        """Row covectors, the zero vector and length checks."""
        matroid = _oriented_u24()
        self.assertTrue(matroid.is_covector(TractVector.of(Sign(), [1, 0, 1, 1])))
        self.assertTrue(matroid.is_covector(TractVector.zeros(Sign(), 4)))
        self.assertTrue(matroid.is_vector(TractVector.zeros(Sign(), 4)))
        with self.assertRaises(TagMismatch):
            matroid.is_covector(TractVector.zeros(Sign(), 3))
        with self.assertRaises(TagMismatch):
            matroid.is_covector(TractVector.zeros(Krasner(), 4))

    def test_pushforward_creates_covectors(self):
        """(0,1,1,1) becomes a covector only after pushing GF(2) to K."""
        gf2 = FiniteField(2)
        witness = from_field_matrix(TractMatrix.of(gf2, [[1, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1]]))
        self.assertFalse(witness.is_covector(TractVector.of(gf2, [0, 1, 1, 1])))
        pushed = pushforward(FqToKrasner(2), witness)
        self.assertTrue(pushed.is_covector(TractVector.of(Krasner(), [0, 1, 1, 1])))

    def test_pushforward(self):
        """Supports survive push-forwards, and so does validity."""
        pushed = pushforward(FqToKrasner(2), from_field_matrix(fano_matrix()))
        self.assertEqual(fano(), pushed.underlying)
        self.assertTrue(validate(pushed))
        vandermonde = TractMatrix.of(
            Rational(), [[Fraction(x) ** p for x in range(1, 6)] for p in range(3)]
        )
        pushed = pushforward(RationalToKrasner(), from_field_matrix(vandermonde))
        self.assertEqual(uniform(3, 5), pushed.underlying)
        self.assertTrue(validate(pushed))
        with self.assertRaises(TagMismatch):
            pushforward(FqToKrasner(3), from_field_matrix(fano_matrix()))

    def test_pushforward_commutes_with_dual(self):
        """Pushing the dual forward is dualizing the push-forward."""
        matrix = TractMatrix.of(Rational(), [[1, 2, 0, -1, 3], [0, 1, 1, 1, -2]])
        matroid = from_field_matrix(matrix)
        hom = RationalToSign()
        self.assertEqual(pushforward(hom, matroid.dual), pushforward(hom, matroid).dual)

    def test_from_field_matrix(self):
        """Identity, a single row and the Gaussian example."""
        identity = from_field_matrix(TractMatrix.of(Rational(), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
        self.assertEqual(frozenset(), identity.underlying.circuits)
        self.assertEqual(
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[int(v) for v in c.values] for c in identity.cocircuits()],
        )
        single = from_field_matrix(TractMatrix.of(Rational(), [[1, 1]]))
        self.assertEqual([[1, -1]], [c.values for c in single.circuits()])
        gaussian = GaussianRationals()
        anderson = TractMatrix.of(gaussian, [["1", "1+i", "1", "0"], ["1+i", "4i", "0", "1"]])
        matroid = from_field_matrix(anderson)
        self.assertEqual(2, matroid.rank)
        self.assertTrue(validate(matroid))
        with self.assertRaises(UnsupportedTract):
            from_field_matrix(TractMatrix.of(Sign(), [[1, 1]]))

    def test_from_field_matrix_guard(self):
        """Infinite fields are guarded by the column count."""
        matrix = TractMatrix.of(Rational(), [[1, 1, 1, 1]])
        with override_settings(TRACTRANK_GUARDS={"minimal_support_columns": 3}):
            with self.assertRaises(GuardExceeded):
                from_field_matrix(matrix)
            from_field_matrix(TractMatrix.of(FiniteField(2), [[1, 1, 1, 1]]))

    def test_random_field_matrices(self):
        """Random 3x5 matrices give valid F-matroids of the right rank."""
        source = random.Random(7)
        for tract, values in (
            (FiniteField(2), [0, 1]),
            (FiniteField(3), [0, 1, 2]),
            (Rational(), [-2, -1, 0, 1, 2, 3]),
        ):
            for _ in range(6):
                matrix = TractMatrix.of(
                    tract, [[source.choice(values) for _ in range(5)] for _ in range(3)]
                )
                matroid = from_field_matrix(matrix)
                with self.subTest(tract=tract.tag, matrix=str(matrix)):
                    self.assertTrue(validate(matroid))
                    self.assertEqual(rank(matrix), matroid.rank)

    def test_covectors_are_the_row_space(self):
        """Over GF(3) the covectors are exactly the row space."""
        gf3 = FiniteField(3)
        matrix = TractMatrix.of(gf3, [[1, 0, 2, 1], [0, 1, 1, 2]])
        matroid = from_field_matrix(matrix)
        row_space = set()
        for a, b in itertools.product(gf3.elements(), repeat=2):
            row_space.add(
                tuple(
                    gf3.add(gf3.mul(a, x), gf3.mul(b, y)).value
                    for x, y in zip(matrix.row(0), matrix.row(1))
                )
            )
        covectors = {
            values
            for values in itertools.product(range(3), repeat=4)
            if matroid.is_covector(TractVector.of(gf3, values))
        }
        self.assertEqual(row_space, covectors)

    def test_text_format(self):
        """F-matroids survive the text format."""
        for matroid in (_oriented_u24(), from_field_matrix(fano_matrix())):
            self.assertEqual(matroid, parse_fmatroid(format_fmatroid(matroid)))
        text = "sign\nmatroid 3\ncircuit 1 2 : + -\ncocircuit 1 4 : + +\n"
        with self.assertRaises(ParseError) as caught:
            parse_fmatroid(text)
        self.assertEqual(4, caught.exception.line)
        with self.assertRaises(ParseError):
            parse_fmatroid("sign\nmatrix 3\n")
