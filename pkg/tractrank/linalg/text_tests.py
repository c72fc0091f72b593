# coding=utf-8

"""Matrix text format tests."""

from unittest import TestCase

import pytest

from tractrank.exceptions import ParseError
from tractrank.linalg import TractMatrix, read_matrix, write_matrix
from tractrank.tracts import Phase, QuotientOfFiniteField, Sign, Tropical


@pytest.mark.unit
class Tests(TestCase):
    """Matrix text format tests."""

    def test_read(self):
        """Tags, dimensions and literals are parsed."""
        matrix = read_matrix("# example\nsign\n2 3\n+ - 0\n\n0 + +\n")
        self.assertEqual(Sign(), matrix.tract)
        self.assertEqual((2, 3), matrix.shape)
        self.assertEqual([[1, -1, 0], [0, 1, 1]], matrix.values())
        quotient = read_matrix("quotient:7:{1,2,4}\n1 2\n2 5\n")
        self.assertEqual(QuotientOfFiniteField(7, frozenset({1, 2, 4})), quotient.tract)
        self.assertEqual([[1, 3]], quotient.values())

    def test_write(self):
        """Written matrices read back unchanged."""
        for matrix in (
            TractMatrix.of(Tropical(), [[None, 0], ["-1/2", 3]]),
            TractMatrix.of(Phase(), [[(1, 1), (0, 0)], [(2, -4), (0, 1)]]),
        ):
            text = write_matrix(matrix)
            self.assertEqual(matrix, read_matrix(text))
        single = TractMatrix.of(Tropical(), [[None, "-1/2"]])
        self.assertEqual("tropical\n1 2\nninf -1/2\n", write_matrix(single))

    def test_errors(self):
        """Errors name the offending line."""
        cases = (
            ("", 1),
            ("sign\n", 2),
            ("octonion\n1 1\n1\n", 1),
            ("sign\n2\n", 2),
            ("sign\n1 2\n+\n", 3),
            ("sign\n2 2\n+ -\n+ x\n", 4),
            ("sign\n3 1\n+\n-\n", 4),
        )
        for text, line in cases:
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as caught:
                    read_matrix(text)
                self.assertEqual(line, caught.exception.line)
