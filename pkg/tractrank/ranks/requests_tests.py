# coding=utf-8

"""Rank request tests."""

from unittest import TestCase

import pytest

from tractrank.exceptions import ParseError, UnsupportedTract
from tractrank.linalg.matrix import TractMatrix
from tractrank.ranks.requests import compute_rank, parse_rank_names, rank_report
from tractrank.tracts import Krasner, Sign

EXS = TractMatrix.of(Sign(), [[1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]])
F2_PATTERN = TractMatrix.of(
    Krasner(), [[1, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1], [0, 1, 1, 1]]
)


@pytest.mark.unit
class Tests(TestCase):
    """Rank request tests."""

    def test_parse(self):
        """Names are split on commas and checked."""
        self.assertEqual(parse_rank_names("col, mat,phimat:fp2"), ["col", "mat", "phimat:fp2"])
        for text in ("", "rank", "phimat", "col:fp2"):
            with self.assertRaises(ParseError):
                parse_rank_names(text)

    def test_compute(self):
        """Each name reaches its rank function."""
        self.assertEqual(compute_rank("col", EXS).value, 2)
        self.assertEqual(compute_rank("row", EXS).value, 3)
        self.assertEqual(compute_rank("tmat", EXS).value, 3)
        self.assertEqual(compute_rank("tri", F2_PATTERN).value, 3)
        self.assertEqual(compute_rank("phimat:fp2", F2_PATTERN).value, 3)
        self.assertEqual(compute_rank("preimage:fp2", F2_PATTERN).value, 4)
        with self.assertRaises(UnsupportedTract):
            compute_rank("phimat:gaussian", F2_PATTERN)

    def test_report(self):
        """The report follows the rank chain."""
        report = rank_report(F2_PATTERN, ["col", "mat", "phimat:fp2", "preimage:fp2"])
        self.assertEqual(report.values, {"col": 3, "mat": 3, "phimat": 3, "preimage": 4})
        self.assertTrue(report.chain_ok)
        self.assertEqual(report.lines()[2], "phimat:fp2: 3")
