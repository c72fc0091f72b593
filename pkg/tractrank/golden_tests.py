# coding=utf-8

"""Golden tests."""

from unittest import TestCase

import pytest

from tractrank import golden
from tractrank.exceptions import TractRankError
from tractrank.ranks.column import r_col


@pytest.mark.unit
class Tests(TestCase):
    """Golden tests."""

    def test_shapes(self):
        """The known matrices have their expected shapes."""
        self.assertEqual((golden.sign_example().m, golden.sign_example().n), (3, 4))
        self.assertEqual((golden.regular_example().m, golden.regular_example().n), (3, 4))
        self.assertEqual((golden.deaett_pattern().m, golden.deaett_pattern().n), (8, 7))
        self.assertEqual((golden.fano_tropical().m, golden.fano_tropical().n), (7, 7))
        self.assertEqual((golden.f2_pattern().m, golden.f2_pattern().n), (4, 4))
        self.assertEqual((golden.gaussian_example().m, golden.gaussian_example().n), (2, 4))

    def test_fano_rows(self):
        """Each Fano line has three points and each point lies on three lines."""
        values = golden.fano_tropical().values()
        self.assertTrue(all(row.count(-1) == 3 for row in values))
        self.assertTrue(all(column.count(-1) == 3 for column in zip(*values)))

    def test_check_line(self):
        """Check lines name the outcome."""
        self.assertTrue(golden.GoldenCheck("x", 1, 1).passed)
        self.assertEqual(
            golden.GoldenCheck("x", 1, 2).line(), "FAIL x: expected 1, computed 2"
        )

    def test_quick_checks(self):
        """The cheap example checks pass on their own."""
        for name in (
            "sign example circuits",
            "regular partial field col/row/solutions",
            "GF(2) to K witness covector",
            "Q(i) to phase push-forward",
        ):
            expected, computed = golden.EXAMPLE_CHECKS[name]()
            self.assertEqual(expected, computed, name)
        self.assertEqual(r_col(golden.f2_pattern()).value, 3)

    @pytest.mark.golden
    def test_deaett(self):
        """The triangular example and its transpose all have rank 4."""
        expected, computed = golden.EXAMPLE_CHECKS["Deaett tri/col/row/transpose mat"]()
        self.assertEqual(expected, computed)

    def test_unknown_suite(self):
        """Only the known suites run."""
        with self.assertRaises(TractRankError):
            golden.run_suite("everything")

    @pytest.mark.slow
    @pytest.mark.golden
    def test_examples_suite(self):
        """Every known rank is recomputed."""
        checks = golden.run_suite(golden.SUITE_EXAMPLES)
        failures = [check.line() for check in checks if not check.passed]
        self.assertEqual(failures, [])

    @pytest.mark.slow
    @pytest.mark.golden
    def test_property_suite(self):
        """No counterexample among a few random instances."""
        checks = golden.run_suite(golden.SUITE_PROPERTIES, seed=0, count=2)
        self.assertEqual([check.line() for check in checks if not check.passed], [])
