# coding=utf-8

"""Realize command test cases."""

import json
import tempfile
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from tractrank.linalg import elimination
from tractrank.linalg.text import load_matrix
from tractrank.tracts import RationalToKrasner, RationalToSign
from workbench.tests import fixture


def realize(*args) -> str:
    """Run the realize command and return its output."""
    out = StringIO()
    call_command("realize", *args, stdout=out)
    return out.getvalue()


@pytest.mark.e2e
class Tests(SimpleTestCase):
    """Realize command tests."""

    def test_zero_pattern(self):
        """Two nonzeros per row in four columns give rank at most 3."""
        with tempfile.TemporaryDirectory() as directory:
            out = Path(directory) / "matrix.txt"
            output = realize(
                "--in", fixture("zero_pattern.txt"), "--kind", "zero", "--bound", "3",
                "--out", str(out),
            )
            matrix = load_matrix(out)
        self.assertIn("verified", output)
        self.assertLessEqual(elimination.rank(matrix), 3)
        self.assertEqual(matrix.map(RationalToKrasner()), load_matrix(fixture("zero_pattern.txt")))

    def test_sign_pattern(self):
        """Both sign constructions realize the pattern at rank at most 3."""
        pattern = load_matrix(fixture("sign_pattern.txt"))
        for kind in ("sign", "sign-alt"):
            with tempfile.TemporaryDirectory() as directory:
                out = Path(directory) / "matrix.txt"
                report = Path(directory) / "result.json"
                realize(
                    "--in", fixture("sign_pattern.txt"), "--kind", kind,
                    "--out", str(out), "--json", str(report),
                )
                matrix = load_matrix(out)
                data = json.loads(report.read_text(encoding="utf-8"))
            self.assertEqual(matrix.map(RationalToSign()), pattern)
            self.assertTrue(data["verified"])
            self.assertEqual(data["claimed_rank_bound"], 3)
            self.assertLessEqual(data["rank"], 3)

    def test_epic(self):
        """The binary pattern lifts to rank 3 inside the witness row space."""
        output = realize(
            "--in", fixture("f2.txt"), "--kind", "epic",
            "--witness", fixture("f2_witness.txt"), "--seed", "3",
        )
        self.assertIn("rank 3 <= 3, verified", output)
        self.assertTrue(output.startswith("rational\n4 4\n"))

    def test_epic_needs_witness(self):
        """Epic lifts need a witness."""
        with self.assertRaisesMessage(CommandError, "--witness"):
            realize("--in", fixture("f2.txt"), "--kind", "epic")

    def test_bound_too_small(self):
        """Rows sparser than the bound allows are refused."""
        with self.assertRaisesMessage(CommandError, "PreconditionViolation"):
            realize("--in", fixture("zero_pattern.txt"), "--kind", "zero", "--bound", "2")
