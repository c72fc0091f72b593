# coding=utf-8

"""Solve command test cases."""

import tempfile
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from workbench.tests import fixture


def solve(*args) -> str:
    """Run the solve command and return its output."""
    out = StringIO()
    call_command("solve", *args, stdout=out)
    return out.getvalue()


@pytest.mark.e2e
class Tests(SimpleTestCase):
    """Solve command tests."""

    def test_regular_example(self):
        """The regular partial field example has only the zero solution."""
        self.assertIn("0 nonzero solutions", solve("--in", fixture("regular.txt")))

    def test_sign_solutions(self):
        """Solutions are printed one per line."""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "system.txt"
            path.write_text("sign\n1 2\n+ +\n", encoding="utf-8")
            output = solve("--in", str(path))
        self.assertEqual(sorted(output.splitlines()[:2]), ["+ -", "- +"])
        self.assertIn("2 nonzero solutions", output)

    def test_infinite_tract(self):
        """Only finite tracts are searched."""
        with self.assertRaisesMessage(CommandError, "UnsupportedTract"):
            solve("--in", fixture("f2_witness.txt"))
