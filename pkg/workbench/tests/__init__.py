# coding=utf-8

"""Workbench tests."""

from pathlib import Path

from django.conf import settings


def fixture(name: str) -> str:
    """Path of a matrix file in the workbench fixtures."""
    return str(Path(settings.FIXTURES_DIR) / name)
