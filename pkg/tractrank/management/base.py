# coding=utf-8

"""Options and error handling shared by the tractrank commands."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from django.core.management.base import BaseCommand, CommandError

from tractrank import utilities
from tractrank.exceptions import TractRankError
from tractrank.linalg.matrix import TractMatrix
from tractrank.linalg.text import load_matrix

PACKAGE_LOGGER = "tractrank"


def parse_guard_options(options: Optional[List[str]]) -> Dict[str, int]:
    """Turn repeated `--guard name=value` options into a guard table."""
    return utilities.parse_guards(",".join(options or []))


class TractRankCommand(BaseCommand):
    """A command that runs with per-run guards and seed.

    Subclasses implement `run`; library errors become `CommandError`.
    """

    def add_arguments(self, parser):
        parser.add_argument(
            "--guard",
            action="append",
            default=[],
            metavar="NAME=VALUE",
            help="Override a size guard for this run; repeatable.",
        )
        parser.add_argument("--seed", type=int, default=None, help="Seed for random choices.")
        parser.add_argument("--json", dest="json_path", default=None, help="Write JSON here.")

    def handle(self, *args, **options):
        if options.get("verbosity", 1) > 1:
            logging.getLogger(PACKAGE_LOGGER).setLevel(logging.DEBUG)
        try:
            guards = parse_guard_options(options["guard"])
            with utilities.settings_overrides(guards, options["seed"]):
                return self.run(**options)
        except TractRankError as error:
            raise CommandError(f"{type(error).__name__}: {error}") from error

    def run(self, **options) -> Optional[str]:
        """Do the work of the command."""
        raise NotImplementedError

    def load(self, path: str) -> TractMatrix:
        """Read an input matrix file."""
        try:
            return load_matrix(path)
        except OSError as error:
            raise CommandError(f"Cannot read '{path}': {error.strerror}.") from error

    def write_json(self, path: Optional[str], data: Dict[str, Any]) -> None:
        """Write `data` as JSON when a path was given."""
        if path:
            Path(path).write_text(json.dumps(data, indent=2, sort_keys=True), encoding="utf-8")
