# coding=utf-8

"""Recompute the known ranks and the rank relations."""

from django.core.management.base import CommandError

from tractrank import golden
from tractrank.management.base import TractRankCommand


class Command(TractRankCommand):
    """Run a golden suite and fail unless every check passes."""

    help = "Check the embedded examples or, with --suite properties, random rank relations."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--suite", choices=golden.SUITES, default=golden.SUITE_EXAMPLES)
        parser.add_argument(
            "--count", type=int, default=10, help="Random instances per property."
        )

    def run(self, **options):
        checks = golden.run_suite(options["suite"], options["seed"], options["count"])
        self.write_json(
            options["json_path"],
            {
                "suite": options["suite"],
                "checks": [
                    {
                        "name": check.name,
                        "expected": str(check.expected),
                        "computed": str(check.computed),
                        "passed": check.passed,
                    }
                    for check in checks
                ],
            },
        )
        for check in checks:
            self.stdout.write(check.line())
        failed = [check.name for check in checks if not check.passed]
        if failed:
            raise CommandError(f"{len(failed)} of {len(checks)} checks failed: {failed}")
        return f"All {len(checks)} checks passed."
