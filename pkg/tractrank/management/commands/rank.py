# coding=utf-8

"""Compute ranks of a matrix file."""

from tractrank import constants
from tractrank.management.base import TractRankCommand
from tractrank.ranks.requests import parse_rank_names, rank_report


class Command(TractRankCommand):
    """Compute the requested ranks of a matrix with their witnesses."""

    help = "Compute ranks of a matrix over a tract, e.g. --ranks col,mat,phimat:fp2."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--in", dest="input", required=True, help="Matrix file.")
        parser.add_argument(
            "--ranks",
            default=f"{constants.RANK_COL},{constants.RANK_ROW}",
            help="Comma separated rank names.",
        )
        parser.add_argument(
            "--mode",
            choices=constants.MODES,
            default=None,
            help="Matroidal rank mode over the Krasner hyperfield.",
        )

    def run(self, **options):
        matrix = self.load(options["input"])
        names = parse_rank_names(options["ranks"])
        report = rank_report(matrix, names, options["mode"], options["seed"])
        self.write_json(options["json_path"], report.as_dict())
        return "\n".join(report.lines())
