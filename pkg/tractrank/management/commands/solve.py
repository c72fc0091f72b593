# coding=utf-8

"""Solve a homogeneous linear system over a finite tract."""

from tractrank.management.base import TractRankCommand
from tractrank.ranks.matroidal import tract_values
from tractrank.ranks.systems import solve_homogeneous


class Command(TractRankCommand):
    """List every nonzero solution of `A x` null, one per line."""

    help = "Solve A x = 0 exhaustively over a finite tract."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--in", dest="input", required=True, help="Matrix file.")

    def run(self, **options):
        matrix = self.load(options["input"])
        solutions = [tract_values(vector) for vector in solve_homogeneous(matrix)]
        self.write_json(options["json_path"], {"solutions": solutions})
        lines = [" ".join(solution) for solution in solutions]
        lines.append(f"{len(solutions)} nonzero solutions")
        return "\n".join(lines)
