# coding=utf-8

"""Realize a zero or sign pattern by a low rank rational matrix."""

from pathlib import Path

from django.core.management.base import CommandError

from tractrank import constants
from tractrank.linalg.text import write_matrix
from tractrank.management.base import TractRankCommand
from tractrank.ranks.matroidal import minimum_nonzeros
from tractrank.ranks.sign_changes import sigma
from tractrank.realize import (
    epic_lift,
    realize_sign_low_rank_via_alt,
    realize_sign_pattern,
    realize_zero_pattern,
)

SIGN_CONSTRUCTIONS = {
    constants.KIND_SIGN: realize_sign_pattern,
    constants.KIND_SIGN_ALTERNATING: realize_sign_low_rank_via_alt,
}


class Command(TractRankCommand):
    """Build and verify a rational realization of a pattern.

    For zero patterns `--bound k` asks for rank at most `k`, that is for at
    least `n - k + 1` nonzeros per row; without it the sparsest row decides.
    For sign patterns the bound defaults to one more than the largest number
    of generalized sign changes in a row. Epic lifts go into the row space of
    the rational `--witness` matrix.
    """

    help = "Realize a pattern over Q: --kind zero|sign|sign-alt|epic."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--in", dest="input", required=True, help="Pattern file.")
        parser.add_argument("--kind", choices=constants.REALIZATION_KINDS, required=True)
        parser.add_argument("--bound", type=int, default=None, help="Rank bound k.")
        parser.add_argument("--witness", default=None, help="Rational matrix for epic lifts.")
        parser.add_argument("--out", default=None, help="Where to write the realization.")

    def run(self, **options):
        pattern = self.load(options["input"])
        kind, bound = options["kind"], options["bound"]
        if kind == constants.KIND_ZERO:
            t = minimum_nonzeros(pattern) if bound is None else pattern.n - bound + 1
            result = realize_zero_pattern(pattern, t)
        elif kind == constants.KIND_EPIC:
            if not options["witness"]:
                raise CommandError("Epic lifts need --witness.")
            result = epic_lift(pattern, self.load(options["witness"]), options["seed"])
        else:
            if bound is None:
                bound = max((sigma(row) for row in pattern.values()), default=0) + 1
            result = SIGN_CONSTRUCTIONS[kind](pattern, bound)
        text = write_matrix(result.matrix)
        if options["out"]:
            Path(options["out"]).write_text(text, encoding="utf-8")
        self.write_json(options["json_path"], result.as_dict())
        summary = (
            f"rank {result.rank} <= {result.claimed_rank_bound}, "
            f"{'verified' if result.verified else 'NOT verified'}"
        )
        return summary if options["out"] else f"{text}{summary}"
