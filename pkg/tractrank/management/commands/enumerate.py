# coding=utf-8

"""Enumerate the matroids on a small ground set."""

from collections import Counter
from pathlib import Path

from tractrank.management.base import TractRankCommand
from tractrank.matroids import enumerate_matroids, format_matroid


class Command(TractRankCommand):
    """Count the labeled matroids on `n` elements by rank, optionally writing them."""

    help = "Enumerate matroids on n elements: --n 4 [--rank-max r] [--out file]."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--n", type=int, required=True, help="Ground set size.")
        parser.add_argument("--rank-max", type=int, default=None, help="Largest rank.")
        parser.add_argument("--out", default=None, help="Write every matroid here.")

    def run(self, **options):
        counts = Counter()
        blocks = []
        for matroid in enumerate_matroids(options["n"], options["rank_max"]):
            counts[matroid.full_rank] += 1
            if options["out"]:
                blocks.append(format_matroid(matroid))
        if options["out"]:
            Path(options["out"]).write_text("\n".join(blocks), encoding="utf-8")
        total = sum(counts.values())
        self.write_json(
            options["json_path"],
            {"n": options["n"], "total": total, "by_rank": {str(r): c for r, c in counts.items()}},
        )
        lines = [f"rank {rank}: {counts[rank]}" for rank in sorted(counts)]
        lines.append(f"total: {total}")
        return "\n".join(lines)
