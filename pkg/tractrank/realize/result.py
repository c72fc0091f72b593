# coding=utf-8

"""Realizations over Q and their verification."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict

import sympy

from tractrank.exceptions import ConstructionFailure
from tractrank.linalg import elimination
from tractrank.linalg.matrix import TractMatrix
from tractrank.tracts import Rational, TractHom

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RealizationResult:
    """A rational matrix with its claimed and verified rank."""

    matrix: TractMatrix
    claimed_rank_bound: int
    verified: bool
    rank: int

    def as_dict(self) -> Dict[str, Any]:
        """The JSON form, entries as strings."""
        return {
            "matrix": [[str(value) for value in row] for row in self.matrix.values()],
            "claimed_rank_bound": self.claimed_rank_bound,
            "verified": self.verified,
            "rank": self.rank,
        }


def to_sympy(value: Fraction) -> sympy.Rational:
    """An exact sympy rational."""
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    """A Fraction from an exact sympy rational."""
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def exact_rank(matrix: TractMatrix) -> int:
    """Rank over Q by elimination, cross-checked with sympy."""
    rank = elimination.rank(matrix)
    cross = sympy.Matrix([[to_sympy(value) for value in row] for row in matrix.values()]).rank()
    if rank != cross:
        raise ConstructionFailure(f"Elimination rank {rank} disagrees with sympy rank {cross}.")
    return rank


def verify_realization(
    matrix: TractMatrix, pattern: TractMatrix, hom: TractHom, bound: int
) -> RealizationResult:
    """Recompute the image pattern and the rank of a realization.

    :param matrix: The rational matrix.
    :param pattern: The pattern it should map onto under `hom`.
    :param hom: A homomorphism out of Q.
    :param bound: The claimed rank bound.
    :return: The result, verified iff the image is `pattern` and the rank
        is at most `bound`.
    """
    if matrix.tract != Rational():
        raise ConstructionFailure(f"Realizations are rational, got {matrix.tract.tag}.")
    rank = exact_rank(matrix)
    matches = matrix.map(hom) == pattern
    if not matches:
        logger.warning("Realization does not map onto the pattern under %s.", hom)
    return RealizationResult(matrix, bound, matches and rank <= bound, rank)


def require_verified(result: RealizationResult, construction: str) -> RealizationResult:
    """Raise `ConstructionFailure` unless the result verified."""
    if not result.verified:
        raise ConstructionFailure(
            f"{construction} produced rank {result.rank} against a bound of "
            f"{result.claimed_rank_bound}, or the wrong pattern."
        )
    return result
