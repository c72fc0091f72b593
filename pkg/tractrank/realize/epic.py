# coding=utf-8

"""Lifting a zero-nonzero pattern into the row space of a rational matrix.

When every row support of the pattern is a covector support of the matroid
of `B`, each support is a union of cocircuit supports, and a generic
combination of the matching minimal-support vectors of the row space of
`B` has exactly that support.
"""

import logging
from fractions import Fraction
from typing import Optional

from tractrank import constants, utilities
from tractrank.exceptions import (
    ConstructionFailure,
    PreconditionViolation,
    TagMismatch,
    UnsupportedTract,
)
from tractrank.fmatroids import from_field_matrix
from tractrank.linalg import elimination
from tractrank.linalg.matrix import TractMatrix, mask_indices
from tractrank.realize.result import RealizationResult, require_verified, verify_realization
from tractrank.tracts import Krasner, Rational, RationalToKrasner

logger = logging.getLogger(__name__)


def epic_lift(
    pattern: TractMatrix, witness: TractMatrix, seed: Optional[int] = None
) -> RealizationResult:
    """A rational lift of `pattern` inside the row space of `witness`.

    Coefficients are drawn from `1..N`, `N` doubling after each failed
    round, for at most `epic_retries` rounds per row.

    :param pattern: A Krasner matrix.
    :param witness: A rational matrix with as many columns.
    :param seed: Seed of the coefficient generator, the settings seed by default.
    :return: The verified lift, of rank at most the rank of `witness`.
    """
    if not isinstance(pattern.tract, Krasner):
        raise UnsupportedTract(f"Epic lifts start from patterns, not {pattern.tract.tag}.")
    if witness.tract != Rational():
        raise UnsupportedTract(f"Epic lifts go into Q, not {witness.tract.tag}.")
    if witness.n != pattern.n:
        raise TagMismatch(f"Witness has {witness.n} columns, the pattern {pattern.n}.")
    matroid = from_field_matrix(witness)
    generator = utilities.random_source(seed)
    rounds = utilities.get_guard(constants.GUARD_EPIC_RETRIES)
    rows = []
    for index, mask in enumerate(pattern.row_masks()):
        support = frozenset(mask_indices(mask))
        if not matroid.underlying.is_covector_support(support):
            raise PreconditionViolation(
                f"Row {index + 1} is not a covector support of the witness matroid."
            )
        pieces = [vector.values for vector in matroid.cocircuits() if vector.support() <= support]
        bound = 2
        for _ in range(rounds):
            coefficients = [generator.randint(1, bound) for _ in pieces]
            row = [
                sum((c * piece[j] for c, piece in zip(coefficients, pieces)), Fraction(0))
                for j in range(pattern.n)
            ]
            if {j for j, value in enumerate(row) if value} == support:
                rows.append(row)
                break
            bound *= 2
        else:
            raise ConstructionFailure(f"Row {index + 1} kept cancelling after {rounds} rounds.")
    rank = elimination.rank(witness)
    lift = TractMatrix.of(Rational(), rows)
    result = verify_realization(lift, pattern, RationalToKrasner(), rank)
    logger.debug("Epic lift at rank %d <= %d.", result.rank, rank)
    return require_verified(result, "The epic lift")
