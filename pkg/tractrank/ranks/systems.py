# coding=utf-8

"""Homogeneous linear systems over finite tracts."""

import itertools
import logging
from typing import List

from tractrank import constants, utilities
from tractrank.exceptions import UnsupportedTract
from tractrank.linalg.matrix import TractMatrix, TractVector

logger = logging.getLogger(__name__)


def solve_homogeneous(matrix: TractMatrix) -> List[TractVector]:
    """Every nonzero `x` with `sum_j a_ij x_j` null for each row `i`.

    :param matrix: A matrix over a finite tract.
    :return: The solutions in enumeration order, zero first among entries.
    """
    tract = matrix.tract
    if not tract.finite:
        raise UnsupportedTract(f"Exhaustive solving needs a finite tract, not {tract.tag}.")
    utilities.check_guard(constants.GUARD_HOMOGENEOUS_COLUMNS, matrix.n)
    rows = matrix.row_vectors()
    solutions = []
    for entries in itertools.product(tract.elements(), repeat=matrix.n):
        candidate = TractVector(tract, entries)
        if candidate.is_zero:
            continue
        if all(tract.is_null_of(tract.mul(a, x) for a, x in zip(row, candidate)) for row in rows):
            solutions.append(candidate)
    logger.debug("%d nonzero solutions over %s.", len(solutions), tract.tag)
    return solutions
