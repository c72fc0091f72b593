# coding=utf-8

"""Determinantal and triangular ranks."""

import itertools
import logging
from functools import lru_cache
from typing import List, Tuple

from tractrank import constants, utilities
from tractrank.exceptions import UnsupportedTract
from tractrank.linalg import is_singular
from tractrank.linalg.matrix import TractMatrix
from tractrank.ranks.report import RankResult
from tractrank.tracts import Krasner

logger = logging.getLogger(__name__)


def r_det(matrix: TractMatrix) -> RankResult:
    """The largest order of a square submatrix with a non-null formal determinant.

    Orders are tried from `min(m, n)` down; the witness is the first
    non-singular submatrix in lexicographic order of (rows, columns).
    """
    size = min(matrix.m, matrix.n)
    utilities.check_guard(constants.GUARD_DET_RANK_SIZE, size)
    for order in range(size, 0, -1):
        for rows in itertools.combinations(range(matrix.m), order):
            for columns in itertools.combinations(range(matrix.n), order):
                if not is_singular(matrix.submatrix(rows, columns)):
                    logger.debug("Non-singular %d-minor at %s x %s.", order, rows, columns)
                    return RankResult(
                        constants.RANK_DET,
                        order,
                        {"rows": [i + 1 for i in rows], "columns": [j + 1 for j in columns]},
                    )
    return RankResult(constants.RANK_DET, 0, {"rows": [], "columns": []})


def r_tri(matrix: TractMatrix) -> RankResult:
    """The triangular rank of a zero-nonzero pattern.

    The largest `r` such that rows `i_1..i_r` and columns `j_1..j_r` give a
    nonzero diagonal `(i_k, j_k)` with zeros at `(i_k, j_l)` for `l < k`.
    A row can only follow the chosen columns if it is zero on all of them,
    so the search state is the set of chosen columns alone.

    :param matrix: A Krasner matrix.
    :return: The rank with the row and column sequences (1-based).
    """
    if not isinstance(matrix.tract, Krasner):
        raise UnsupportedTract(f"Triangular rank is defined on patterns, not {matrix.tract.tag}.")
    masks = matrix.row_masks()
    full = (1 << matrix.n) - 1

    @lru_cache(maxsize=None)
    def longest(chosen: int) -> Tuple[Tuple[int, int], ...]:
        best: Tuple[Tuple[int, int], ...] = ()
        for row, mask in enumerate(masks):
            if mask & chosen:
                continue
            for column in range(matrix.n):
                bit = 1 << column
                if not mask & bit:
                    continue
                tail = longest(chosen | bit)
                if len(tail) + 1 > len(best):
                    best = ((row, column),) + tail
                if len(best) == bin(full & ~chosen).count("1"):
                    return best
        return best

    diagonal: List[Tuple[int, int]] = list(longest(0))
    return RankResult(
        constants.RANK_TRI,
        len(diagonal),
        {
            "rows": [row + 1 for row, _ in diagonal],
            "columns": [column + 1 for _, column in diagonal],
        },
    )
