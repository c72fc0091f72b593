# coding=utf-8

"""Column and row ranks: the largest independent set of columns (rows)."""

import itertools
import logging
from typing import Dict, FrozenSet, List, Tuple

from tractrank import constants
from tractrank.linalg import find_dependence
from tractrank.linalg.matrix import TractMatrix, TractVector
from tractrank.ranks.report import RankResult

logger = logging.getLogger(__name__)


def _level_search(matrix: TractMatrix) -> Tuple[List[Tuple[int, ...]], Dict]:
    """Independent column sets, grown one size at a time.

    A set is only tested once all of its one-smaller subsets are known to be
    independent. Returns the largest independent sets and the dependence
    certificates found for the minimal dependent sets.
    """
    columns = matrix.column_vectors()
    independent = [()]
    certificates = {}
    for size in range(1, matrix.n + 1):
        previous = set(independent)
        level = []
        for candidate in itertools.combinations(range(matrix.n), size):
            if any(sub not in previous for sub in itertools.combinations(candidate, size - 1)):
                continue
            certificate = find_dependence([columns[j] for j in candidate])
            if certificate is None:
                level.append(candidate)
            else:
                certificates[candidate] = certificate
        if not level:
            break
        independent = level
    return independent, certificates


def r_col(matrix: TractMatrix) -> RankResult:
    """The column rank.

    :param matrix: A matrix over a tract with a dependence procedure.
    :return: The rank, witnessed by the lexicographically first largest
        independent column set (1-based).
    """
    independent, _ = _level_search(matrix)
    best = independent[0]
    logger.debug("Column rank %d over %s, witness %s.", len(best), matrix.tract.tag, best)
    return RankResult(
        constants.RANK_COL, len(best), {"columns": [j + 1 for j in best]}
    )


def r_row(matrix: TractMatrix) -> RankResult:
    """The row rank, the column rank of the transpose."""
    independent, _ = _level_search(matrix.transpose())
    best = independent[0]
    return RankResult(constants.RANK_ROW, len(best), {"rows": [i + 1 for i in best]})


def circuit_signatures(matrix: TractMatrix) -> Dict[FrozenSet[int], TractVector]:
    """Dependence certificates of the minimal dependent column sets.

    Each certificate is spread over all `n` columns, first nonzero entry one.
    """
    _, certificates = _level_search(matrix)
    signatures = {}
    for columns, certificate in certificates.items():
        entries = [matrix.tract.zero] * matrix.n
        for j, coefficient in zip(columns, certificate):
            entries[j] = coefficient
        signatures[frozenset(columns)] = TractVector(matrix.tract, tuple(entries)).normalized()
    return signatures
