# coding=utf-8

"""The phi-matroidal rank: matroids over GF(q) pushed forward along a homomorphism.

Every rank-r matroid represented over GF(q) is the column matroid of a
unique r x n matrix in reduced row echelon form, so enumerating those
matrices column by column covers every candidate exactly once. A covector
support of a matroid restricts to a covector support of every restriction,
so a partial matrix whose columns already fail the row supports is pruned.
"""

import logging
from typing import List, Optional, Sequence

from tractrank import constants, utilities
from tractrank.exceptions import ConstructionFailure, GuardExceeded, TagMismatch, UnsupportedTract
from tractrank.fmatroids import from_field_matrix, pushforward
from tractrank.linalg.matrix import TractMatrix
from tractrank.ranks.column import r_col
from tractrank.ranks.report import RankResult
from tractrank.tracts import FiniteField, Krasner, TractHom
from tractrank.tracts.finite_fields import FieldTables

logger = logging.getLogger(__name__)


class _Span:
    """An echelon basis over GF(q) on raw values, pivots normalized to one."""

    def __init__(self, tables: FieldTables):
        self.tables = tables
        self.basis: List = []

    def reduce(self, vector: Sequence[int]) -> List[int]:
        """The remainder of `vector` after eliminating every pivot."""
        add, mul, negation = self.tables.add, self.tables.mul, self.tables.negation
        vector = list(vector)
        for pivot, row in self.basis:
            factor = vector[pivot]
            if factor:
                scale = negation[factor]
                vector = [add[v][mul[scale][b]] for v, b in zip(vector, row)]
        return vector

    def add(self, vector: Sequence[int]) -> bool:
        """Extend the span; False if `vector` was already in it."""
        remainder = self.reduce(vector)
        pivot = next((i for i, v in enumerate(remainder) if v), None)
        if pivot is None:
            return False
        scale = self.tables.inverse[remainder[pivot]]
        self.basis.append((pivot, [self.tables.mul[scale][v] for v in remainder]))
        return True

    def contains(self, vector: Sequence[int]) -> bool:
        """Whether `vector` lies in the span."""
        return not any(self.reduce(vector))


def _supports_are_covectors(tables: FieldTables, columns: List, masks: List[int]) -> bool:
    """Whether each row support, cut to the first columns, has a flat complement."""
    width = len(columns)
    for mask in masks:
        span = _Span(tables)
        for j in range(width):
            if not mask >> j & 1:
                span.add(columns[j])
        if any(mask >> j & 1 and span.contains(columns[j]) for j in range(width)):
            return False
    return True


def _echelon_candidates(tables: FieldTables, n: int, rank: int, masks: List[int]):
    """Yield the columns of every rank-`rank` echelon matrix passing the prefix test."""
    q = tables.order
    columns: List = []

    def extend(pivots: int):
        index = len(columns)
        if index == n:
            if pivots == rank:
                yield [list(column) for column in columns]
            return
        if rank - pivots > n - index:
            return
        options = []
        if pivots < rank:
            options.append(([1 if i == pivots else 0 for i in range(rank)], 1))
        for code in range(q**pivots):
            column = [0] * rank
            for i in range(pivots):
                code, column[i] = divmod(code, q)
            options.append((column, 0))
        for option, step in options:
            columns.append(option)
            if _supports_are_covectors(tables, columns, masks):
                yield from extend(pivots + step)
            columns.pop()

    yield from extend(0)


def _check(hom: TractHom, matrix: TractMatrix) -> FiniteField:
    source = hom.source
    if not isinstance(source, FiniteField):
        raise UnsupportedTract(f"phi-matroidal rank needs a finite field source, not {source.tag}.")
    if hom.target != matrix.tract:
        raise TagMismatch(f"{hom} does not end at {matrix.tract.tag}.")
    utilities.check_guard(constants.GUARD_PHI_FIELD_ORDER, source.order)
    utilities.check_guard(constants.GUARD_PHI_COLUMNS, matrix.n)
    return source


def phi_search(hom: TractHom, matrix: TractMatrix, rank: int) -> Optional[List[List[int]]]:
    """An echelon matrix over the source of `hom` whose push-forward has every row as a covector.

    :param hom: A homomorphism out of GF(q).
    :param matrix: The matrix over the target of `hom`.
    :param rank: The number of rows of the echelon matrix.
    :return: The echelon matrix as raw values, or None.
    """
    source = _check(hom, matrix)
    masks = matrix.row_masks()
    if rank == 0:
        return [] if not any(masks) else None
    exact = isinstance(hom.target, Krasner)
    rows = matrix.row_vectors()
    tried = 0
    for columns in _echelon_candidates(source.tables, matrix.n, rank, masks):
        tried += 1
        echelon = [[column[i] for column in columns] for i in range(rank)]
        if exact:
            logger.debug("Echelon witness of rank %d after %d candidates.", rank, tried)
            return echelon
        pushed = pushforward(hom, from_field_matrix(TractMatrix.of(source, echelon)))
        if all(pushed.is_covector(row) for row in rows):
            logger.debug("Echelon witness of rank %d after %d candidates.", rank, tried)
            return echelon
    logger.debug("No echelon witness of rank %d among %d candidates.", rank, tried)
    return None


def r_phi_mat(hom: TractHom, matrix: TractMatrix, start: Optional[int] = None) -> RankResult:
    """The smallest rank of a GF(q)-matroid whose push-forward has every row as a covector.

    The search starts at the column rank, a lower bound for every matroidal
    rank, and stops at the `phi_rank` guard.

    :param hom: A homomorphism from GF(q) to the tract of `matrix`.
    :param matrix: The matrix.
    :param start: First rank to try, the column rank by default.
    :return: The rank with the echelon witness.
    """
    _check(hom, matrix)
    first = r_col(matrix).value if start is None else start
    limit = utilities.get_guard(constants.GUARD_PHI_RANK)
    for rank in range(first, matrix.n + 1):
        if rank > limit:
            raise GuardExceeded(constants.GUARD_PHI_RANK, limit, rank)
        echelon = phi_search(hom, matrix, rank)
        if echelon is not None:
            return RankResult(
                constants.RANK_PHI_MAT,
                rank,
                {"hom": hom.tag, "field": hom.source.tag, "matrix": echelon},
            )
    raise ConstructionFailure(f"No echelon witness up to rank {matrix.n}.")
