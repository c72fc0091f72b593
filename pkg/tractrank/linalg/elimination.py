# coding=utf-8

"""Exact Gaussian elimination over field tracts."""

from typing import List, Tuple

from tractrank.exceptions import UnsupportedTract
from tractrank.linalg.matrix import TractMatrix, TractVector
from tractrank.tracts import FieldTract


def _field(matrix: TractMatrix) -> FieldTract:
    if not isinstance(matrix.tract, FieldTract):
        raise UnsupportedTract(f"Elimination needs a field, not {matrix.tract.tag}.")
    return matrix.tract


def rref(matrix: TractMatrix) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form.

    :param matrix: A matrix over a field tract.
    :return: The nonzero rows of the reduced form and the pivot columns.
    """
    field = _field(matrix)
    rows = [list(row) for row in matrix.rows]
    pivots = []
    top = 0
    for column in range(matrix.n):
        pivot = next((r for r in range(top, len(rows)) if not rows[r][column].is_zero), None)
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        scale = field.inverse(rows[top][column])
        rows[top] = [field.mul(scale, entry) for entry in rows[top]]
        for r, row in enumerate(rows):
            if r != top and not row[column].is_zero:
                factor = row[column]
                rows[r] = [
                    field.sub(entry, field.mul(factor, lead))
                    for entry, lead in zip(row, rows[top])
                ]
        pivots.append(column)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rank(matrix: TractMatrix) -> int:
    """Rank of a matrix over a field."""
    return len(rref(matrix)[1])


def nullspace(matrix: TractMatrix) -> List[TractVector]:
    """A basis of the kernel `{x : matrix x = 0}`, one vector per free column."""
    field = _field(matrix)
    rows, pivots = rref(matrix)
    basis = []
    for free in (c for c in range(matrix.n) if c not in pivots):
        entries = [field.zero] * matrix.n
        entries[free] = field.one
        for row, pivot in zip(rows, pivots):
            entries[pivot] = field.neg(row[free])
        basis.append(TractVector(field, tuple(entries)))
    return basis


def row_space_basis(matrix: TractMatrix) -> List[TractVector]:
    """The nonzero rows of the reduced row echelon form."""
    field = _field(matrix)
    return [TractVector(field, tuple(row)) for row in rref(matrix)[0]]
