# coding=utf-8

"""The formal determinant."""

import itertools
from typing import Sequence

from tractrank import constants, utilities
from tractrank.exceptions import TagMismatch
from tractrank.linalg.matrix import TractMatrix
from tractrank.tracts import FormalSum


def permutation_parity(permutation: Sequence[int]) -> int:
    """0 for even permutations, 1 for odd ones."""
    parity = 0
    seen = [False] * len(permutation)
    for start in range(len(permutation)):
        if seen[start]:
            continue
        length = 0
        index = start
        while not seen[index]:
            seen[index] = True
            index = permutation[index]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def formal_determinant(matrix: TractMatrix) -> FormalSum:
    """Expand the determinant without adding anything up.

    Every permutation with a nonzero product contributes that product,
    negated once for odd permutations.

    :param matrix: A square matrix.
    :return: The formal sum of the surviving terms.
    """
    if matrix.m != matrix.n:
        raise TagMismatch(f"Determinant of a non-square {matrix.m}x{matrix.n} matrix.")
    utilities.check_guard(constants.GUARD_DETERMINANT_SIZE, matrix.n)
    tract = matrix.tract
    terms = []
    for permutation in itertools.permutations(range(matrix.n)):
        entries = [matrix[i, permutation[i]] for i in range(matrix.n)]
        if any(entry.is_zero for entry in entries):
            continue
        term = tract.product(entries)
        if permutation_parity(permutation):
            term = tract.neg(term)
        terms.append(term)
    return FormalSum.of(tract, terms)


def is_singular(matrix: TractMatrix) -> bool:
    """Whether the formal determinant is null."""
    return matrix.tract.is_null(formal_determinant(matrix))
