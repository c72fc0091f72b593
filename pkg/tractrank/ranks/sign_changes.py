# coding=utf-8

"""Generalized sign changes and covectors of the alternating oriented matroid."""

from typing import Sequence, Union

from tractrank.exceptions import PreconditionViolation, TagMismatch
from tractrank.linalg.dependence import orthogonal
from tractrank.linalg.matrix import TractVector
from tractrank.matroids import alternating_circuits
from tractrank.tracts import Sign

SignPattern = Union[TractVector, Sequence[int]]


def sign_values(vector: SignPattern) -> list:
    """Entries of a sign pattern as integers in {0, 1, -1}."""
    if isinstance(vector, TractVector):
        if not isinstance(vector.tract, Sign):
            raise TagMismatch(f"Sign changes are counted on sign vectors, not {vector.tract.tag}.")
        return vector.values
    values = [int(value) for value in vector]
    if any(value not in (0, 1, -1) for value in values):
        raise TagMismatch(f"Invalid sign pattern {values}.")
    return values


def sigma(vector: SignPattern) -> int:
    """The largest number of sign changes over all completions of the zeros.

    Each zero may take either sign; nonzero entries are fixed.

    :param vector: A sign vector, or a sequence of 0, 1 and -1.
    :return: The generalized number of sign changes.
    """
    best = {}
    for value in sign_values(vector):
        choices = (value,) if value else (1, -1)
        if not best:
            best = {choice: 0 for choice in choices}
            continue
        best = {
            choice: max(changes + (last != choice) for last, changes in best.items())
            for choice in choices
        }
    return max(best.values(), default=0)


def is_alt_covector(vector: SignPattern, rank: int) -> bool:
    """Whether `vector` is orthogonal to every circuit of the alternating oriented matroid.

    :param vector: A sign pattern of length `n`.
    :param rank: The rank of the alternating matroid, `0 < rank < n`.
    """
    values = sign_values(vector)
    n = len(values)
    if not 0 < rank < n:
        raise PreconditionViolation(f"Alternating covectors need 0 < r < n, got {rank}, {n}.")
    sign = Sign()
    row = TractVector.of(sign, values)
    return all(
        orthogonal(row, TractVector.of(sign, circuit))
        for circuit in alternating_circuits(n, rank).entries
    )
