# coding=utf-8

"""Orthogonality and linear dependence over tracts."""

import itertools
import logging
from fractions import Fraction
from typing import Dict, Optional, Sequence

from tractrank import constants, utilities
from tractrank.exceptions import (
    ConstructionFailure,
    PreconditionViolation,
    TagMismatch,
    UnsupportedTract,
)
from tractrank.linalg import elimination
from tractrank.linalg.determinant import is_singular
from tractrank.linalg.matrix import TractMatrix, TractVector
from tractrank.simplex import LinearProgram, feasible_point
from tractrank.tracts import FieldTract, FormalSum, Triangle, Tropical

logger = logging.getLogger(__name__)


def orthogonal(x: TractVector, y: TractVector) -> bool:
    """Whether the formal sum of the products `x_i y_i` is null."""
    x.check_compatible(y)
    tract = x.tract
    return tract.is_null(FormalSum.of(tract, (tract.mul(a, b) for a, b in zip(x, y))))


def _check_vectors(vectors: Sequence[TractVector]) -> None:
    for vector in vectors[1:]:
        vectors[0].check_compatible(vector)


def verify_dependence(vectors: Sequence[TractVector], coefficients: TractVector) -> bool:
    """Check a dependence certificate coordinate by coordinate.

    :param vectors: The vectors, all of one length and tract.
    :param coefficients: One coefficient per vector, not all zero.
    :return: True iff every coordinate of the combination is a null sum.
    """
    if not vectors:
        raise TagMismatch("No vectors given.")
    _check_vectors(vectors)
    if coefficients.tract != vectors[0].tract or len(coefficients) != len(vectors):
        raise TagMismatch("The certificate does not match the vectors.")
    if coefficients.is_zero:
        raise PreconditionViolation("A dependence certificate cannot be all zero.")
    tract = coefficients.tract
    for coordinate in range(len(vectors[0])):
        terms = (tract.mul(c, v[coordinate]) for c, v in zip(coefficients, vectors))
        if not tract.is_null(FormalSum.of(tract, terms)):
            return False
    return True


def find_dependence(vectors: Sequence[TractVector]) -> Optional[TractVector]:
    """Search for a dependence certificate.

    Finite tracts are searched exhaustively, with the first nonzero
    coefficient fixed to one. Infinite fields use elimination, the triangle
    hyperfield a linear program and the tropical hyperfield a search over
    tie patterns.

    :param vectors: The vectors, all of one length and tract.
    :return: A certificate that passes `verify_dependence`, or None.
    """
    if not vectors:
        return None
    _check_vectors(vectors)
    tract = vectors[0].tract
    if tract.finite:
        certificate = _finite_dependence(vectors)
    elif isinstance(tract, FieldTract):
        certificate = _field_dependence(vectors)
    elif isinstance(tract, Triangle):
        certificate = _triangle_dependence(vectors)
    elif isinstance(tract, Tropical):
        certificate = _tropical_dependence(vectors)
    else:
        raise UnsupportedTract(f"No dependence search over {tract.tag}.")
    if certificate is not None and not verify_dependence(vectors, certificate):
        raise ConstructionFailure(
            f"Dependence certificate {certificate} over {tract.tag} does not verify."
        )
    return certificate


def is_independent(vectors: Sequence[TractVector]) -> bool:
    """Whether no dependence certificate exists."""
    return find_dependence(vectors) is None


def _finite_dependence(vectors: Sequence[TractVector]) -> Optional[TractVector]:
    tract = vectors[0].tract
    elements = tract.elements()
    k = len(vectors)
    for leading in range(k):
        for rest in itertools.product(elements, repeat=k - leading - 1):
            coefficients = TractVector(
                tract, (tract.zero,) * leading + (tract.one,) + rest
            )
            if verify_dependence(vectors, coefficients):
                return coefficients
    return None


def _field_dependence(vectors: Sequence[TractVector]) -> Optional[TractVector]:
    matrix = TractMatrix.from_vectors(vectors).transpose()
    kernel = elimination.nullspace(matrix)
    if not kernel:
        return None
    return kernel[0].normalized()


def _triangle_dependence(vectors: Sequence[TractVector]) -> Optional[TractVector]:
    k = len(vectors)
    program = LinearProgram(variables=k)
    program.add_equality([1] * k, 1)
    for coordinate in range(len(vectors[0])):
        magnitudes = [vector[coordinate].value for vector in vectors]
        for index in range(k):
            row = [-m for m in magnitudes]
            row[index] += 2 * magnitudes[index]
            program.add_inequality(row, 0)
    point = feasible_point(program)
    if point is None:
        return None
    return TractVector.of(vectors[0].tract, point)


def _tropical_valid(columns, coefficients: Dict[int, Fraction]) -> bool:
    for row in range(len(columns[0])):
        terms = [
            value + columns[j][row]
            for j, value in coefficients.items()
            if columns[j][row] is not None
        ]
        if terms and terms.count(max(terms)) < 2:
            return False
    return True


def _tropical_on_support(columns, support) -> Optional[Dict[int, Fraction]]:
    """Coefficients on `support` whose tie graph is connected, if any.

    A dependence of minimal support can always be shifted until every
    coefficient is tied to the root through some row, so walking spanning
    trees of the tie graph from a root fixed at zero is exhaustive.
    """
    root = support[0]
    rows = range(len(columns[0]))
    seen = set()
    stack = [{root: Fraction(0)}]
    while stack:
        assigned = stack.pop()
        if len(assigned) == len(support):
            if _tropical_valid(columns, assigned):
                return assigned
            continue
        for j in support:
            if j in assigned:
                continue
            for anchor, value in assigned.items():
                for row in rows:
                    if columns[j][row] is None or columns[anchor][row] is None:
                        continue
                    extended = dict(assigned)
                    extended[j] = value + columns[anchor][row] - columns[j][row]
                    key = frozenset(extended.items())
                    if key not in seen:
                        seen.add(key)
                        stack.append(extended)
    return None


def _tropical_dependence(vectors: Sequence[TractVector]) -> Optional[TractVector]:
    tract = vectors[0].tract
    columns = [vector.values for vector in vectors]
    k = len(vectors)
    for size in range(1, k + 1):
        for support in itertools.combinations(range(k), size):
            found = _tropical_on_support(columns, support)
            if found is not None:
                logger.debug("Tropical dependence on %s: %s", support, found)
                return TractVector.of(tract, [found.get(j) for j in range(k)])
    _confirm_tropical_independence(vectors)
    return None


def _confirm_tropical_independence(vectors: Sequence[TractVector]) -> None:
    """Independent columns must have a non-singular maximal minor."""
    k, m = len(vectors), len(vectors[0])
    if k > m or k > utilities.get_guard(constants.GUARD_DET_RANK_SIZE):
        return
    matrix = TractMatrix.from_vectors(vectors).transpose()
    for rows in itertools.combinations(range(m), k):
        if not is_singular(matrix.submatrix(rows, range(k))):
            return
    raise ConstructionFailure(
        "Tropical dependence search found no certificate, "
        "but every maximal minor is singular."
    )