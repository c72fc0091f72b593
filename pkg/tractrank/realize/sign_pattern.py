# coding=utf-8

"""Low rank realizations of sign patterns.

Both constructions evaluate polynomials of degree below `k` at the points
`x_i = i`, so every realization lies in the row space of a `k x n`
Vandermonde matrix, a realization of the alternating oriented matroid of
rank `k`.
"""

import logging
from fractions import Fraction
from typing import List, Optional

import sympy

from tractrank.exceptions import ConstructionFailure, PreconditionViolation, UnsupportedTract
from tractrank.linalg.matrix import TractMatrix
from tractrank.ranks.sign_changes import is_alt_covector, sigma
from tractrank.realize.result import (
    RealizationResult,
    from_sympy,
    require_verified,
    verify_realization,
)
from tractrank.realize.zero_pattern import X, evaluation_points
from tractrank.simplex import LinearProgram, feasible_point
from tractrank.tracts import Rational, RationalToSign, Sign

logger = logging.getLogger(__name__)


def _check(chi: TractMatrix, k: int) -> List[List[int]]:
    if not isinstance(chi.tract, Sign):
        raise UnsupportedTract(f"Sign patterns are sign matrices, not {chi.tract.tag}.")
    rows = chi.values()
    for index, row in enumerate(rows):
        changes = sigma(row)
        if changes >= k:
            raise PreconditionViolation(
                f"Row {index + 1} has {changes} generalized sign changes, not fewer than {k}."
            )
    return rows


def row_polynomial(row: List[int], points) -> Optional[sympy.Poly]:
    """A polynomial whose values at `points` have the signs of `row`, None for a zero row.

    Each zero entry is a simple root. Between two consecutive nonzero
    entries the zeros in between already flip the sign once each; when that
    parity is wrong an extra root goes to the midpoint after the first of
    the two points.
    """
    nonzero = [j for j, value in enumerate(row) if value]
    if not nonzero:
        return None
    roots = [points[j] for j, value in enumerate(row) if not value]
    for a, b in zip(nonzero, nonzero[1:]):
        flips = (b - a - 1) % 2 == 1
        if flips != (row[a] != row[b]):
            roots.append((points[a] + points[a + 1]) / 2)
    if len(roots) > sigma(row):
        raise ConstructionFailure(f"{len(roots)} roots exceed the sign changes of {row}.")
    polynomial = sympy.Poly(sympy.prod([X - root for root in roots]), X)
    if sympy.sign(polynomial.eval(points[nonzero[0]])) != row[nonzero[0]]:
        polynomial = -polynomial
    return polynomial


def realize_sign_pattern(chi: TractMatrix, k: int) -> RealizationResult:
    """A rational matrix with sign pattern `chi` and rank at most `k`.

    :param chi: A sign matrix whose rows have fewer than `k` generalized
        sign changes.
    :param k: The rank bound.
    :return: The verified realization.
    """
    rows = _check(chi, k)
    points = evaluation_points(chi.n)
    realized = []
    for row in rows:
        polynomial = row_polynomial(row, points)
        if polynomial is None:
            realized.append([Fraction(0)] * chi.n)
            continue
        if polynomial.degree() > k - 1:
            raise ConstructionFailure(f"Degree {polynomial.degree()} for a rank bound of {k}.")
        realized.append([from_sympy(polynomial.eval(point)) for point in points])
    result = verify_realization(TractMatrix.of(Rational(), realized), chi, RationalToSign(), k)
    logger.debug("Sign pattern realized at rank %d <= %d.", result.rank, k)
    return require_verified(result, "The polynomial sign construction")


def _moment_curve_row(row: List[int], k: int) -> List[Fraction]:
    """Values at `x_j = j` of a polynomial of degree below `k` with the signs of `row`.

    Coefficients are split into nonnegative parts for the linear program;
    positive entries must reach 1 and negative ones -1.
    """
    n = len(row)
    powers = [[Fraction(j + 1) ** d for d in range(k)] for j in range(n)]
    program = LinearProgram(variables=2 * k)
    for j, value in enumerate(row):
        coefficients = powers[j] + [-p for p in powers[j]]
        if value == 0:
            program.add_equality(coefficients, 0)
        elif value > 0:
            program.add_lower_bound(coefficients, 1)
        else:
            program.add_inequality(coefficients, -1)
    point = feasible_point(program)
    if point is None:
        raise ConstructionFailure(f"No polynomial of degree below {k} has the signs {row}.")
    coefficients = [plus - minus for plus, minus in zip(point[:k], point[k:])]
    return [sum(c * p for c, p in zip(coefficients, powers[j])) for j in range(n)]


def realize_sign_low_rank_via_alt(chi: TractMatrix, k: int) -> RealizationResult:
    """Realize `chi` at rank at most `k` through covectors of the alternating matroid.

    Every row must be a covector of the alternating oriented matroid of rank
    `k`; its realization on the moment curve then contains a vector with
    that sign pattern, found by an exact linear program.
    """
    rows = _check(chi, k)
    if k >= chi.n:
        matrix = TractMatrix.of(Rational(), rows)
        return require_verified(
            verify_realization(matrix, chi, RationalToSign(), k), "The identity construction"
        )
    realized = []
    for index, row in enumerate(rows):
        if not is_alt_covector(row, k):
            raise ConstructionFailure(
                f"Row {index + 1} is not a covector of the alternating matroid of rank {k}."
            )
        realized.append(_moment_curve_row(row, k))
    result = verify_realization(TractMatrix.of(Rational(), realized), chi, RationalToSign(), k)
    return require_verified(result, "The moment curve construction")
