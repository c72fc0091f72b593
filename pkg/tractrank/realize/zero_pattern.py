# coding=utf-8

"""Low rank realizations of zero-nonzero patterns.

A row with support `S` becomes the evaluation at the points `x_1 < ... < x_n`
of the polynomial vanishing exactly at the points outside `S`. With at
least `t` nonzeros per row every polynomial has degree at most `n - t`, so
all rows lie in the row space of the `(n - t + 1) x n` Vandermonde matrix.
"""

import logging
from typing import List

import sympy

from tractrank.exceptions import PreconditionViolation, UnsupportedTract
from tractrank.linalg.matrix import TractMatrix, mask_indices
from tractrank.realize.result import (
    RealizationResult,
    from_sympy,
    require_verified,
    verify_realization,
)
from tractrank.tracts import Krasner, Rational, RationalToKrasner

logger = logging.getLogger(__name__)

X = sympy.Symbol("x")


def evaluation_points(n: int) -> List[sympy.Integer]:
    """The points `x_i = i` for `i = 1..n`."""
    return [sympy.Integer(i) for i in range(1, n + 1)]


def vanishing_polynomial(points, zeros) -> sympy.Poly:
    """The monic polynomial with a simple root at each of `zeros`."""
    return sympy.Poly(sympy.prod([X - points[j] for j in zeros]), X)


def realize_zero_pattern(chi: TractMatrix, t: int) -> RealizationResult:
    """A rational matrix with pattern `chi` and rank at most `n - t + 1`.

    :param chi: A Krasner matrix with at least `t` nonzeros in every row.
    :param t: The nonzero count, `1 <= t <= n`.
    :return: The verified realization.
    """
    if not isinstance(chi.tract, Krasner):
        raise UnsupportedTract(f"Zero patterns are Krasner matrices, not {chi.tract.tag}.")
    n = chi.n
    if not 1 <= t <= n:
        raise PreconditionViolation(f"Expected 1 <= t <= {n}, got {t}.")
    points = evaluation_points(n)
    rows = []
    for index, mask in enumerate(chi.row_masks()):
        support = set(mask_indices(mask))
        if len(support) < t:
            raise PreconditionViolation(
                f"Row {index + 1} has {len(support)} nonzeros, fewer than {t}."
            )
        polynomial = vanishing_polynomial(points, [j for j in range(n) if j not in support])
        rows.append([from_sympy(polynomial.eval(point)) for point in points])
    matrix = TractMatrix.of(Rational(), rows)
    result = verify_realization(matrix, chi, RationalToKrasner(), n - t + 1)
    logger.debug("Zero pattern realized at rank %d <= %d.", result.rank, n - t + 1)
    return require_verified(result, "The Vandermonde construction")
