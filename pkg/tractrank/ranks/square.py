# coding=utf-8

"""Square matrices over quotient hyperfields: is every lift non-singular?

For a quotient hyperfield of a field, every lift of an n x n matrix is
non-singular exactly when its n columns are independent over the
hyperfield, so the question reduces to one dependence search.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from tractrank import constants, utilities
from tractrank.exceptions import PreconditionViolation, TagMismatch, UnsupportedTract
from tractrank.linalg import find_dependence
from tractrank.linalg.matrix import TractMatrix, TractVector
from tractrank.ranks.determinantal import r_det, r_tri
from tractrank.simplex import LinearProgram, feasible_point
from tractrank.tracts import (
    Krasner,
    Phase,
    QuotientOfFiniteField,
    Sign,
    TractElement,
    Triangle,
    Tropical,
)

logger = logging.getLogger(__name__)

# Nonzero phases tried for each row by the scaling search.
PHASE_DIRECTIONS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))


@dataclass(frozen=True)
class FullRankDecision:
    """Whether every lift is non-singular; `None` when undecided."""

    full_rank: Optional[bool]
    certificate: Dict[str, Any] = field(default_factory=dict, hash=False)


@dataclass(frozen=True)
class DominanceResult:
    """Outcome of the permutation and scaling search for diagonal dominance."""

    found: bool
    permutation: Optional[List[int]] = None
    diagonal: Optional[List[Fraction]] = None


def _check_square(matrix: TractMatrix) -> None:
    if matrix.m != matrix.n:
        raise PreconditionViolation(f"Expected a square matrix, got {matrix.m} x {matrix.n}.")


def _formatted(vector: TractVector) -> List[str]:
    return [vector.tract.format(entry) for entry in vector]


def square_fullrank_quotient(
    matrix: TractMatrix, certificate: Optional[TractVector] = None
) -> FullRankDecision:
    """Decide whether every field matrix lifting `matrix` is non-singular.

    Finite quotients and the triangle and tropical hyperfields answer through
    `find_dependence` on the columns; sign and tropical answers are compared
    with the determinantal rank. Over the phase hyperfield a matrix is
    singular for some lift iff a row scaling by phases, not all zero, makes
    every column a null sum: a supplied scaling is verified, otherwise a
    discretized scaling search runs, and an undecided case is `None`.

    :param matrix: An n x n matrix.
    :param certificate: A row scaling over the phase hyperfield, optional.
    :return: The decision with its certificate.
    """
    _check_square(matrix)
    tract = matrix.tract
    if isinstance(tract, Phase):
        return _phase_decision(matrix, certificate)
    if not isinstance(tract, (QuotientOfFiniteField, Krasner, Sign, Triangle, Tropical)):
        raise UnsupportedTract(f"{tract.tag} is not handled as a quotient hyperfield.")
    dependence = find_dependence(matrix.column_vectors())
    full_rank = dependence is None
    decision: Dict[str, Any] = {}
    if dependence is not None:
        decision["dependence"] = _formatted(dependence)
    if isinstance(tract, (Sign, Tropical)):
        det = r_det(matrix)
        decision["det_rank"] = det.value
        decision["det_agrees"] = (det.value == matrix.n) == full_rank
        if not decision["det_agrees"]:
            logger.warning("Column and determinantal full rank disagree over %s.", tract.tag)
        if full_rank:
            decision["minor"] = det.witness
    return FullRankDecision(full_rank, decision)


def is_colopsided(directions: Sequence) -> bool:
    """Whether 0 lies outside the convex hull of the nonzero directions.

    Zero entries are ignored; a sequence without nonzero entries is not
    colopsided.

    :param directions: Phase elements or integer pairs.
    """
    points = []
    for direction in directions:
        value = direction.value if isinstance(direction, TractElement) else tuple(direction)
        if value != (0, 0):
            points.append(value)
    if not points:
        return False
    program = LinearProgram(variables=len(points))
    program.add_equality([1] * len(points), 1)
    for axis in (0, 1):
        program.add_equality([point[axis] for point in points], 0)
    return feasible_point(program) is None


def verify_phase_singular_certificate(matrix: TractMatrix, scaling: TractVector) -> bool:
    """Whether scaling the rows by `scaling` makes every column a null sum.

    A null column has zero as a combination of its nonzero directions with
    strictly positive weights, which is stronger than not being colopsided:
    zero on the boundary of the convex hull does not count. A passing
    scaling shows that some lift of `matrix` is singular.
    """
    if not isinstance(matrix.tract, Phase) or scaling.tract != matrix.tract:
        raise TagMismatch("Phase certificates need a phase matrix and a phase scaling.")
    if len(scaling) != matrix.m:
        raise TagMismatch(f"Scaling of length {len(scaling)} for {matrix.m} rows.")
    if scaling.is_zero:
        return False
    tract = matrix.tract
    for column in range(matrix.n):
        scaled = [tract.mul(scaling[row], matrix[row, column]) for row in range(matrix.m)]
        if not tract.is_null_of(scaled):
            return False
    return True


def _pattern(matrix: TractMatrix) -> TractMatrix:
    return TractMatrix.of(
        Krasner(), [[0 if entry.is_zero else 1 for entry in row] for row in matrix.rows]
    )


def _phase_decision(matrix: TractMatrix, certificate: Optional[TractVector]) -> FullRankDecision:
    if certificate is not None:
        if verify_phase_singular_certificate(matrix, certificate):
            return FullRankDecision(False, {"scaling": _formatted(certificate)})
        logger.info("The supplied phase scaling does not certify singularity.")
    triangular = r_tri(_pattern(matrix))
    if triangular.value == matrix.n:
        # A triangular arrangement with a nonzero diagonal has a nonzero determinant.
        return FullRankDecision(True, {"triangular": triangular.witness})
    utilities.check_guard(constants.GUARD_PHASE_SEARCH_SIZE, matrix.n)
    tract = matrix.tract
    options = [(0, 0)] + list(PHASE_DIRECTIONS)
    for leading in range(matrix.m):
        for rest in itertools.product(options, repeat=matrix.m - leading - 1):
            scaling = TractVector.of(tract, [(0, 0)] * leading + [(1, 0)] + list(rest))
            if verify_phase_singular_certificate(matrix, scaling):
                return FullRankDecision(False, {"scaling": _formatted(scaling)})
    return FullRankDecision(None, {"directions": len(PHASE_DIRECTIONS)})


def camion_hoffman(matrix: TractMatrix) -> DominanceResult:
    """Search a permutation P and a nonnegative diagonal D with PAD strictly diagonally dominant.

    For each permutation a linear program asks for `d >= 0` with
    `a[p(i)][i] d_i - sum_{j != i} a[p(i)][j] d_j >= 1` on every row; the
    unit right-hand side stands for strictness since the system is
    homogeneous.

    :param matrix: An n x n matrix over the triangle hyperfield.
    :return: The first permutation (1-based row order) and diagonal found.
    """
    if not isinstance(matrix.tract, Triangle):
        raise UnsupportedTract(f"Diagonal dominance over {matrix.tract.tag}.")
    _check_square(matrix)
    n = matrix.n
    utilities.check_guard(constants.GUARD_PERMUTATION_SIZE, n)
    values = matrix.values()
    for permutation in itertools.permutations(range(n)):
        program = LinearProgram(variables=n)
        for i, source in enumerate(permutation):
            row = [-values[source][j] for j in range(n)]
            row[i] = values[source][i]
            program.add_lower_bound(row, 1)
        point = feasible_point(program)
        if point is not None:
            logger.debug("Dominant after permuting rows to %s.", permutation)
            return DominanceResult(True, [source + 1 for source in permutation], point)
    return DominanceResult(False)
