# coding=utf-8

"""The lift-minimum rank: the smallest field rank of a matrix mapping onto `A`.

Homomorphisms out of a finite field have finite fibres and every lift is
enumerated. For Q onto the Krasner or sign hyperfield the rank is bracketed
between the matroidal rank of `A` and the best realization constructed by
`tractrank.realize`; the two ends meet for the examples of interest.
"""

import itertools
import logging
from typing import Dict, List, Optional, Tuple

from tractrank import constants, utilities
from tractrank.exceptions import (
    ConstructionFailure,
    GuardExceeded,
    PreconditionViolation,
    TagMismatch,
    UnsupportedTract,
)
from tractrank.linalg import elimination
from tractrank.linalg.matrix import TractMatrix
from tractrank.ranks.column import r_col
from tractrank.ranks.matroidal import minimum_nonzeros, r_mat_krasner, r_mat_sign
from tractrank.ranks.report import RankBounds, RankResult
from tractrank.ranks.sign_changes import sigma
from tractrank.realize.epic import epic_lift
from tractrank.realize.result import RealizationResult, verify_realization
from tractrank.realize.sign_pattern import realize_sign_pattern
from tractrank.realize.zero_pattern import realize_zero_pattern
from tractrank.tracts import FiniteField, Rational, RationalToKrasner, RationalToSign, TractHom

logger = logging.getLogger(__name__)


def _lift_values(matrix: TractMatrix) -> List[List[str]]:
    return [[matrix.tract.format(entry) for entry in row] for row in matrix.rows]


def r_preimage(
    hom: TractHom, matrix: TractMatrix, seed: Optional[int] = None, mode: Optional[str] = None
) -> RankResult:
    """The smallest rank of a matrix over the source of `hom` mapping onto `matrix`.

    :param hom: A homomorphism with finite fibres, or Q onto K or S.
    :param matrix: A matrix over the target of `hom`.
    :param seed: Seed for randomized lifts.
    :param mode: Matroidal rank mode used for the lower end over K.
    :return: The rank, or an interval, with the lift attaining the upper end.
    """
    if hom.target != matrix.tract:
        raise TagMismatch(f"{hom} does not end at {matrix.tract.tag}.")
    if isinstance(hom.source, FiniteField):
        return _finite_preimage(hom, matrix)
    if isinstance(hom, RationalToKrasner):
        return _krasner_preimage(matrix, seed, mode)
    if isinstance(hom, RationalToSign):
        return _sign_preimage(matrix)
    raise UnsupportedTract(f"No lift search along {hom}.")


def _finite_preimage(hom: TractHom, matrix: TractMatrix) -> RankResult:
    fibres = [hom.fibre(entry) for row in matrix.rows for entry in row]
    count = 1
    for fibre in fibres:
        count *= len(fibre)
    utilities.check_guard(constants.GUARD_LIFT_COUNT, count)
    best: Optional[Tuple[int, TractMatrix]] = None
    for choice in itertools.product(*fibres):
        lift = TractMatrix(
            hom.source,
            tuple(tuple(choice[i * matrix.n : (i + 1) * matrix.n]) for i in range(matrix.m)),
        )
        rank = elimination.rank(lift)
        if best is None or rank < best[0]:
            best = (rank, lift)
            if rank == 0:
                break
    rank, lift = best
    logger.debug("Minimum rank %d among %d lifts along %s.", rank, count, hom)
    return RankResult(
        constants.RANK_PREIMAGE,
        rank,
        {"hom": hom.tag, "lifts": count, "lift": _lift_values(lift)},
    )


def _bracket(lower: int, lower_witness: Dict, found: Dict[str, RealizationResult]) -> RankResult:
    construction, best = min(found.items(), key=lambda item: item[1].rank)
    if best.rank < lower:
        raise ConstructionFailure(
            f"The {construction} lift has rank {best.rank}, below the lower bound {lower}."
        )
    return RankResult(
        constants.RANK_PREIMAGE,
        RankBounds(lower, best.rank).collapsed(),
        {
            "lower": lower_witness,
            "upper": {"construction": construction, "lift": _lift_values(best.matrix)},
        },
    )


def _vandermonde_lift(matrix: TractMatrix, t: int) -> RealizationResult:
    """The Vandermonde realization of the nonzero rows, zero rows kept as they are."""
    nonzero = [i for i, mask in enumerate(matrix.row_masks()) if mask]
    realized = realize_zero_pattern(matrix.submatrix(nonzero, range(matrix.n)), t)
    rows = [[0] * matrix.n for _ in range(matrix.m)]
    for index, values in zip(nonzero, realized.matrix.values()):
        rows[index] = values
    lift = TractMatrix.of(Rational(), rows)
    return verify_realization(lift, matrix, RationalToKrasner(), realized.claimed_rank_bound)


def _krasner_preimage(matrix: TractMatrix, seed: Optional[int], mode: Optional[str]) -> RankResult:
    mat = r_mat_krasner(matrix, mode)
    found: Dict[str, RealizationResult] = {}
    t = minimum_nonzeros(matrix)
    if t:
        found["vandermonde"] = _vandermonde_lift(matrix, t)
    else:
        zero = TractMatrix.of(Rational(), [[0] * matrix.n] * matrix.m)
        found["zero"] = RealizationResult(zero, 0, True, 0)
    echelon = mat.witness.get("upper", mat.witness).get("matrix")
    if echelon:
        witness = TractMatrix.of(Rational(), echelon)
        try:
            found["epic"] = epic_lift(matrix, witness, seed)
        except PreconditionViolation:
            logger.info("The rational lift of the field witness has a different matroid.")
    return _bracket(mat.lower, {constants.RANK_MAT: mat.lower}, found)


def _sign_preimage(matrix: TractMatrix) -> RankResult:
    try:
        mat = r_mat_sign(matrix)
        lower, lower_witness = mat.value, {constants.RANK_MAT: mat.value}
    except GuardExceeded as error:
        logger.info("Falling back to the column rank: %s", error)
        col = r_col(matrix)
        lower, lower_witness = col.value, {constants.RANK_COL: col.value}
    found: Dict[str, RealizationResult] = {}
    plain = TractMatrix.of(Rational(), matrix.values())
    rank = elimination.rank(plain)
    found["pattern"] = RealizationResult(plain, rank, True, rank)
    k = max(sigma(row) for row in matrix.values()) + 1
    found["polynomial"] = realize_sign_pattern(matrix, k)
    return _bracket(lower, lower_witness, found)
