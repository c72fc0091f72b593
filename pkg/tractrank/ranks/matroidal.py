# coding=utf-8

"""Matroidal ranks: the smallest matroid over the tract having every row as a covector.

Over the Krasner hyperfield a row is a covector exactly when the complement
of its support is a flat, so the search runs over classical matroids. Over
other finite tracts every underlying matroid is completed by a backtracking
search over circuit signatures. Over the tropical hyperfield only trivially
valued matroids are searched, which gives an upper bound.
"""

import itertools
import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence

from tractrank import constants, utilities
from tractrank.exceptions import ConstructionFailure, GuardExceeded, UnsupportedTract
from tractrank.fmatroids import FMatroid, constant_signatures, validate
from tractrank.linalg import elimination
from tractrank.linalg.dependence import orthogonal
from tractrank.linalg.matrix import TractMatrix, TractVector, mask_indices
from tractrank.matroids import Matroid, enumerate_matroids, sparse_paving, uniform
from tractrank.ranks.column import r_col
from tractrank.ranks.phi import phi_search
from tractrank.ranks.report import RankBounds, RankResult
from tractrank.tracts import FieldTract, FqToKrasner, Krasner, Sign, Tract, Tropical

logger = logging.getLogger(__name__)

# Fields tried for an upper witness of the Krasner matroidal rank.
WITNESS_FIELD_ORDERS = (2, 3)


def _one_based(masks: Sequence[int]) -> List[List[int]]:
    return [[e + 1 for e in mask_indices(mask)] for mask in masks]


def _matroid_witness(matroid: Matroid) -> Dict:
    return {"rank": matroid.full_rank, "circuits": _one_based(matroid.masks)}


def _covector_prune(masks: Sequence[int]):
    """Keep a partial matroid only if every row support, cut to it, is a covector support."""

    def prune(partial: Matroid) -> bool:
        return all(partial.is_covector_mask(mask & partial.ground_mask) for mask in masks)

    return prune


def _matroids_of_rank(n: int, rank: int, prune) -> Iterator[Matroid]:
    for matroid in enumerate_matroids(n, r_max=rank, prune=prune):
        if matroid.full_rank == rank:
            yield matroid


def _verify_rows(witness: FMatroid, matrix: TractMatrix) -> None:
    if not all(witness.is_covector(row) for row in matrix.row_vectors()):
        raise ConstructionFailure(f"A row of the matrix is not a covector of {witness}.")


def minimum_nonzeros(matrix: TractMatrix) -> int:
    """The fewest nonzeros in a nonzero row, 0 for the zero matrix."""
    counts = [bin(mask).count("1") for mask in matrix.row_masks() if mask]
    return min(counts) if counts else 0


def uniform_upper_bound(matrix: TractMatrix) -> int:
    """`n - t + 1` for `t` the fewest nonzeros in a nonzero row, 0 for the zero matrix.

    A support of size at least `t` has a complement of fewer than `n - t + 1`
    elements, which is a flat of `U_{n-t+1,n}`.
    """
    t = minimum_nonzeros(matrix)
    return matrix.n - t + 1 if t else 0


def sparse_paving_witness(matrix: TractMatrix, rank: int) -> Optional[Matroid]:
    """The sparse paving matroid of rank `rank` having every row as a covector, if any.

    The flats of a sparse paving matroid of rank `r` other than the ground
    set are the sets of at most `r - 2` elements, the `(r - 1)`-sets inside
    no circuit-hyperplane and the circuit-hyperplanes. Every row complement
    of `rank` elements must therefore be a circuit-hyperplane, and these
    are the only ones needed.

    :param matrix: A Krasner matrix.
    :param rank: The rank, with `0 < rank < n`.
    :return: The matroid, or None when no sparse paving matroid of this rank fits.
    """
    n = matrix.n
    if not 0 < rank < n:
        return None
    ground = (1 << n) - 1
    complements = {ground & ~mask for mask in matrix.row_masks() if mask}
    hyperplanes = [c for c in complements if bin(c).count("1") == rank]
    for first, second in itertools.combinations(hyperplanes, 2):
        if bin(first & second).count("1") > rank - 2:
            return None
    for complement in complements:
        size = bin(complement).count("1")
        if size > rank:
            return None
        if size == rank - 1 and any(h & complement == complement for h in hyperplanes):
            return None
    return sparse_paving(n, rank, [mask_indices(h) for h in hyperplanes])


def r_mat_krasner(matrix: TractMatrix, mode: Optional[str] = None) -> RankResult:
    """The matroidal rank of a zero-nonzero pattern.

    :param matrix: A Krasner matrix.
    :param mode: `exact` scans every matroid on the columns by increasing
        rank; `bounds` reports the column rank as lower end and the best
        uniform, GF(q)-represented or sparse paving witness as upper end.
        Defaults to the `TRACTRANK_MATROIDAL_MODE` setting.
    :return: The rank, or an interval in bounds mode, with its witness.
    """
    if not isinstance(matrix.tract, Krasner):
        raise UnsupportedTract(f"Pattern matroidal rank over {matrix.tract.tag}.")
    mode = mode or utilities.matroidal_mode()
    if mode not in constants.MODES:
        raise UnsupportedTract(f"Unknown matroidal rank mode '{mode}'.")
    lower = r_col(matrix)
    if mode == constants.MODE_EXACT:
        return _krasner_exact(matrix, lower.value)
    return _krasner_bounds(matrix, lower)


def _krasner_exact(matrix: TractMatrix, start: int) -> RankResult:
    utilities.check_guard(constants.GUARD_ENUMERATION_SIZE, matrix.n)
    prune = _covector_prune(matrix.row_masks())
    for rank in range(start, matrix.n + 1):
        for matroid in _matroids_of_rank(matrix.n, rank, prune):
            _verify_rows(constant_signatures(matrix.tract, matroid), matrix)
            logger.debug("Exact pattern matroidal rank %d: %s", rank, matroid)
            return RankResult(constants.RANK_MAT, rank, {"matroid": _matroid_witness(matroid)})
    raise ConstructionFailure("The free matroid should make every row a covector.")


def _krasner_bounds(matrix: TractMatrix, lower: RankResult) -> RankResult:
    upper = uniform_upper_bound(matrix)
    upper_witness: Dict = {"uniform": [upper, matrix.n]}
    _verify_rows(constant_signatures(matrix.tract, uniform(upper, matrix.n)), matrix)
    limit = utilities.get_guard(constants.GUARD_PHI_RANK)
    for order in WITNESS_FIELD_ORDERS:
        hom = FqToKrasner(order)
        try:
            for rank in range(lower.value, min(upper, limit + 1)):
                echelon = phi_search(hom, matrix, rank)
                if echelon is not None:
                    upper = rank
                    upper_witness = {"field": hom.source.tag, "matrix": echelon}
                    break
        except GuardExceeded as error:
            logger.debug("Skipping the GF(%d) witness search: %s", order, error)
    for rank in range(lower.value, upper):
        matroid = sparse_paving_witness(matrix, rank)
        if matroid is not None:
            _verify_rows(constant_signatures(matrix.tract, matroid), matrix)
            upper = rank
            upper_witness = {"sparse_paving": _matroid_witness(matroid)}
            break
    return RankResult(
        constants.RANK_MAT,
        RankBounds(lower.value, upper).collapsed(),
        {"lower": lower.witness, "upper": upper_witness},
    )


def _normalized_vectors(tract: Tract, n: int, support: FrozenSet[int]) -> List[TractVector]:
    """Every vector on `support` with first entry one."""
    first, *rest = sorted(support)
    vectors = []
    for choice in itertools.product(tract.elements()[1:], repeat=len(rest)):
        entries = [tract.zero] * n
        entries[first] = tract.one
        for index, unit in zip(rest, choice):
            entries[index] = unit
        vectors.append(TractVector(tract, tuple(entries)))
    return vectors


def complete_signatures(
    tract: Tract, matroid: Matroid, rows: Sequence[TractVector]
) -> Optional[FMatroid]:
    """A matroid over `tract` with underlying `matroid` and every row a covector.

    Circuit signatures are restricted up front to those orthogonal to every
    row. They are then chosen circuit by circuit while the candidate
    cocircuit signatures are narrowed to those orthogonal to every chosen
    circuit; a cocircuit left without candidates ends the branch.
    """
    n = matroid.n
    circuits = sorted(matroid.circuits, key=sorted)
    circuit_options = []
    for support in circuits:
        options = [
            v for v in _normalized_vectors(tract, n, support) if all(orthogonal(v, r) for r in rows)
        ]
        if not options:
            return None
        circuit_options.append(options)
    cocircuits = sorted(matroid.cocircuits, key=sorted)
    initial = [_normalized_vectors(tract, n, support) for support in cocircuits]

    def search(index: int, pools: List[List[TractVector]]):
        if index == len(circuits):
            return [], pools
        for option in circuit_options[index]:
            narrowed = [[d for d in pool if orthogonal(option, d)] for pool in pools]
            if not all(narrowed):
                continue
            found = search(index + 1, narrowed)
            if found is not None:
                return [option] + found[0], found[1]
        return None

    found = search(0, initial)
    if found is None:
        return None
    chosen, pools = found
    return FMatroid(
        tract,
        matroid,
        dict(zip(circuits, chosen)),
        {support: pool[0] for support, pool in zip(cocircuits, pools)},
    )


def r_mat_finite(matrix: TractMatrix) -> RankResult:
    """The matroidal rank over a finite tract such as the sign hyperfield.

    For each rank from the column rank upward, every matroid on the columns
    whose covector supports admit the row supports is completed to a matroid
    over the tract, if possible, by `complete_signatures`.

    :param matrix: A matrix over a finite tract.
    :return: The rank with the circuit and cocircuit signatures of the witness.
    """
    tract = matrix.tract
    if not tract.finite:
        raise UnsupportedTract(f"Signature search needs a finite tract, not {tract.tag}.")
    utilities.check_guard(constants.GUARD_SIGN_MATROID_COLUMNS, matrix.n)
    utilities.check_guard(constants.GUARD_SIGN_MATROID_ROWS, matrix.m)
    rows = matrix.row_vectors()
    prune = _covector_prune(matrix.row_masks())
    for rank in range(r_col(matrix).value, matrix.n + 1):
        tried = 0
        for matroid in _matroids_of_rank(matrix.n, rank, prune):
            tried += 1
            witness = complete_signatures(tract, matroid, rows)
            if witness is None:
                continue
            report = validate(witness)
            if not report.valid:
                raise ConstructionFailure(f"Signature search produced {report.violations[0]}")
            _verify_rows(witness, matrix)
            logger.debug("Matroidal rank %d over %s after %d matroids.", rank, tract.tag, tried)
            return RankResult(
                constants.RANK_MAT,
                rank,
                {
                    "rank": rank,
                    "circuits": [tract_values(v) for v in witness.circuits()],
                    "cocircuits": [tract_values(v) for v in witness.cocircuits()],
                },
            )
        logger.debug("No %s-matroid of rank %d among %d candidates.", tract.tag, rank, tried)
    raise ConstructionFailure("The free matroid should make every row a covector.")


def tract_values(vector: TractVector) -> List:
    """Entries as plain JSON values."""
    return [vector.tract.format(entry) for entry in vector]


def r_mat_sign(matrix: TractMatrix) -> RankResult:
    """The matroidal rank over the sign hyperfield."""
    if not isinstance(matrix.tract, Sign):
        raise UnsupportedTract(f"Oriented matroidal rank over {matrix.tract.tag}.")
    return r_mat_finite(matrix)


def _tropical_prune(rows: Sequence[TractVector]):
    """A row is a covector of a trivially valued matroid iff on every circuit its
    finite entries are absent or reach their maximum twice."""

    def covector(row: TractVector, mask: int) -> bool:
        finite = [row[e].value for e in mask_indices(mask) if row[e].value is not None]
        return not finite or finite.count(max(finite)) >= 2

    def prune(partial: Matroid) -> bool:
        return all(covector(row, mask) for row in rows for mask in partial.masks)

    return prune


def r_mat_tropical(matrix: TractMatrix) -> RankResult:
    """Bounds on the matroidal rank over the tropical hyperfield.

    The lower end is the column rank. The upper end is the smallest trivially
    valued matroid having every row as a covector, or `n` when the columns
    are beyond the enumeration guard.
    """
    if not isinstance(matrix.tract, Tropical):
        raise UnsupportedTract(f"Tropical matroidal rank over {matrix.tract.tag}.")
    lower = r_col(matrix)
    upper, upper_witness = matrix.n, {"uniform": [matrix.n, matrix.n]}
    if matrix.n <= utilities.get_guard(constants.GUARD_ENUMERATION_SIZE):
        prune = _tropical_prune(matrix.row_vectors())
        for rank in range(lower.value, matrix.n + 1):
            matroid = next(_matroids_of_rank(matrix.n, rank, prune), None)
            if matroid is not None:
                _verify_rows(constant_signatures(matrix.tract, matroid), matrix)
                upper, upper_witness = rank, {"matroid": _matroid_witness(matroid)}
                break
    return RankResult(
        constants.RANK_MAT,
        RankBounds(lower.value, upper).collapsed(),
        {"lower": lower.witness, "upper": upper_witness},
    )


def r_mat(matrix: TractMatrix, mode: Optional[str] = None) -> RankResult:
    """The matroidal rank over the tract of `matrix`.

    Fields give their ordinary rank. Krasner, tropical and other finite
    tracts use the searches above; the triangle and phase hyperfields are
    not supported.
    """
    tract = matrix.tract
    if isinstance(tract, FieldTract):
        return RankResult(constants.RANK_MAT, elimination.rank(matrix), {"field": tract.tag})
    if isinstance(tract, Krasner):
        return r_mat_krasner(matrix, mode)
    if isinstance(tract, Tropical):
        return r_mat_tropical(matrix)
    if tract.finite:
        return r_mat_finite(matrix)
    raise UnsupportedTract(f"No matroidal rank over {tract.tag}.")


def r_tmat(matrix: TractMatrix, mode: Optional[str] = None) -> RankResult:
    """The matroidal rank of the transpose."""
    result = r_mat(matrix.transpose(), mode)
    return RankResult(constants.RANK_TMAT, result.value, result.witness)
