# coding=utf-8

"""Known matrices with their known ranks, and the suites that recompute them."""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from tractrank import constants, utilities
from tractrank.exceptions import TractRankError
from tractrank.fmatroids import constant_signatures, from_field_matrix, pushforward, validate
from tractrank.linalg.matrix import TractMatrix, TractVector
from tractrank.matroids import fano
from tractrank.ranks.column import circuit_signatures, r_col, r_row
from tractrank.ranks.determinantal import r_tri
from tractrank.ranks.matroidal import r_mat, r_mat_krasner, r_mat_sign, r_tmat
from tractrank.ranks.phi import r_phi_mat
from tractrank.ranks.properties import (
    dress_wenzel_holds,
    field_equality_holds,
    izhakian_rowen_holds,
)
from tractrank.ranks.relative import r_preimage
from tractrank.ranks.sign_changes import is_alt_covector, sigma
from tractrank.ranks.square import camion_hoffman, square_fullrank_quotient
from tractrank.ranks.systems import solve_homogeneous
from tractrank.tracts import (
    FiniteField,
    FqToKrasner,
    GaussianRationals,
    GaussianRationalToPhase,
    Krasner,
    RationalToKrasner,
    RegularPartialField,
    Sign,
    Triangle,
    Tropical,
)

logger = logging.getLogger(__name__)

SUITE_EXAMPLES = "examples"
SUITE_PROPERTIES = "properties"
SUITES = (SUITE_EXAMPLES, SUITE_PROPERTIES)

FANO_LINES = (
    "1110000",
    "1001001",
    "1000110",
    "0101010",
    "0100101",
    "0011100",
    "0010011",
)

DEAETT_ROWS = (
    "1010101",
    "1001011",
    "1100110",
    "1111000",
    "1111001",
    "0100110",
    "0010101",
    "0001011",
)


def _bits(rows) -> List[List[int]]:
    return [[int(c) for c in row] for row in rows]


def sign_example() -> TractMatrix:
    """A 3 x 4 sign matrix with column rank 2 and independent rows."""
    return TractMatrix.of(Sign(), [[1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]])


SIGN_EXAMPLE_CIRCUITS = ((-1, 1, 1, 0), (0, 1, 1, 1), (-1, 0, 1, 1), (-1, 1, 0, 1))


def regular_example() -> TractMatrix:
    """A 3 x 4 matrix over the regular partial field with independent columns."""
    return TractMatrix.of(
        RegularPartialField(), [[1, -1, -1, -1], [1, 0, 1, -1], [1, 1, 1, 1]]
    )


def deaett_pattern() -> TractMatrix:
    """An 8 x 7 zero-nonzero pattern with triangular rank 4."""
    return TractMatrix.of(Krasner(), _bits(DEAETT_ROWS))


def fano_tropical() -> TractMatrix:
    """The Fano lines as a tropical matrix: -1 on the line, 0 off it."""
    return TractMatrix.of(Tropical(), [[-b for b in row] for row in _bits(FANO_LINES)])


def f2_pattern() -> TractMatrix:
    """A 4 x 4 pattern whose only GF(2) lift has rank 4."""
    return TractMatrix.of(Krasner(), [[1, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1], [0, 1, 1, 1]])


F2_WITNESS = [[1, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1]]


def gaussian_example() -> TractMatrix:
    """Two rows over Q(i), pushed to the phase hyperfield in the examples."""
    return TractMatrix.of(GaussianRationals(), [["1", "1+i", "1", "0"], ["1+i", "4i", "0", "1"]])


@dataclass(frozen=True)
class GoldenCheck:
    """One expected value against the recomputed one."""

    name: str
    expected: Any
    computed: Any

    @property
    def passed(self) -> bool:
        """Whether both values agree."""
        return self.expected == self.computed

    def line(self) -> str:
        """A table row."""
        status = "ok" if self.passed else "FAIL"
        return f"{status:4} {self.name}: expected {self.expected}, computed {self.computed}"


Check = Callable[[], Tuple[Any, Any]]


def _projective(vectors) -> set:
    return {min(tuple(v), tuple(-x for x in v)) for v in vectors}


def _sign_example_ranks():
    matrix = sign_example()
    return (2, 3, 3, 3), (
        r_col(matrix).value,
        r_row(matrix).value,
        r_mat_sign(matrix).value,
        r_tmat(matrix).value,
    )


def _sign_example_circuits():
    computed = [vector.values for vector in circuit_signatures(sign_example()).values()]
    return _projective(SIGN_EXAMPLE_CIRCUITS), _projective(computed)


def _regular_example():
    matrix = regular_example()
    return (4, 3, 0), (r_col(matrix).value, r_row(matrix).value, len(solve_homogeneous(matrix)))


def _f2_ranks():
    matrix = f2_pattern()
    phi = r_phi_mat(FqToKrasner(2), matrix)
    return (4, 3, F2_WITNESS), (
        r_preimage(FqToKrasner(2), matrix).value,
        phi.value,
        phi.witness["matrix"],
    )


def _f2_rational_lift():
    return 3, r_preimage(RationalToKrasner(), f2_pattern()).value


def _f2_covector():
    witness = from_field_matrix(TractMatrix.of(FiniteField(2), F2_WITNESS))
    row = TractVector.of(FiniteField(2), [0, 1, 1, 1])
    pushed = pushforward(FqToKrasner(2), witness)
    return (False, True), (witness.is_covector(row), pushed.is_covector(row.map(FqToKrasner(2))))


def _fano_tropical():
    matrix = fano_tropical()
    tautological = constant_signatures(Tropical(), fano())
    covectors = all(tautological.is_covector(row) for row in matrix.row_vectors())
    return (True, 3, 3), (covectors, r_col(matrix).value, r_mat(matrix).value)


def _deaett():
    matrix = deaett_pattern()
    transposed = r_mat_krasner(matrix.transpose(), constants.MODE_BOUNDS)
    return (4, 4, 4, 4), (
        r_tri(matrix).value,
        r_col(matrix).value,
        r_row(matrix).value,
        transposed.value,
    )


def _gaussian_phase():
    pushed = pushforward(GaussianRationalToPhase(), from_field_matrix(gaussian_example()))
    row = TractVector.of(GaussianRationals(), ["2+i", "1+4i", "1", "1"])
    covector = pushed.is_covector(row.map(GaussianRationalToPhase()))
    return (True, True), (validate(pushed).valid, covector)


EXAMPLE_CHECKS: Dict[str, Check] = {
    "sign example col/row/mat/tmat": _sign_example_ranks,
    "sign example circuits": _sign_example_circuits,
    "regular partial field col/row/solutions": _regular_example,
    "GF(2) to K preimage/phimat/witness": _f2_ranks,
    "GF(2) to K witness covector": _f2_covector,
    "Q to K lift of the GF(2) pattern": _f2_rational_lift,
    "Fano tropical covectors/col/mat": _fano_tropical,
    "Deaett tri/col/row/transpose mat": _deaett,
    "Q(i) to phase push-forward": _gaussian_phase,
}


def _random_pattern(generator, m, n, values) -> List[List]:
    return [[generator.choice(values) for _ in range(n)] for _ in range(m)]


def _dress_wenzel(generator, count):
    failures = 0
    for _ in range(count):
        m, n = generator.randint(2, 5), generator.randint(2, 6)
        pattern = TractMatrix.of(Krasner(), _random_pattern(generator, m, n, (0, 1)))
        failures += not dress_wenzel_holds(pattern, constants.MODE_EXACT)
        signs = TractMatrix.of(Sign(), _random_pattern(generator, 3, 4, (0, 1, -1)))
        failures += not dress_wenzel_holds(signs)
    return 0, failures


def _field_equality(generator, count):
    failures = 0
    for order in (2, 3):
        for _ in range(count):
            values = _random_pattern(generator, 4, 5, range(order))
            failures += not field_equality_holds(TractMatrix.of(FiniteField(order), values))
    return 0, failures


def _izhakian_rowen(generator, count):
    failures = 0
    for _ in range(count):
        size = generator.choice((4, 5))
        values = _random_pattern(generator, size, size, (None, 0, 1, 2, Fraction(-1, 2)))
        failures += not izhakian_rowen_holds(TractMatrix.of(Tropical(), values))
    return 0, failures


def _alternating_covectors(generator, count):
    del generator, count
    failures = 0
    for n in range(2, 6):
        for values in itertools.product((0, 1, -1), repeat=n):
            for rank in range(1, n):
                failures += sigma(values) < rank and not is_alt_covector(values, rank)
    return 0, failures


def _camion_hoffman(generator, count):
    disagreements = 0
    for _ in range(count):
        size = generator.choice((3, 4))
        values = _random_pattern(generator, size, size, (0, 1, 2, 3, Fraction(1, 2)))
        matrix = TractMatrix.of(Triangle(), values)
        decided = square_fullrank_quotient(matrix).full_rank
        disagreements += decided != camion_hoffman(matrix).found
    return 0, disagreements


PROPERTY_CHECKS = {
    "Dress-Wenzel counterexamples": _dress_wenzel,
    "field equality failures": _field_equality,
    "Izhakian-Rowen failures": _izhakian_rowen,
    "alternating covector failures": _alternating_covectors,
    "Camion-Hoffman disagreements": _camion_hoffman,
}


def run_suite(
    suite: str = SUITE_EXAMPLES, seed: Optional[int] = None, count: int = 10
) -> List[GoldenCheck]:
    """Recompute every check of a suite.

    An error raised by a check is recorded as its computed value.

    :param suite: `examples` or `properties`.
    :param seed: Seed of the random instances of the property suite.
    :param count: Random instances per property.
    :return: One result per check.
    """
    if suite == SUITE_EXAMPLES:
        checks = EXAMPLE_CHECKS
    elif suite == SUITE_PROPERTIES:
        generator = utilities.random_source(seed)
        checks = {
            name: (lambda check=check: check(generator, count))
            for name, check in PROPERTY_CHECKS.items()
        }
    else:
        raise TractRankError(f"Unknown suite '{suite}', expected one of {SUITES}.")
    results = []
    for name, check in checks.items():
        try:
            expected, computed = check()
        except TractRankError as error:
            expected, computed = "no error", f"{type(error).__name__}: {error}"
        result = GoldenCheck(name, expected, computed)
        logger.info(result.line())
        results.append(result)
    return results
