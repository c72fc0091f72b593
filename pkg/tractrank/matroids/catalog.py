# coding=utf-8

"""Named matroids, linear matroids, the alternating circuits and a text format."""

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from tractrank.exceptions import ParseError, PreconditionViolation, UnsupportedTract
from tractrank.linalg import elimination
from tractrank.linalg.matrix import TractMatrix, mask_indices, support_mask
from tractrank.matroids.matroid import Matroid
from tractrank.tracts import FieldTract, FiniteField

UNIFORM_NAME = re.compile(r"^u:(?P<rank>\d+):(?P<size>\d+)$")

# Circuit-hyperplanes of the Vamos matroid: five of the six unions of two of the
# pairs {1,2} {3,4} {5,6} {7,8} (1-based), all but {5,6,7,8}.
VAMOS_HYPERPLANES = (
    (0, 1, 2, 3),
    (0, 1, 4, 5),
    (0, 1, 6, 7),
    (2, 3, 4, 5),
    (2, 3, 6, 7),
)

# Columns of the Fano plane over GF(2); its lines are
# {1,2,3} {1,4,7} {1,5,6} {2,4,6} {2,5,7} {3,4,5} {3,6,7} (1-based).
FANO_REPRESENTATION = (
    (1, 0, 1, 0, 1, 0, 1),
    (0, 1, 1, 0, 1, 1, 0),
    (0, 0, 0, 1, 1, 1, 1),
)


def uniform(rank: int, size: int) -> Matroid:
    """U_{rank,size}: every (rank + 1)-subset is a circuit."""
    if not 0 <= rank <= size:
        raise PreconditionViolation(f"Uniform matroid needs 0 <= r <= n, got {rank}, {size}.")
    return Matroid(
        size, frozenset(frozenset(c) for c in itertools.combinations(range(size), rank + 1))
    )


def sparse_paving(n: int, rank: int, hyperplanes: Iterable[Iterable[int]]) -> Matroid:
    """The sparse paving matroid with the given circuit-hyperplanes.

    Its circuits are the `hyperplanes` and every (rank + 1)-subset containing
    none of them; every other rank-subset is a basis.

    :param n: Number of elements.
    :param rank: The rank, with `0 < rank < n`.
    :param hyperplanes: Rank-subsets of 0-based elements, any two sharing at
        most `rank - 2` elements.
    :return: The matroid.
    """
    if not 0 < rank < n:
        raise PreconditionViolation(f"Sparse paving matroid needs 0 < r < n, got {rank}, {n}.")
    family = sorted({support_mask(h) for h in hyperplanes})
    for mask in family:
        if bin(mask).count("1") != rank or mask >> n:
            raise PreconditionViolation(
                f"Circuit-hyperplane {mask_indices(mask)} is not a {rank}-subset of {n} elements."
            )
    for first, second in itertools.combinations(family, 2):
        if bin(first & second).count("1") > rank - 2:
            raise PreconditionViolation(
                f"Circuit-hyperplanes {mask_indices(first)} and {mask_indices(second)} "
                f"share more than {rank - 2} elements."
            )
    circuits = list(family)
    for subset in itertools.combinations(range(n), rank + 1):
        mask = support_mask(subset)
        if not any(h & mask == h for h in family):
            circuits.append(mask)
    return Matroid.from_masks(n, circuits)


def vamos() -> Matroid:
    """The Vamos matroid, rank 4 on 8 elements and representable over no field."""
    return sparse_paving(8, 4, VAMOS_HYPERPLANES)


def linear_matroid(matrix: TractMatrix) -> Matroid:
    """The column matroid of a matrix over a field.

    :param matrix: A matrix over a field tract.
    :return: The matroid whose independent sets are the independent column sets.
    """
    if not isinstance(matrix.tract, FieldTract):
        raise UnsupportedTract(f"Linear matroids need a field, not {matrix.tract.tag}.")

    def independent(mask: int) -> bool:
        columns = mask_indices(mask)
        if not columns:
            return True
        return elimination.rank(matrix.submatrix(range(matrix.m), columns)) == len(columns)

    return Matroid.from_independence(matrix.n, independent)


def fano_matrix() -> TractMatrix:
    """The GF(2) representation of the Fano plane."""
    return TractMatrix.of(FiniteField(2), FANO_REPRESENTATION)


def fano() -> Matroid:
    """The Fano matroid."""
    return linear_matroid(fano_matrix())


def catalog(name: str) -> Matroid:
    """A named matroid: `fano`, `vamos` or `u:r:n`."""
    text = name.strip().lower()
    if text == "fano":
        return fano()
    if text == "vamos":
        return vamos()
    match = UNIFORM_NAME.match(text)
    if match:
        return uniform(int(match.group("rank")), int(match.group("size")))
    raise ParseError(f"Unknown matroid name '{name}'.")


def parse_matroid(text: str) -> Matroid:
    """Read a matroid: a catalog name, or `n` then one 1-based circuit per line."""
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("Empty matroid.", 1)
    number, first = lines[0]
    if not first.isdigit():
        try:
            return catalog(first)
        except ParseError as error:
            raise ParseError(str(error), number) from error
    n = int(first)
    circuits = []
    for number, line in lines[1:]:
        try:
            circuit = frozenset(int(token) - 1 for token in line.split())
        except ValueError as error:
            raise ParseError(f"Invalid circuit '{line}'.", number) from error
        if not circuit or not all(0 <= e < n for e in circuit):
            raise ParseError(f"Circuit '{line}' is outside 1..{n}.", number)
        circuits.append(circuit)
    return Matroid(n, frozenset(circuits))


def format_matroid(matroid: Matroid) -> str:
    """Write a matroid in the format read by `parse_matroid`."""
    lines = [str(matroid.n)]
    lines.extend(
        " ".join(str(e + 1) for e in mask_indices(mask)) for mask in matroid.masks
    )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SignedSubsetFamily:
    """Sign vectors over `n` positions, one per support up to a global sign."""

    n: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        seen = {}
        for entry in self.entries:
            if len(entry) != self.n or any(s not in (0, 1, -1) for s in entry):
                raise PreconditionViolation(f"Invalid sign vector {entry}.")
            support = frozenset(i for i, s in enumerate(entry) if s)
            previous = seen.setdefault(support, entry)
            if previous not in (entry, tuple(-s for s in entry)):
                raise PreconditionViolation(
                    f"Sign vectors {previous} and {entry} share a support."
                )

    def supports(self) -> frozenset:
        """The supports of the entries."""
        return frozenset(frozenset(i for i, s in enumerate(e) if s) for e in self.entries)


def alternating_circuits(n: int, rank: int) -> SignedSubsetFamily:
    """Circuits of the alternating oriented matroid of rank `rank` on `n` points.

    The points sit on the moment curve, so every (rank + 1)-subset
    `i_1 < ... < i_{rank+1}` is a circuit with sign `(-1)^k` at `i_k`.
    Circuits are taken on (rank + 1)-subsets, so there are `C(n, rank + 1)`
    of them up to sign. Counting rank-subsets instead gives `C(n, rank)`,
    which differs unless `n = 2 rank + 1`.

    :param n: Number of points.
    :param rank: The rank, with `0 < rank < n`.
    :return: One sign vector per circuit, first nonzero entry positive.
    """
    if not 0 < rank < n:
        raise PreconditionViolation(f"Alternating circuits need 0 < r < n, got {rank}, {n}.")
    entries = []
    for subset in itertools.combinations(range(n), rank + 1):
        entry = [0] * n
        for k, index in enumerate(subset):
            entry[index] = 1 if k % 2 == 0 else -1
        entries.append(tuple(entry))
    return SignedSubsetFamily(n, tuple(entries))
