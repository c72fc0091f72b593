# coding=utf-8

"""Matroids over tracts, stored as one signature per circuit and cocircuit."""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from tractrank import constants, utilities
from tractrank.exceptions import ConstructionFailure, ParseError, TagMismatch, UnsupportedTract
from tractrank.linalg import elimination
from tractrank.linalg.dependence import orthogonal
from tractrank.linalg.matrix import TractMatrix, TractVector
from tractrank.matroids import Matroid, check_axioms, linear_matroid
from tractrank.tracts import FieldTract, Tract, TractHom, tract_from_tag

logger = logging.getLogger(__name__)

Signatures = Dict[FrozenSet[int], TractVector]


def _by_support(vectors: Iterable[TractVector]) -> Signatures:
    signatures = {}
    for vector in vectors:
        signatures[vector.support()] = vector.normalized()
    return signatures


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of `validate`: the axiom violations found, if any."""

    violations: Tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        """Whether no axiom is violated."""
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class FMatroid:
    """A strong matroid over a tract.

    Each circuit and cocircuit of the underlying matroid carries one
    representative vector with its first nonzero entry equal to one; the
    other unit multiples are implied.
    """

    tract: Tract
    underlying: Matroid
    circuit_sigs: Mapping[FrozenSet[int], TractVector] = field(hash=False)
    cocircuit_sigs: Mapping[FrozenSet[int], TractVector] = field(hash=False)

    def __post_init__(self):
        for signatures in (self.circuit_sigs, self.cocircuit_sigs):
            for vector in signatures.values():
                if vector.tract != self.tract:
                    raise TagMismatch(f"Signature over {vector.tract.tag}, not {self.tract.tag}.")
                if len(vector) != self.n:
                    raise TagMismatch(f"Signature of length {len(vector)}, not {self.n}.")
        object.__setattr__(
            self, "circuit_sigs", {s: v.normalized() for s, v in self.circuit_sigs.items()}
        )
        object.__setattr__(
            self, "cocircuit_sigs", {s: v.normalized() for s, v in self.cocircuit_sigs.items()}
        )

    @classmethod
    def from_signatures(
        cls,
        tract: Tract,
        n: int,
        circuits: Iterable[TractVector],
        cocircuits: Iterable[TractVector],
    ) -> "FMatroid":
        """Build from signature vectors; the underlying matroid comes from the circuit supports.

        :param tract: The tract of every signature.
        :param n: The ground set size.
        :param circuits: One vector per circuit.
        :param cocircuits: One vector per cocircuit.
        :return: The F-matroid, not yet validated.
        """
        circuit_sigs = _by_support(circuits)
        return cls(
            tract,
            Matroid(n, frozenset(circuit_sigs)),
            circuit_sigs,
            _by_support(cocircuits),
        )

    @property
    def n(self) -> int:
        """The ground set size."""
        return self.underlying.n

    @property
    def rank(self) -> int:
        """Rank of the underlying matroid."""
        return self.underlying.rank()

    def circuits(self) -> List[TractVector]:
        """Circuit representatives, ordered by support."""
        return [self.circuit_sigs[s] for s in sorted(self.circuit_sigs, key=sorted)]

    def cocircuits(self) -> List[TractVector]:
        """Cocircuit representatives, ordered by support."""
        return [self.cocircuit_sigs[s] for s in sorted(self.cocircuit_sigs, key=sorted)]

    @property
    def dual(self) -> "FMatroid":
        """The dual: circuits and cocircuits swap roles."""
        return FMatroid(self.tract, self.underlying.dual, self.cocircuit_sigs, self.circuit_sigs)

    def is_covector(self, vector: TractVector) -> bool:
        """Whether `vector` is orthogonal to every circuit."""
        self._check_vector(vector)
        return all(orthogonal(vector, circuit) for circuit in self.circuit_sigs.values())

    def is_vector(self, vector: TractVector) -> bool:
        """Whether `vector` is orthogonal to every cocircuit."""
        self._check_vector(vector)
        return all(orthogonal(vector, cocircuit) for cocircuit in self.cocircuit_sigs.values())

    def _check_vector(self, vector: TractVector) -> None:
        if vector.tract != self.tract or len(vector) != self.n:
            raise TagMismatch(
                f"Vector of length {len(vector)} over {vector.tract.tag} does not match "
                f"a {self.tract.tag}-matroid on {self.n} elements."
            )

    def __str__(self) -> str:
        return f"FMatroid({self.tract.tag}, n={self.n}, rank={self.rank})"


def validate(matroid: FMatroid) -> ValidationReport:
    """Check the F-matroid axioms and collect every violation.

    Supports must be the circuits and cocircuits of the underlying matroid,
    every one of them must carry a representative, and every circuit must be
    orthogonal to every cocircuit.
    """
    violations = []
    underlying = matroid.underlying
    if not check_axioms(underlying):
        violations.append("The underlying circuits violate the matroid axioms.")
        return ValidationReport(tuple(violations))
    for name, expected, signatures in (
        ("circuit", underlying.circuits, matroid.circuit_sigs),
        ("cocircuit", underlying.cocircuits, matroid.cocircuit_sigs),
    ):
        for support in sorted(expected - set(signatures), key=sorted):
            violations.append(f"No {name} signature with support {_one_based(support)}.")
        for support in sorted(set(signatures) - expected, key=sorted):
            violations.append(f"Signature {signatures[support]} is not a {name} of the matroid.")
        for support, vector in signatures.items():
            if vector.support() != support:
                violations.append(f"The {name} {vector} has the wrong support.")
    for circuit in matroid.circuits():
        for cocircuit in matroid.cocircuits():
            if not orthogonal(circuit, cocircuit):
                violations.append(f"Circuit {circuit} is not orthogonal to cocircuit {cocircuit}.")
    if violations:
        logger.debug("%s has %d violations.", matroid, len(violations))
    return ValidationReport(tuple(violations))


def from_circuits(tract: Tract, n: int, circuits: Iterable[TractVector]) -> FMatroid:
    """Complete a set of circuit signatures over a finite tract with the induced cocircuits.

    Every cocircuit support of the underlying matroid gets the first vector,
    in element order, that is orthogonal to every circuit. Supports with no
    such vector are left without a signature, which `validate` reports.
    """
    if not tract.finite:
        raise UnsupportedTract(f"Cocircuit search needs a finite tract, not {tract.tag}.")
    circuit_sigs = _by_support(circuits)
    underlying = Matroid(n, frozenset(circuit_sigs))
    units = tract.elements()[1:]
    cocircuit_sigs = {}
    for support in sorted(underlying.cocircuits, key=sorted):
        first, *rest = sorted(support)
        for choice in itertools.product(units, repeat=len(rest)):
            entries = [tract.zero] * n
            entries[first] = tract.one
            for index, unit in zip(rest, choice):
                entries[index] = unit
            candidate = TractVector(tract, tuple(entries))
            if all(orthogonal(candidate, c) for c in circuit_sigs.values()):
                cocircuit_sigs[support] = candidate
                break
        else:
            logger.debug("No cocircuit signature on %s.", _one_based(support))
    return FMatroid(tract, underlying, circuit_sigs, cocircuit_sigs)


def _one_based(support: Iterable[int]) -> str:
    return "{" + ",".join(str(e + 1) for e in sorted(support)) + "}"


def pushforward(hom: TractHom, matroid: FMatroid) -> FMatroid:
    """Apply a homomorphism to every signature; the underlying matroid is kept."""
    if hom.source != matroid.tract:
        raise TagMismatch(f"{hom} does not start at {matroid.tract.tag}.")
    return FMatroid(
        hom.target,
        matroid.underlying,
        {s: v.map(hom) for s, v in matroid.circuit_sigs.items()},
        {s: v.map(hom) for s, v in matroid.cocircuit_sigs.items()},
    )


def _embed(field_tract: FieldTract, n: int, columns: List[int], values) -> TractVector:
    entries = [field_tract.zero] * n
    for column, value in zip(columns, values):
        entries[column] = value
    return TractVector(field_tract, tuple(entries))


def _circuit_vector(matrix: TractMatrix, circuit: FrozenSet[int]) -> TractVector:
    columns = sorted(circuit)
    kernel = elimination.nullspace(matrix.submatrix(range(matrix.m), columns))
    if len(kernel) != 1:
        raise ConstructionFailure(f"Columns {_one_based(circuit)} do not form a circuit.")
    return _embed(matrix.tract, matrix.n, columns, kernel[0])


def _cocircuit_vector(
    basis: List[TractVector], cocircuit: FrozenSet[int], n: int
) -> TractVector:
    field_tract = basis[0].tract
    hyperplane = [j for j in range(n) if j not in cocircuit]
    if hyperplane:
        # Combinations of the basis rows vanishing on the hyperplane.
        system = TractMatrix(
            field_tract, tuple(tuple(row[j] for row in basis) for j in hyperplane)
        )
        kernel = elimination.nullspace(system)
    else:
        kernel = [TractVector(field_tract, (field_tract.one,))] if len(basis) == 1 else []
    if len(kernel) != 1:
        raise ConstructionFailure(f"Columns {_one_based(cocircuit)} do not form a cocircuit.")
    weights = kernel[0]
    entries = tuple(
        field_tract.sum(field_tract.mul(w, row[j]) for w, row in zip(weights, basis))
        for j in range(n)
    )
    return TractVector(field_tract, entries)


def from_field_matrix(matrix: TractMatrix) -> FMatroid:
    """The F-matroid of the row space of a matrix over a field.

    Cocircuit signatures are the minimal-support vectors of the row space and
    circuit signatures the minimal-support vectors of the kernel, each found
    by elimination on a column subset.

    :param matrix: A matrix over a field tract.
    :return: A validated F-matroid over the same field.
    """
    if not isinstance(matrix.tract, FieldTract):
        raise UnsupportedTract(f"F-matroids of matrices need a field, not {matrix.tract.tag}.")
    if not matrix.tract.finite:
        utilities.check_guard(constants.GUARD_MINIMAL_SUPPORT_COLUMNS, matrix.n)
    underlying = linear_matroid(matrix)
    basis = elimination.row_space_basis(matrix)
    circuits = {c: _circuit_vector(matrix, c) for c in underlying.circuits}
    cocircuits = {c: _cocircuit_vector(basis, c, matrix.n) for c in underlying.cocircuits}
    result = FMatroid(matrix.tract, underlying, circuits, cocircuits)
    report = validate(result)
    if not report:
        raise ConstructionFailure("; ".join(report.violations))
    return result


def format_fmatroid(matroid: FMatroid) -> str:
    """Write an F-matroid: tract tag, `matroid n`, then signature lines."""
    lines = [matroid.tract.tag, f"matroid {matroid.n}"]
    for name, vectors in (("circuit", matroid.circuits()), ("cocircuit", matroid.cocircuits())):
        for vector in vectors:
            support = sorted(vector.support())
            indices = " ".join(str(e + 1) for e in support)
            elements = " ".join(str(vector[e]) for e in support)
            lines.append(f"{name} {indices} : {elements}")
    return "\n".join(lines) + "\n"


def parse_fmatroid(text: str) -> FMatroid:
    """Read the format written by `format_fmatroid`."""
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if len(lines) < 2:
        raise ParseError("An F-matroid needs a tract line and a matroid line.", len(lines) + 1)
    try:
        tract = tract_from_tag(lines[0][1])
    except ParseError as error:
        raise ParseError(str(error), lines[0][0]) from error
    number, header = lines[1]
    keyword, _, size = header.partition(" ")
    if keyword != "matroid" or not size.strip().isdigit():
        raise ParseError(f"Expected 'matroid <n>', got '{header}'.", number)
    n = int(size)
    signatures = {"circuit": [], "cocircuit": []}
    for number, line in lines[2:]:
        name, _, rest = line.partition(" ")
        indices, separator, elements = rest.partition(":")
        if name not in signatures or not separator:
            raise ParseError(f"Invalid signature line '{line}'.", number)
        try:
            support = [int(token) - 1 for token in indices.split()]
        except ValueError as error:
            raise ParseError(f"Invalid indices in '{line}'.", number) from error
        literals = elements.split()
        if len(support) != len(literals) or not all(0 <= e < n for e in support):
            raise ParseError(f"Indices and elements of '{line}' do not match.", number)
        entries = [tract.zero] * n
        for index, literal in zip(support, literals):
            try:
                entries[index] = tract.parse(literal)
            except ParseError as error:
                raise ParseError(str(error), number) from error
        signatures[name].append(TractVector(tract, tuple(entries)))
    return FMatroid.from_signatures(tract, n, signatures["circuit"], signatures["cocircuit"])


def constant_signatures(tract: Tract, matroid: Matroid) -> FMatroid:
    """The matroid over `tract` whose signatures are one on every support.

    Valid over the Krasner and tropical hyperfields, where it is the
    trivially valued matroid.
    """

    def constant(support: FrozenSet[int]) -> TractVector:
        return TractVector(
            tract, tuple(tract.one if e in support else tract.zero for e in range(matroid.n))
        )

    return FMatroid(
        tract,
        matroid,
        {c: constant(c) for c in matroid.circuits},
        {c: constant(c) for c in matroid.cocircuits},
    )
