# coding=utf-8

"""Vectors and matrices over a single tract."""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from tractrank.exceptions import TagMismatch
from tractrank.tracts import Tract, TractElement, TractHom


def support_mask(indices: Iterable[int]) -> int:
    """Bitmask with bit `i` set for every index `i`."""
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def mask_indices(mask: int) -> Tuple[int, ...]:
    """Indices of the bits set in `mask`, ascending."""
    indices = []
    index = 0
    while mask:
        if mask & 1:
            indices.append(index)
        mask >>= 1
        index += 1
    return tuple(indices)


@dataclass(frozen=True)
class TractVector:
    """An ordered list of elements of one tract."""

    tract: Tract
    entries: Tuple[TractElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        self.tract.check(*self.entries)

    @classmethod
    def of(cls, tract: Tract, values: Iterable) -> "TractVector":
        """Build a vector from raw values or literals."""
        entries = []
        for value in values:
            if isinstance(value, TractElement):
                entries.append(value)
            elif isinstance(value, str):
                entries.append(tract.parse(value))
            else:
                entries.append(tract.element(value))
        return cls(tract, tuple(entries))

    @classmethod
    def zeros(cls, tract: Tract, length: int) -> "TractVector":
        """The zero vector."""
        return cls(tract, (tract.zero,) * length)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> TractElement:
        return self.entries[index]

    def __iter__(self):
        return iter(self.entries)

    @property
    def values(self) -> List:
        """Raw values of the entries."""
        return [entry.value for entry in self.entries]

    def support(self) -> FrozenSet[int]:
        """Indices (0-based) of the nonzero entries."""
        return frozenset(i for i, entry in enumerate(self.entries) if not entry.is_zero)

    @property
    def mask(self) -> int:
        """The support as a bitmask."""
        return support_mask(self.support())

    @property
    def is_zero(self) -> bool:
        """Whether every entry is zero."""
        return not self.support()

    def scaled(self, unit: TractElement) -> "TractVector":
        """Multiply every entry by `unit`."""
        return TractVector(self.tract, tuple(self.tract.mul(unit, e) for e in self))

    def normalized(self) -> "TractVector":
        """The unit multiple whose first nonzero entry is one."""
        for entry in self.entries:
            if not entry.is_zero:
                return self.scaled(self.tract.inverse(entry))
        return self

    def restrict(self, indices: Sequence[int]) -> "TractVector":
        """Entries at the given indices, in order."""
        return TractVector(self.tract, tuple(self.entries[i] for i in indices))

    def map(self, hom: TractHom) -> "TractVector":
        """Apply a homomorphism entrywise."""
        return TractVector(hom.target, tuple(hom.apply(e) for e in self.entries))

    def check_compatible(self, other: "TractVector") -> None:
        """Raise `TagMismatch` unless both vectors share tract and length."""
        if other.tract != self.tract:
            raise TagMismatch(f"Vectors over {self.tract.tag} and {other.tract.tag}.")
        if len(other) != len(self):
            raise TagMismatch(f"Vectors of length {len(self)} and {len(other)}.")

    def __str__(self) -> str:
        return "(" + ", ".join(str(entry) for entry in self.entries) + ")"


@dataclass(frozen=True)
class TractMatrix:
    """A rectangular grid of elements of one tract."""

    tract: Tract
    rows: Tuple[Tuple[TractElement, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise TagMismatch("A matrix needs at least one row and one column.")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise TagMismatch("Matrix rows have different lengths.")
            self.tract.check(*row)

    @classmethod
    def of(cls, tract: Tract, rows: Iterable[Iterable]) -> "TractMatrix":
        """Build a matrix from nested raw values or literals."""
        return cls(tract, tuple(TractVector.of(tract, row).entries for row in rows))

    @classmethod
    def from_vectors(cls, vectors: Sequence[TractVector]) -> "TractMatrix":
        """The matrix whose rows are the given vectors."""
        if not vectors:
            raise TagMismatch("No vectors given.")
        for vector in vectors[1:]:
            vectors[0].check_compatible(vector)
        return cls(vectors[0].tract, tuple(vector.entries for vector in vectors))

    @property
    def m(self) -> int:
        """Number of rows."""
        return len(self.rows)

    @property
    def n(self) -> int:
        """Number of columns."""
        return len(self.rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        """(rows, columns)"""
        return (self.m, self.n)

    def __getitem__(self, position: Tuple[int, int]) -> TractElement:
        row, column = position
        return self.rows[row][column]

    def row(self, index: int) -> TractVector:
        """Row `index` as a vector."""
        return TractVector(self.tract, self.rows[index])

    def column(self, index: int) -> TractVector:
        """Column `index` as a vector."""
        return TractVector(self.tract, tuple(row[index] for row in self.rows))

    def row_vectors(self) -> List[TractVector]:
        """All rows."""
        return [self.row(i) for i in range(self.m)]

    def column_vectors(self) -> List[TractVector]:
        """All columns."""
        return [self.column(j) for j in range(self.n)]

    def transpose(self) -> "TractMatrix":
        """The transposed matrix."""
        return TractMatrix(self.tract, tuple(zip(*self.rows)))

    def submatrix(self, rows: Sequence[int], columns: Sequence[int]) -> "TractMatrix":
        """Entries at the given rows and columns."""
        return TractMatrix(
            self.tract, tuple(tuple(self.rows[i][j] for j in columns) for i in rows)
        )

    def map(self, hom: TractHom) -> "TractMatrix":
        """Apply a homomorphism entrywise."""
        if hom.source != self.tract:
            raise TagMismatch(f"{hom} does not start at {self.tract.tag}.")
        return TractMatrix(
            hom.target, tuple(tuple(hom.apply(e) for e in row) for row in self.rows)
        )

    def row_masks(self) -> List[int]:
        """Row supports as bitmasks."""
        return [self.row(i).mask for i in range(self.m)]

    def values(self) -> List[List]:
        """Raw values, row by row."""
        return [[entry.value for entry in row] for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(entry) for entry in row) for row in self.rows)
