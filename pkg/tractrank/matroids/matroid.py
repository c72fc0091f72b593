# coding=utf-8

"""Matroids on `{0, ..., n - 1}` stored by their circuits.

Subsets are handled as bitmasks internally; the public methods accept and
return frozensets of 0-based indices.
"""

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

from tractrank.exceptions import ConstructionFailure, TagMismatch
from tractrank.linalg.matrix import mask_indices, support_mask

Subset = FrozenSet[int]


def subsets_by_size(n: int) -> List[int]:
    """All bitmasks over `n` elements, by increasing size then value."""
    return sorted(range(1 << n), key=lambda mask: (bin(mask).count("1"), mask))


@dataclass(frozen=True)
class Matroid:
    """A matroid given by its circuits."""

    n: int
    circuits: FrozenSet[Subset]
    masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        circuits = frozenset(frozenset(circuit) for circuit in self.circuits)
        for circuit in circuits:
            if not circuit or not all(0 <= e < self.n for e in circuit):
                raise TagMismatch(f"Invalid circuit {sorted(circuit)} on {self.n} elements.")
        object.__setattr__(self, "circuits", circuits)
        object.__setattr__(
            self, "masks", tuple(sorted(support_mask(c) for c in circuits))
        )

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Matroid":
        """Build from circuit bitmasks."""
        return cls(n, frozenset(frozenset(mask_indices(mask)) for mask in masks))

    @classmethod
    def from_independence(cls, n: int, independent: Callable[[int], bool]) -> "Matroid":
        """Build from an independence oracle on bitmasks.

        Subsets are scanned by increasing size; a dependent subset containing
        no circuit found so far is a circuit.
        """
        circuits = []
        for mask in subsets_by_size(n):
            if any(c & mask == c for c in circuits):
                continue
            if not independent(mask):
                circuits.append(mask)
        return cls.from_masks(n, circuits)

    # Rank.

    def is_independent_mask(self, mask: int) -> bool:
        """Whether the subset contains no circuit."""
        return not any(c & mask == c for c in self.masks)

    def rank_mask(self, mask: int) -> int:
        """Rank of a subset given as a bitmask, by greedy augmentation."""
        basis = 0
        size = 0
        for index in mask_indices(mask):
            candidate = basis | (1 << index)
            if self.is_independent_mask(candidate):
                basis = candidate
                size += 1
        return size

    @property
    def ground_mask(self) -> int:
        """The ground set as a bitmask."""
        return (1 << self.n) - 1

    def rank(self, subset: Optional[Iterable[int]] = None) -> int:
        """Rank of a subset, or of the whole matroid."""
        if subset is None:
            return self.full_rank
        return self.rank_mask(support_mask(subset))

    @cached_property
    def full_rank(self) -> int:
        """Rank of the ground set."""
        return self.rank_mask(self.ground_mask)

    def closure_mask(self, mask: int) -> int:
        """Closure of a subset given as a bitmask."""
        rank = self.rank_mask(mask)
        closed = mask
        for index in range(self.n):
            bit = 1 << index
            if not mask & bit and self.rank_mask(mask | bit) == rank:
                closed |= bit
        return closed

    def closure(self, subset: Iterable[int]) -> Subset:
        """Elements whose addition keeps the rank."""
        return frozenset(mask_indices(self.closure_mask(support_mask(subset))))

    def is_flat(self, subset: Iterable[int]) -> bool:
        """Whether the subset equals its closure."""
        mask = support_mask(subset)
        return self.closure_mask(mask) == mask

    @cached_property
    def flat_masks(self) -> Tuple[int, ...]:
        """All flats as bitmasks, by rank then value."""
        flats = {self.closure_mask(mask) for mask in range(1 << self.n)}
        return tuple(sorted(flats, key=lambda mask: (self.rank_mask(mask), mask)))

    def flats(self) -> List[Subset]:
        """All flats."""
        return [frozenset(mask_indices(mask)) for mask in self.flat_masks]

    def bases(self) -> List[Subset]:
        """All bases."""
        rank = self.full_rank
        return [
            frozenset(basis)
            for basis in itertools.combinations(range(self.n), rank)
            if self.is_independent_mask(support_mask(basis))
        ]

    # Duality and minors.

    @cached_property
    def dual(self) -> "Matroid":
        """The dual matroid: `D` is dependent iff removing it drops the rank."""
        ground, rank = self.ground_mask, self.full_rank
        return Matroid.from_independence(
            self.n, lambda mask: self.rank_mask(ground & ~mask) == rank
        )

    @property
    def cocircuits(self) -> FrozenSet[Subset]:
        """Circuits of the dual."""
        return self.dual.circuits

    @property
    def cocircuit_masks(self) -> Tuple[int, ...]:
        """Cocircuits as bitmasks."""
        return self.dual.masks

    def restrict(self, subset: Iterable[int]) -> "Matroid":
        """The restriction to `subset`, relabeled in increasing order."""
        kept = sorted(set(subset))
        position = {element: index for index, element in enumerate(kept)}
        mask = support_mask(kept)
        return Matroid(
            len(kept),
            frozenset(
                frozenset(position[e] for e in circuit)
                for circuit, circuit_mask in zip(self._sorted_circuits(), self.masks)
                if circuit_mask & mask == circuit_mask
            ),
        )

    def _sorted_circuits(self) -> List[Subset]:
        return [frozenset(mask_indices(mask)) for mask in self.masks]

    def delete(self, element: int) -> "Matroid":
        """Delete one element, relabeling the rest."""
        return self.restrict(e for e in range(self.n) if e != element)

    def contract(self, element: int) -> "Matroid":
        """Contract one element, relabeling the rest."""
        bit = 1 << element
        candidates = {mask & ~bit for mask in self.masks}
        candidates.discard(0)
        minimal = [
            mask
            for mask in candidates
            if not any(other != mask and other & mask == other for other in candidates)
        ]
        if any(mask == bit for mask in self.masks):
            # Contracting a loop is deleting it.
            return self.delete(element)
        kept = [e for e in range(self.n) if e != element]
        position = {e: index for index, e in enumerate(kept)}
        return Matroid(
            self.n - 1,
            frozenset(frozenset(position[e] for e in mask_indices(mask)) for mask in minimal),
        )

    # Covectors.

    def is_covector_support(self, subset: Iterable[int]) -> bool:
        """Whether `subset` is the support of a covector.

        Decided twice, once as "the complement is a flat" and once as "a
        union of cocircuits", and the two answers must agree.
        """
        mask = support_mask(subset)
        by_flats = self.is_covector_mask(mask)
        union = 0
        for cocircuit in self.cocircuit_masks:
            if cocircuit & mask == cocircuit:
                union |= cocircuit
        by_cocircuits = union == mask
        if by_flats != by_cocircuits:
            raise ConstructionFailure(
                f"Covector support tests disagree on {sorted(mask_indices(mask))}."
            )
        return by_flats

    def is_covector_mask(self, mask: int) -> bool:
        """Whether the complement of the bitmask is a flat."""
        complement = self.ground_mask & ~mask
        return self.closure_mask(complement) == complement

    def __str__(self) -> str:
        circuits = ", ".join(
            "{" + ",".join(str(e + 1) for e in mask_indices(mask)) + "}"
            for mask in self.masks
        )
        return f"Matroid(n={self.n}, rank={self.full_rank}, circuits=[{circuits}])"


def check_axioms(matroid: Matroid) -> bool:
    """Check the circuit axioms exhaustively.

    :param matroid: The candidate matroid.
    :return: True iff the circuits form a clutter of nonempty sets satisfying
        circuit elimination.
    """
    masks = matroid.masks
    if any(mask == 0 for mask in masks):
        return False
    for first, second in itertools.combinations(masks, 2):
        if first & second in (first, second):
            return False
    for first, second in itertools.permutations(masks, 2):
        for element in mask_indices(first & second):
            remainder = (first | second) & ~(1 << element)
            if not any(c & remainder == c for c in masks):
                return False
    return True
