# coding=utf-8

"""Exhaustive generation of labeled matroids.

Every matroid on `{0, ..., n}` is the unique single-element extension of its
deletion of `n`, and single-element extensions correspond to modular cuts of
flats. Generating the modular cuts of every matroid on `{0, ..., n - 1}`
therefore yields each matroid on `{0, ..., n}` exactly once.
"""

import logging
from typing import Callable, Iterator, List, Optional, Set

from tractrank import constants, utilities
from tractrank.matroids.matroid import Matroid

logger = logging.getLogger(__name__)

Prune = Callable[[Matroid], bool]


def modular_cuts(matroid: Matroid) -> Iterator[Set[int]]:
    """Every modular cut of the flats, as a set of flat bitmasks.

    Flats are decided from the top rank down. A flat may join the cut only
    when every flat covering it already has, and must join when it is the
    intersection of a modular pair inside the cut.
    """
    flats = list(reversed(matroid.flat_masks))
    rank = {flat: matroid.rank_mask(flat) for flat in flats}
    covers = {
        flat: [
            other
            for other in flats
            if rank[other] == rank[flat] + 1 and other & flat == flat
        ]
        for flat in flats
    }

    def forced(flat: int, cut: Set[int]) -> bool:
        members = [f for f in cut if f & flat == flat and f != flat]
        for index, first in enumerate(members):
            for second in members[index + 1 :]:
                if first & second != flat:
                    continue
                union = matroid.closure_mask(first | second)
                if rank[first] + rank[second] == rank[flat] + rank[union]:
                    return True
        return False

    def search(position: int, cut: Set[int]) -> Iterator[Set[int]]:
        if position == len(flats):
            yield set(cut)
            return
        flat = flats[position]
        allowed = all(cover in cut for cover in covers[flat])
        must = forced(flat, cut)
        if must and not allowed:
            return
        if allowed:
            cut.add(flat)
            yield from search(position + 1, cut)
            cut.discard(flat)
        if not must:
            yield from search(position + 1, cut)

    yield from search(0, set())


def extend(matroid: Matroid, cut: Set[int]) -> Matroid:
    """The single-element extension by a new last element for a modular cut."""
    new = matroid.n
    circuits: List[int] = list(matroid.masks)
    for mask in range(1 << matroid.n):
        if not matroid.is_independent_mask(mask):
            continue
        if matroid.closure_mask(mask) not in cut:
            continue
        minimal = all(
            matroid.closure_mask(mask & ~(1 << e)) not in cut
            for e in range(matroid.n)
            if mask & (1 << e)
        )
        if minimal:
            circuits.append(mask | (1 << new))
    return Matroid.from_masks(matroid.n + 1, circuits)


def extensions(matroid: Matroid) -> Iterator[Matroid]:
    """Every labeled single-element extension of a matroid.

    :param matroid: A matroid on `{0, ..., n - 1}`.
    :return: The matroids on `{0, ..., n}` whose deletion of `n` is `matroid`.
    """
    for cut in modular_cuts(matroid):
        yield extend(matroid, cut)


def enumerate_matroids(
    n: int, r_max: Optional[int] = None, prune: Optional[Prune] = None
) -> Iterator[Matroid]:
    """Yield every matroid on `{0, ..., n - 1}` of rank at most `r_max` once.

    :param n: The ground set size.
    :param r_max: Rank bound, `n` when omitted.
    :param prune: Called on every partial matroid on `{0, ..., k - 1}`; a
        false answer discards the matroid and all of its extensions.
    :return: A stream of matroids.
    """
    utilities.check_guard(constants.GUARD_ENUMERATION_SIZE, n)
    r_max = n if r_max is None else r_max
    stack = [Matroid(0, frozenset())]
    count = 0
    while stack:
        matroid = stack.pop()
        if matroid.full_rank > r_max:
            continue
        if prune is not None and not prune(matroid):
            continue
        if matroid.n == n:
            count += 1
            yield matroid
            continue
        children = list(extensions(matroid))
        stack.extend(reversed(children))
    logger.debug("Enumerated %d matroids on %d elements of rank <= %d.", count, n, r_max)
