# coding=utf-8

"""Matroid enumeration tests."""

import itertools
from unittest import TestCase

import pytest
from django.test import override_settings

from tractrank.exceptions import GuardExceeded
from tractrank.matroids import Matroid, check_axioms, enumerate_matroids, extensions, uniform

# Labeled matroids on n elements, n = 0..7.
LABELED_COUNTS = [1, 2, 5, 16, 68, 406, 3807, 75164]


def _brute_force(n):
    """Every family of subsets of [n] satisfying the circuit axioms."""
    subsets = [
        frozenset(c) for size in range(1, n + 1) for c in itertools.combinations(range(n), size)
    ]
    found = set()
    for choice in itertools.product((False, True), repeat=len(subsets)):
        family = [s for s, chosen in zip(subsets, choice) if chosen]
        if any(a < b for a in family for b in family):
            continue
        matroid = Matroid(n, frozenset(family))
        if check_axioms(matroid):
            found.add(matroid)
    return found


@pytest.mark.unit
class Tests(TestCase):
    """Matroid enumeration tests."""

    def test_counts(self):
        """Labeled counts up to five elements."""
        for n in range(6):
            with self.subTest(n=n):
                self.assertEqual(LABELED_COUNTS[n], sum(1 for _ in enumerate_matroids(n)))

    def test_brute_force(self):
        """Enumeration agrees with filtering every clutter, exactly once each."""
        for n in range(4):
            with self.subTest(n=n):
                listed = list(enumerate_matroids(n))
                self.assertEqual(len(listed), len(set(listed)))
                self.assertEqual(_brute_force(n), set(listed))

    @pytest.mark.slow
    def test_brute_force_four(self):
        """The brute-force oracle at four elements."""
        self.assertEqual(_brute_force(4), set(enumerate_matroids(4)))

    @pytest.mark.slow
    def test_counts_six(self):
        """Labeled count at six elements, with rank duality."""
        count = 0
        for matroid in enumerate_matroids(6):
            count += 1
            self.assertEqual(6, matroid.rank() + matroid.dual.rank())
        self.assertEqual(LABELED_COUNTS[6], count)

    def test_axioms_and_rank_bound(self):
        """Every yielded matroid is valid and respects the rank bound."""
        listed = list(enumerate_matroids(4, r_max=2))
        self.assertTrue(all(check_axioms(m) for m in listed))
        self.assertTrue(all(m.rank() <= 2 for m in listed))
        self.assertIn(uniform(2, 4), listed)
        self.assertNotIn(uniform(3, 4), listed)
        for matroid in listed:
            self.assertEqual(4, matroid.rank() + matroid.dual.rank())

    def test_prune(self):
        """A prune callback cuts whole subtrees."""
        no_loops = list(
            enumerate_matroids(3, prune=lambda m: all(len(c) > 1 for c in m.circuits))
        )
        self.assertTrue(all(len(c) > 1 for m in no_loops for c in m.circuits))
        self.assertEqual(6, len(no_loops))

    def test_extensions(self):
        """Extensions of the free matroid on one element."""
        children = set(extensions(uniform(1, 1)))
        self.assertEqual(
            {
                uniform(2, 2),
                uniform(1, 2),
                Matroid(2, frozenset({frozenset({1})})),
            },
            children,
        )

    def test_guard(self):
        """The enumeration size is guarded."""
        with override_settings(TRACTRANK_GUARDS={"enumeration_size": 3}):
            with self.assertRaises(GuardExceeded):
                list(enumerate_matroids(4))
