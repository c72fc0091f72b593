# coding=utf-8

"""Covector composition tests."""

import itertools
from unittest import TestCase

import pytest
from django.test import override_settings

from tractrank.exceptions import GuardExceeded, PreconditionViolation, TagMismatch
from tractrank.fmatroids import (
    FMatroid,
    covector_closure_check,
    covectors,
    from_field_matrix,
    pushforward,
    sign_compose,
    tropical_compose,
    validate,
)
from tractrank.linalg import TractMatrix, TractVector
from tractrank.matroids import uniform
from tractrank.tracts import Rational, RationalToKrasner, RationalToSign, Sign, Tropical


def _sign(*values):
    return TractVector.of(Sign(), values)


def _tropical(*values):
    return TractVector.of(Tropical(), values)


def _trivial_tropical_u23():
    """U_{2,3} over the tropical hyperfield with every signature entry equal to one."""
    tract = Tropical()
    circuits = {frozenset({0, 1, 2}): _tropical(0, 0, 0)}
    cocircuits = {
        frozenset(pair): TractVector.of(tract, [0 if i in pair else None for i in range(3)])
        for pair in itertools.combinations(range(3), 2)
    }
    return FMatroid(tract, uniform(2, 3), circuits, cocircuits)


@pytest.mark.unit
class Tests(TestCase):
    """Covector composition tests."""

    def test_sign_compose(self):
        """The first vector wins where it is nonzero."""
        self.assertEqual(_sign(1, 1, -1), sign_compose(_sign(1, 0, -1), _sign(-1, 1, 1)))
        x = _sign(1, 0, -1, 0)
        y = _sign(0, 0, 1, -1)
        self.assertEqual(x, sign_compose(x, x))
        self.assertEqual(x.support() | y.support(), sign_compose(x, y).support())
        self.assertNotEqual(sign_compose(x, y), sign_compose(y, x))
        with self.assertRaises(TagMismatch):
            sign_compose(_tropical(0), _tropical(1))
        with self.assertRaises(TagMismatch):
            sign_compose(_sign(1), _sign(1, 1))

    def test_tropical_compose(self):
        """Coordinatewise maximum with bottom as the neutral element."""
        self.assertEqual(_tropical(0, 3), tropical_compose(_tropical(0, None), _tropical(None, 3)))
        x = _tropical(1, None, -2)
        y = _tropical(0, 5, -1)
        self.assertEqual(x, tropical_compose(x, x))
        self.assertEqual(tropical_compose(x, y), tropical_compose(y, x))
        self.assertEqual(_tropical(1, 5, -1), tropical_compose(x, y))

    def test_sign_closure(self):
        """Sign matroids pushed from Q are closed under conformal composition."""
        matrix = TractMatrix.of(Rational(), [[1, 0, 1, 1], [0, 1, 1, 2]])
        matroid = pushforward(RationalToSign(), from_field_matrix(matrix))
        self.assertTrue(covector_closure_check(matroid))
        free = pushforward(
            RationalToSign(), from_field_matrix(TractMatrix.of(Rational(), [[1, 0], [0, 1]]))
        )
        self.assertEqual(9, len(covectors(free)))
        self.assertTrue(covector_closure_check(free))

    def test_krasner_closure(self):
        """Covector supports of a Krasner push-forward are closed under union."""
        matrix = TractMatrix.of(Rational(), [[1, 0, 1, 1, 2], [0, 1, 1, -1, 0], [0, 0, 0, 1, 1]])
        matroid = pushforward(RationalToKrasner(), from_field_matrix(matrix))
        self.assertTrue(validate(matroid))
        self.assertTrue(covector_closure_check(matroid))

    def test_tropical_closure(self):
        """Tropical closure is checked on the supplied covector pairs."""
        matroid = _trivial_tropical_u23()
        self.assertTrue(validate(matroid))
        samples = [
            (_tropical(1, 1, 0), _tropical(0, 1, 1)),
            (_tropical(0, 0, None), _tropical(2, 2, 2)),
        ]
        self.assertTrue(covector_closure_check(matroid, samples))
        with self.assertRaises(PreconditionViolation):
            covector_closure_check(matroid, [(_tropical(1, 0, 0), _tropical(0, 0, 0))])
        with self.assertRaises(PreconditionViolation):
            covector_closure_check(matroid)

    def test_guard(self):
        """Covector enumeration is guarded by the ground set size."""
        matrix = TractMatrix.of(Rational(), [[1, 0, 1, 1], [0, 1, 1, 2]])
        matroid = pushforward(RationalToSign(), from_field_matrix(matrix))
        with override_settings(TRACTRANK_GUARDS={"covector_enumeration": 3}):
            with self.assertRaises(GuardExceeded):
                covector_closure_check(matroid)
