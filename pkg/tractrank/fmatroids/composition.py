# coding=utf-8

"""Composition of covectors and the closure checks built on it."""

import itertools
import logging
from typing import Iterable, List, Optional, Tuple

from tractrank import constants, utilities
from tractrank.exceptions import PreconditionViolation, TagMismatch, UnsupportedTract
from tractrank.fmatroids.fmatroid import FMatroid
from tractrank.linalg.matrix import TractVector
from tractrank.tracts import Krasner, Sign, Tropical

logger = logging.getLogger(__name__)

SamplePairs = Iterable[Tuple[TractVector, TractVector]]


def _check_pair(x: TractVector, y: TractVector, tract_type) -> None:
    x.check_compatible(y)
    if not isinstance(x.tract, tract_type):
        raise TagMismatch(f"Expected {tract_type.tag} vectors, got {x.tract.tag}.")


def sign_compose(x: TractVector, y: TractVector) -> TractVector:
    """`x` where it is nonzero, `y` elsewhere."""
    _check_pair(x, y, Sign)
    return TractVector(x.tract, tuple(a if not a.is_zero else b for a, b in zip(x, y)))


def tropical_compose(x: TractVector, y: TractVector) -> TractVector:
    """Coordinatewise maximum; the bottom element is neutral."""
    _check_pair(x, y, Tropical)
    tract = x.tract
    entries = []
    for a, b in zip(x, y):
        if a.is_zero or b.is_zero:
            entries.append(b if a.is_zero else a)
        else:
            entries.append(tract.element(max(a.value, b.value)))
    return TractVector(tract, tuple(entries))


def conformal(x: TractVector, y: TractVector) -> bool:
    """Whether no coordinate has opposite nonzero signs."""
    return not any(a.value == -b.value != 0 for a, b in zip(x, y))


def covectors(matroid: FMatroid) -> List[TractVector]:
    """Every covector of an F-matroid over a finite tract."""
    tract = matroid.tract
    if not tract.finite:
        raise UnsupportedTract(f"Cannot enumerate covectors over {tract.tag}.")
    utilities.check_guard(constants.GUARD_COVECTOR_ENUMERATION, matroid.n)
    found = []
    for entries in itertools.product(tract.elements(), repeat=matroid.n):
        vector = TractVector(tract, entries)
        if matroid.is_covector(vector):
            found.append(vector)
    return found


def covector_closure_check(matroid: FMatroid, samples: Optional[SamplePairs] = None) -> bool:
    """Check that covectors are closed under composition.

    Over the sign hyperfield every covector is enumerated and every conformal
    pair is composed; over the Krasner hyperfield composition is the union
    of supports. Over the tropical hyperfield only the supplied sample pairs,
    each a pair of covectors, are composed.

    :param matroid: An F-matroid over Sign, Krasner or Tropical.
    :param samples: Covector pairs to compose, for the tropical hyperfield.
    :return: True iff every composition is again a covector.
    """
    tract = matroid.tract
    if isinstance(tract, Tropical):
        if samples is None:
            raise PreconditionViolation("Tropical closure checks need sample pairs.")
        pairs = list(samples)
        for x, y in pairs:
            if not (matroid.is_covector(x) and matroid.is_covector(y)):
                raise PreconditionViolation(f"Sample {x}, {y} is not a pair of covectors.")
        compose = tropical_compose
    elif isinstance(tract, (Sign, Krasner)):
        found = covectors(matroid)
        pairs = [(x, y) for x in found for y in found if conformal(x, y)]
        compose = _support_compose if isinstance(tract, Krasner) else sign_compose
    else:
        raise UnsupportedTract(f"No covector composition over {tract.tag}.")
    for x, y in pairs:
        composed = compose(x, y)
        if not matroid.is_covector(composed):
            logger.info("Composition of %s and %s is not a covector.", x, y)
            return False
    logger.debug("Checked %d compositions over %s.", len(pairs), tract.tag)
    return True


def _support_compose(x: TractVector, y: TractVector) -> TractVector:
    _check_pair(x, y, Krasner)
    return TractVector(x.tract, tuple(a if not a.is_zero else b for a, b in zip(x, y)))
