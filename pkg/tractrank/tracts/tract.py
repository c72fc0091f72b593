# coding=utf-8

"""Tracts: multiplicative monoids with a null set of formal sums.

Every tract works on raw element values internally (`_mul`, `_null`, ...)
and exposes `TractElement` wrappers publicly, so elements always carry the
tract they belong to.
"""

import abc
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, ClassVar, FrozenSet, Iterable, List, Sequence, Tuple, Union

from tractrank import constants
from tractrank.exceptions import ParseError, TagMismatch, UnsupportedTract
from tractrank.simplex import LinearProgram, feasible_point
from tractrank.tracts.finite_fields import FIELD_ORDERS, field_tables
from tractrank.tracts.numbers import GaussianRational, LaurentPolynomial

RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True)
class TractElement:
    """A value tagged with the tract it lives in."""

    tract: "Tract"
    value: Any

    @property
    def is_zero(self) -> bool:
        """Whether this is the absorbing element."""
        return self.value == self.tract.zero_value

    def __mul__(self, other: "TractElement") -> "TractElement":
        return self.tract.mul(self, other)

    def __neg__(self) -> "TractElement":
        return self.tract.neg(self)

    def __str__(self) -> str:
        return self.tract.format(self)

    def __repr__(self) -> str:
        return f"{self.tract.tag}({self.tract.format(self)})"


@dataclass(frozen=True)
class FormalSum:
    """A multiset of nonzero elements of one tract."""

    tract: "Tract"
    terms: Tuple[TractElement, ...] = ()

    @classmethod
    def of(cls, tract: "Tract", elements: Iterable[TractElement]) -> "FormalSum":
        """Collect elements into a formal sum, dropping zeros.

        :param tract: The tract every element must belong to.
        :param elements: The terms.
        :return: The formal sum.
        """
        terms = []
        for element in elements:
            tract.check(element)
            if not element.is_zero:
                terms.append(element)
        return cls(tract, tuple(terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if other.tract != self.tract:
            raise TagMismatch("Formal sums from different tracts.")
        return FormalSum(self.tract, self.terms + other.terms)

    @property
    def values(self) -> List[Any]:
        """Raw values of the terms."""
        return [term.value for term in self.terms]

    def scaled(self, unit: TractElement) -> "FormalSum":
        """Multiply every term by `unit`."""
        return FormalSum.of(self.tract, (self.tract.mul(unit, t) for t in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "{}"
        return "{" + ", ".join(str(term) for term in self.terms) + "}"


class Tract(abc.ABC):
    """Base class of the tract catalog."""

    tag: ClassVar[str]
    zero_value: ClassVar[Any] = 0
    one_value: ClassVar[Any] = 1

    # Elements.

    def element(self, value: Any) -> TractElement:
        """Wrap (and canonicalize) a raw value as an element of this tract."""
        return TractElement(self, self.canonical(value))

    def canonical(self, value: Any) -> Any:
        """Validate a raw value and return its canonical form."""
        return value

    @property
    def zero(self) -> TractElement:
        """The absorbing element 0."""
        return TractElement(self, self.zero_value)

    @property
    def one(self) -> TractElement:
        """The multiplicative identity 1."""
        return TractElement(self, self.one_value)

    @property
    def epsilon(self) -> TractElement:
        """The unique unit with `1 + epsilon` null."""
        return self.neg(self.one)

    def check(self, *elements: TractElement) -> None:
        """Raise `TagMismatch` unless every element belongs to this tract."""
        for element in elements:
            if not isinstance(element, TractElement) or element.tract != self:
                raise TagMismatch(f"{element!r} is not an element of {self.tag}.")

    def elements(self) -> Union[List[TractElement], str]:
        """All elements, zero first, or `constants.INFINITE`."""
        values = self._elements()
        if values is None:
            return constants.INFINITE
        return [TractElement(self, value) for value in values]

    def _elements(self):
        return None

    @property
    def finite(self) -> bool:
        """Whether the tract has finitely many elements."""
        return self._elements() is not None

    # Monoid structure.

    def mul(self, a: TractElement, b: TractElement) -> TractElement:
        """The monoid product; zero is absorbing."""
        self.check(a, b)
        if a.value == self.zero_value or b.value == self.zero_value:
            return self.zero
        return TractElement(self, self._mul(a.value, b.value))

    def neg(self, a: TractElement) -> TractElement:
        """Multiply by epsilon."""
        self.check(a)
        if a.value == self.zero_value:
            return a
        return TractElement(self, self._neg(a.value))

    def inverse(self, a: TractElement) -> TractElement:
        """The multiplicative inverse of a unit."""
        self.check(a)
        if a.value == self.zero_value:
            raise ZeroDivisionError(f"Zero has no inverse in {self.tag}.")
        return TractElement(self, self._inverse(a.value))

    def product(self, elements: Iterable[TractElement]) -> TractElement:
        """Multiply a sequence of elements."""
        return reduce(self.mul, elements, self.one)

    def is_null(self, formal_sum: FormalSum) -> bool:
        """Decide membership of a formal sum in the null set."""
        if formal_sum.tract != self:
            raise TagMismatch(f"Formal sum over {formal_sum.tract.tag}, not {self.tag}.")
        if not formal_sum.terms:
            return True
        return self._null(formal_sum.values)

    def is_null_of(self, elements: Iterable[TractElement]) -> bool:
        """Shortcut for `is_null(FormalSum.of(self, elements))`."""
        return self.is_null(FormalSum.of(self, elements))

    @abc.abstractmethod
    def _mul(self, a, b):
        """Product of two nonzero raw values."""

    @abc.abstractmethod
    def _neg(self, a):
        """Epsilon times a nonzero raw value."""

    @abc.abstractmethod
    def _inverse(self, a):
        """Inverse of a nonzero raw value."""

    @abc.abstractmethod
    def _null(self, values: Sequence) -> bool:
        """Null-set membership of a nonempty list of nonzero raw values."""

    # Text format.

    def parse(self, literal: str) -> TractElement:
        """Parse an element literal."""
        try:
            return self.element(self._parse(literal.strip()))
        except ParseError:
            raise
        except (ValueError, ZeroDivisionError, TypeError) as error:
            raise ParseError(f"Invalid {self.tag} element '{literal}'.") from error

    @abc.abstractmethod
    def _parse(self, literal: str):
        """Raw value of a literal."""

    def format(self, a: TractElement) -> str:
        """Literal of an element, the inverse of `parse`."""
        return str(a.value)

    def __str__(self) -> str:
        return self.tag


def _rational(literal: str) -> Fraction:
    if not RATIONAL_PATTERN.match(literal):
        raise ParseError(f"Invalid rational '{literal}'.")
    return Fraction(literal)


class FieldTract(Tract):
    """A tract that is a field: the null set holds exactly the zero sums."""

    def add(self, a: TractElement, b: TractElement) -> TractElement:
        """Field sum."""
        self.check(a, b)
        return TractElement(self, self._add(a.value, b.value))

    def sub(self, a: TractElement, b: TractElement) -> TractElement:
        """Field difference."""
        self.check(a, b)
        return TractElement(self, self._add(a.value, self._neg_any(b.value)))

    def sum(self, elements: Iterable[TractElement]) -> TractElement:
        """Field sum of a sequence."""
        return reduce(self.add, elements, self.zero)

    def _neg_any(self, a):
        return self.zero_value if a == self.zero_value else self._neg(a)

    def _null(self, values: Sequence) -> bool:
        return reduce(self._add, values, self.zero_value) == self.zero_value

    @abc.abstractmethod
    def _add(self, a, b):
        """Sum of two raw values, either may be zero."""


@dataclass(frozen=True)
class Krasner(Tract):
    """The Krasner hyperfield K: a sum is null unless it has exactly one term."""

    tag: ClassVar[str] = "krasner"

    def canonical(self, value):
        if value not in (0, 1):
            raise ParseError(f"Krasner elements are 0 or 1, got {value!r}.")
        return int(value)

    def _elements(self):
        return [0, 1]

    def _mul(self, a, b):
        return 1

    def _neg(self, a):
        return 1

    def _inverse(self, a):
        return 1

    def _null(self, values):
        return len(values) >= 2

    def _parse(self, literal):
        if literal not in ("0", "1"):
            raise ParseError(f"Invalid krasner element '{literal}'.")
        return int(literal)


@dataclass(frozen=True)
class Sign(Tract):
    """The sign hyperfield S: a sum is null iff both signs occur."""

    tag: ClassVar[str] = "sign"

    def canonical(self, value):
        if value not in (0, 1, -1):
            raise ParseError(f"Sign elements are 0, 1 or -1, got {value!r}.")
        return int(value)

    def _elements(self):
        return [0, 1, -1]

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inverse(self, a):
        return a

    def _null(self, values):
        return 1 in values and -1 in values

    def _parse(self, literal):
        literals = {"0": 0, "+": 1, "-": -1, "+1": 1, "1": 1, "-1": -1}
        if literal not in literals:
            raise ParseError(f"Invalid sign element '{literal}'.")
        return literals[literal]

    def format(self, a):
        return {0: "0", 1: "+", -1: "-"}[a.value]


@dataclass(frozen=True)
class RegularPartialField(Tract):
    """The regular partial field {0, 1, -1} with null set from the integers."""

    tag: ClassVar[str] = "regular"

    def canonical(self, value):
        if value not in (0, 1, -1):
            raise ParseError(f"Regular partial field elements are 0, 1, -1, got {value!r}.")
        return int(value)

    def _elements(self):
        return [0, 1, -1]

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inverse(self, a):
        return a

    def _null(self, values):
        return sum(values) == 0

    def _parse(self, literal):
        if literal not in ("0", "1", "-1", "+1"):
            raise ParseError(f"Invalid regular partial field element '{literal}'.")
        return int(literal)


@dataclass(frozen=True)
class Triangle(Tract):
    """Viro's triangle hyperfield V of nonnegative rational magnitudes.

    A sum is null iff the magnitudes are the side lengths of a (possibly
    degenerate) polygon, that is `2 * max <= sum`.
    """

    tag: ClassVar[str] = "triangle"
    zero_value: ClassVar[Any] = Fraction(0)
    one_value: ClassVar[Any] = Fraction(1)

    def canonical(self, value):
        value = Fraction(value)
        if value < 0:
            raise ParseError(f"Triangle magnitudes are nonnegative, got {value}.")
        return value

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return a

    def _inverse(self, a):
        return 1 / a

    def _null(self, values):
        return 2 * max(values) <= sum(values)

    def _parse(self, literal):
        return _rational(literal)


@dataclass(frozen=True)
class Tropical(Tract):
    """The tropical hyperfield T in max-plus coordinates.

    The zero element is the bottom value `None` (printed `ninf`) and the
    multiplicative identity is the rational 0. A sum is null iff its maximum
    is attained at least twice.
    """

    tag: ClassVar[str] = "tropical"
    zero_value: ClassVar[Any] = None
    one_value: ClassVar[Any] = Fraction(0)

    def canonical(self, value):
        if value is None:
            return None
        return Fraction(value)

    def _mul(self, a, b):
        return a + b

    def _neg(self, a):
        return a

    def _inverse(self, a):
        return -a

    def _null(self, values):
        top = max(values)
        return sum(1 for value in values if value == top) >= 2

    def _parse(self, literal):
        if literal == "ninf":
            return None
        return _rational(literal)

    def format(self, a):
        return "ninf" if a.value is None else str(a.value)


def _primitive(a, b) -> Tuple[int, int]:
    a, b = Fraction(a), Fraction(b)
    scale = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    x, y = int(a * scale), int(b * scale)
    divisor = math.gcd(x, y)
    if divisor == 0:
        return (0, 0)
    return (x // divisor, y // divisor)


@dataclass(frozen=True)
class Phase(Tract):
    """The phase hyperfield P of directions in the plane.

    A nonzero element is a primitive integer pair `(a, b)` standing for the
    ray through `a + b i`. A sum is null iff positive multipliers `c_i >= 1`
    make the directions sum to zero, decided by an exact linear program.
    """

    tag: ClassVar[str] = "phase"
    zero_value: ClassVar[Any] = (0, 0)
    one_value: ClassVar[Any] = (1, 0)

    def canonical(self, value):
        if isinstance(value, GaussianRational):
            return _primitive(value.real, value.imag)
        a, b = value
        return _primitive(a, b)

    def _mul(self, a, b):
        return _primitive(a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _inverse(self, a):
        return (a[0], -a[1])

    def _null(self, values):
        if len(values) < 2:
            return False
        program = LinearProgram(variables=len(values))
        for axis in (0, 1):
            program.add_equality([value[axis] for value in values], 0)
        for index in range(len(values)):
            row = [0] * len(values)
            row[index] = 1
            program.add_lower_bound(row, 1)
        return feasible_point(program) is not None

    def _parse(self, literal):
        if literal == "0":
            return (0, 0)
        parts = literal.split(",")
        if len(parts) != 2:
            raise ParseError(f"Invalid phase element '{literal}'.")
        return (_rational(parts[0].strip()), _rational(parts[1].strip()))

    def format(self, a):
        return "0" if a.value == (0, 0) else f"{a.value[0]},{a.value[1]}"


@dataclass(frozen=True)
class Rational(FieldTract):
    """The field Q."""

    tag: ClassVar[str] = "rational"
    zero_value: ClassVar[Any] = Fraction(0)
    one_value: ClassVar[Any] = Fraction(1)

    def canonical(self, value):
        return Fraction(value)

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inverse(self, a):
        return 1 / a

    def _add(self, a, b):
        return a + b

    def _parse(self, literal):
        return _rational(literal)


@dataclass(frozen=True)
class GaussianRationals(FieldTract):
    """The field Q(i)."""

    tag: ClassVar[str] = "gaussian"
    zero_value: ClassVar[Any] = GaussianRational()
    one_value: ClassVar[Any] = GaussianRational(1)

    def canonical(self, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TagMismatch("Floating point complex numbers are not exact.")
        if isinstance(value, tuple):
            return GaussianRational(*value)
        return GaussianRational(Fraction(value))

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inverse(self, a):
        return self.one_value / a

    def _add(self, a, b):
        return a + b

    def _parse(self, literal):
        return GaussianRational.parse(literal)


@dataclass(frozen=True)
class FiniteField(FieldTract):
    """GF(q) for q in {2, 3, 4, 5, 7, 8, 9} with tabulated arithmetic."""

    order: int = 2

    def __post_init__(self):
        if self.order not in FIELD_ORDERS:
            raise UnsupportedTract(
                f"Finite field order {self.order} is not one of {FIELD_ORDERS}."
            )

    @property
    def tag(self) -> str:  # pylint: disable=invalid-overridden-method
        return f"fp:{self.order}"

    @property
    def tables(self):
        """The arithmetic tables."""
        return field_tables(self.order)

    def canonical(self, value):
        value = int(value)
        if not 0 <= value < self.order:
            raise ParseError(f"GF({self.order}) elements are 0..{self.order - 1}.")
        return value

    def _elements(self):
        return list(range(self.order))

    def _mul(self, a, b):
        return self.tables.mul[a][b]

    def _neg(self, a):
        return self.tables.negation[a]

    def _inverse(self, a):
        return self.tables.inverse[a]

    def _add(self, a, b):
        return self.tables.add[a][b]

    def _parse(self, literal):
        return int(literal)


@dataclass(frozen=True)
class QuotientOfFiniteField(Tract):
    """The quotient hyperfield GF(q) / H for a subgroup H of the unit group.

    Elements are cosets, represented by their smallest member. A sum of
    cosets is null iff representatives can be rescaled by elements of H to
    sum to zero in the field.
    """

    order: int = 3
    subgroup: FrozenSet[int] = frozenset({1})

    def __post_init__(self):
        field = FiniteField(self.order)
        subgroup = frozenset(int(h) for h in self.subgroup)
        object.__setattr__(self, "subgroup", subgroup)
        tables = field.tables
        if 1 not in subgroup or 0 in subgroup:
            raise UnsupportedTract("The subgroup must contain 1 and not 0.")
        for h in subgroup:
            if not 0 < h < self.order:
                raise UnsupportedTract(f"{h} is not a unit of GF({self.order}).")
            if tables.inverse[h] not in subgroup:
                raise UnsupportedTract("The subgroup is not closed under inverses.")
            for g in subgroup:
                if tables.mul[h][g] not in subgroup:
                    raise UnsupportedTract(
                        "The subgroup is not closed under multiplication."
                    )

    @property
    def tag(self) -> str:  # pylint: disable=invalid-overridden-method
        members = ",".join(str(h) for h in sorted(self.subgroup))
        return f"quotient:{self.order}:{{{members}}}"

    @property
    def field(self) -> FiniteField:
        """The field being divided."""
        return FiniteField(self.order)

    def canonical(self, value):
        value = self.field.canonical(value)
        if value == 0:
            return 0
        mul = self.field.tables.mul
        return min(mul[value][h] for h in self.subgroup)

    def coset(self, value: int) -> List[int]:
        """Field elements of the coset with representative `value`."""
        if value == 0:
            return [0]
        mul = self.field.tables.mul
        return sorted({mul[value][h] for h in self.subgroup})

    def _elements(self):
        return [0] + sorted({self.canonical(x) for x in range(1, self.order)})

    def _mul(self, a, b):
        return self.canonical(self.field.tables.mul[a][b])

    def _neg(self, a):
        return self.canonical(self.field.tables.negation[a])

    def _inverse(self, a):
        return self.canonical(self.field.tables.inverse[a])

    def _null(self, values):
        tables = self.field.tables
        first, rest = values[0], values[1:]
        members = sorted(self.subgroup)
        for multipliers in itertools.product(members, repeat=len(rest)):
            total = first
            for value, multiplier in zip(rest, multipliers):
                total = tables.add[total][tables.mul[value][multiplier]]
            if total == 0:
                return True
        return False

    def _parse(self, literal):
        return int(literal)


@dataclass(frozen=True)
class Laurent(Tract):
    """Laurent polynomials over Q, the model of the Puiseux series field.

    Only used as the source of the degree homomorphism to the tropical
    hyperfield. It is a ring rather than a field: only monomials are units.
    """

    tag: ClassVar[str] = "laurent"
    zero_value: ClassVar[Any] = LaurentPolynomial()
    one_value: ClassVar[Any] = LaurentPolynomial.monomial(0)

    def canonical(self, value):
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, dict):
            return LaurentPolynomial.from_mapping(value)
        return LaurentPolynomial.from_mapping({0: Fraction(value)})

    def add(self, a: TractElement, b: TractElement) -> TractElement:
        """Ring sum."""
        self.check(a, b)
        return TractElement(self, a.value + b.value)

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inverse(self, a):
        if len(a.terms) != 1:
            raise UnsupportedTract("Only Laurent monomials are invertible.")
        exponent, coefficient = a.terms[0]
        return LaurentPolynomial.monomial(-exponent, 1 / coefficient)

    def _null(self, values):
        return not reduce(lambda x, y: x + y, values)

    def _parse(self, literal):
        raise ParseError("Laurent polynomials have no text format.")

    def format(self, a):
        return str(a.value)
