# coding=utf-8

"""Exact number types that the standard library does not provide."""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

from tractrank.exceptions import ParseError

Rational = Union[int, Fraction]

GAUSSIAN_PATTERN = re.compile(
    r"^(?P<real>[+-]?\d+(?:/\d+)?)?"
    r"(?:(?P<sign>[+-])?(?P<imag>\d+(?:/\d+)?)?(?P<unit>i))?$"
)


@dataclass(frozen=True)
class GaussianRational:
    """An element `real + imag * i` of Q(i)."""

    real: Fraction = Fraction(0)
    imag: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "real", Fraction(self.real))
        object.__setattr__(self, "imag", Fraction(self.imag))

    def __bool__(self) -> bool:
        return bool(self.real) or bool(self.imag)

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.real + other.real, self.imag + other.imag)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.real - other.real, self.imag - other.imag)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.real, -self.imag)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.real * other.real - self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
        )

    def conjugate(self) -> "GaussianRational":
        """Complex conjugate."""
        return GaussianRational(self.real, -self.imag)

    def norm(self) -> Fraction:
        """The squared absolute value."""
        return self.real * self.real + self.imag * self.imag

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        norm = other.norm()
        if not norm:
            raise ZeroDivisionError("Division by zero in Q(i).")
        product = self * other.conjugate()
        return GaussianRational(product.real / norm, product.imag / norm)

    def __str__(self) -> str:
        if not self.imag:
            return str(self.real)
        imag = "" if abs(self.imag) == 1 else str(abs(self.imag))
        sign = "-" if self.imag < 0 else "+"
        if not self.real:
            return f"{'-' if self.imag < 0 else ''}{imag}i"
        return f"{self.real}{sign}{imag}i"

    @classmethod
    def parse(cls, literal: str) -> "GaussianRational":
        """Parse `a`, `bi`, `a+bi` or `a-bi` with rational `a` and `b`."""
        text = literal.replace(" ", "")
        match = GAUSSIAN_PATTERN.match(text)
        if not text or not match:
            raise ParseError(f"Invalid Gaussian rational '{literal}'.")
        real = Fraction(match.group("real") or 0)
        imag = Fraction(0)
        if match.group("unit"):
            imag = Fraction(match.group("imag") or 1)
            if match.group("sign") == "-":
                imag = -imag
            elif match.group("sign") is None and match.group("real"):
                # `2i` parses its digits as the real part.
                imag, real = real, Fraction(0)
        return cls(real, imag)


@dataclass(frozen=True)
class LaurentPolynomial:
    """A Laurent polynomial over Q, stored as sorted (exponent, coefficient) pairs."""

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Rational]) -> "LaurentPolynomial":
        """Build from an exponent to coefficient mapping, dropping zeros."""
        return cls(
            tuple(
                (int(exponent), Fraction(coefficient))
                for exponent, coefficient in sorted(mapping.items())
                if coefficient
            )
        )

    @classmethod
    def monomial(cls, exponent: int, coefficient: Rational = 1) -> "LaurentPolynomial":
        """The polynomial `coefficient * t^exponent`."""
        return cls.from_mapping({exponent: coefficient})

    def as_mapping(self) -> Dict[int, Fraction]:
        """Exponent to coefficient mapping."""
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient."""
        if not self.terms:
            raise ValueError("The zero Laurent polynomial has no degree.")
        return self.terms[-1][0]

    def _combine(self, other: "LaurentPolynomial", scale: int):
        mapping = self.as_mapping()
        for exponent, coefficient in other.terms:
            mapping[exponent] = mapping.get(exponent, 0) + scale * coefficient
        return LaurentPolynomial.from_mapping(mapping)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self._combine(other, 1)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self._combine(other, -1)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        mapping = {}
        for left_exponent, left in self.terms:
            for right_exponent, right in other.terms:
                exponent = left_exponent + right_exponent
                mapping[exponent] = mapping.get(exponent, 0) + left * right
        return LaurentPolynomial.from_mapping(mapping)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in reversed(self.terms))
