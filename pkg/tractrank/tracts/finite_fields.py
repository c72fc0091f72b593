# coding=utf-8

"""Tabulated arithmetic for the small finite fields.

An element of GF(p^k) is encoded as the integer whose base-p digits are the
coefficients (lowest degree first) of its residue polynomial modulo a fixed
irreducible polynomial. Prime fields use the integers 0..p-1 directly.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from tractrank.exceptions import UnsupportedTract

FIELD_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# order: (characteristic, irreducible polynomial coefficients, lowest first)
IRREDUCIBLE = {
    4: (2, (1, 1, 1)),
    8: (2, (1, 1, 0, 1)),
    9: (3, (1, 0, 1)),
}

Table = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class FieldTables:
    """Addition and multiplication tables of GF(q)."""

    order: int
    characteristic: int
    add: Table
    mul: Table
    negation: Tuple[int, ...]
    inverse: Tuple[int, ...]


def _digits(value: int, base: int, width: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(width):
        value, digit = divmod(value, base)
        digits.append(digit)
    return tuple(digits)


def _encode(digits, base: int) -> int:
    return sum(digit * base**power for power, digit in enumerate(digits))


def _poly_mul(left, right, p: int, modulus) -> Tuple[int, ...]:
    degree = len(modulus) - 1
    product = [0] * (2 * degree - 1)
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            product[i + j] = (product[i + j] + a * b) % p
    # Reduce with the monic modulus from the top degree down.
    for power in range(len(product) - 1, degree - 1, -1):
        coefficient = product[power]
        if coefficient:
            for offset, m in enumerate(modulus):
                index = power - degree + offset
                product[index] = (product[index] - coefficient * m) % p
    return tuple(product[:degree])


@lru_cache(maxsize=None)
def field_tables(order: int) -> FieldTables:
    """Build (once) the arithmetic tables of GF(order).

    :param order: A prime in {2, 3, 5, 7} or a prime power in {4, 8, 9}.
    :return: The tables.
    """
    if order not in FIELD_ORDERS:
        raise UnsupportedTract(
            f"Finite field order {order} is not one of {FIELD_ORDERS}."
        )
    if order in IRREDUCIBLE:
        p, modulus = IRREDUCIBLE[order]
        width = len(modulus) - 1
        elements = [_digits(value, p, width) for value in range(order)]
        add = tuple(
            tuple(
                _encode([(x + y) % p for x, y in zip(a, b)], p) for b in elements
            )
            for a in elements
        )
        mul = tuple(
            tuple(_encode(_poly_mul(a, b, p, modulus), p) for b in elements)
            for a in elements
        )
    else:
        p = order
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
    negation = tuple(row.index(0) for row in add)
    inverse = tuple([0] + [mul[a].index(1) for a in range(1, order)])
    return FieldTables(
        order=order,
        characteristic=p,
        add=add,
        mul=mul,
        negation=negation,
        inverse=inverse,
    )
