"""Exact values ``a + b*eps`` with one formal positive infinitesimal.

The order is lexicographic on ``(std, eps)``, which is enough to tell
``0-`` from ``0`` from ``0+`` and ``1`` from ``1+`` while keeping every
sum exact.  Only addition and comparison are provided.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction, str]


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        # Fraction("0.3") is exactly 3/10
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a str or Fraction")
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


@dataclass(frozen=True, order=True)
class Hyperreal:
    std: Fraction
    eps: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "std", _to_fraction(self.std))
        object.__setattr__(self, "eps", _to_fraction(self.eps))

    def __add__(self, other: "Hyperreal") -> "Hyperreal":
        if not isinstance(other, Hyperreal):
            return NotImplemented
        return Hyperreal(self.std + other.std, self.eps + other.eps)

    def __neg__(self) -> "Hyperreal":
        return Hyperreal(-self.std, -self.eps)

    def __sub__(self, other: "Hyperreal") -> "Hyperreal":
        if not isinstance(other, Hyperreal):
            return NotImplemented
        return self + (-other)

    def __repr__(self) -> str:
        return f"Hyperreal({self.std}, {self.eps})"

    def __str__(self) -> str:
        return format_hyperreal(self)


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


MINUS_ZERO = Hyperreal(0, -1)
ZERO = Hyperreal(0, 0)
ZERO_PLUS = Hyperreal(0, 1)
ONE = Hyperreal(1, 0)
ONE_PLUS = Hyperreal(1, 1)
# ceiling of n_sup: three copies of 1+
THREE_PLUS = Hyperreal(3, 3)
# floor of n_inf: three copies of 0-
MINUS_ZERO_X3 = Hyperreal(0, -3)


def hr(std: RationalLike, eps: RationalLike = 0) -> Hyperreal:
    """Shorthand constructor, ``hr("0.3")`` or ``hr(1, 1)``."""
    return Hyperreal(std, eps)


def hr_add(a: Hyperreal, b: Hyperreal) -> Hyperreal:
    return a + b


def hr_sum(values) -> Hyperreal:
    total = ZERO
    for v in values:
        total = total + v
    return total


def hr_cmp(a: Hyperreal, b: Hyperreal) -> Ordering:
    if a < b:
        return Ordering.LESS
    if a == b:
        return Ordering.EQUAL
    return Ordering.GREATER


def hr_standard_part(a: Hyperreal) -> Fraction:
    return a.std


def in_unit_range(a: Hyperreal) -> bool:
    """True iff ``0- <= a <= 1+``."""
    return MINUS_ZERO <= a <= ONE_PLUS


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_hyperreal(a: Hyperreal) -> str:
    """Canonical literal: ``1+``, ``0-``, ``2/5``, ``1/2+3e``, ``0-3e``."""
    text = format_rational(a.std)
    if a.eps == 0:
        return text
    sign = "+" if a.eps > 0 else "-"
    mag = abs(a.eps)
    if mag == 1:
        return text + sign
    return f"{text}{sign}{format_rational(mag)}e"
