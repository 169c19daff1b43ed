"""Coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """``char == 0`` means the rationals, otherwise ``F_char``."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"field characteristic must be 0 or a prime, got {self.char}")

    @property
    def is_rational(self) -> bool:
        return self.char == 0

    def normalize(self, c: Scalar) -> Scalar:
        if self.char:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, self.char) % self.char
            return int(c) % self.char
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    def inverse(self, c: Scalar) -> Scalar:
        if self.char:
            return pow(int(c), -1, self.char)
        return Fraction(1) / c

    def __str__(self) -> str:
        return "QQ" if self.char == 0 else f"GF({self.char})"


Rationals = FieldSpec(0)


def PrimeField(p: int) -> FieldSpec:
    if p == 0:
        raise ValueError("PrimeField needs a prime, use Rationals for characteristic 0")
    return FieldSpec(p)
