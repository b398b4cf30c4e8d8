"""Exact arithmetic in Q[sqrt(2)]: numbers a + b*sqrt(2) with rational a, b.

The discharging thresholds (membership in X1, the sign of delta-q-c, the
minimum inside the q formula) sit exactly at algebraic boundaries, so every
comparison here is decided symbolically; floats appear only in __float__ and
to_decimal, which are presentation-layer conveniences.
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction

_RAT = (int, Fraction)


def as_exact(x) -> ExactReal:
    if isinstance(x, ExactReal):
        return x
    if isinstance(x, _RAT):
        return ExactReal(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to ExactReal")


class ExactReal:
    """a + b*sqrt(2) with a, b rational; totally ordered, exact field ops."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, _RAT):
            return ExactReal(self.a + other, self.b)
        if isinstance(other, ExactReal):
            return ExactReal(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return ExactReal(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, _RAT):
            return ExactReal(self.a - other, self.b)
        if isinstance(other, ExactReal):
            return ExactReal(self.a - other.a, self.b - other.b)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _RAT):
            return ExactReal(self.a * other, self.b * other)
        if isinstance(other, ExactReal):
            return ExactReal(
                self.a * other.a + 2 * self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RAT):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return ExactReal(self.a / other, self.b / other)
        if isinstance(other, ExactReal):
            # a^2 = 2 b^2 has no rational solution besides a = b = 0
            norm = other.a * other.a - 2 * other.b * other.b
            if norm == 0:
                raise ZeroDivisionError("division by zero")
            # 1/(a+b*sqrt2) = (a-b*sqrt2)/(a^2-2b^2)
            return self * ExactReal(other.a / norm, -other.b / norm)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _RAT):
            return ExactReal(other) / self
        return NotImplemented

    # -- order -------------------------------------------------------------

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against 2 b^2
        lead = a * a - 2 * b * b
        big_is_a = lead > 0
        if a > 0:
            return 1 if big_is_a else -1
        return -1 if big_is_a else 1

    def _cmp(self, other) -> int:
        return (self - as_exact(other)).sign()

    def __eq__(self, other):
        if isinstance(other, _RAT):
            return self.b == 0 and self.a == other
        if isinstance(other, ExactReal):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- integer parts and presentation -------------------------------------

    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __floor__(self) -> int:
        if self.b == 0:
            return math.floor(self.a)
        n = math.floor(float(self))  # candidate; verified and nudged exactly
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def floor(self) -> int:
        return self.__floor__()

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(2)

    def to_decimal(self, digits: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits
            root2 = Decimal(2).sqrt()
            a = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            b = Decimal(self.b.numerator) / Decimal(self.b.denominator)
            return a + b * root2

    def __repr__(self):
        if self.b == 0:
            return f"ExactReal({self.a})"
        return f"ExactReal({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt(2)"


SQRT2 = ExactReal(0, 1)


def exact_floor_div(num, den) -> int:
    """floor(num/den) with mathematical floor (toward -infinity), exact."""
    return (as_exact(num) / as_exact(den)).floor()
