"""Exact arithmetic in Q[2^(1/4)]."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Iterable, Union

import mpmath

Rational = Union[int, Fraction]


class Sign(int, Enum):
    """Sign of a real number."""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class AlgNum:
    """
    Element c0 + c1*r + c2*r^2 + c3*r^3 of Q[r], r = 2^(1/4) > 0.

    Instances are immutable and always canonical, so equality and hashing are
    coefficient-wise.
    """

    __slots__ = ("_c",)

    def __init__(
        self,
        c0: Rational = 0,
        c1: Rational = 0,
        c2: Rational = 0,
        c3: Rational = 0,
    ) -> None:
        self._c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @classmethod
    def _raw(cls, coeffs: tuple) -> AlgNum:
        obj = cls.__new__(cls)
        obj._c = coeffs
        return obj

    @classmethod
    def from_value(cls, value: Union[Rational, AlgNum]) -> AlgNum:
        """Coerce an int, Fraction or AlgNum."""
        if isinstance(value, AlgNum):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"Cannot convert {type(value).__name__} to AlgNum")

    @property
    def coefficients(self) -> tuple:
        return self._c

    @property
    def c0(self) -> Fraction:
        return self._c[0]

    @property
    def c1(self) -> Fraction:
        return self._c[1]

    @property
    def c2(self) -> Fraction:
        return self._c[2]

    @property
    def c3(self) -> Fraction:
        return self._c[3]

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlgNum):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self._c[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self._c[0])
        return hash(self._c)

    def __repr__(self) -> str:
        return f"AlgNum({', '.join(str(c) for c in self._c)})"

    def __str__(self) -> str:
        from .grammar import render

        return render(self)

    # Field operations

    def __add__(self, other: Union[Rational, AlgNum]) -> AlgNum:
        if isinstance(other, (int, Fraction)):
            a = self._c
            return AlgNum._raw((a[0] + other, a[1], a[2], a[3]))
        if not isinstance(other, AlgNum):
            return NotImplemented
        a, b = self._c, other._c
        return AlgNum._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self) -> AlgNum:
        a = self._c
        return AlgNum._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other: Union[Rational, AlgNum]) -> AlgNum:
        if isinstance(other, (int, Fraction, AlgNum)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Rational) -> AlgNum:
        return (-self) + other

    def __mul__(self, other: Union[Rational, AlgNum]) -> AlgNum:
        if isinstance(other, (int, Fraction)):
            a = self._c
            return AlgNum._raw((a[0] * other, a[1] * other, a[2] * other, a[3] * other))
        if not isinstance(other, AlgNum):
            return NotImplemented
        a0, a1, a2, a3 = self._c
        b0, b1, b2, b3 = other._c
        # r^4 = 2 folds degrees 4..6 back onto 0..2
        return AlgNum._raw(
            (
                a0 * b0 + 2 * (a1 * b3 + a2 * b2 + a3 * b1),
                a0 * b1 + a1 * b0 + 2 * (a2 * b3 + a3 * b2),
                a0 * b2 + a1 * b1 + a2 * b0 + 2 * a3 * b3,
                a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            )
        )

    __rmul__ = __mul__

    def conjugate_sqrt2(self) -> AlgNum:
        """Image under r -> -r (the Q(sqrt2)-conjugate)."""
        a0, a1, a2, a3 = self._c
        return AlgNum._raw((a0, -a1, a2, -a3))

    def norm_to_sqrt2(self) -> AlgNum:
        """a * conjugate_sqrt2(a), an element of Q(sqrt2)."""
        a0, a1, a2, a3 = self._c
        return AlgNum._raw(
            (
                a0 * a0 + 2 * a2 * a2 - 4 * a1 * a3,
                Fraction(0),
                2 * a0 * a2 - a1 * a1 - 2 * a3 * a3,
                Fraction(0),
            )
        )

    def inv(self) -> AlgNum:
        """
        Multiplicative inverse.

        Raises:
            ZeroDivisionError: If the value is zero
        """
        if self.is_zero():
            raise ZeroDivisionError("AlgNum inverse of zero")
        if self.is_rational():
            return AlgNum(1 / self._c[0])
        n = self.norm_to_sqrt2()
        p, q = n._c[0], n._c[2]
        denom = p * p - 2 * q * q
        n_inv = AlgNum._raw((p / denom, Fraction(0), -q / denom, Fraction(0)))
        return self.conjugate_sqrt2() * n_inv

    def __truediv__(self, other: Union[Rational, AlgNum]) -> AlgNum:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("AlgNum division by zero")
            return self * (Fraction(1) / other)
        if isinstance(other, AlgNum):
            return self * other.inv()
        return NotImplemented

    def __rtruediv__(self, other: Rational) -> AlgNum:
        return self.inv() * other

    def __pow__(self, exponent: int) -> AlgNum:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** -exponent
        result = ONE
        base = self
        n = exponent
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # Ordering via exact sign

    def sign(self) -> Sign:
        return sign(self)

    def __lt__(self, other: Union[Rational, AlgNum]) -> bool:
        return sign(self - other) is Sign.NEGATIVE

    def __le__(self, other: Union[Rational, AlgNum]) -> bool:
        return sign(self - other) is not Sign.POSITIVE

    def __gt__(self, other: Union[Rational, AlgNum]) -> bool:
        return sign(self - other) is Sign.POSITIVE

    def __ge__(self, other: Union[Rational, AlgNum]) -> bool:
        return sign(self - other) is not Sign.NEGATIVE

    # Approximations

    def approx(self, digits: int = 30) -> mpmath.mpf:
        """Decimal approximation with the given number of significant digits."""
        with mpmath.workdps(digits + 10):
            r = mpmath.root(2, 4)
            total = mpmath.mpf(0)
            for i, c in enumerate(self._c):
                if c:
                    total += mpmath.mpf(c.numerator) / c.denominator * r**i
            return +total

    def to_decimal_string(self, digits: int = 12) -> str:
        return mpmath.nstr(self.approx(digits), digits)


ZERO = AlgNum(0)
ONE = AlgNum(1)
THETA = AlgNum(0, 1)
SQRT2 = AlgNum(0, 0, 1)


def add(a: AlgNum, b: AlgNum) -> AlgNum:
    return a + b


def mul(a: AlgNum, b: AlgNum) -> AlgNum:
    return a * b


def neg(a: AlgNum) -> AlgNum:
    return -a


def inv(a: AlgNum) -> AlgNum:
    return a.inv()


def pow2_quarter(k: int) -> AlgNum:
    """Return 2^(k/4) exactly."""
    m, r = divmod(k, 4)
    coeff = Fraction(2) ** m
    coeffs = [Fraction(0)] * 4
    coeffs[r] = coeff
    return AlgNum._raw(tuple(coeffs))


def _theta_bounds(precision: int) -> tuple[Fraction, Fraction]:
    """Dyadic enclosure lo < r < hi of width 2^-precision."""
    scale = 1 << precision
    # floor(r * 2^p) = floor((2 * 2^(4p))^(1/4))
    lo_num = isqrt(isqrt(2 << (4 * precision)))
    return Fraction(lo_num, scale), Fraction(lo_num + 1, scale)


def sign(a: AlgNum) -> Sign:
    """
    Sign of a under the real embedding r = 2^(1/4) ~ 1.1892.

    Zero is decided exactly from the canonical form; otherwise the enclosure of
    r is refined until the value interval excludes zero.
    """
    if a.is_zero():
        return Sign.ZERO
    if a.is_rational():
        return Sign.POSITIVE if a.c0 > 0 else Sign.NEGATIVE

    precision = 16
    while True:
        lo, hi = _theta_bounds(precision)
        low_total = a.c0
        high_total = a.c0
        lo_pow, hi_pow = Fraction(1), Fraction(1)
        for c in a.coefficients[1:]:
            lo_pow *= lo
            hi_pow *= hi
            if c > 0:
                low_total += c * lo_pow
                high_total += c * hi_pow
            elif c < 0:
                low_total += c * hi_pow
                high_total += c * lo_pow
        if low_total > 0:
            return Sign.POSITIVE
        if high_total < 0:
            return Sign.NEGATIVE
        precision *= 2


def algsum(values: Iterable[AlgNum]) -> AlgNum:
    """Exact sum of an iterable of AlgNum values."""
    totals = [Fraction(0)] * 4
    for v in values:
        for i, c in enumerate(v.coefficients):
            totals[i] += c
    return AlgNum._raw(tuple(totals))
