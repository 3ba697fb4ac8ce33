"""Monomials c·2^(q/4) and an exact accumulator for sums of them."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .algnum import AlgNum


def _two_adic_split(value: Fraction) -> tuple[Fraction, int]:
    """Write value = odd_part * 2^v with numerator and denominator odd."""
    num, den = value.numerator, value.denominator
    v = 0
    shift = (num & -num).bit_length() - 1
    if shift:
        num >>= shift
        v += shift
    shift = (den & -den).bit_length() - 1
    if shift:
        den >>= shift
        v -= shift
    return Fraction(num, den), v


class Monomial:
    """
    The value coeff * 2^(quarter/4).

    Canonical form keeps coeff free of powers of two, so two monomials are
    equal iff their (coeff, quarter) pairs are.
    """

    __slots__ = ("coeff", "quarter")

    def __init__(self, coeff: int | Fraction, quarter: int = 0) -> None:
        coeff = Fraction(coeff)
        if coeff == 0:
            self.coeff, self.quarter = Fraction(0), 0
            return
        odd, v = _two_adic_split(coeff)
        self.coeff = odd
        self.quarter = quarter + 4 * v

    @classmethod
    def from_algnum(cls, value: AlgNum) -> Optional[Monomial]:
        """Return the monomial equal to value, or None if it has two or more terms."""
        nonzero = [(i, c) for i, c in enumerate(value.coefficients) if c]
        if not nonzero:
            return cls(0)
        if len(nonzero) > 1:
            return None
        i, c = nonzero[0]
        return cls(c, i)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other: Monomial) -> Monomial:
        if self.coeff == 0 or other.coeff == 0:
            return Monomial(0)
        result = Monomial.__new__(Monomial)
        # odd * odd stays odd: no renormalization needed
        result.coeff = self.coeff * other.coeff
        result.quarter = self.quarter + other.quarter
        return result

    def inv(self) -> Monomial:
        if self.coeff == 0:
            raise ZeroDivisionError("Monomial inverse of zero")
        result = Monomial.__new__(Monomial)
        result.coeff = 1 / self.coeff
        result.quarter = -self.quarter
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.coeff == other.coeff and self.quarter == other.quarter

    def __hash__(self) -> int:
        return hash((self.coeff, self.quarter))

    def __repr__(self) -> str:
        return f"Monomial({self.coeff}, {self.quarter})"

    def as_pair(self) -> tuple[Fraction, int]:
        return self.coeff, self.quarter

    def to_algnum(self) -> AlgNum:
        return pair_to_algnum(self.coeff, self.quarter)


def _scale(coeff: int | Fraction, shift: int) -> Fraction:
    coeff = Fraction(coeff)
    return coeff * (1 << shift) if shift >= 0 else coeff / (1 << -shift)


def pair_to_algnum(coeff: int | Fraction, quarter: int) -> AlgNum:
    """Convert a (coeff, quarter) pair to AlgNum."""
    m, r = divmod(quarter, 4)
    coeffs = [0, 0, 0, 0]
    coeffs[r] = _scale(coeff, m)
    return AlgNum(*coeffs)


def algnum_terms(value: AlgNum) -> tuple[tuple[int | Fraction, int], ...]:
    """
    Split a value into canonical (coeff, quarter) pairs, one per nonzero coefficient.

    Integral coefficients come back as int so that products stay cheap.
    """
    terms = []
    for i, c in enumerate(value.coefficients):
        if not c:
            continue
        m = Monomial(c, i)
        coeff = m.coeff.numerator if m.coeff.denominator == 1 else m.coeff
        terms.append((coeff, m.quarter))
    return tuple(terms)


def multiply_terms(left, right) -> tuple[tuple[int | Fraction, int], ...]:
    """Product of two term tuples as produced by algnum_terms."""
    if len(left) == 1 and len(right) == 1:
        (c1, q1), (c2, q2) = left[0], right[0]
        return ((c1 * c2, q1 + q2),)
    return tuple((c1 * c2, q1 + q2) for c1, q1 in left for c2, q2 in right)


class Accumulator:
    """Exact running sum of monomials, grouped by exponent."""

    __slots__ = ("_sums", "count")

    def __init__(self) -> None:
        self._sums: dict[int, Fraction] = {}
        self.count = 0

    def add(self, coeff: int | Fraction, quarter: int) -> None:
        self.count += 1
        sums = self._sums
        if quarter in sums:
            sums[quarter] += coeff
        else:
            sums[quarter] = coeff

    def add_monomial(self, m: Monomial) -> None:
        self.add(m.coeff, m.quarter)

    def merge(self, other: Accumulator) -> None:
        for quarter, coeff in other._sums.items():
            self._sums[quarter] = self._sums.get(quarter, 0) + coeff
        self.count += other.count

    def add_terms(self, terms) -> None:
        for coeff, quarter in terms:
            self.add(coeff, quarter)

    def is_empty(self) -> bool:
        return self.count == 0

    def value(self) -> AlgNum:
        totals = [Fraction(0)] * 4
        for quarter, coeff in self._sums.items():
            m, r = divmod(quarter, 4)
            totals[r] += _scale(coeff, m)
        return AlgNum(*totals)

    def __getstate__(self):
        return self._sums, self.count

    def __setstate__(self, state) -> None:
        self._sums, self.count = state
