"""Truncated power series in t over Q(zeta_m).

Coefficients are stored plainly: ``coeffs[n]`` multiplies ``t**n``.  An
exponential generating function sum a_n t^n/n! therefore keeps a_n/n!, and
:func:`coeff_egf` puts the factorial back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exactnum import CycNumber, DomainError, Scalar, as_cyc


class NonUnitError(ZeroDivisionError):
    """Raised when dividing by a series whose constant term vanishes."""


@dataclass(frozen=True, eq=False)
class TruncSeries:
    truncation_order: int
    field_order: int
    coeffs: tuple[CycNumber, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.truncation_order + 1:
            raise ValueError("coefficient count must be truncation_order + 1")
        if any(c.order != self.field_order for c in self.coeffs):
            raise ValueError("all coefficients must share the field order")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[CycNumber | Scalar], N: int, m: int = 1) -> TruncSeries:
        vals = [as_cyc(c, m) for c in coeffs][: N + 1]
        vals += [CycNumber.zero(m)] * (N + 1 - len(vals))
        return cls(N, m, tuple(vals))

    @classmethod
    def constant(cls, c: CycNumber | Scalar, N: int, m: int = 1) -> TruncSeries:
        return cls.from_coeffs([c], N, m)

    def __eq__(self, other) -> bool:
        # value equality: the storage field order does not matter
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.truncation_order == other.truncation_order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.truncation_order, self.coeffs))

    def lift(self, m: int) -> TruncSeries:
        if m == self.field_order:
            return self
        return TruncSeries(self.truncation_order, m, tuple(c.lift(m) for c in self.coeffs))

    def _aligned(self, other: TruncSeries) -> tuple[TruncSeries, TruncSeries]:
        if self.truncation_order != other.truncation_order:
            raise DomainError(
                f"truncation mismatch: {self.truncation_order} vs {other.truncation_order}"
            )
        m = math.lcm(self.field_order, other.field_order)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.truncation_order, self.field_order)
        a, b = self._aligned(other)
        return TruncSeries(a.truncation_order, a.field_order,
                           tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.truncation_order, self.field_order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, CycNumber):
            other = as_cyc(other, math.lcm(self.field_order, other.order))
            s = self.lift(other.order)
            return TruncSeries(s.truncation_order, s.field_order,
                               tuple(c * other for c in s.coeffs))
        return TruncSeries(self.truncation_order, self.field_order,
                           tuple(c.scale(other) for c in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return series_div(self, other)
        return self * (1 / Fraction(other))


def exp_arg(c: Scalar, N: int, m: int = 1) -> TruncSeries:
    """e^{ct} truncated at t^N."""
    c = Fraction(c)
    coeffs = []
    term = Fraction(1)
    for n in range(N + 1):
        if n:
            term = term * c / n
        coeffs.append(CycNumber.rational(term, m))
    return TruncSeries(N, m, tuple(coeffs))


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at the common order."""
    a, b = a._aligned(b)
    N, m = a.truncation_order, a.field_order
    out = []
    for n in range(N + 1):
        acc = CycNumber.zero(m)
        for j in range(n + 1):
            x, y = a.coeffs[j], b.coeffs[n - j]
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return TruncSeries(N, m, tuple(out))


def series_div(num: TruncSeries, den: TruncSeries) -> TruncSeries:
    """Quotient by forward substitution; ``den`` must have a nonzero constant term."""
    num, den = num._aligned(den)
    if den.coeffs[0].is_zero():
        raise NonUnitError("denominator series has zero constant term")
    N, m = num.truncation_order, num.field_order
    inv0 = 1 / den.coeffs[0]
    q: list[CycNumber] = []
    for n in range(N + 1):
        acc = num.coeffs[n]
        for j in range(n):
            d = den.coeffs[n - j]
            if d and q[j]:
                acc = acc - q[j] * d
        q.append(acc * inv0)
    return TruncSeries(N, m, tuple(q))


def coeff_egf(s: TruncSeries, n: int) -> CycNumber:
    """n! times the t^n coefficient."""
    if not 0 <= n <= s.truncation_order:
        raise IndexError(f"coefficient {n} outside truncation order {s.truncation_order}")
    return s.coeffs[n] * math.factorial(n)
