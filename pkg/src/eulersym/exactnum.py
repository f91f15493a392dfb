"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_m).

Rationals are :class:`fractions.Fraction`.  A :class:`CycNumber` of order
``m`` stores the unique representative of degree < phi(m) modulo the m-th
cyclotomic polynomial.  Internally the coefficients are kept as a tuple of
integer numerators over one positive common denominator, reduced so that
gcd(numerators, denominator) = 1; equality is then a tuple compare.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction


class DomainError(ValueError):
    """An argument lies outside an operation's domain."""


Scalar = Union[int, Fraction]


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (low-to-high coefficients) by a monic divisor."""
    rem = list(num)
    dlen = len(den)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    if len(rem) < dlen:
        return [0], rem
    quot = [0] * (len(rem) - dlen + 1)
    for i in range(len(rem) - dlen, -1, -1):
        c = rem[i + dlen - 1]
        quot[i] = c
        if c:
            for j in range(dlen):
                rem[i + j] -= c * den[j]
    rem = rem[: dlen - 1] or [0]
    return quot, rem


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _divisors(m: int) -> list[int]:
    return [e for e in range(1, m + 1) if m % e == 0]


@lru_cache(maxsize=None)
def cyclotomic_modulus(m: int) -> tuple[int, ...]:
    """Return the m-th cyclotomic polynomial as integer coefficients, low degree first.

    Computed by dividing x^m - 1 by the product of Phi_e over the proper
    divisors e of m.
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"cyclotomic order must be a positive integer, got {m!r}")
    if m == 1:
        return (-1, 1)
    prod = [1]
    for e in _divisors(m)[:-1]:
        prod = _poly_mul(prod, cyclotomic_modulus(e))
    xm1 = [-1] + [0] * (m - 1) + [1]
    quot, rem = _poly_divmod(xm1, prod)
    if any(rem):
        raise ArithmeticError(f"inexact division computing Phi_{m}")
    return tuple(quot)


def euler_phi(m: int) -> int:
    return len(cyclotomic_modulus(m)) - 1


def _reduce(coeffs: list[int], m: int) -> list[int]:
    """Reduce an integer polynomial in zeta_m modulo Phi_m (in place, returns phi(m) entries)."""
    phi = cyclotomic_modulus(m)
    deg = len(phi) - 1
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            base = i - deg
            for j in range(deg):
                coeffs[base + j] -= c * phi[j]
    if len(coeffs) < deg:
        coeffs.extend([0] * (deg - len(coeffs)))
    return coeffs[:deg]


class CycNumber:
    """An element of Q(zeta_m) in canonical form.

    ``CycNumber(m, coeffs)`` accepts any sequence of rationals (of any length)
    and reduces it modulo Phi_m.  Arithmetic with operands of different order
    lifts both to the least common multiple of the orders.
    """

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, coeffs: Iterable[Scalar] = (0,)):
        vals = [Fraction(c) for c in coeffs] or [Fraction(0)]
        den = math.lcm(*(v.denominator for v in vals))
        nums = [v.numerator * (den // v.denominator) for v in vals]
        self.order = order
        self._num, self._den = _normalize(_reduce(nums, order), den)

    @classmethod
    def _raw(cls, order: int, num: tuple[int, ...], den: int) -> CycNumber:
        obj = object.__new__(cls)
        obj.order = order
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def _from_ints(cls, order: int, nums: list[int], den: int) -> CycNumber:
        num, den = _normalize(nums, den)
        return cls._raw(order, num, den)

    @classmethod
    def rational(cls, value: Scalar, order: int = 1) -> CycNumber:
        value = Fraction(value)
        deg = euler_phi(order)
        nums = [value.numerator] + [0] * (deg - 1)
        return cls._raw(order, tuple(nums), value.denominator)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> CycNumber:
        """Return zeta_order ** power."""
        power %= order
        nums = [0] * (power + 1)
        nums[power] = 1
        return cls._from_ints(order, _reduce(nums, order), 1)

    @classmethod
    def zero(cls, order: int = 1) -> CycNumber:
        return cls.rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> CycNumber:
        return cls.rational(1, order)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def lift(self, order: int) -> CycNumber:
        """Re-express in Q(zeta_order); ``order`` must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        nums = [0] * (step * (len(self._num) - 1) + 1)
        for i, c in enumerate(self._num):
            nums[i * step] = c
        return CycNumber._from_ints(order, _reduce(nums, order), self._den)

    def _coerce(self, other) -> CycNumber | None:
        if isinstance(other, CycNumber):
            return other
        if isinstance(other, (int, _RationalABC)):
            return CycNumber.rational(other, self.order)
        return None

    def _common(self, other: CycNumber) -> tuple[CycNumber, CycNumber]:
        if self.order == other.order:
            return self, other
        m = math.lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        da, db = a._den, b._den
        if da == db:
            nums = [x + y for x, y in zip(a._num, b._num)]
            return CycNumber._from_ints(a.order, nums, da)
        nums = [x * db + y * da for x, y in zip(a._num, b._num)]
        return CycNumber._from_ints(a.order, nums, da * db)

    __radd__ = __add__

    def __neg__(self) -> CycNumber:
        return CycNumber._raw(self.order, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, value: Scalar) -> CycNumber:
        """Multiply by a rational scalar."""
        if isinstance(value, int):
            return CycNumber._from_ints(self.order, [c * value for c in self._num], self._den)
        value = Fraction(value)
        p, q = value.numerator, value.denominator
        return CycNumber._from_ints(self.order, [c * p for c in self._num], self._den * q)

    def __mul__(self, other):
        if isinstance(other, CycNumber):
            return cyc_mul(*self._common(other))
        if isinstance(other, (int, _RationalABC)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CycNumber):
            a, b = self._common(other)
            return cyc_mul(a, cyc_inv(b))
        if isinstance(other, (int, _RationalABC)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> CycNumber:
        if k < 0:
            return cyc_inv(self) ** (-k)
        result = CycNumber.one(self.order)
        base = self
        while k:
            if k & 1:
                result = cyc_mul(result, base)
            base = cyc_mul(base, base)
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return cyc_eq(self, o)

    def __hash__(self) -> int:
        # Normalized trace is independent of the ambient cyclotomic field, so
        # equal numbers of different orders hash alike.
        return hash(self.mean_trace())

    def mean_trace(self) -> Fraction:
        """Trace to Q divided by the field degree (the average of all conjugates)."""
        m = self.order
        total = Fraction(0)
        for i, c in enumerate(self._num):
            if c:
                e = m // math.gcd(i, m)
                total += c * Fraction(_mobius(e), euler_phi(e))
        return total / self._den

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CycNumber({self.order}, {self})"

    def __str__(self) -> str:
        return render(self)


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g != 1:
        nums = [c // g for c in nums]
        den //= g
    return tuple(nums), den


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def cyc_mul(a: CycNumber, b: CycNumber) -> CycNumber:
    """Product of two elements of the same cyclotomic field."""
    if a.order != b.order:
        raise DomainError(f"order mismatch: {a.order} vs {b.order}")
    an, bn = a._num, b._num
    if len(an) == 1:
        nums = [an[0] * bn[0]]
    else:
        nums = _reduce(_poly_mul(an, bn), a.order)
    return CycNumber._from_ints(a.order, nums, a._den * b._den)


def cyc_inv(a: CycNumber) -> CycNumber:
    """Multiplicative inverse via the extended Euclidean algorithm over Q."""
    if a.is_zero():
        raise ZeroDivisionError("zero is not invertible")
    if len(a._num) == 1:
        return CycNumber._from_ints(a.order, [a._den], a._num[0])
    # Invariant: r_i = s_i * a (mod Phi).  Phi is irreducible, so the
    # remainders reach a nonzero constant before they reach zero.
    r0 = [Fraction(c) for c in cyclotomic_modulus(a.order)]
    r1 = _trim([Fraction(c, a._den) for c in a._num])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _trim(_qsub(s0, _qmul(q, s1)))
    c = r1[0]
    coeffs = [x / c for x in s1]
    return CycNumber(a.order, coeffs)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _qmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    lead = b[-1]
    if len(rem) < len(b):
        return [Fraction(0)], _trim(rem)
    quot = [Fraction(0)] * (len(rem) - len(b) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(b) - 1] / lead
        quot[i] = c
        for j, y in enumerate(b):
            rem[i + j] -= c * y
    rem = rem[: len(b) - 1] or [Fraction(0)]
    return quot, _trim(rem)


def cyc_eq(a: CycNumber, b: CycNumber) -> bool:
    """True iff ``a`` and ``b`` denote the same algebraic number."""
    if a.order != b.order:
        a, b = a._common(b)
    return a._den == b._den and a._num == b._num


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render(x: CycNumber | Scalar) -> str:
    """Render as ``a0 + a1*z + a2*z^2`` with z = zeta_order and rationals as p/q."""
    if not isinstance(x, CycNumber):
        return _fmt_rat(Fraction(x))
    parts = []
    for i, c in enumerate(x.coeffs):
        if c == 0:
            continue
        mag = _fmt_rat(abs(c))
        if i == 0:
            term = mag
        else:
            mono = "z" if i == 1 else f"z^{i}"
            term = mono if mag == "1" else f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", term))
    if not parts:
        return "0"
    sign, first = parts[0]
    out = ("-" if sign == "-" else "") + first
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def as_cyc(x: CycNumber | Scalar, order: int) -> CycNumber:
    """Coerce a scalar or CycNumber into Q(zeta_order) (lifting if needed)."""
    if isinstance(x, CycNumber):
        if x.order == order:
            return x
        return x.lift(order)
    return CycNumber.rational(x, order)


# --- integer kernels --------------------------------------------------------
# Hot loops work on integer numerator vectors over a shared denominator and
# reduce modulo Phi_m once at the end.


def common_ints(values: Sequence[CycNumber]) -> tuple[list[tuple[int, ...]], int]:
    """Numerator vectors of ``values`` over their least common denominator."""
    den = math.lcm(*(v._den for v in values)) if values else 1
    return [tuple(c * (den // v._den) for c in v._num) for v in values], den


def from_unreduced(order: int, nums: list[int], den: int) -> CycNumber:
    """Build a canonical CycNumber from an unreduced integer polynomial in zeta."""
    return CycNumber._from_ints(order, _reduce(list(nums), order), den)


def kron_pack(row: Sequence[int], shift: int) -> int:
    """Evaluate the integer polynomial ``row`` at 2**shift."""
    packed = 0
    for c in reversed(row):
        packed = (packed << shift) + c
    return packed


def kron_unpack(packed: int, shift: int, length: int) -> list[int]:
    """Inverse of :func:`kron_pack` for coefficients of absolute value < 2**(shift-1)."""
    out = []
    mask = (1 << shift) - 1
    half = 1 << (shift - 1)
    for _ in range(length):
        c = packed & mask
        if c >= half:
            c -= 1 << shift
        out.append(c)
        packed = (packed - c) >> shift
    if packed:
        raise ArithmeticError("Kronecker unpacking overflow")
    return out


def cyc_dot(xs: Sequence[CycNumber], ys: Sequence[CycNumber], weights: Sequence[int]) -> CycNumber:
    """sum_i weights[i] * xs[i] * ys[i] with a single final reduction."""
    order = xs[0].order
    rx, dx = common_ints(xs)
    ry, dy = common_ints(ys)
    acc = [0] * (2 * len(rx[0]) - 1)
    for a, b, s in zip(rx, ry, weights):
        if not s:
            continue
        for i, u in enumerate(a):
            if u:
                us = u * s
                for j, v in enumerate(b):
                    acc[i + j] += us * v
    return from_unreduced(order, acc, dx * dy)
