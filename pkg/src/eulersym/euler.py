"""Generalized Euler numbers and polynomials attached to a Dirichlet character,
and the alternating power sums T_k(n, chi) = sum_{a<=n} (-1)^a chi(a) a^k.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dirichlet import DirichletCharacter
from .exactnum import CycNumber, DomainError, Scalar, _reduce
from .series import TruncSeries, coeff_egf, exp_arg, series_div, series_mul


@dataclass(frozen=True)
class EulerTable:
    character: DirichletCharacter
    max_degree: int
    values: tuple[CycNumber, ...]

    def __getitem__(self, n: int) -> CycNumber:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def alternating_character_series(chi: DirichletCharacter, N: int) -> TruncSeries:
    """sum_{a<d} (-1)^a chi(a) e^{at} truncated at t^N."""
    m = chi.order
    total = TruncSeries.constant(0, N, m)
    for a in range(chi.modulus):
        c = chi(a)
        if c:
            total = total + exp_arg(a, N, m) * (c if a % 2 == 0 else -c)
    return total


def euler_generating_series(chi: DirichletCharacter, N: int, x: Scalar = 0) -> TruncSeries:
    """2 e^{xt} sum_{a<d} (-1)^a chi(a) e^{at} / (e^{dt} + 1), truncated at t^N."""
    m = chi.order
    num = alternating_character_series(chi, N) * 2
    if x:
        num = series_mul(num, exp_arg(x, N, m))
    den = exp_arg(chi.modulus, N, m) + 1
    return series_div(num, den)


_TABLES: dict[DirichletCharacter, EulerTable] = {}
_TABLES_LOCK = threading.Lock()


def euler_numbers(chi: DirichletCharacter, N: int) -> EulerTable:
    """E_{0,chi}, ..., E_{N,chi}; tables are cached per character and grown on demand."""
    if N < 0:
        raise DomainError("max degree must be nonnegative")
    table = _TABLES.get(chi)
    if table is None or table.max_degree < N:
        with _TABLES_LOCK:
            table = _TABLES.get(chi)
            if table is None or table.max_degree < N:
                q = euler_generating_series(chi, N)
                vals = tuple(coeff_egf(q, n) for n in range(N + 1))
                table = EulerTable(chi, N, vals)
                _TABLES[chi] = table
    if table.max_degree == N:
        return table
    return EulerTable(chi, N, table.values[: N + 1])


@lru_cache(maxsize=4096)
def _poly_int_coeffs(chi: DirichletCharacter, n: int) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Integer vectors c_k = D * C(n,k) * E_{k,chi} and the common denominator D."""
    vals = euler_numbers(chi, n).values
    den = math.lcm(*(v.denominator for v in vals))
    rows = tuple(
        tuple(c * (den // v.denominator) * math.comb(n, k) for c in v.numerators)
        for k, v in enumerate(vals)
    )
    return rows, den


def euler_polynomial_ints(chi: DirichletCharacter, n: int, p: int, q: int) -> tuple[list[int], int]:
    """E_{n,chi}(p/q) as (numerator vector, denominator) with denominator D * q^n.

    ``p/q`` need not be in lowest terms; callers fix ``q`` to share a denominator.
    """
    rows, den = _poly_int_coeffs(chi, n)
    acc = [0] * len(rows[0])
    # sum_k c_k p^{n-k} q^k
    ppow = [1] * (n + 1)
    for i in range(1, n + 1):
        ppow[i] = ppow[i - 1] * p
    qk = 1
    for k, row in enumerate(rows):
        w = ppow[n - k] * qk
        if w:
            for i, c in enumerate(row):
                acc[i] += c * w
        qk *= q
    return acc, den * q**n


@lru_cache(maxsize=1 << 17)
def euler_polynomial(chi: DirichletCharacter, n: int, x: Scalar) -> CycNumber:
    """E_{n,chi}(x) = sum_k C(n,k) E_{k,chi} x^{n-k} at a rational point x."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    x = Fraction(x)
    acc, den = euler_polynomial_ints(chi, n, x.numerator, x.denominator)
    return CycNumber._from_ints(chi.order, acc, den)


def euler_polynomial_coeffs(chi: DirichletCharacter, n: int) -> tuple[CycNumber, ...]:
    """Coefficients of E_{n,chi}(x) in increasing powers of x."""
    vals = euler_numbers(chi, n).values
    return tuple(vals[n - j] * math.comb(n, j) for j in range(n + 1))


@lru_cache(maxsize=1 << 16)
def alt_power_sum(chi: DirichletCharacter, k: int, n: int) -> CycNumber:
    """T_k(n, chi), with 0^0 = 1."""
    if k < 0 or n < 0:
        raise DomainError("k and n must be nonnegative")
    r = chi.order
    bins = [0] * r
    table = chi.exponent_table
    d = chi.modulus
    for a in range(n + 1):
        e = table[a % d]
        if e is None:
            continue
        term = a**k
        bins[e] += -term if a & 1 else term
    return CycNumber._from_ints(r, _reduce(bins, r), 1)


@dataclass(frozen=True)
class SeriesCheck:
    """Coefficient-wise comparison of two truncated series."""

    passed: bool
    lhs: tuple[CycNumber, ...]
    rhs: tuple[CycNumber, ...]
    first_mismatch: int | None = None

    def __bool__(self) -> bool:
        return self.passed


def power_sum_series_check(chi: DirichletCharacter, w: int, N: int) -> SeriesCheck:
    """Check (e^{wdt}+1)/(e^{dt}+1) sum_{a<d}(-1)^a chi(a) e^{at} = sum_k T_k(wd-1) t^k/k!."""
    if w < 1 or w % 2 == 0:
        raise DomainError(f"w must be an odd positive integer, got {w}")
    if N < 0:
        raise DomainError("truncation order must be nonnegative")
    m, d = chi.order, chi.modulus
    num = series_mul(exp_arg(w * d, N, m) + 1, alternating_character_series(chi, N))
    lhs = series_div(num, exp_arg(d, N, m) + 1)
    lhs_egf = tuple(coeff_egf(lhs, k) for k in range(N + 1))
    rhs_egf = tuple(alt_power_sum(chi, k, w * d - 1) for k in range(N + 1))
    for k, (a, b) in enumerate(zip(lhs_egf, rhs_egf)):
        if a != b:
            return SeriesCheck(False, lhs_egf, rhs_egf, k)
    return SeriesCheck(True, lhs_egf, rhs_egf)
