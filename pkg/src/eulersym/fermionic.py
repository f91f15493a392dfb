"""Finite-level checks of the fermionic integral for rational-valued characters.

The fermionic integral of f over X_d is the p-adic limit of the alternating
sums  S_N = sum_{j < d p^N} (-1)^j f(j).  Here f(j) = chi(j) j^n with chi of
order <= 2, so every partial sum is an exact rational and its distance to
E_{n,chi} is measured by the p-adic valuation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .dirichlet import DirichletCharacter, is_prime
from .euler import euler_numbers
from .exactnum import DomainError

INFINITE = math.inf


class UnsupportedCharacterError(DomainError):
    """The character takes non-rational values."""


def vp(q, p: int) -> int | float:
    """p-adic valuation of a rational; ``INFINITE`` for zero."""
    q = Fraction(q)
    if q == 0:
        return INFINITE
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _real_values(chi: DirichletCharacter) -> tuple[int, ...]:
    if not chi.is_real:
        raise UnsupportedCharacterError(
            f"character ({chi.modulus}, {chi.index}) has order {chi.order} > 2"
        )
    return chi.signed_values()


def character_power(chi: DirichletCharacter, n: int) -> Callable[[int], int]:
    """f(z) = chi(z) z^n for a rational-valued chi."""
    vals = _real_values(chi)
    d = chi.modulus
    return lambda z: vals[z % d] * z**n


@dataclass(frozen=True)
class ShiftCheck:
    passed: bool
    lhs: Fraction
    rhs: Fraction

    def __bool__(self) -> bool:
        return self.passed


def finite_level_shift_check(chi: DirichletCharacter, n: int, s: int, M: int) -> ShiftCheck:
    """Check  sum_{j<M} (-1)^j [f(j+s) + f(j)] = sum_{a<s} (-1)^a [f(a) + f(M+a)]  for odd s, M."""
    if s < 1 or s % 2 == 0:
        raise DomainError(f"shift must be an odd positive integer, got {s}")
    if M < 1 or M % 2 == 0:
        raise DomainError(f"limit must be an odd positive integer, got {M}")
    f = character_power(chi, n)
    lhs = sum((-1) ** j * (f(j + s) + f(j)) for j in range(M))
    rhs = sum((-1) ** a * (f(a) + f(M + a)) for a in range(s))
    return ShiftCheck(lhs == rhs, Fraction(lhs), Fraction(rhs))


@dataclass
class ValuationTrace:
    prime: int
    modulus: int
    char_index: int
    exponent: int
    target: Fraction
    levels: list[tuple[Fraction, int | float]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def valuations(self) -> list[int | float]:
        return [v for _, v in self.levels]

    @property
    def partial_sums(self) -> list[Fraction]:
        return [s for s, _ in self.levels]

    def is_nondecreasing(self) -> bool:
        vals = self.valuations
        return all(a <= b for a, b in zip(vals, vals[1:]))

    def deficit(self) -> int | float:
        """max(0, 1 - v_1), the slack in the bound v_N >= N - deficit."""
        return max(0, 1 - self.valuations[0])

    def meets_linear_bound(self) -> bool:
        c = self.deficit()
        return all(v >= N - c for N, v in enumerate(self.valuations, start=1))


def convergence_trace(chi: DirichletCharacter, n: int, p: int, N_max: int) -> ValuationTrace:
    """Partial sums S_N over j < d p^N and v_p(S_N - E_{n,chi}) for N = 1..N_max."""
    f = character_power(chi, n)
    d = chi.modulus
    if p % 2 == 0 or not is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    if math.gcd(p, d) != 1:
        raise DomainError(f"p = {p} must be coprime to the modulus {d}")
    if N_max < 1:
        raise DomainError("N_max must be at least 1")
    target = euler_numbers(chi, n)[n].to_rational()
    trace = ValuationTrace(p, d, chi.index, n, target,
                           notes=["assumes gcd(p, d) = 1"])
    total = 0
    j = 0
    for N in range(1, N_max + 1):
        upper = d * p**N
        while j < upper:
            term = f(j)
            total += -term if j & 1 else term
            j += 1
        trace.levels.append((Fraction(total), vp(total - target, p)))
    return trace
