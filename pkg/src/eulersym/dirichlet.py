"""Dirichlet characters of odd modulus.

Characters mod d are built from the least primitive root of each odd prime
power dividing d and glued through the Chinese Remainder Theorem.  The
enumeration order is lexicographic in the exponent tuple on those
generators, so ``(modulus, index)`` is a stable external address.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .exactnum import CycNumber, DomainError


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as ``[(p, e), ...]`` in increasing p."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def least_primitive_root(q: int) -> int:
    """Least primitive root modulo an odd prime power q."""
    phi = totient(q)
    primes = [p for p, _ in factorize(phi)]
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, phi // p, q) != 1 for p in primes):
            return g
    raise ValueError(f"no primitive root modulo {q}")


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    """A character mod ``modulus`` with values chi(a) = zeta_order ** exponent_table[a].

    ``exponent_table[a]`` is ``None`` when gcd(a, modulus) > 1.
    """

    modulus: int
    index: int
    order: int
    exponent_table: tuple
    generator_exponents: tuple = ()
    _values: tuple = field(default=(), compare=False, repr=False, hash=False)

    def __post_init__(self):
        vals = tuple(
            CycNumber.zero(self.order) if e is None else CycNumber.zeta(self.order, e)
            for e in self.exponent_table
        )
        object.__setattr__(self, "_values", vals)
        object.__setattr__(self, "_hash", hash((self.modulus, self.exponent_table)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.modulus == other.modulus and self.exponent_table == other.exponent_table

    def __call__(self, a: int) -> CycNumber:
        return self._values[a % self.modulus]

    @property
    def values(self) -> tuple[CycNumber, ...]:
        """chi(0), ..., chi(d - 1)."""
        return self._values

    @property
    def conductor(self) -> int:
        return conductor(self)

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def is_real(self) -> bool:
        """True when every value lies in {0, 1, -1}."""
        return self.order <= 2

    def signed_values(self) -> tuple[int, ...]:
        """Integer values of a real character."""
        if not self.is_real:
            raise ValueError("character is not rational-valued")
        return tuple(int(v.to_rational()) for v in self._values)


def _check_modulus(d: int) -> None:
    if not isinstance(d, int) or d < 1 or d % 2 == 0:
        raise DomainError(f"modulus must be an odd positive integer, got {d!r}")


@lru_cache(maxsize=None)
def enumerate_characters(d: int) -> tuple[DirichletCharacter, ...]:
    """All phi(d) characters mod an odd d, in deterministic order."""
    _check_modulus(d)
    parts = [p**e for p, e in factorize(d)]
    gens = [least_primitive_root(q) for q in parts]
    cyc_orders = [totient(q) for q in parts]
    # Discrete logs of each unit a modulo each prime power.
    logs = []
    for q, g, phi in zip(parts, gens, cyc_orders):
        table = {}
        x = 1
        for k in range(phi):
            table[x] = k
            x = x * g % q
        logs.append(table)
    big = math.lcm(1, *cyc_orders)

    exponent_tuples = [()]
    for phi in cyc_orders:
        exponent_tuples = [t + (j,) for t in exponent_tuples for j in range(phi)]

    chars = []
    for idx, js in enumerate(exponent_tuples):
        order = math.lcm(1, *(phi // math.gcd(j, phi) for j, phi in zip(js, cyc_orders)))
        step = big // order
        table = []
        for a in range(d):
            if math.gcd(a, d) != 1:
                table.append(None)
                continue
            total = sum(j * logs[i][a % q] * (big // phi)
                        for i, (j, q, phi) in enumerate(zip(js, parts, cyc_orders)))
            total %= big
            if total % step:
                raise ArithmeticError("character value outside its order")
            table.append(total // step)
        chars.append(DirichletCharacter(d, idx, order, tuple(table), tuple(js)))
    return tuple(chars)


def get_character(d: int, index: int) -> DirichletCharacter:
    chars = enumerate_characters(d)
    if not 0 <= index < len(chars):
        raise DomainError(f"character index {index} out of range for modulus {d}")
    return chars[index]


def trivial_character(d: int = 1) -> DirichletCharacter:
    return enumerate_characters(d)[0]


def quadratic_character(d: int) -> DirichletCharacter:
    """The first character of order exactly 2 mod d."""
    for chi in enumerate_characters(d):
        if chi.order == 2:
            return chi
    raise DomainError(f"no quadratic character modulo {d}")


def char_value(chi: DirichletCharacter, a: int) -> CycNumber:
    return chi(a)


def conductor(chi: DirichletCharacter) -> int:
    d = chi.modulus
    for f in range(1, d + 1):
        if d % f:
            continue
        units = (chi.exponent_table[a % d] for a in range(1, d + 1, f))
        if all(e is None or e == 0 for e in units):
            return f
    return d
