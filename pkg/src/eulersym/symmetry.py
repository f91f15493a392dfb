"""Expansion forms of the symmetric fermionic quotients and the eight
three-variable identities of symmetry they produce.

Every form is a finite sum over explicit summation indices.  A form is
evaluated with its weight triple permuted by ``sigma``: with
``W = (w[sigma[0]], w[sigma[1]], w[sigma[2]])`` the form is read with W in
place of (w1, w2, w3).  A theorem is a form together with the list of
permutations producing its displayed expressions.

Identities are checked on the full grid y_i in {0, ..., n}.  Each side is a
polynomial of degree <= n in every y variable, so agreement on the grid is
agreement as polynomials.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .dirichlet import DirichletCharacter
from .euler import alt_power_sum, euler_polynomial, euler_polynomial_ints
from .exactnum import (
    CycNumber,
    DomainError,
    _reduce,
    common_ints,
    cyc_dot,
    euler_phi,
    from_unreduced,
    kron_pack,
    kron_unpack,
)

Weights = tuple[int, int, int]
Perm = tuple[int, int, int]

IDENTITY: Perm = (0, 1, 2)
ALL_PERMS: tuple[Perm, ...] = tuple(itertools.permutations(range(3)))  # type: ignore[assignment]


class FormId(str, enum.Enum):
    A0 = "A0"
    A1_SUM = "A1_SUM"
    A1_CHAR = "A1_CHAR"
    A2_SUM = "A2_SUM"
    A2_MIXED = "A2_MIXED"
    A2_CHAR = "A2_CHAR"
    A3 = "A3"
    C0 = "C0"
    C1 = "C1"

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @property
    def needs_odd_weights(self) -> bool:
        return self not in (FormId.A0, FormId.C0)


_ARITY = {
    FormId.A0: 3,
    FormId.A1_SUM: 2,
    FormId.A1_CHAR: 2,
    FormId.A2_SUM: 1,
    FormId.A2_MIXED: 1,
    FormId.A2_CHAR: 1,
    FormId.A3: 0,
    FormId.C0: 1,
    FormId.C1: 0,
}


@dataclass(frozen=True)
class ExpansionForm:
    form_id: FormId
    permutation: Perm = IDENTITY

    def __post_init__(self):
        if sorted(self.permutation) != [0, 1, 2]:
            raise DomainError(f"not a permutation of (0, 1, 2): {self.permutation}")
        object.__setattr__(self, "form_id", FormId(self.form_id))

    def permuted(self, tau: Perm) -> ExpansionForm:
        """The form evaluated on weights already permuted by ``tau``."""
        return ExpansionForm(self.form_id, compose(self.permutation, tau))


def compose(outer: Perm, inner: Perm) -> Perm:
    """Permutation equivalent to applying ``inner`` to weights first, then ``outer``.

    ``apply_perm(apply_perm(w, inner), outer) == apply_perm(w, compose(outer, inner))``.
    """
    return tuple(inner[outer[i]] for i in range(3))  # type: ignore[return-value]


def apply_perm(w: Sequence[int], sigma: Perm) -> Weights:
    return (w[sigma[0]], w[sigma[1]], w[sigma[2]])


def multinomial(n: int, k: int, l: int, m: int) -> int:
    """n! / (k! l! m!) for k + l + m = n."""
    if min(n, k, l, m) < 0 or k + l + m != n:
        raise DomainError(f"multinomial needs k + l + m = n >= 0, got {(n, k, l, m)}")
    f = math.factorial
    return f(n) // (f(k) * f(l) * f(m))


def check_weights(form_id: FormId, w: Sequence[int]) -> None:
    if len(w) != 3 or any(not isinstance(x, int) or x < 1 for x in w):
        raise DomainError(f"weights must be three positive integers, got {tuple(w)}")
    if form_id.needs_odd_weights and any(x % 2 == 0 for x in w):
        raise DomainError(f"form {form_id.value} requires odd weights, got {tuple(w)}")


def _check_y(form_id: FormId, y: Sequence) -> tuple[Fraction, ...]:
    if len(y) != form_id.arity:
        raise DomainError(
            f"form {form_id.value} takes {form_id.arity} y-arguments, got {len(y)}"
        )
    return tuple(Fraction(v) for v in y)


def _trinomial(n: int, f1, f2, f3, weight) -> Iterator[tuple[tuple[int, int, int], CycNumber]]:
    """Terms multinomial(n;k,l,m) * weight(k,l,m) * f1[k] f2[l] f3[m]."""
    for k in range(n + 1):
        a = f1[k]
        for l in range(n - k + 1):
            m = n - k - l
            b, c = f2[l], f3[m]
            value = (a * b * c).scale(multinomial(n, k, l, m) * weight(k, l, m))
            yield (k, l, m), value


def _alt_chars(chi: DirichletCharacter, upper: int) -> list[tuple[int, CycNumber]]:
    """(a, (-1)^a chi(a)) for a < upper, dropping zero values."""
    out = []
    for a in range(upper):
        c = chi(a)
        if c:
            out.append((a, -c if a & 1 else c))
    return out


def expansion_terms(
    form: ExpansionForm,
    chi: DirichletCharacter,
    n: int,
    w: Sequence[int],
    y: Sequence = (),
) -> Iterator[tuple[tuple[int, ...], CycNumber]]:
    """Yield (summation index, term value) for every term of the form's finite sum.

    Multinomial forms are indexed by (k, l, m); A1_CHAR and A2_MIXED by
    (k, a); A2_CHAR by (a, b).  Zero character values are skipped.
    """
    fid = form.form_id
    check_weights(fid, w)
    if n < 0:
        raise DomainError("degree must be nonnegative")
    y = _check_y(fid, y)
    W1, W2, W3 = apply_perm(w, form.permutation)
    d = chi.modulus
    E = lambda j, x: euler_polynomial(chi, j, x)  # noqa: E731
    T = lambda j, wi: alt_power_sum(chi, j, wi * d - 1)  # noqa: E731
    rng = range(n + 1)

    def sym_weight(k, l, m):
        return W1 ** (l + m) * W2 ** (k + m) * W3 ** (k + l)

    def cyc_weight(k, l, m):
        return W1**k * W2**l * W3**m

    if fid is FormId.A0:
        y1, y2, y3 = y
        yield from _trinomial(
            n, [E(k, W1 * y1) for k in rng], [E(l, W2 * y2) for l in rng],
            [E(m, W3 * y3) for m in rng], sym_weight)
    elif fid is FormId.A1_SUM:
        y1, y2 = y
        yield from _trinomial(
            n, [E(k, W1 * y1) for k in rng], [E(l, W2 * y2) for l in rng],
            [T(m, W3) for m in rng], sym_weight)
    elif fid is FormId.A2_SUM:
        (y1,) = y
        yield from _trinomial(
            n, [E(k, W1 * y1) for k in rng], [T(l, W2) for l in rng],
            [T(m, W3) for m in rng], sym_weight)
    elif fid is FormId.A3:
        yield from _trinomial(
            n, [T(k, W1) for k in rng], [T(l, W2) for l in rng],
            [T(m, W3) for m in rng], sym_weight)
    elif fid is FormId.C0:
        (yy,) = y
        yield from _trinomial(
            n, [E(k, W2 * yy) for k in rng], [E(l, W3 * yy) for l in rng],
            [E(m, W1 * yy) for m in rng], cyc_weight)
    elif fid is FormId.C1:
        yield from _trinomial(
            n, [T(k, W2) for k in rng], [T(l, W3) for l in rng],
            [T(m, W1) for m in rng], cyc_weight)
    elif fid is FormId.A1_CHAR:
        # W3^n sum_k C(n,k) E_k(W1 y1) sum_{a<W3 d} (-1)^a chi(a)
        #     E_{n-k}(W2 y2 + (W2/W3) a) W1^{n-k} W2^k
        y1, y2 = y
        chars = _alt_chars(chi, W3 * d)
        for k in rng:
            ek = E(k, W1 * y1)
            coeff = W3**n * math.comb(n, k) * W1 ** (n - k) * W2**k
            for a, c in chars:
                x = W2 * y2 + Fraction(W2 * a, W3)
                yield (k, a), (ek * c * E(n - k, x)).scale(coeff)
    elif fid is FormId.A2_MIXED:
        # W2^n sum_k C(n,k) sum_{a<W2 d} (-1)^a chi(a)
        #     E_k(W1 y1 + (W1/W2) a) T_{n-k}(W3 d - 1) W1^{n-k} W3^k
        (y1,) = y
        chars = _alt_chars(chi, W2 * d)
        for k in rng:
            t = T(n - k, W3)
            coeff = W2**n * math.comb(n, k) * W1 ** (n - k) * W3**k
            for a, c in chars:
                x = W1 * y1 + Fraction(W1 * a, W2)
                yield (k, a), (c * E(k, x) * t).scale(coeff)
    elif fid is FormId.A2_CHAR:
        # (W2 W3)^n sum_{a<W2 d} sum_{b<W3 d} (-1)^{a+b} chi(ab)
        #     E_n(W1 y1 + (W1/W2) a + (W1/W3) b)
        (y1,) = y
        coeff = (W2 * W3) ** n
        for a, ca in _alt_chars(chi, W2 * d):
            for b, cb in _alt_chars(chi, W3 * d):
                x = W1 * y1 + Fraction(W1 * a, W2) + Fraction(W1 * b, W3)
                yield (a, b), (ca * cb * E(n, x)).scale(coeff)
    else:  # pragma: no cover
        raise DomainError(f"unknown form {fid}")


def expansion_value(
    form: ExpansionForm,
    chi: DirichletCharacter,
    n: int,
    w: Sequence[int],
    y: Sequence = (),
) -> CycNumber:
    """Exact value of the degree-n coefficient expression of ``form``."""
    total = CycNumber.zero(chi.order)
    for _, term in expansion_terms(form, chi, n, w, y):
        total = total + term
    return total


def _trinomial_grid(n, points, factors, scales, order):
    """Values of sum_{k+l+m=n} multinomial * prod_i s_i^{idx_i} * f_i[idx_i] on every point.

    ``factors[i]`` is ``(func, coord)``: the factor list is ``func(point[coord])``
    (or ``func(None)`` when coord is None).  With multinomial(n;k,l,m) =
    C(n,k) C(n-k,l), the (l, m) part is a binomial convolution depending only
    on the coordinates of the last two factors, so it is shared across points.
    Arithmetic runs on Kronecker-packed integers; the packing base is chosen
    from a bound on the final coefficients, so unpacking is exact.
    """
    keyed: list[dict] = [{}, {}, {}]
    point_keys = []
    for pt in points:
        keys = tuple(None if coord is None else pt[coord] for _, coord in factors)
        point_keys.append(keys)
        for i, (func, _) in enumerate(factors):
            if keys[i] not in keyed[i]:
                keyed[i][keys[i]] = func(keys[i])

    phi = euler_phi(order)
    int_rows: list[dict] = []
    dens = []
    bound = 3**n * phi * phi
    for i in range(3):
        flat = [v for vals in keyed[i].values() for v in vals]
        rows, den = common_ints(flat)
        s = scales[i]
        per_key = {}
        biggest = 1
        pos = 0
        for key, vals in keyed[i].items():
            scaled = []
            for j in range(len(vals)):
                row = tuple(c * s**j for c in rows[pos])
                pos += 1
                biggest = max(biggest, max(abs(c) for c in row))
                scaled.append(row)
            per_key[key] = scaled
        bound *= biggest
        int_rows.append(per_key)
        dens.append(den)
    shift = bound.bit_length() + 2
    packed = [
        {key: [kron_pack(r, shift) for r in rows] for key, rows in per_key.items()}
        for per_key in int_rows
    ]
    binoms = [[math.comb(j, l) for l in range(j + 1)] for j in range(n + 1)]
    inner: dict = {}
    den = dens[0] * dens[1] * dens[2]
    width = 3 * phi - 2
    out = []
    for keys in point_keys:
        g = inner.get(keys[1:])
        if g is None:
            b, c = packed[1][keys[1]], packed[2][keys[2]]
            g = [sum(binoms[j][l] * b[l] * c[j - l] for l in range(j + 1)) for j in range(n + 1)]
            inner[keys[1:]] = g
        a = packed[0][keys[0]]
        total = sum(binoms[n][k] * a[k] * g[n - k] for k in range(n + 1))
        out.append(from_unreduced(order, kron_unpack(total, shift, width), den))
    return out


def _signed_exponents(chi: DirichletCharacter, upper: int) -> list[tuple[int, int, int]]:
    """(a, sign, e) with (-1)^a chi(a) = sign * zeta^e, for a < upper coprime to d."""
    table = chi.exponent_table
    d = chi.modulus
    return [(a, -1 if a & 1 else 1, table[a % d]) for a in range(upper) if table[a % d] is not None]


def _char_euler_sum(chi, chars, j, base, step, q) -> CycNumber:
    """sum over chars of (-1)^a chi(a) E_j((base + step*a)/q)."""
    r = chi.order
    bins: list[list[int] | None] = [None] * r
    den = 1
    for a, sign, e in chars:
        vec, den = euler_polynomial_ints(chi, j, base + step * a, q)
        acc = bins[e]
        if acc is None:
            bins[e] = [sign * v for v in vec]
        else:
            for i, v in enumerate(vec):
                acc[i] += sign * v
    flat = [0] * (r + euler_phi(r))
    for e, acc in enumerate(bins):
        if acc is not None:
            for i, v in enumerate(acc):
                flat[e + i] += v
    return from_unreduced(r, flat, den)


@lru_cache(maxsize=256)
def _collected_char_pairs(chi: DirichletCharacter, W2: int, W3: int) -> tuple:
    """Like terms of sum_{a<W2 d, b<W3 d} (-1)^{a+b} chi(ab) g(a W3 + b W2).

    Returns ``((s, coefficient vector), ...)``; each coefficient is an
    algebraic integer given by its reduced integer vector, zeros dropped.
    """
    d = chi.modulus
    r = chi.order
    coll: dict[int, list[int]] = {}
    outer = _signed_exponents(chi, W2 * d)
    inner = _signed_exponents(chi, W3 * d)
    for a, sa, ea in outer:
        for b, sb, eb in inner:
            key = a * W3 + b * W2
            bins = coll.get(key)
            if bins is None:
                bins = coll[key] = [0] * r
            bins[(ea + eb) % r] += sa * sb
    out = []
    for key in sorted(coll):
        vec = tuple(_reduce(coll[key], r))
        if any(vec):
            out.append((key, vec))
    return tuple(out)


def expression_grid(
    form: ExpansionForm,
    chi: DirichletCharacter,
    n: int,
    w: Sequence[int],
    points: Sequence[Sequence[int]],
) -> list[CycNumber]:
    """``[expansion_value(form, chi, n, w, pt) for pt in points]``, computed faster.

    Same finite sums, but factors that do not depend on a y coordinate are
    summed once and reused, and the double character sum collects terms with
    equal Euler arguments.
    """
    fid = form.form_id
    check_weights(fid, w)
    if n < 0:
        raise DomainError("degree must be nonnegative")
    points = [tuple(_check_y(fid, pt)) for pt in points]
    W1, W2, W3 = apply_perm(w, form.permutation)
    d = chi.modulus
    rng = range(n + 1)

    def E_at(wi):
        return lambda y: [euler_polynomial(chi, j, wi * y) for j in rng]

    def T_of(wi):
        return lambda _: [alt_power_sum(chi, j, wi * d - 1) for j in rng]

    sym = (W2 * W3, W1 * W3, W1 * W2)
    cyc = (W1, W2, W3)
    if fid is FormId.A0:
        return _trinomial_grid(n, points, [(E_at(W1), 0), (E_at(W2), 1), (E_at(W3), 2)], sym, chi.order)
    if fid is FormId.A1_SUM:
        return _trinomial_grid(n, points, [(E_at(W1), 0), (E_at(W2), 1), (T_of(W3), None)], sym, chi.order)
    if fid is FormId.A2_SUM:
        return _trinomial_grid(n, points, [(E_at(W1), 0), (T_of(W2), None), (T_of(W3), None)], sym, chi.order)
    if fid is FormId.A3:
        return _trinomial_grid(n, points, [(T_of(W1), None), (T_of(W2), None), (T_of(W3), None)], sym, chi.order)
    if fid is FormId.C0:
        return _trinomial_grid(n, points, [(E_at(W2), 0), (E_at(W3), 0), (E_at(W1), 0)], cyc, chi.order)
    if fid is FormId.C1:
        return _trinomial_grid(n, points, [(T_of(W2), None), (T_of(W3), None), (T_of(W1), None)], cyc, chi.order)

    if any(c.denominator != 1 for pt in points for c in pt):
        return [expansion_value(form, chi, n, w, pt) for pt in points]
    points = [tuple(int(c) for c in pt) for pt in points]
    if fid is FormId.A1_CHAR:
        chars = _signed_exponents(chi, W3 * d)
        inner: dict = {}
        weights = [W3**n * math.comb(n, k) * W1 ** (n - k) * W2**k for k in rng]
        out = []
        for y1, y2 in points:
            h = inner.get(y2)
            if h is None:
                h = [_char_euler_sum(chi, chars, j, W2 * W3 * y2, W2, W3) for j in rng]
                inner[y2] = h
            e1 = [euler_polynomial(chi, k, W1 * y1) for k in rng]
            out.append(cyc_dot(e1, h[::-1], weights))
        return out
    if fid is FormId.A2_MIXED:
        chars = _signed_exponents(chi, W2 * d)
        sums = [alt_power_sum(chi, n - k, W3 * d - 1) for k in rng]
        weights = [W2**n * math.comb(n, k) * W1 ** (n - k) * W3**k for k in rng]
        out = []
        for (y1,) in points:
            h = [_char_euler_sum(chi, chars, k, W1 * W2 * y1, W1, W2) for k in rng]
            out.append(cyc_dot(h, sums, weights))
        return out
    if fid is FormId.A2_CHAR:
        pairs = _collected_char_pairs(chi, W2, W3)
        q = W2 * W3
        scale = q**n
        out = []
        for (y1,) in points:
            acc = [0] * (2 * euler_phi(chi.order) - 1)
            den = 1
            for s_, cvec in pairs:
                vec, den = euler_polynomial_ints(chi, n, W1 * q * y1 + W1 * s_, q)
                for i, u in enumerate(cvec):
                    if u:
                        for j, v in enumerate(vec):
                            acc[i + j] += u * v
            out.append(from_unreduced(chi.order, [scale * c for c in acc], den))
        return out
    raise DomainError(f"unknown form {fid}")  # pragma: no cover


def term_table(form, chi, n, w, y=()) -> dict[tuple[int, ...], CycNumber]:
    return dict(expansion_terms(form, chi, n, w, y))


def relabeling_equal(
    terms_a: dict[tuple[int, ...], CycNumber],
    terms_b: dict[tuple[int, ...], CycNumber],
    rename: Sequence[int],
) -> bool:
    """True when term_a(idx_b[rename[0]], idx_b[rename[1]], ...) == term_b(idx_b) for all idx_b.

    ``rename`` encodes a renaming of summation variables: slot i of A takes
    the value of slot ``rename[i]`` of B.
    """
    if len(terms_a) != len(terms_b):
        return False
    for idx, value in terms_b.items():
        other = terms_a.get(tuple(idx[r] for r in rename))
        if other is None or other != value:
            return False
    return True


# --- theorems -------------------------------------------------------------


@dataclass(frozen=True)
class Theorem:
    theorem_id: int
    form_id: FormId
    permutations: tuple[Perm, ...]
    any_weights: bool = False

    @property
    def arity(self) -> int:
        return self.form_id.arity

    @property
    def expressions(self) -> tuple[ExpansionForm, ...]:
        return tuple(ExpansionForm(self.form_id, s) for s in self.permutations)

    def accepts(self, w: Sequence[int]) -> bool:
        return all(x >= 1 for x in w) and (self.any_weights or all(x % 2 for x in w))


# Permutations listed in the order the expressions are displayed.
THEOREMS: dict[int, Theorem] = {
    1: Theorem(1, FormId.A0, ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)),
               any_weights=True),
    2: Theorem(2, FormId.A1_SUM, ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 1, 0), (2, 0, 1))),
    3: Theorem(3, FormId.A1_CHAR, ((2, 1, 0), (1, 2, 0), (2, 0, 1), (0, 2, 1), (1, 0, 2), (0, 1, 2))),
    4: Theorem(4, FormId.A2_SUM, ((0, 1, 2), (1, 2, 0), (2, 0, 1))),
    5: Theorem(5, FormId.A2_MIXED, ((1, 0, 2), (2, 0, 1), (0, 1, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0))),
    6: Theorem(6, FormId.A2_CHAR, ((2, 0, 1), (0, 1, 2), (1, 2, 0))),
    7: Theorem(7, FormId.C0, ((2, 0, 1), (1, 0, 2)), any_weights=True),
    8: Theorem(8, FormId.C1, ((2, 0, 1), (1, 0, 2))),
}


@dataclass(frozen=True)
class Redundancy:
    """A non-displayed expression equal to a displayed one after renaming indices."""

    theorem_id: int
    extra: Perm
    displayed: Perm
    rename: tuple[int, ...]
    label: str


# The companions of Theorems 4 and 8 that collapse by relabeling.
REDUNDANCIES: tuple[Redundancy, ...] = (
    Redundancy(4, (0, 2, 1), (0, 1, 2), (0, 2, 1), "l<->m"),
    Redundancy(4, (1, 0, 2), (1, 2, 0), (0, 2, 1), "l<->m"),
    Redundancy(4, (2, 1, 0), (2, 0, 1), (0, 2, 1), "l<->m"),
    Redundancy(8, (0, 1, 2), (2, 0, 1), (1, 2, 0), "k->l, l->m, m->k"),
    Redundancy(8, (1, 2, 0), (2, 0, 1), (2, 0, 1), "k->m, l->k, m->l"),
    Redundancy(8, (0, 2, 1), (1, 0, 2), (1, 2, 0), "k->l, l->m, m->k"),
    Redundancy(8, (2, 1, 0), (1, 0, 2), (2, 0, 1), "k->m, l->k, m->l"),
)


def grid(arity: int, n: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(n + 1), repeat=arity))


@dataclass
class SymmetryReport:
    theorem_id: int
    character: tuple[int, int]
    degree: int
    weights: Weights
    grid_arity: int
    grid_points: list[tuple[int, ...]]
    expression_values: list[list[CycNumber]]
    verdict: str
    first_discrepancy: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def grid_size(self) -> int:
        return len(self.grid_points)


def check_parity(theorem: Theorem, w: Sequence[int]) -> None:
    if len(w) != 3 or any(x < 1 for x in w):
        raise DomainError(f"weights must be three positive integers, got {tuple(w)}")
    if not theorem.accepts(w):
        raise DomainError(f"theorem {theorem.theorem_id} requires odd weights, got {tuple(w)}")


def verify_theorem(
    theorem_id: int,
    chi: DirichletCharacter,
    n: int,
    w: Sequence[int],
    *,
    inject_fault: bool = False,
) -> SymmetryReport:
    """Evaluate every displayed expression on the y-grid and compare them exactly.

    ``inject_fault`` adds 1 to the last expression everywhere (self-test hook).
    """
    if theorem_id not in THEOREMS:
        raise DomainError(f"unknown theorem {theorem_id}")
    thm = THEOREMS[theorem_id]
    w = tuple(w)
    check_parity(thm, w)
    points = grid(thm.arity, n)
    exprs = thm.expressions
    values = [expression_grid(f, chi, n, w, points) for f in exprs]
    if inject_fault:
        values[-1] = [v + 1 for v in values[-1]]
    discrepancy = None
    for p_idx, pt in enumerate(points):
        ref = values[0][p_idx]
        for e_idx in range(1, len(exprs)):
            if values[e_idx][p_idx] != ref:
                discrepancy = {
                    "expressions": [0, e_idx],
                    "y": list(pt),
                    "values": [str(ref), str(values[e_idx][p_idx])],
                }
                break
        if discrepancy:
            break
    notes = []
    if theorem_id == 7:
        notes.append("C0 generating integral read with w3*x3 in the exponent")
    if theorem_id == 8:
        notes.append("the two displayed expressions are asserted equal")
    return SymmetryReport(
        theorem_id=theorem_id,
        character=(chi.modulus, chi.index),
        degree=n,
        weights=w,  # type: ignore[arg-type]
        grid_arity=thm.arity,
        grid_points=points,
        expression_values=values,
        verdict="fail" if discrepancy else "pass",
        first_discrepancy=discrepancy,
        notes=notes,
    )


@dataclass
class CrossFormReport:
    passed: bool
    checked_points: int
    failures: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def cross_form_check(
    chi: DirichletCharacter,
    n: int,
    w: Sequence[int],
    y: Sequence | None = None,
    sigma: Perm = IDENTITY,
) -> CrossFormReport:
    """Compare the alternative expansions of the same quotient.

    A1_SUM = A1_CHAR at shared (y1, y2), and A2_SUM = A2_MIXED = A2_CHAR at
    shared y1.  With ``y`` given as (y1, y2) only that point is checked;
    otherwise the full grid is used.
    """
    check_weights(FormId.A1_SUM, w)
    failures = []
    count = 0
    pairs = grid(2, n) if y is None else [tuple(y)]
    a = expression_grid(ExpansionForm(FormId.A1_SUM, sigma), chi, n, w, pairs)
    b = expression_grid(ExpansionForm(FormId.A1_CHAR, sigma), chi, n, w, pairs)
    for pt, u, v in zip(pairs, a, b):
        count += 1
        if u != v:
            failures.append({"forms": ["A1_SUM", "A1_CHAR"], "y": list(pt)})
    singles = grid(1, n) if y is None else [(y[0],)]
    cols = [
        expression_grid(ExpansionForm(fid, sigma), chi, n, w, singles)
        for fid in (FormId.A2_SUM, FormId.A2_MIXED, FormId.A2_CHAR)
    ]
    for pt, u, v, x in zip(singles, *cols):
        count += 1
        if not u == v == x:
            failures.append({"forms": ["A2_SUM", "A2_MIXED", "A2_CHAR"], "y": list(pt)})
    return CrossFormReport(not failures, count, failures)


def redundancy_check(
    red: Redundancy,
    chi: DirichletCharacter,
    n: int,
    w: Sequence[int],
    y: Sequence = (),
) -> bool:
    """Term-by-term equality of a companion expression with its displayed partner."""
    fid = THEOREMS[red.theorem_id].form_id
    ta = term_table(ExpansionForm(fid, red.extra), chi, n, w, y)
    tb = term_table(ExpansionForm(fid, red.displayed), chi, n, w, y)
    return relabeling_equal(ta, tb, red.rename)
