"""Exact polynomials, rational series expansion and real-root counting.

Everything here works over Python integers and :class:`fractions.Fraction`.
No floating point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Polynomial",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "expand_rational",
    "ClosedForm",
    "verify_series_identity",
    "f_count",
    "verify_fcount_transform",
    "sturm_chain",
    "sturm_distinct_real_roots",
    "is_real_rooted",
]


class Polynomial:
    """Univariate polynomial with integer coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int] | Sequence[int]) -> "Polynomial":
        """Build from a count table ``{exponent: multiplicity}`` or a dense list."""
        if isinstance(counts, Mapping):
            if not counts:
                return cls()
            dense = [0] * (max(counts) + 1)
            for k, v in counts.items():
                if k < 0:
                    raise ValueError("negative exponent in count table")
                dense[k] += v
            return cls(dense)
        return cls(counts)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; ints stay ints, Fractions stay exact."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * a for i, a in enumerate(self.coeffs) if i)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(c * a for a in self.coeffs)

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> "Polynomial":
        """Divide by the positive gcd of the coefficients (sign preserved)."""
        g = self.content()
        if g <= 1:
            return self
        return Polynomial(a // g for a in self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            if not out:
                out = body if a > 0 else "-" + body
            else:
                out += (" + " if a > 0 else " - ") + body
        return out


def _coerce(other) -> Polynomial | None:
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, int):
        return Polynomial([other])
    return None


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, value: int | Fraction) -> int | Fraction:
    return p(Fraction(value))


def expand_rational(numerator: Polynomial | Sequence[int], m: int, T: int) -> list[int]:
    """Coefficients ``c_0..c_T`` of ``numerator(x) / (1 - x)**m``.

    ``c_t = sum_j N_j * C(t - j + m - 1, m - 1)``, terms with ``t < j`` dropped.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    coeffs = numerator.coeffs if isinstance(numerator, Polynomial) else tuple(numerator)
    out = []
    for t in range(T + 1):
        c = 0
        for j, a in enumerate(coeffs[: t + 1]):
            if a:
                c += a * (comb(t - j + m - 1, m - 1) if m else int(t == j))
        out.append(c)
    return out


@dataclass(frozen=True)
class ClosedForm:
    """``(u+1)**a * (2u+1)**b * ((u+2)/2)**c`` with ``u = scale * t``."""

    a: int = 0
    b: int = 0
    c: int = 0
    scale: int = 1

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise ValueError("exponents must be nonnegative")
        if self.scale not in (1, 2):
            raise ValueError("scale must be 1 or 2")

    def value(self, t: int) -> Fraction:
        u = self.scale * t
        return Fraction(u + 1) ** self.a * Fraction(2 * u + 1) ** self.b * Fraction(u + 2, 2) ** self.c

    def int_value(self, t: int) -> int:
        v = self.value(t)
        if v.denominator != 1:
            raise ArithmeticError(f"closed form {self} is not an integer at t={t}: {v}")
        return v.numerator

    def __str__(self) -> str:
        u = "t" if self.scale == 1 else "2t"
        parts = []
        for base, e in ((f"({u}+1)", self.a), (f"(2{u}+1)" if self.scale == 1 else "(4t+1)", self.b),
                        (f"(({u}+2)/2)", self.c)):
            if e == 1:
                parts.append(base)
            elif e:
                parts.append(f"{base}^{e}")
        return "*".join(parts) or "1"


def verify_series_identity(
    numerator: Polynomial, m: int, form: ClosedForm, T: int | None = None
) -> tuple[bool, int | None]:
    """Check ``numerator / (1-x)**m == sum_t form(t) x**t`` through degree ``T``.

    Returns ``(ok, first_failing_t)``; ``first_failing_t`` is None on success.
    The default truncation is ``deg(numerator) + m + 5``.
    """
    if T is None:
        T = max(numerator.degree, 0) + m + 5
    series = expand_rational(numerator, m, T)
    for t, c in enumerate(series):
        if c != form.int_value(t):
            return False, t
    return True, None


def f_count(rule, n: int, t: int) -> int:
    """Number of integer tuples with ``0 <= l_1/s_1 <= ... <= l_n/s_n <= t``.

    Direct enumeration over ``l_i in [0, t*s_i]``; ratios are compared by
    cross-multiplication.
    """
    from .inversion import term

    if t < 0:
        return 0
    s = [term(rule, i) for i in range(1, n + 1)]
    if n == 0:
        return 1

    def rec(i: int, prev_l: int, prev_s: int) -> int:
        si = s[i]
        # smallest l with prev_l/prev_s <= l/si
        lo = -((-prev_l * si) // prev_s)
        hi = t * si
        if i == n - 1:
            return max(0, hi - lo + 1)
        total = 0
        for lam in range(lo, hi + 1):
            total += rec(i + 1, lam, si)
        return total

    return rec(0, 0, 1)


def verify_fcount_transform(rule, n: int, t_max: int) -> bool:
    """``sum_t f_count(rule, n, t) x**t`` against the ascent polynomial over ``(1-x)**(n+1)``."""
    from .inversion import ascent_polynomial

    lhs = [f_count(rule, n, t) for t in range(t_max + 1)]
    rhs = expand_rational(ascent_polynomial(rule, n), n + 1, t_max)
    return lhs == rhs


# --- Sturm sequences -------------------------------------------------------


def _prem_positive(a: Polynomial, b: Polynomial) -> Polynomial:
    """Pseudo-remainder of ``|lc(b)|**(deg a - deg b + 1) * a`` by ``b``.

    The multiplier is positive, so the result is a positive multiple of the
    true remainder and Sturm sign patterns are unaffected.
    """
    r = list(a.coeffs)
    db = b.degree
    lc = b.leading()
    mult = abs(lc)
    sgn = 1 if lc > 0 else -1
    steps = len(r) - 1 - db + 1
    # |lc|^steps * a, reduced one leading term at a time
    for _ in range(steps):
        if len(r) - 1 < db:
            r = [mult * x for x in r]
            continue
        q = r[-1] * sgn
        shift = len(r) - 1 - db
        r = [mult * x for x in r]
        for j, bc in enumerate(b.coeffs):
            r[shift + j] -= q * bc
        while r and r[-1] == 0:
            r.pop()
    return Polynomial(r)


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    """Sturm sequence of ``p`` built from primitive signed pseudo-remainders."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [p.primitive(), p.derivative().primitive()]
    if chain[1].is_zero():
        return chain[:1]
    while True:
        r = _prem_positive(chain[-2], chain[-1])
        if r.is_zero():
            return chain
        chain.append((-r).primitive())


def _sign_changes(signs: Iterable[int]) -> int:
    changes = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            changes += 1
        prev = s
    return changes


def sturm_distinct_real_roots(p: Polynomial) -> int:
    """Number of distinct real roots of ``p`` on the whole real line."""
    chain = sturm_chain(p)
    at_pos = [1 if q.leading() > 0 else -1 for q in chain]
    at_neg = [s if q.degree % 2 == 0 else -s for s, q in zip(at_pos, chain)]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def _frac_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for j, bc in enumerate(b):
            a[k + j] -= c * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _to_primitive(coeffs: Sequence[Fraction]) -> Polynomial:
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return Polynomial(int(c * den) for c in coeffs).primitive()


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Primitive gcd over the rationals, normalized to a positive leading coefficient."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while b:
        _, r = _frac_divmod(a, b)
        a, b = b, r
    if not a:
        return Polynomial()
    g = _to_primitive(a)
    return -g if g.leading() < 0 else g


def square_free_part(p: Polynomial) -> Polynomial:
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive()
    q, r = _frac_divmod([Fraction(c) for c in p.coeffs], [Fraction(c) for c in g.coeffs])
    assert not r, "gcd does not divide"
    return _to_primitive(q)


def is_real_rooted(p: Polynomial) -> bool:
    """True when every complex root of ``p`` is real (multiplicities allowed)."""
    if p.is_zero():
        raise ValueError("real-rootedness of the zero polynomial is undefined")
    q = square_free_part(p)
    return sturm_distinct_real_roots(q) == q.degree
