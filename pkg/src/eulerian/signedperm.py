"""Signed permutations of multisets, even-signed permutations, descent statistics.

Signed words are plain tuples of nonzero ints; a negative entry carries a
minus sign.  Descents compare signed values strictly, so equal adjacent
letters never form a descent.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

from .genfunc import Polynomial

SignedWord = tuple[int, ...]

FAMILIES = ("P", "U", "V", "D")


@dataclass(frozen=True)
class MultisetSpec:
    """Multiset ``{value: multiplicity}`` plus optional forced signs per value.

    A forced sign applies to every occurrence of that value.
    """

    base: Mapping[int, int]
    sign_constraints: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        base = dict(sorted((int(k), int(v)) for k, v in dict(self.base).items()))
        if not base:
            raise ValueError("multiset spec must be nonempty")
        for v, mult in base.items():
            if v < 1:
                raise ValueError(f"multiset values must be positive, got {v}")
            if mult < 1:
                raise ValueError(f"multiplicity of {v} must be >= 1")
        cons = {int(k): int(s) for k, s in dict(self.sign_constraints).items()}
        for v, s in cons.items():
            if v not in base:
                raise ValueError(f"sign constraint on {v}, which is not in the multiset")
            if s not in (1, -1):
                raise ValueError("forced sign must be +1 or -1")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "sign_constraints", cons)

    @property
    def size(self) -> int:
        return sum(self.base.values())

    def cardinality(self) -> int:
        arrangements = factorial(self.size) // prod(factorial(m) for m in self.base.values())
        free = sum(m for v, m in self.base.items() if v not in self.sign_constraints)
        return arrangements * 2**free

    def sign_options(self, v: int) -> tuple[int, ...]:
        s = self.sign_constraints.get(v)
        return (v, -v) if s is None else (s * v,)


def family_spec(family: str, n: int) -> MultisetSpec:
    """``P``: {1^2..n^2}; ``U``: {1^2..(n-1)^2, n}; ``V``: as U with n negative."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "P":
        return MultisetSpec({i: 2 for i in range(1, n + 1)})
    if family in ("U", "V"):
        base = {i: 2 for i in range(1, n)}
        base[n] = 1
        return MultisetSpec(base, {n: -1} if family == "V" else {})
    raise ValueError(f"no multiset spec for family {family!r}")


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct arrangements in lexicographic order (next-permutation step)."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def enumerate_signed_words(spec: MultisetSpec) -> Iterator[SignedWord]:
    """Every signed permutation of ``spec`` exactly once.

    Arrangements come in lexicographic order; for each one the free signs run
    through a binary counter whose lowest bit is the first free position
    (bit set means negative).
    """
    items = [v for v, m in spec.base.items() for _ in range(m)]
    for arr in _multiset_permutations(items):
        free = [i for i, v in enumerate(arr) if v not in spec.sign_constraints]
        base = [spec.sign_constraints.get(v, 1) * v for v in arr]
        for mask in range(1 << len(free)):
            word = list(base)
            for bit, pos in enumerate(free):
                if mask >> bit & 1:
                    word[pos] = -word[pos]
            yield tuple(word)


def _check_word(sigma: Sequence[int]) -> None:
    if not sigma:
        raise ValueError("descents of the empty word are undefined")
    if 0 in sigma:
        raise ValueError("signed words may not contain 0")


def des_B_set(sigma: Sequence[int]) -> frozenset[int]:
    """``{i : s_i > s_{i+1}}`` plus ``n`` when the last letter is positive."""
    _check_word(sigma)
    n = len(sigma)
    out = {i + 1 for i in range(n - 1) if sigma[i] > sigma[i + 1]}
    if sigma[-1] > 0:
        out.add(n)
    return frozenset(out)


def des_B(sigma: Sequence[int]) -> int:
    return len(des_B_set(sigma))


def des_alt(sigma: Sequence[int]) -> int:
    """Descent number with the leading-letter convention: 0 counts when ``sigma_1 < 0``."""
    _check_word(sigma)
    d = sum(1 for a, b in zip(sigma, sigma[1:]) if a > b)
    return d + (sigma[0] < 0)


def reverse_negate(sigma: Sequence[int]) -> SignedWord:
    return tuple(-a for a in reversed(sigma))


def enumerate_even_signed(n: int) -> Iterator[SignedWord]:
    """Elements of D_n: permutations of 1..n with an even number of minus signs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for perm in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            if bin(mask).count("1") % 2:
                continue
            yield tuple(-v if mask >> i & 1 else v for i, v in enumerate(perm))


def des_D(sigma: Sequence[int]) -> int:
    """Type D descent number; for ``n == 1`` only internal descents count (there are none)."""
    _check_word(sigma)
    n = len(sigma)
    if sorted(abs(a) for a in sigma) != list(range(1, n + 1)):
        raise ValueError("des_D needs a signed permutation of 1..n")
    if sum(1 for a in sigma if a < 0) % 2:
        raise ValueError("des_D needs an even number of negative letters")
    d = sum(1 for a, b in zip(sigma, sigma[1:]) if a > b)
    if n > 1 and sigma[0] + sigma[1] < 0:
        d += 1
    return d


# --- distributions ---------------------------------------------------------


def _first_letters(spec: MultisetSpec) -> list[int]:
    return [sv for v in spec.base for sv in spec.sign_options(v)]


def _des_fold(spec: MultisetSpec, first: int, counts: list[int]) -> None:
    """Fold des_B over every word of ``spec`` starting with the letter ``first``."""
    vals = list(spec.base)
    rem = [spec.base[v] for v in vals]
    opts = [spec.sign_options(v) for v in vals]
    rem[vals.index(abs(first))] -= 1
    m = spec.size
    idxs = range(len(vals))

    def rec(pos, prev, d):
        if pos == m:
            counts[d + (prev > 0)] += 1
            return
        for k in idxs:
            if rem[k]:
                rem[k] -= 1
                for letter in opts[k]:
                    rec(pos + 1, letter, d + (prev > letter))
                rem[k] += 1

    rec(1, first, 0)


def _des_task(args) -> list[int]:
    spec, firsts = args
    counts = [0] * (spec.size + 1)
    for f in firsts:
        _des_fold(spec, f, counts)
    return counts


def descent_counts(spec: MultisetSpec, jobs: int = 1) -> list[int]:
    """Dense des_B table over all signed words of ``spec``, split by first letter."""
    firsts = _first_letters(spec)
    if jobs <= 1:
        return _des_task((spec, firsts))
    from .parallel import map_tasks

    chunks = [(spec, firsts[i::jobs]) for i in range(jobs)]
    counts = [0] * (spec.size + 1)
    for part in map_tasks(_des_task, chunks, jobs):
        for k, c in enumerate(part):
            counts[k] += c
    return counts


def descent_polynomial(family: str, n: int, jobs: int = 1) -> Polynomial:
    """``P_n(x)``, ``U_n(x)``, ``V_n(x)`` (by des_B) or ``D_n(x)`` (by des_D)."""
    if family == "D":
        if n < 1:
            raise ValueError("n must be >= 1")
        return Polynomial.from_counts(Counter(des_D(s) for s in enumerate_even_signed(n)))
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return Polynomial(descent_counts(family_spec(family, n), jobs))
