"""s-inversion sequences and their ascent statistics.

An s-inversion sequence of length n is a tuple ``e`` with ``0 <= e_i < s_i``.
Ratios ``e_i / s_i`` are only ever compared by integer cross-multiplication.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .genfunc import Polynomial

__all__ = [
    "SRule",
    "NATURAL",
    "DOUBLED",
    "PAPER_I",
    "PAPER_IPRIME",
    "HALVED_IPRIME",
    "term",
    "terms",
    "InversionSequence",
    "enumerate_inversion_sequences",
    "ascent_set",
    "asc",
    "amaj",
    "lhp",
    "weight",
    "ascent_set_D",
    "ascent_polynomial",
    "ascent_counts",
]

RULE_KINDS = ("natural", "doubled", "paper-I", "paper-Iprime", "halved-Iprime", "explicit")


@dataclass(frozen=True)
class SRule:
    """A rule producing the positive sequence ``s_1, s_2, ...``.

    Named kinds:

    - ``natural``: 1, 2, 3, ...
    - ``doubled``: 2, 4, 6, ...
    - ``paper-I``: 1, 4, 3, 8, 5, 12, ...  (``s_{2i-1} = 2i-1``, ``s_{2i} = 4i``)
    - ``paper-Iprime``: 2, 2, 6, 4, 10, 6, ...  (``s_{2i-1} = 4i-2``, ``s_{2i} = 2i``)
    - ``halved-Iprime``: 1, 1, 3, 2, 5, 3, ...  (half of ``paper-Iprime``)
    - ``explicit``: a finite list given in ``values``
    """

    kind: str
    values: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ValueError(f"unknown rule kind {self.kind!r}; expected one of {RULE_KINDS}")
        if self.kind == "explicit":
            if self.values is None:
                raise ValueError("explicit rule needs values")
            vals = tuple(int(v) for v in self.values)
            if any(v < 1 for v in vals):
                raise ValueError("explicit rule values must be positive integers")
            object.__setattr__(self, "values", vals)
        elif self.values is not None:
            raise ValueError(f"rule {self.kind!r} does not take values")

    @classmethod
    def explicit(cls, values: Sequence[int]) -> "SRule":
        return cls("explicit", tuple(values))

    @classmethod
    def parse(cls, text: str) -> "SRule":
        """``"paper-I"`` or ``"explicit:1,4,3"`` style names, as used on the command line."""
        if text.startswith("explicit:"):
            return cls.explicit(int(v) for v in text.split(":", 1)[1].split(",") if v.strip())
        return cls(text)

    def __str__(self) -> str:
        if self.kind == "explicit":
            return "explicit:" + ",".join(map(str, self.values))
        return self.kind


NATURAL = SRule("natural")
DOUBLED = SRule("doubled")
PAPER_I = SRule("paper-I")
PAPER_IPRIME = SRule("paper-Iprime")
HALVED_IPRIME = SRule("halved-Iprime")


def term(rule: SRule, i: int) -> int:
    """``s_i`` under ``rule`` (1-based)."""
    if i < 1:
        raise IndexError(f"sequence index must be >= 1, got {i}")
    kind = rule.kind
    if kind == "natural":
        return i
    if kind == "doubled":
        return 2 * i
    half, odd = (i + 1) // 2, i % 2
    if kind == "paper-I":
        return i if odd else 2 * i
    if kind == "paper-Iprime":
        return 4 * half - 2 if odd else i
    if kind == "halved-Iprime":
        return 2 * half - 1 if odd else half
    if i > len(rule.values):
        raise IndexError(f"index {i} beyond explicit rule of length {len(rule.values)}")
    return rule.values[i - 1]


def terms(rule: SRule, n: int) -> tuple[int, ...]:
    return tuple(term(rule, i) for i in range(1, n + 1))


@dataclass(frozen=True)
class InversionSequence:
    entries: tuple[int, ...]
    rule: SRule

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        for i, e in enumerate(entries, start=1):
            if not 0 <= e < term(self.rule, i):
                raise ValueError(f"entry e_{i}={e} outside [0, {term(self.rule, i)})")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def enumerate_inversion_sequences(rule: SRule, n: int) -> Iterator[InversionSequence]:
    """All s-inversion sequences of length ``n``, lexicographically."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    s = terms(rule, n)
    for entries in itertools.product(*(range(si) for si in s)):
        yield InversionSequence(entries, rule)


def ascent_set(e: InversionSequence) -> frozenset[int]:
    """Ascents ``i`` in ``0..n-1`` with ``e_i/s_i < e_{i+1}/s_{i+1}``, using ``e_0 = 0``, ``s_0 = 1``."""
    s = terms(e.rule, len(e))
    out = []
    prev_e, prev_s = 0, 1
    for i, (ei, si) in enumerate(zip(e.entries, s)):
        if prev_e * si < ei * prev_s:
            out.append(i)
        prev_e, prev_s = ei, si
    return frozenset(out)


def asc(e: InversionSequence) -> int:
    return len(ascent_set(e))


def amaj(e: InversionSequence) -> int:
    n = len(e)
    return sum(n - i for i in ascent_set(e))


def weight(e: InversionSequence) -> int:
    return sum(e.entries)


def lhp(e: InversionSequence) -> int:
    """Lecture hall statistic: ``-|e| + sum over ascents i of (s_{i+1} + ... + s_n)``."""
    s = terms(e.rule, len(e))
    return -weight(e) + sum(sum(s[i:]) for i in ascent_set(e))


def ascent_set_D(e: InversionSequence) -> frozenset[int]:
    """Type D ascent set; only defined for the ``doubled`` rule.

    For ``n == 1`` the missing ``e_2`` is read as 0, so 0 is never an ascent.
    """
    if e.rule.kind != "doubled":
        raise ValueError(f"type D ascents need the doubled rule, got {e.rule}")
    x = e.entries
    n = len(x)
    if n < 1:
        raise ValueError("type D ascent set needs n >= 1")
    out = {i for i in range(1, n) if x[i - 1] * (i + 1) < x[i] * i}
    e2 = x[1] if n > 1 else 0
    if 2 * x[0] + e2 >= 3:
        out.add(0)
    return frozenset(out)


# --- distributions ---------------------------------------------------------


def _asc_fold(s: Sequence[int], prefix: Sequence[int], counts: list[int]) -> None:
    """Add the ascent counts of every sequence extending ``prefix`` into ``counts``."""
    n = len(s)
    a0 = 0
    prev_e, prev_s = 0, 1
    for ei, si in zip(prefix, s):
        a0 += prev_e * si < ei * prev_s
        prev_e, prev_s = ei, si
    k = len(prefix)
    if k == n:
        counts[a0] += 1
        return
    last = n - 1

    def rec(i, pe, ps, a):
        si = s[i]
        if i == last:
            thr = pe * si
            for ei in range(si):
                counts[a + (thr < ei * ps)] += 1
            return
        for ei in range(si):
            rec(i + 1, ei, si, a + (pe * si < ei * ps))

    rec(k, prev_e, prev_s, a0)


def _prefixes(s: Sequence[int], parts: int) -> list[tuple[int, ...]]:
    """Shortest lexicographic prefix split giving at least ``parts`` pieces."""
    k, total = 0, 1
    while k < len(s) and total < parts:
        total *= s[k]
        k += 1
    return list(itertools.product(*(range(si) for si in s[:k])))


def _asc_task(args) -> list[int]:
    s, prefixes = args
    counts = [0] * (len(s) + 1)
    for p in prefixes:
        _asc_fold(s, p, counts)
    return counts


def ascent_counts(rule: SRule, n: int, jobs: int = 1) -> list[int]:
    """Dense table ``counts[k]`` = number of length-``n`` sequences with ``k`` ascents.

    With ``jobs > 1`` the sequences are split by leading entries and folded in
    worker processes; the merged table does not depend on ``jobs``.
    """
    s = terms(rule, n)
    if jobs <= 1 or n == 0:
        counts = [0] * (n + 1)
        _asc_fold(s, (), counts)
        return counts
    from .parallel import map_tasks

    prefixes = _prefixes(s, 4 * jobs)
    chunks = [(s, prefixes[i::jobs]) for i in range(jobs)]
    counts = [0] * (n + 1)
    for part in map_tasks(_asc_task, chunks, jobs):
        for k, c in enumerate(part):
            counts[k] += c
    return counts


def ascent_polynomial(rule: SRule, n: int, statistic: str = "asc", jobs: int = 1) -> Polynomial:
    """Generating polynomial of ``asc`` (or ``ascD``) over length-``n`` sequences."""
    if statistic == "asc":
        return Polynomial(ascent_counts(rule, n, jobs))
    if statistic == "ascD":
        if rule.kind != "doubled":
            raise ValueError("statistic ascD requires the doubled rule")
        table = Counter(len(ascent_set_D(e)) for e in enumerate_inversion_sequences(rule, n))
        return Polynomial.from_counts(table)
    raise ValueError(f"unknown statistic {statistic!r}")
