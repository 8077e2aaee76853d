"""Type B (F, w)-partitions of signed labeled plane forests.

A map ``f`` from vertices to nonnegative integers is a type B partition when
for every ancestor ``x`` of ``y``: ``f(x) <= f(y)``, strictly if
``w(x) < w(y)``; and ``f(r) >= 1`` at every root with ``w(r) > 0``.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Mapping, Sequence

from .forest import PlaneForest, Vertex, linear_extensions
from .signedperm import SignedWord, des_B, des_B_set

__all__ = [
    "is_partition",
    "is_partition_edges",
    "omega_bruteforce",
    "omega",
    "omega_tree_table",
    "is_compatible",
    "omega_sigma",
    "omega_sigma_closed",
    "d_statistic",
    "shifted_partition",
    "decompose",
    "decompose_order",
    "compatible_extensions",
    "compatible_maps",
]


def _root_ok(forest: PlaneForest, w: Mapping[Vertex, int], f: Mapping[Vertex, int]) -> bool:
    return all(f[r] >= 1 for r in forest.roots if w[r] > 0)


def _pair_ok(fx: int, fy: int, wx: int, wy: int) -> bool:
    return fx < fy if wx < wy else fx <= fy


def is_partition(forest: PlaneForest, w: Mapping[Vertex, int], f: Mapping[Vertex, int]) -> bool:
    """Check every comparable pair, not only edges."""
    if any(f[v] < 0 for v in forest.vertices):
        return False
    for x, y in forest.comparable_pairs():
        if not _pair_ok(f[x], f[y], w[x], w[y]):
            return False
    return _root_ok(forest, w, f)


def is_partition_edges(forest: PlaneForest, w: Mapping[Vertex, int], f: Mapping[Vertex, int]) -> bool:
    """Same test restricted to parent-child edges."""
    if any(f[v] < 0 for v in forest.vertices):
        return False
    for x, y in forest.edges():
        if not _pair_ok(f[x], f[y], w[x], w[y]):
            return False
    return _root_ok(forest, w, f)


def omega_bruteforce(forest: PlaneForest, w: Mapping[Vertex, int], t: int) -> int:
    """Count partitions with values in ``0..t`` by trying all ``(t+1)**|F|`` maps.

    Applies the same rules as :func:`is_partition`, on index tuples for speed.
    """
    if t < 0:
        return 0
    index = {v: k for k, v in enumerate(forest.vertices)}
    pairs = [(index[x], index[y], w[x] < w[y]) for x, y in forest.comparable_pairs()]
    pos_roots = [index[r] for r in forest.roots if w[r] > 0]
    count = 0
    for f in itertools.product(range(t + 1), repeat=len(index)):
        if any(f[r] < 1 for r in pos_roots):
            continue
        for x, y, strict in pairs:
            if f[x] > f[y] or (strict and f[x] == f[y]):
                break
        else:
            count += 1
    return count


def omega_tree_table(forest: PlaneForest, w: Mapping[Vertex, int], v: Vertex, t: int) -> list[int]:
    """``table[a]`` = fillings of the subtree at ``v`` with ``f(v) = a`` (root rule not applied)."""
    table = [1] * (t + 1)
    for c in forest.children[v]:
        sub = omega_tree_table(forest, w, c, t)
        # suffix[a] = sum_{b >= a} sub[b]
        suffix = [0] * (t + 2)
        for b in range(t, -1, -1):
            suffix[b] = suffix[b + 1] + sub[b]
        strict = w[v] < w[c]
        for a in range(t + 1):
            table[a] *= suffix[a + 1] if strict else suffix[a]
    return table


def omega(forest: PlaneForest, w: Mapping[Vertex, int], t: int) -> int:
    """Number of partitions with all values ``<= t``, by a per-tree dynamic program."""
    if t < 0:
        return 0
    total = 1
    for r in forest.roots:
        table = omega_tree_table(forest, w, r, t)
        total *= sum(table[1:]) if w[r] > 0 else sum(table)
    return total


# --- sigma-compatible maps -------------------------------------------------


def is_compatible(sigma: Sequence[int], g: Sequence[int]) -> bool:
    n = len(sigma)
    if len(g) != n or n == 0 or any(x < 0 for x in g):
        return False
    for i in range(n - 1):
        if g[i] < g[i + 1]:
            return False
        if sigma[i] > sigma[i + 1] and g[i] == g[i + 1]:
            return False
    return not (sigma[-1] > 0 and g[-1] < 1)


def _check_distinct(sigma: Sequence[int]) -> None:
    if not sigma:
        raise ValueError("empty word")
    if len(set(sigma)) != len(sigma):
        raise ValueError("compatible maps need pairwise distinct letters")


def omega_sigma(sigma: Sequence[int], t: int) -> int:
    """Count compatible maps with ``g(sigma_1) <= t`` by direct enumeration."""
    _check_distinct(sigma)
    if t < 0:
        return 0
    n = len(sigma)

    def rec(i, hi):
        # choose g_i <= hi; hi already accounts for strictness at i-1
        lo = 1 if (i == n - 1 and sigma[-1] > 0) else 0
        if i == n - 1:
            return max(0, hi - lo + 1)
        strict = sigma[i] > sigma[i + 1]
        total = 0
        for gi in range(lo, hi + 1):
            total += rec(i + 1, gi - 1 if strict else gi)
        return total

    return rec(0, t)


def compatible_maps(sigma: Sequence[int], t: int):
    """Yield every compatible map ``g`` (as a tuple) with ``g_1 <= t``."""
    _check_distinct(sigma)
    n = len(sigma)
    g: list[int] = []

    def rec(i, hi):
        lo = 1 if (i == n - 1 and sigma[-1] > 0) else 0
        strict = i < n - 1 and sigma[i] > sigma[i + 1]
        for gi in range(lo, hi + 1):
            g.append(gi)
            if i == n - 1:
                yield tuple(g)
            else:
                yield from rec(i + 1, gi - 1 if strict else gi)
            g.pop()

    if t >= 0:
        yield from rec(0, t)


def omega_sigma_closed(sigma: Sequence[int], t: int) -> int:
    """``C(n + t - des_B(sigma), n)``, zero when ``t < des_B(sigma)``."""
    _check_distinct(sigma)
    n, d = len(sigma), des_B(sigma)
    if t < d:
        return 0
    return comb(n + t - d, n)


def d_statistic(sigma: Sequence[int], i: int) -> int:
    """Number of elements of Des_B(sigma) that are ``>= i`` (1-based)."""
    if not 1 <= i <= len(sigma):
        raise IndexError(f"position {i} outside 1..{len(sigma)}")
    return sum(1 for j in des_B_set(sigma) if j >= i)


def shifted_partition(sigma: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """``lambda_i = g_i - d_i``; a compatible ``g`` becomes a partition with
    ``lambda_1 <= g_1 - des_B(sigma)``."""
    return tuple(gi - d_statistic(sigma, i) for i, gi in enumerate(g, start=1))


# --- decomposition into compatible maps ------------------------------------


def decompose_order(forest: PlaneForest, w: Mapping[Vertex, int], f: Mapping[Vertex, int]) -> tuple[Vertex, ...]:
    """Vertex order of the unique linear extension along which ``f`` is compatible.

    Vertices are sorted by ``f`` descending, ties by increasing label.
    """
    order = tuple(sorted(forest.vertices, key=lambda v: (-f[v], w[v])))
    pos = {v: k for k, v in enumerate(order)}
    for x, y in forest.edges():
        if pos[y] > pos[x]:
            raise RuntimeError(f"decomposition produced a non-extension for f={dict(f)}")
    word = [w[v] for v in order]
    if not is_compatible(word, [f[v] for v in order]):
        raise RuntimeError(f"decomposition produced an incompatible map for f={dict(f)}")
    return order


def decompose(forest: PlaneForest, w: Mapping[Vertex, int], f: Mapping[Vertex, int]) -> SignedWord:
    """The signed word ``sigma`` in L(F, w) whose compatible-map class contains ``f``."""
    return tuple(w[v] for v in decompose_order(forest, w, f))


def compatible_extensions(forest: PlaneForest, w: Mapping[Vertex, int], f: Mapping[Vertex, int]) -> list[SignedWord]:
    """All labeled extensions along which ``f`` is compatible (exhaustive oracle)."""
    out = []
    for ext in linear_extensions(forest):
        word = [w[v] for v in ext]
        if is_compatible(word, [f[v] for v in ext]):
            out.append(tuple(word))
    return out
