"""Plane forests, signed labelings and linear extensions.

A tree is written as the tuple of its child trees, so a leaf is ``()`` and a
forest is a tuple of trees.  Vertices are named ``(tree_index, position)``
where ``position`` counts vertices of that tree in preorder (root is 0).

Order convention: ``x <_F y`` iff ``y`` is a proper ancestor of ``x``.  Roots
are maximal, and a linear extension lists every vertex after all of its
descendants.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping, Sequence

from .genfunc import Polynomial
from .signedperm import SignedWord, des_B

Vertex = tuple[int, int]
Tree = tuple  # nested tuples of child trees

__all__ = [
    "PlaneForest",
    "LabelingType",
    "parse_forest",
    "build_F_n",
    "build_F_prime_n",
    "type_labeling",
    "labelings",
    "linear_extensions",
    "linear_extensions_labeled",
    "check_labeling",
    "phi",
    "forest_descent_polynomial",
    "random_forest",
    "random_signed_labeling",
]


class PlaneForest:
    """An ordered sequence of ordered rooted trees."""

    def __init__(self, trees: Sequence[Tree] = ()):
        self.trees: tuple[Tree, ...] = tuple(_freeze(t) for t in trees)
        self.vertices: list[Vertex] = []
        self.parent: dict[Vertex, Vertex | None] = {}
        self.children: dict[Vertex, list[Vertex]] = {}
        for ti, tree in enumerate(self.trees):
            counter = itertools.count()

            def walk(node, par):
                v = (ti, next(counter))
                self.vertices.append(v)
                self.parent[v] = par
                self.children[v] = []
                if par is not None:
                    self.children[par].append(v)
                for child in node:
                    walk(child, v)

            walk(tree, None)
        self.roots: list[Vertex] = [(ti, 0) for ti in range(len(self.trees))]

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneForest) and self.trees == other.trees

    def __hash__(self) -> int:
        return hash(self.trees)

    def __repr__(self) -> str:
        return f"PlaneForest({self.to_string()!r})"

    def to_string(self) -> str:
        def fmt(t):
            return "(" + "".join(fmt(c) for c in t) + ")"

        return "".join(fmt(t) for t in self.trees)

    @property
    def n_components(self) -> int:
        return len(self.trees)

    def ancestors(self, v: Vertex) -> Iterator[Vertex]:
        p = self.parent[v]
        while p is not None:
            yield p
            p = self.parent[p]

    def comparable_pairs(self) -> Iterator[tuple[Vertex, Vertex]]:
        """Pairs ``(x, y)`` with ``x`` a proper ancestor of ``y`` (``x >_F y``)."""
        for y in self.vertices:
            for x in self.ancestors(y):
                yield x, y

    def edges(self) -> Iterator[tuple[Vertex, Vertex]]:
        for v in self.vertices:
            p = self.parent[v]
            if p is not None:
                yield p, v

    def component(self, ti: int) -> "PlaneForest":
        return PlaneForest([self.trees[ti]])


def _freeze(tree) -> Tree:
    return tuple(_freeze(c) for c in tree)


def parse_forest(text: str) -> PlaneForest:
    """Parse the nested-parenthesis grammar.

    ``forest := tree*``, ``tree := "(" forest ")"``; whitespace is ignored.
    ``"(()())"`` is one root with two leaf children; ``"()()"`` is two
    isolated vertices.
    """
    src = [c for c in text if not c.isspace()]
    pos = 0

    def forest():
        nonlocal pos
        out = []
        while pos < len(src) and src[pos] == "(":
            pos += 1
            out.append(tuple(forest()))
            if pos >= len(src) or src[pos] != ")":
                raise ValueError(f"unbalanced forest string {text!r}")
            pos += 1
        return out

    trees = forest()
    if pos != len(src):
        raise ValueError(f"unexpected character {src[pos]!r} in forest string {text!r}")
    return PlaneForest(trees)


def build_F_n(n: int) -> PlaneForest:
    """``n`` two-vertex trees; tree ``i`` has root ``(i, 0)`` and child ``(i, 1)``."""
    if n < 1:
        raise ValueError("F_n needs n >= 1")
    return PlaneForest([((),)] * n)


def build_F_prime_n(n: int) -> PlaneForest:
    """``F_{n-1}`` followed by a single isolated vertex ``(n-1, 0)``."""
    if n < 1:
        raise ValueError("F'_n needs n >= 1")
    return PlaneForest([((),)] * (n - 1) + [()])


class LabelingType(Enum):
    """Signed labelings of the i-th two-vertex tree, as ``(root label, child label)``."""

    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3
    TYPE4 = 4

    def labels(self, i: int) -> tuple[int, int]:
        """Labels for the tree at 1-based position ``i``."""
        hi, lo = 2 * i, 2 * i - 1
        return {
            LabelingType.TYPE1: (hi, lo),
            LabelingType.TYPE2: (hi, -lo),
            LabelingType.TYPE3: (-hi, lo),
            LabelingType.TYPE4: (-lo, -hi),
        }[self]


def type_labeling(types: Sequence[LabelingType], singleton: int | None = None) -> dict[Vertex, int]:
    """Labeling of ``F_k`` (``k = len(types)``) with an optional trailing singleton label."""
    w: dict[Vertex, int] = {}
    for ti, typ in enumerate(types):
        root, child = typ.labels(ti + 1)
        w[(ti, 0)] = root
        w[(ti, 1)] = child
    if singleton is not None:
        w[(len(types), 0)] = singleton
    return w


def labelings(family: str, n: int) -> Iterator[dict[Vertex, int]]:
    """Labelings in ``L_Fn``, ``L_Fprime`` or ``Lbar_Fprime`` for size ``n``.

    Type choices run through ``itertools.product`` (last tree fastest); for
    ``Lbar_Fprime`` the singleton's sign is the outer loop, ``+`` first.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    types = list(LabelingType)
    if family == "L_Fn":
        for combo in itertools.product(types, repeat=n):
            yield type_labeling(combo)
    elif family == "L_Fprime":
        for combo in itertools.product(types, repeat=n - 1):
            yield type_labeling(combo, -(2 * n - 1))
    elif family == "Lbar_Fprime":
        for sign in (1, -1):
            for combo in itertools.product(types, repeat=n - 1):
                yield type_labeling(combo, sign * (2 * n - 1))
    else:
        raise ValueError(f"unknown labeling family {family!r}")


def linear_extensions(forest: PlaneForest) -> Iterator[tuple[Vertex, ...]]:
    """Every ordering of the vertices with each vertex after all its descendants.

    Backtracking; at each step the available vertices are tried in preorder.
    """
    verts = forest.vertices
    pending = {v: len(forest.children[v]) for v in verts}
    parent = forest.parent
    out: list[Vertex] = []
    placed: set[Vertex] = set()
    total = len(verts)

    def rec():
        if len(out) == total:
            yield tuple(out)
            return
        for v in verts:
            if v in placed or pending[v]:
                continue
            placed.add(v)
            out.append(v)
            p = parent[v]
            if p is not None:
                pending[p] -= 1
            yield from rec()
            if p is not None:
                pending[p] += 1
            out.pop()
            placed.discard(v)

    yield from rec()


def check_labeling(forest: PlaneForest, w: Mapping[Vertex, int]) -> None:
    missing = [v for v in forest.vertices if v not in w]
    if missing:
        raise ValueError(f"labeling misses vertices {missing}")
    labels = [w[v] for v in forest.vertices]
    if 0 in labels:
        raise ValueError("labels must be nonzero")
    if len({abs(a) for a in labels}) != len(labels):
        raise ValueError("label absolute values must be distinct")


def linear_extensions_labeled(forest: PlaneForest, w: Mapping[Vertex, int]) -> Iterator[SignedWord]:
    check_labeling(forest, w)
    for ext in linear_extensions(forest):
        yield tuple(w[v] for v in ext)


def phi(sigma: Sequence[int]) -> SignedWord:
    """Collapse labels ``2i-1`` and ``2i`` to ``i``, keeping signs."""
    m = len(sigma)
    if sorted(abs(a) for a in sigma) != list(range(1, m + 1)):
        raise ValueError("phi needs a signed word whose absolute values are exactly 1..m")
    return tuple((1 if a > 0 else -1) * ((abs(a) + 1) // 2) for a in sigma)


_FOREST_FAMILIES = {
    "F_n-with-L": (build_F_n, "L_Fn"),
    "F'_n-with-L'": (build_F_prime_n, "L_Fprime"),
    "F'_n-with-Lbar": (build_F_prime_n, "Lbar_Fprime"),
}


def forest_descent_polynomial(family: str, n: int) -> Polynomial:
    """Sum of ``x**des_B`` over labelings in the family and their labeled extensions.

    Families: ``"F_n-with-L"`` gives F_n(x), ``"F'_n-with-L'"`` gives F'_n(x),
    ``"F'_n-with-Lbar"`` gives G_n(x).
    """
    try:
        build, lab = _FOREST_FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown forest family {family!r}; expected one of {list(_FOREST_FAMILIES)}") from None
    forest = build(n)
    exts = list(linear_extensions(forest))
    table: Counter[int] = Counter()
    for w in labelings(lab, n):
        check_labeling(forest, w)
        for ext in exts:
            table[des_B([w[v] for v in ext])] += 1
    return Polynomial.from_counts(table)


# --- random instances (property tests, verification suites) ----------------


def random_forest(rng, max_vertices: int = 6, min_vertices: int = 1) -> PlaneForest:
    """Uniform-ish random plane forest: each new vertex attaches to a random
    earlier vertex or starts a new tree."""
    size = rng.randint(min_vertices, max_vertices)
    kids: list[list[int]] = []
    roots: list[int] = []
    for v in range(size):
        kids.append([])
        target = rng.randint(-1, v - 1)
        if target < 0:
            roots.append(v)
        else:
            kids[target].append(v)

    def build(v):
        return tuple(build(c) for c in kids[v])

    return PlaneForest([build(r) for r in roots])


def random_signed_labeling(rng, forest: PlaneForest) -> dict[Vertex, int]:
    """Labels ``1..|F|`` in random positions with independent random signs."""
    labels = list(range(1, len(forest) + 1))
    rng.shuffle(labels)
    return {v: a * rng.choice((1, -1)) for v, a in zip(forest.vertices, labels)}
