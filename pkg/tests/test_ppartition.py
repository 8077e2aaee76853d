import itertools
import random
from collections import Counter
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerian.forest import (
    LabelingType,
    PlaneForest,
    build_F_n,
    build_F_prime_n,
    labelings,
    linear_extensions,
    linear_extensions_labeled,
    random_forest,
    random_signed_labeling,
    type_labeling,
)
from eulerian.genfunc import Polynomial, expand_rational
from eulerian.ppartition import (
    compatible_extensions,
    compatible_maps,
    d_statistic,
    decompose,
    is_compatible,
    is_partition,
    is_partition_edges,
    omega,
    omega_bruteforce,
    omega_sigma,
    omega_sigma_closed,
    shifted_partition,
)
from eulerian.signedperm import des_B

F1 = build_F_n(1)
U, V = (0, 0), (0, 1)


def lab(typ):
    return type_labeling([LabelingType(typ)])


def random_corpus(count, seed, max_vertices=6):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        f = random_forest(rng, max_vertices)
        out.append((f, random_signed_labeling(rng, f)))
    return out


def test_is_partition_examples():
    assert is_partition(F1, lab(1), {U: 1, V: 1})
    assert not is_partition(F1, lab(3), {U: 1, V: 1})
    assert is_partition(F1, lab(4), {U: 0, V: 0})
    assert not is_partition(F1, lab(1), {U: 0, V: 0})
    assert not is_partition(F1, lab(4), {U: 2, V: 1})


def test_omega_bruteforce_examples():
    assert omega_bruteforce(F1, lab(4), 1) == 3
    assert omega_bruteforce(F1, lab(1), 2) == 3
    assert omega_bruteforce(F1, lab(1), 0) == 0


def test_omega_examples():
    for t in range(11):
        vals = [omega(F1, lab(j), t) for j in (1, 2, 3, 4)]
        assert vals[:3] == [comb(t + 1, 2)] * 3
        assert vals[3] == comb(t + 2, 2)
        assert sum(vals) == (t + 1) * (2 * t + 1)
    assert sum(omega(F1, lab(j), 2) for j in (1, 2, 3, 4)) == 15
    single = PlaneForest([()])
    assert omega(single, {(0, 0): -3}, 3) == 4
    assert omega(single, {(0, 0): 3}, 3) == 3


def test_omega_oracle_equivalence():
    for f, w in random_corpus(200, seed=11):
        for t in range(5):
            assert omega(f, w, t) == omega_bruteforce(f, w, t), (f, w, t)


def test_omega_oracle_on_families():
    for n in (1, 2):
        for fam, forest in (("L_Fn", build_F_n(n)), ("L_Fprime", build_F_prime_n(n)),
                            ("Lbar_Fprime", build_F_prime_n(n))):
            for w in labelings(fam, n):
                for t in range(5):
                    assert omega(forest, w, t) == omega_bruteforce(forest, w, t)


def test_product_law():
    for n in (1, 2, 3):
        forest = build_F_n(n)
        for w in labelings("L_Fn", n):
            for t in range(4):
                parts = 1
                for ti in range(n):
                    comp = forest.component(ti)
                    parts *= omega(comp, {(0, k): w[(ti, k)] for k in range(2)}, t)
                assert omega(forest, w, t) == parts


def test_edge_check_equivalence():
    rng = random.Random(5)
    for f, w in random_corpus(60, seed=5):
        for _ in range(40):
            fmap = {v: rng.randint(0, 3) for v in f.vertices}
            assert is_partition(f, w, fmap) == is_partition_edges(f, w, fmap)


# --- compatible maps --------------------------------------------------------


def test_omega_sigma_examples():
    assert omega_sigma((1, 2), 2) == 3 == omega_sigma_closed((1, 2), 2)
    assert omega_sigma((-2, -1), 1) == 3 == omega_sigma_closed((-2, -1), 1)
    sigma = (3, -1, 2, -4)
    for t in range(des_B(sigma)):
        assert omega_sigma(sigma, t) == 0 == omega_sigma_closed(sigma, t)
    with pytest.raises(ValueError):
        omega_sigma((1, 1), 2)


distinct_words = st.permutations(range(1, 7)).flatmap(
    lambda p: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n).map(
            lambda signs: tuple(a * s for a, s in zip(p[:n], signs)))))


@given(distinct_words, st.integers(0, 6))
def test_omega_sigma_enumeration_vs_closed_form(sigma, t):
    assert omega_sigma(sigma, t) == omega_sigma_closed(sigma, t)
    maps = list(compatible_maps(sigma, t))
    assert len(maps) == omega_sigma(sigma, t)
    assert all(is_compatible(sigma, g) for g in maps)


@given(distinct_words)
def test_series_of_omega_sigma(sigma):
    T = 12
    lhs = [omega_sigma(sigma, t) for t in range(T + 1)]
    assert lhs == expand_rational(Polynomial.monomial(des_B(sigma)), len(sigma) + 1, T)


@given(distinct_words, st.integers(0, 5))
def test_shift_gives_partitions(sigma, t):
    d = des_B(sigma)
    seen = set()
    for g in compatible_maps(sigma, t):
        lam = shifted_partition(sigma, g)
        assert all(a >= b for a, b in zip(lam, lam[1:]))
        assert lam[-1] >= 0
        assert lam[0] <= t - d
        seen.add(lam)
    assert len(seen) == omega_sigma(sigma, t)


def test_d_statistic_examples():
    assert d_statistic((1, 2), 1) == 1
    assert d_statistic((1, 2), 2) == 1
    assert all(d_statistic((-4, -3, -1), i) == 0 for i in (1, 2, 3))
    assert d_statistic((2, -1, 1, -2), 2) == 1
    with pytest.raises(IndexError):
        d_statistic((1, 2), 3)


def test_is_compatible():
    assert is_compatible((1, 2), (2, 1))
    assert not is_compatible((1, 2), (1, 0))
    assert not is_compatible((2, 1), (1, 1))
    assert not is_compatible((1, 2), (1, 2))


# --- decomposition ---------------------------------------------------------


def test_decompose_examples():
    assert decompose(F1, lab(1), {U: 1, V: 2}) == (1, 2)
    single = PlaneForest([()])
    assert decompose(single, {(0, 0): -5}, {(0, 0): 0}) == (-5,)
    f2 = build_F_n(2)
    w = type_labeling([LabelingType.TYPE4, LabelingType.TYPE4])
    fmap = {v: 1 for v in f2.vertices}
    assert is_partition(f2, w, fmap)
    (only,) = compatible_extensions(f2, w, fmap)
    assert decompose(f2, w, fmap) == only


def all_partitions(forest, w, t):
    for values in itertools.product(range(t + 1), repeat=len(forest)):
        fmap = dict(zip(forest.vertices, values))
        if is_partition(forest, w, fmap):
            yield fmap


@pytest.mark.parametrize("n", [1, 2])
def test_decomposition_exhaustive_on_F_n(n):
    forest = build_F_n(n)
    for w in labelings("L_Fn", n):
        for fmap in all_partitions(forest, w, 4):
            found = compatible_extensions(forest, w, fmap)
            assert len(found) == 1
            assert decompose(forest, w, fmap) == found[0]


def test_decomposition_random_forests():
    for f, w in random_corpus(30, seed=23, max_vertices=5):
        for fmap in all_partitions(f, w, 3):
            found = compatible_extensions(f, w, fmap)
            assert found == [decompose(f, w, fmap)]


def test_decomposition_sum_law():
    for f, w in random_corpus(50, seed=31):
        words = list(linear_extensions_labeled(f, w))
        for t in range(5):
            assert sum(omega_sigma(s, t) for s in words) == omega(f, w, t)


# --- series relation --------------------------------------------------------


def descent_numerator(forest, w):
    return Polynomial.from_counts(Counter(des_B(s) for s in linear_extensions_labeled(forest, w)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_series_relation_on_F_n(n):
    forest = build_F_n(n)
    for w in labelings("L_Fn", n):
        lhs = expand_rational(descent_numerator(forest, w), 2 * n + 1, 12)
        assert lhs == [omega(forest, w, t) for t in range(13)]


def test_series_relation_random():
    for f, w in random_corpus(50, seed=41):
        lhs = expand_rational(descent_numerator(f, w), len(f) + 1, 12)
        assert lhs == [omega(f, w, t) for t in range(13)]


def test_extension_order_respected_by_decompose():
    for f, w in random_corpus(20, seed=2):
        exts = {tuple(w[v] for v in e) for e in linear_extensions(f)}
        for fmap in all_partitions(f, w, 2):
            assert decompose(f, w, fmap) in exts
