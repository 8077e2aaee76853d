from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerian.genfunc import (
    ClosedForm,
    Polynomial,
    expand_rational,
    f_count,
    is_real_rooted,
    poly_add,
    poly_eval,
    poly_mul,
    square_free_part,
    sturm_distinct_real_roots,
    verify_fcount_transform,
    verify_series_identity,
)
from eulerian.inversion import HALVED_IPRIME, NATURAL, PAPER_I, PAPER_IPRIME, SRule, terms

polys = st.lists(st.integers(-20, 20), max_size=6).map(Polynomial)


def test_canonical_form():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).coeffs == ()
    assert Polynomial().degree == -1
    assert Polynomial([5]).degree == 0


def test_examples():
    assert poly_mul(Polynomial([1, 3]), Polynomial([1])) == Polynomial([1, 3])
    assert poly_eval(Polynomial([2, 22, 22, 2]), 1) == 48
    assert poly_mul(Polynomial([1, 1]), Polynomial([1, -1])) == Polynomial([1, 0, -1])
    assert poly_add(Polynomial([1, 2]), Polynomial([-1, -2])).is_zero()


def test_eval_exact_rational():
    p = Polynomial([1, 31, 55, 9])
    assert poly_eval(p, Fraction(1, 3)) == 1 + Fraction(31, 3) + Fraction(55, 9) + Fraction(9, 27)


def test_str():
    assert str(Polynomial([1, -3, 0, 1])) == "1 - 3x + x^3"
    assert str(Polynomial([0, -1])) == "-x"
    assert str(Polynomial()) == "0"


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert (p - p).is_zero()


@given(polys, st.integers(-5, 5))
def test_eval_is_homomorphism(p, v):
    q = Polynomial([3, -1, 2])
    assert (p * q)(v) == p(v) * q(v)


# --- expansion -------------------------------------------------------------


def test_expand_rational_examples():
    assert expand_rational(Polynomial([1]), 3, 3) == [1, 3, 6, 10]
    assert expand_rational(Polynomial([1, 3]), 3, 2) == [1, 6, 15]
    assert expand_rational(Polynomial([0, 1]), 2, 2) == [0, 1, 2]


@given(polys, st.integers(1, 6), st.integers(0, 15))
def test_expand_rational_inverts(p, m, T):
    """Multiplying the expansion by (1-x)^m gives the numerator back through degree T."""
    series = Polynomial(expand_rational(p, m, T))
    back = series * Polynomial([1, -1]) ** m
    assert [back[k] for k in range(T + 1)] == [p[k] for k in range(T + 1)]


def test_closed_form_values():
    assert ClosedForm(1, 1).value(2) == 15
    assert ClosedForm(a=1, c=1).value(1) == 3
    assert ClosedForm(a=1, c=1, scale=2).value(1) == 6
    with pytest.raises(ArithmeticError):
        ClosedForm(c=1).int_value(1)
    with pytest.raises(ValueError):
        ClosedForm(scale=3)


def test_verify_series_identity_examples():
    assert verify_series_identity(Polynomial([1, 3]), 3, ClosedForm(1, 1)) == (True, None)
    assert verify_series_identity(Polynomial([1, 31, 55, 9]), 5, ClosedForm(2, 2)) == (True, None)
    assert verify_series_identity(Polynomial([1, 3]), 3, ClosedForm(a=2)) == (False, 1)


# --- lattice counts ---------------------------------------------------------


def f_count_oracle(rule, n, t):
    """Plain product enumeration with Fraction comparisons."""
    import itertools

    s = terms(rule, n)
    count = 0
    for lam in itertools.product(*(range(t * si + 1) for si in s)):
        ratios = [Fraction(0)] + [Fraction(l, si) for l, si in zip(lam, s)] + [Fraction(t)]
        if all(a <= b for a, b in zip(ratios, ratios[1:])):
            count += 1
    return count


@pytest.mark.parametrize("rule", [NATURAL, PAPER_I, PAPER_IPRIME, HALVED_IPRIME, SRule.explicit([3, 1, 2])])
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_f_count_against_oracle(rule, n):
    for t in range(3):
        assert f_count(rule, n, t) == f_count_oracle(rule, n, t)


def test_f_count_examples():
    assert f_count(HALVED_IPRIME, 2, 1) == 3
    assert f_count(NATURAL, 0, 7) == 1
    assert f_count(PAPER_IPRIME, 2, 1) == 6


@pytest.mark.parametrize("rule,n", [(PAPER_IPRIME, 2), (NATURAL, 3), (SRule.explicit([1]), 1)])
def test_fcount_transform_examples(rule, n):
    T = 4 if rule.kind == "explicit" else 6
    assert verify_fcount_transform(rule, n, T)


# --- Sturm ------------------------------------------------------------------


def test_sturm_examples():
    assert sturm_distinct_real_roots(Polynomial([-2, 0, 1])) == 2
    assert sturm_distinct_real_roots(Polynomial([1, 0, 1])) == 0
    assert not is_real_rooted(Polynomial([1, 0, 1]))
    assert is_real_rooted(Polynomial([1, 31, 55, 9]))


def test_sturm_rejects_zero():
    with pytest.raises(ValueError):
        sturm_distinct_real_roots(Polynomial())
    with pytest.raises(ValueError):
        is_real_rooted(Polynomial())


def test_repeated_roots():
    p = Polynomial([-1, 1]) ** 3 * Polynomial([2, 1]) ** 2
    assert sturm_distinct_real_roots(p) == 2
    assert square_free_part(p).degree == 2
    assert is_real_rooted(p)
    assert not is_real_rooted(p * Polynomial([1, 0, 1]) ** 2)


def test_constants_are_real_rooted():
    assert is_real_rooted(Polynomial([2]))
    assert sturm_distinct_real_roots(Polynomial([-7])) == 0


nonzero_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=7).map(Polynomial).filter(lambda p: not p.is_zero())


@settings(max_examples=150)
@given(nonzero_polys)
def test_sturm_matches_sympy(p):
    x = sympy.Symbol("x")
    expr = sum(c * x**k for k, c in enumerate(p.coeffs))
    poly = sympy.Poly(expr, x)
    distinct = len(set(sympy.real_roots(poly))) if p.degree > 0 else 0
    assert sturm_distinct_real_roots(p) == distinct
    total_real = len(sympy.real_roots(poly)) if p.degree > 0 else 0
    assert is_real_rooted(p) == (total_real == p.degree)


@given(nonzero_polys, st.integers(1, 50))
def test_sturm_scale_invariant(p, c):
    assert sturm_distinct_real_roots(p.scale(c)) == sturm_distinct_real_roots(p)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5))
def test_products_of_linear_factors_are_real_rooted(roots):
    p = Polynomial([3])
    for r in roots:
        p = p * Polynomial([-r, 1])
    assert is_real_rooted(p)
    assert sturm_distinct_real_roots(p) == len(set(roots))


def test_binomial_series_sanity():
    # x^d/(1-x)^(n+1) has coefficient C(n+t-d, n)
    for n in range(1, 5):
        for d in range(n + 1):
            series = expand_rational(Polynomial.monomial(d), n + 1, 10)
            assert series == [comb(n + t - d, n) if t >= d else 0 for t in range(11)]
