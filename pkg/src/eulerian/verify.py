"""Verification suites: each check yields one :class:`VerificationReport`.

Suites compare two independently computed sides exactly.  A failing report
always carries both sides in ``counterexample``.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import forest as fo
from . import ppartition as pp
from .genfunc import ClosedForm, Polynomial, expand_rational, f_count, is_real_rooted, \
    sturm_distinct_real_roots, verify_fcount_transform, verify_series_identity
from .inversion import DOUBLED, HALVED_IPRIME, NATURAL, PAPER_I, PAPER_IPRIME, ascent_polynomial
from .signedperm import des_alt, des_B, descent_polynomial, enumerate_signed_words, family_spec, \
    reverse_negate

SCHEMA = "1"
RANDOM_SEED = 20240501
RANDOM_FORESTS = 50
SERIES_DEGREE = 12

# Default upper bounds on n per suite; --n-max replaces the equidistribution
# bounds and caps the rest.
EQUIDISTRIBUTION_N = 4


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str
    counterexample: dict | None = None
    elapsed_ms: int = 0
    counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "schema": SCHEMA,
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "counterexample": self.counterexample,
            "counts": {k: str(v) for k, v in self.counts.items()},
        }
        if timing:
            d["elapsed_ms"] = self.elapsed_ms
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=False)


def coeff_strings(p: Polynomial | list[int]) -> list[str]:
    return [str(c) for c in (p.coeffs if isinstance(p, Polynomial) else p)]


def _check(identity: str, params: dict, fn: Callable[[], tuple[bool, dict | None, dict]]) -> VerificationReport:
    start = time.perf_counter()
    ok, counterexample, counts = fn()
    elapsed = int((time.perf_counter() - start) * 1000)
    if not ok and counterexample is None:
        counterexample = {"detail": "no counterexample recorded"}
    return VerificationReport(identity, params, "pass" if ok else "fail",
                              None if ok else counterexample, elapsed, counts)


def _poly_equal(lhs: Polynomial, rhs: Polynomial, lname: str, rname: str):
    ok = lhs == rhs
    cex = None if ok else {lname: coeff_strings(lhs), rname: coeff_strings(rhs)}
    return ok, cex, {lname: lhs(1), rname: rhs(1)}


def _seq_equal(lhs: list[int], rhs: list[int], lname: str, rname: str, counts: dict):
    for t, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return False, {"t": t, lname: str(a), rname: str(b)}, counts
    if len(lhs) != len(rhs):
        return False, {lname: coeff_strings(lhs), rname: coeff_strings(rhs)}, counts
    return True, None, counts


def _cap(default: int, n_max: int | None) -> int:
    return default if n_max is None else min(default, n_max)


def _random_corpus(count: int = RANDOM_FORESTS, max_vertices: int = 6, seed: int = RANDOM_SEED):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        f = fo.random_forest(rng, max_vertices)
        out.append((f, fo.random_signed_labeling(rng, f)))
    return out


# --- equidistribution suites ----------------------------------------------


def suite_conj327(n_max: int | None = None, jobs: int = 1, **_) -> Iterator[VerificationReport]:
    """``P_n(x) = I_{2n}(x)`` by enumerating both classes."""
    for n in range(1, (n_max or EQUIDISTRIBUTION_N) + 1):
        yield _check("P_n(x)=I_2n(x)", {"n": n}, lambda n=n: _poly_equal(
            descent_polynomial("P", n, jobs), ascent_polynomial(PAPER_I, 2 * n, jobs=jobs), "P_n", "I_2n"))


def suite_thm31(n_max: int | None = None, jobs: int = 1, **_) -> Iterator[VerificationReport]:
    """``V_n(x) = I_{2n-1}(x)``, plus the forest side ``F'_n(x) = V_n(x)``."""
    top = n_max or EQUIDISTRIBUTION_N
    for n in range(1, top + 1):
        yield _check("V_n(x)=I_2n-1(x)", {"n": n}, lambda n=n: _poly_equal(
            descent_polynomial("V", n, jobs), ascent_polynomial(PAPER_I, 2 * n - 1, jobs=jobs), "V_n", "I_2n-1"))
    for n in range(1, min(top, 3) + 1):
        yield _check("F'_n(x)=V_n(x)", {"n": n}, lambda n=n: _poly_equal(
            fo.forest_descent_polynomial("F'_n-with-L'", n), descent_polynomial("V", n), "F'_n", "V_n"))


def suite_thm33(n_max: int | None = None, jobs: int = 1, **_) -> Iterator[VerificationReport]:
    """``P_n(x) = I'_{2n}(x)``, ``U_n(x) = I'_{2n-1}(x)``, and ``G_n(x) = U_n(x)``."""
    top = n_max or EQUIDISTRIBUTION_N
    for n in range(1, top + 1):
        yield _check("P_n(x)=I'_2n(x)", {"n": n}, lambda n=n: _poly_equal(
            descent_polynomial("P", n, jobs), ascent_polynomial(PAPER_IPRIME, 2 * n, jobs=jobs), "P_n", "I'_2n"))
        yield _check("U_n(x)=I'_2n-1(x)", {"n": n}, lambda n=n: _poly_equal(
            descent_polynomial("U", n, jobs), ascent_polynomial(PAPER_IPRIME, 2 * n - 1, jobs=jobs),
            "U_n", "I'_2n-1"))
    for n in range(1, min(top, 3) + 1):
        yield _check("G_n(x)=U_n(x)", {"n": n}, lambda n=n: _poly_equal(
            fo.forest_descent_polynomial("F'_n-with-Lbar", n), descent_polynomial("U", n), "G_n", "U_n"))


def suite_typed(n_max: int | None = None, **_) -> Iterator[VerificationReport]:
    """Type D: the ``T_3`` constant and ``T_n(x) = 2 D_n(x)``."""
    yield _check("T_3(x)=2+22x+22x^2+2x^3", {"n": 3}, lambda: _poly_equal(
        ascent_polynomial(DOUBLED, 3, "ascD"), Polynomial([2, 22, 22, 2]), "T_3", "expected"))
    for n in range(1, _cap(5, n_max) + 1):
        yield _check("T_n(x)=2D_n(x)", {"n": n}, lambda n=n: _poly_equal(
            ascent_polynomial(DOUBLED, n, "ascD"), descent_polynomial("D", n).scale(2), "T_n", "2D_n"))


def suite_conventions(n_max: int | None = None, **_) -> Iterator[VerificationReport]:
    """``des_alt(s) = des_B(reverse_negate(s))`` over whole classes."""
    for family in ("P", "U"):
        for n in range(1, _cap(3, n_max) + 1):
            def run(family=family, n=n):
                count = 0
                for s in enumerate_signed_words(family_spec(family, n)):
                    count += 1
                    r = reverse_negate(s)
                    if des_alt(s) != des_B(r) or reverse_negate(r) != s:
                        return False, {"word": list(s), "des_alt": des_alt(s), "des_B(rev_neg)": des_B(r)}, \
                            {"words": count}
                return True, None, {"words": count}

            yield _check("des_alt=des_B(reverse_negate)", {"class": family, "n": n}, run)


# --- P-partition suite -------------------------------------------------------


_PATTERN_CACHE: dict[tuple, tuple[int, ...]] = {}


def omega_sigma_series(sigma, T: int) -> list[int]:
    """``[Omega_sigma(0), ..., Omega_sigma(T)]`` by enumerating compatible maps once.

    Maps with ``g_1 <= T`` are bucketed by ``g_1`` and accumulated.  The
    enumeration only reads the descent pattern of ``sigma`` and the sign of
    its last letter, so results are cached on that pattern.
    """
    key = (tuple(a > b for a, b in zip(sigma, sigma[1:])), sigma[-1] > 0, T)
    hit = _PATTERN_CACHE.get(key)
    if hit is None:
        by_first = [0] * (T + 1)
        for g in pp.compatible_maps(tuple(sigma), T):
            by_first[g[0]] += 1
        out, acc = [], 0
        for c in by_first:
            acc += c
            out.append(acc)
        hit = _PATTERN_CACHE[key] = tuple(out)
    return list(hit)


def _ppp_check(words, T: int):
    seen = 0
    for s in set(words):
        seen += 1
        lhs = omega_sigma_series(s, T)
        rhs = expand_rational(Polynomial.monomial(des_B(s)), len(s) + 1, T)
        if lhs != rhs:
            return False, {"word": list(s), "enumerated": coeff_strings(lhs), "series": coeff_strings(rhs)}, \
                {"words": seen}
    return True, None, {"words": seen}


def _thm24_check(pairs, T: int, words_out: list):
    checked = 0
    for forest, w in pairs:
        words = list(fo.linear_extensions_labeled(forest, w))
        words_out.extend(words)
        numer = Polynomial.from_counts(_counter(des_B(s) for s in words))
        lhs = expand_rational(numer, len(forest) + 1, T)
        rhs = [pp.omega(forest, w, t) for t in range(T + 1)]
        checked += 1
        if lhs != rhs:
            return False, {"forest": forest.to_string(), "labeling": _lab(forest, w),
                           "descent_series": coeff_strings(lhs), "omega": coeff_strings(rhs)}, {"labelings": checked}
    return True, None, {"labelings": checked}


def _counter(it):
    from collections import Counter

    return Counter(it)


def _lab(forest, w):
    return [w[v] for v in forest.vertices]


def _phi_check(n: int):
    forest = fo.build_F_n(n)
    images = set()
    count = 0
    for w in fo.labelings("L_Fn", n):
        for s in fo.linear_extensions_labeled(forest, w):
            count += 1
            tau = fo.phi(s)
            if des_B(tau) != des_B(s):
                return False, {"sigma": list(s), "phi": list(tau), "des_sigma": des_B(s), "des_phi": des_B(tau)}, {}
            if tau in images:
                return False, {"duplicate_image": list(tau)}, {}
            images.add(tau)
    target = set(enumerate_signed_words(family_spec("P", n)))
    ok = images == target
    cex = None if ok else {"missing": len(target - images), "extra": len(images - target)}
    return ok, cex, {"extensions": count, "P_n": len(target)}


def _decomposition_check(pairs, t: int):
    """Every valid f arises from exactly one (sigma, compatible g), and decompose finds it."""
    total = 0
    for forest, w in pairs:
        seen = {}
        for ext in fo.linear_extensions(forest):
            word = tuple(w[v] for v in ext)
            for g in pp.compatible_maps(word, t):
                f = dict(zip(ext, g))
                key = tuple(f[v] for v in forest.vertices)
                if not pp.is_partition(forest, w, f):
                    return False, {"forest": forest.to_string(), "labeling": _lab(forest, w), "f": list(key),
                                   "reason": "compatible map is not a partition"}, {}
                if key in seen:
                    return False, {"forest": forest.to_string(), "labeling": _lab(forest, w), "f": list(key),
                                   "reason": "f lies in two compatible classes",
                                   "words": [list(seen[key]), list(word)]}, {}
                seen[key] = word
                if pp.decompose(forest, w, f) != word:
                    return False, {"forest": forest.to_string(), "labeling": _lab(forest, w), "f": list(key),
                                   "reason": "decompose disagrees", "expected": list(word)}, {}
        expected = pp.omega_bruteforce(forest, w, t)
        total += len(seen)
        if len(seen) != expected:
            return False, {"forest": forest.to_string(), "labeling": _lab(forest, w),
                           "covered": len(seen), "partitions": expected}, {}
    return True, None, {"partitions": total, "labelings": len(pairs)}


def _omega_formulas(t_max: int):
    tree = fo.build_F_n(1)
    single = fo.PlaneForest([()])
    for t in range(t_max + 1):
        vals = [pp.omega(tree, fo.type_labeling([typ]), t) for typ in fo.LabelingType]
        expected = [t * (t + 1) // 2] * 3 + [(t + 1) * (t + 2) // 2]
        if vals != expected or sum(vals) != (t + 1) * (2 * t + 1):
            return False, {"t": t, "omega_types_1_to_4": vals, "expected": expected}, {}
        neg, pos = pp.omega(single, {(0, 0): -1}, t), pp.omega(single, {(0, 0): 1}, t)
        if (neg, pos) != (t + 1, t):
            return False, {"t": t, "singleton_neg": neg, "singleton_pos": pos}, {}
    return True, None, {"t_values": t_max + 1}


def _oracle_check(pairs, t_max: int):
    for forest, w in pairs:
        for t in range(t_max + 1):
            a, b = pp.omega(forest, w, t), pp.omega_bruteforce(forest, w, t)
            if a != b:
                return False, {"forest": forest.to_string(), "labeling": _lab(forest, w), "t": t,
                               "omega": a, "bruteforce": b}, {}
    return True, None, {"labelings": len(pairs)}


def _family_pairs(n_top: int):
    pairs = []
    for n in range(1, n_top + 1):
        F = fo.build_F_n(n)
        pairs += [(F, w) for w in fo.labelings("L_Fn", n)]
        Fp = fo.build_F_prime_n(n)
        pairs += [(Fp, w) for w in fo.labelings("Lbar_Fprime", n)]
    return pairs


def suite_ppartition(n_max: int | None = None, T: int | None = None, **_) -> Iterator[VerificationReport]:
    """phi, forest polynomials, the Omega series relation, decomposition, Omega formulas."""
    T = SERIES_DEGREE if T is None else T
    top = _cap(3, n_max)
    for n in range(1, top + 1):
        yield _check("phi bijective and des_B-preserving", {"n": n}, lambda n=n: _phi_check(n))
        yield _check("F_n(x)=P_n(x)", {"n": n}, lambda n=n: _poly_equal(
            fo.forest_descent_polynomial("F_n-with-L", n), descent_polynomial("P", n), "F_n", "P_n"))
    words: list = []
    for n in range(1, top + 1):
        F = fo.build_F_n(n)
        yield _check("descent series = Omega series [L(F_n)]", {"n": n, "T": T},
                     lambda F=F, n=n: _thm24_check([(F, w) for w in fo.labelings("L_Fn", n)], T, words))
    corpus = _random_corpus()
    yield _check("descent series = Omega series [random forests]",
                 {"forests": len(corpus), "max_vertices": 6, "seed": RANDOM_SEED, "T": T},
                 lambda: _thm24_check(corpus, T, words))
    yield _check("Omega_sigma series = x^des/(1-x)^(n+1)", {"T": T}, lambda: _ppp_check(words, T))

    small = [(fo.build_F_n(n), w) for n in range(1, _cap(2, n_max) + 1) for w in fo.labelings("L_Fn", n)]
    yield _check("decomposition into compatible maps [L(F_n)]", {"n_max": _cap(2, n_max), "t": 4},
                 lambda: _decomposition_check(small, 4))
    yield _check("decomposition into compatible maps [random forests]",
                 {"forests": len(corpus), "max_vertices": 6, "seed": RANDOM_SEED, "t": 4},
                 lambda: _decomposition_check(corpus, 4))
    yield _check("Omega two-vertex and singleton formulas", {"t_max": 10}, lambda: _omega_formulas(10))
    oracle = _family_pairs(_cap(2, n_max)) + corpus
    yield _check("omega = omega_bruteforce", {"labelings": len(oracle), "t_max": 4},
                 lambda: _oracle_check(oracle, 4))


# --- series suite ------------------------------------------------------------


def _series(identity, n, numer_fn, m, form, T):
    def run():
        numer = numer_fn()
        ok, bad = verify_series_identity(numer, m, form, T)
        counts = {"numerator_at_1": numer(1)}
        if ok:
            return True, None, counts
        series = expand_rational(numer, m, bad)
        return False, {"t": bad, "series": str(series[bad]), "closed_form": str(form.int_value(bad))}, counts

    return _check(identity, {"n": n, "m": m, "form": str(form)}, run)


def _omega_sum(family: str, n: int, form: ClosedForm, T: int):
    forest = fo.build_F_n(n) if family == "L_Fn" else fo.build_F_prime_n(n)
    labs = list(fo.labelings(family, n))
    lhs = [sum(pp.omega(forest, w, t) for w in labs) for t in range(T + 1)]
    rhs = [form.int_value(t) for t in range(T + 1)]
    return _seq_equal(lhs, rhs, "omega_sum", "closed_form", {"labelings": len(labs)})


def _ceil_half(n):
    return (n + 1) // 2


def suite_series(n_max: int | None = None, T: int | None = None, jobs: int = 1, **_) -> Iterator[VerificationReport]:
    """Closed-form series identities and the lattice-point counts ``f_n(t)``."""
    for n in range(1, _cap(8, n_max) + 1):
        yield _series("I_n(x)/(1-x)^(n+1)", n, lambda n=n: ascent_polynomial(PAPER_I, n, jobs=jobs), n + 1,
                      ClosedForm(_ceil_half(n), n // 2), T)
    for n in range(1, _cap(8, n_max) + 1):
        yield _series("I'_n(x)/(1-x)^(n+1)", n, lambda n=n: ascent_polynomial(PAPER_IPRIME, n, jobs=jobs), n + 1,
                      ClosedForm(n // 2, _ceil_half(n)), T)
    top = _cap(4, n_max)
    for n in range(1, top + 1):
        both = ClosedForm(n, n)
        yield _series("F_n(x)/(1-x)^(2n+1)", n, lambda n=n: fo.forest_descent_polynomial("F_n-with-L", n),
                      2 * n + 1, both, T)
        yield _series("I_2n(x)/(1-x)^(2n+1)", n, lambda n=n: ascent_polynomial(PAPER_I, 2 * n, jobs=jobs),
                      2 * n + 1, both, T)
        yield _check("sum over L(F_n) of Omega", {"n": n, "form": str(both)},
                     lambda n=n, both=both: _omega_sum("L_Fn", n, both, T or 4 * n + 6))
        v_form = ClosedForm(n, n - 1)
        yield _series("V_n(x)/(1-x)^(2n)", n, lambda n=n: descent_polynomial("V", n, jobs), 2 * n, v_form, T)
        yield _series("F'_n(x)/(1-x)^(2n)", n, lambda n=n: fo.forest_descent_polynomial("F'_n-with-L'", n),
                      2 * n, v_form, T)
        yield _check("sum over L(F'_n) of Omega", {"n": n, "form": str(v_form)},
                     lambda n=n, f=v_form: _omega_sum("L_Fprime", n, f, T or 4 * n + 4))
        u_form = ClosedForm(n - 1, n)
        yield _series("U_n(x)/(1-x)^(2n)", n, lambda n=n: descent_polynomial("U", n, jobs), 2 * n, u_form, T)
        yield _series("G_n(x)/(1-x)^(2n)", n, lambda n=n: fo.forest_descent_polynomial("F'_n-with-Lbar", n),
                      2 * n, u_form, T)
        yield _check("sum over Lbar(F'_n) of Omega", {"n": n, "form": str(u_form)},
                     lambda n=n, f=u_form: _omega_sum("Lbar_Fprime", n, f, T or 4 * n + 4))

    for n in range(1, _cap(5, n_max) + 1):
        half_form = ClosedForm(a=_ceil_half(n), c=n // 2)
        full_form = ClosedForm(a=n // 2, b=_ceil_half(n))

        def run_bn2(n=n, half_form=half_form, full_form=full_form):
            for t in range(6):
                h = f_count(HALVED_IPRIME, n, t)
                if h != half_form.int_value(t):
                    return False, {"t": t, "f_count(s')": str(h), "closed_form": str(half_form.int_value(t))}, {}
                full, doubled = f_count(PAPER_IPRIME, n, t), f_count(HALVED_IPRIME, n, 2 * t)
                if not full == doubled == full_form.int_value(t):
                    return False, {"t": t, "f_count(s,t)": str(full), "f_count(s',2t)": str(doubled),
                                   "closed_form": str(full_form.int_value(t))}, {}
            return True, None, {"t_values": 6}

        yield _check("f_n^(s')(t) closed form and f_n^(s)(t)=f_n^(s')(2t)", {"n": n, "t_max": 5}, run_bn2)
    for rule in (NATURAL, PAPER_I, PAPER_IPRIME):
        for n in range(1, _cap(5, n_max) + 1):
            yield _check("sum_t f_n(t) x^t = asc polynomial/(1-x)^(n+1)", {"rule": str(rule), "n": n, "T": 8},
                         lambda rule=rule, n=n: (verify_fcount_transform(rule, n, 8), None, {}))


# --- real roots ----------------------------------------------------------------


def suite_realroots(n_max: int | None = None, jobs: int = 1, **_) -> Iterator[VerificationReport]:
    """Sturm-based real-rootedness of every family polynomial at desk scale."""
    fams: list[tuple[str, int, Callable[[int], Polynomial]]] = [
        ("I", 6, lambda n: ascent_polynomial(PAPER_I, n, jobs=jobs)),
        ("Iprime", 6, lambda n: ascent_polynomial(PAPER_IPRIME, n, jobs=jobs)),
        ("T", 6, lambda n: ascent_polynomial(DOUBLED, n, "ascD")),
        ("D", 6, lambda n: descent_polynomial("D", n)),
        ("P", 4, lambda n: descent_polynomial("P", n, jobs)),
        ("U", 4, lambda n: descent_polynomial("U", n, jobs)),
        ("V", 4, lambda n: descent_polynomial("V", n, jobs)),
    ]
    for name, top, build in fams:
        for n in range(1, _cap(top, n_max) + 1):
            def run(build=build, n=n):
                p = build(n)
                ok = is_real_rooted(p)
                cex = None if ok else {"coeffs": coeff_strings(p), "distinct_real_roots": sturm_distinct_real_roots(p),
                                       "degree": p.degree}
                return ok, cex, {"degree": p.degree}

            yield _check("real-rooted", {"family": name, "n": n}, run)


SUITES: dict[str, Callable[..., Iterator[VerificationReport]]] = {
    "conj327": suite_conj327,
    "thm31": suite_thm31,
    "thm33": suite_thm33,
    "typed": suite_typed,
    "conventions": suite_conventions,
    "ppartition": suite_ppartition,
    "series": suite_series,
    "realroots": suite_realroots,
}


def run_suite(name: str, n_max: int | None = None, T: int | None = None, jobs: int = 1) -> Iterator[VerificationReport]:
    names = list(SUITES) if name == "all" else [name]
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}")
        yield from SUITES[suite](n_max=n_max, T=T, jobs=jobs)
