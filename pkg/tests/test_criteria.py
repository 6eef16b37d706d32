from fractions import Fraction
from math import log

import mpmath
import pytest
from hypothesis import given, strategies as st

from northcott.criteria import (
    BZData,
    TowerSpec,
    TowerStep,
    bz_partial_sum,
    gamma_lower_bound,
    radical_tower_check,
    silverman_bound,
    tame_exponent_check,
    tower_terms,
    verify_silverman,
)
from northcott.errors import InvalidInput, NotPrime
from northcott.numfield import find_embeddings, nf_create, rel_disc_norm

TOL = Fraction(1, 2**40)


def close(iv, value, tol=1e-9):
    return abs(float(iv.midpoint) - value) < tol and iv.lo <= Fraction(value) + Fraction(tol) and iv.hi >= Fraction(value) - Fraction(tol)


@pytest.mark.parametrize(
    "N, d, form, value",
    [(5, 2, "simplified", 0.5 * 5 ** (1 / 8)), (1, 2, "simplified", 0.5), (5, 2, "sharp", 2**-0.5 * 5**0.25), (108, 3, "simplified", 0.5 * 108 ** (1 / 18))],
)
def test_silverman_bound_values(N, d, form, value):
    assert close(silverman_bound(N, 1, d, form, TOL), value)


def test_silverman_trivial_bound_exact():
    b = silverman_bound(1, 1, 2, "simplified")
    assert b.is_exact and b.lo == Fraction(1, 2)


def test_silverman_sharp_needs_d2():
    with pytest.raises(InvalidInput):
        silverman_bound(5, 1, 1, "sharp")
    with pytest.raises(InvalidInput):
        silverman_bound(0, 1, 2, "simplified")


@given(st.integers(1, 10**6), st.integers(1, 3), st.integers(2, 8))
def test_sharp_dominates_simplified(N, m, d):
    assert silverman_bound(N, m, d, "sharp").lo >= silverman_bound(N, m, d, "simplified").hi


@given(st.integers(1, 10**5), st.integers(1, 10**5), st.integers(1, 3), st.integers(1, 6))
def test_bound_monotone_in_N(N1, N2, m, d):
    lo, hi = sorted((N1, N2))
    a, b = silverman_bound(lo, m, d), silverman_bound(hi, m, d)
    assert a.lo <= b.hi


@given(st.integers(1, 10**5), st.integers(1, 3), st.integers(1, 6))
def test_bound_nonincreasing_in_d(N, m, d):
    assert silverman_bound(N, m, d + 1).lo <= silverman_bound(N, m, d).hi


@pytest.mark.parametrize("poly, N", [("x^2-5", 5), ("x^3-2", 108), ("x^2+1", 4), ("x^2-x-1", 5), ("3x^2-2", 24)])
def test_verify_silverman_examples(poly, N):
    rep = verify_silverman(poly)
    assert rep.verdict == "verified"
    assert rep.N == N and rep.m == 1
    assert rep.height.lo >= rep.bound_simplified.hi
    assert rep.height.lo >= rep.bound_sharp.hi


def test_verify_silverman_over_quadratic_base():
    # alpha = zeta_8 over F = Q(i): K = Q(zeta_8), d = 2, N = 16
    rep = verify_silverman("x^4+1", nf_create("x^2+1"))
    assert rep.verdict == "verified"
    assert rep.m == 2 and {c.d for c in rep.cases} == {2}
    assert all(c.N == 16 for c in rep.cases)


def test_gamma_examples():
    Q = nf_create("x-1")
    est = gamma_lower_bound(nf_create("x^2-5"), Q, [Q], rel_tol=TOL)
    assert close(est.best, 5**0.25)
    M = nf_create("x^4+1")
    est = gamma_lower_bound(M, Q, [Q, nf_create("x^2+1")], rel_tol=TOL)
    assert close(est.best, 2**0.5)
    assert all(close(e.value, 2**0.5) for e in est.entries if e.compatible)


def test_gamma_trivial_and_single_candidate():
    K = nf_create("x^2-2")
    assert all(e.value.lo == e.value.hi == 1 for e in gamma_lower_bound(K, K, [K]).entries if e.compatible)
    M = nf_create("x^4+1")
    est = gamma_lower_bound(M, K, [K], rel_tol=TOL)
    # candidate family {K} reproduces rel_disc_norm(M, K)^(1/([M:Q][M:K]))
    N = rel_disc_norm(M, K)
    assert close(est.best, N ** (1 / 8))


def _tower(*polys):
    fields = [nf_create(p) for p in polys]
    steps = [TowerStep(fields[0])]
    for a, b in zip(fields, fields[1:]):
        emb = find_embeddings(a, b)[0] if a.degree > 1 else None
        steps.append(TowerStep(b, emb))
    return TowerSpec(steps)


def test_tower_terms_zeta8():
    rep = tower_terms(_tower("x-1", "x^2-2", "x^4+1"), rel_tol=TOL)
    vals = rep.values()
    assert close(vals[0], 8**0.25) and close(vals[1], 4**0.125)
    assert [t.status for t in rep.terms] == ["complete", "complete"]


def test_tower_single_and_trivial():
    assert close(tower_terms(_tower("x-1", "x^2-5"), rel_tol=TOL).values()[0], 5**0.25)
    assert tower_terms(_tower("x-1")).terms == ()


def test_tower_composite_step_incomplete():
    rep = tower_terms(_tower("x-1", "x^4+1"))
    assert rep.terms[0].status == "incomplete" and rep.terms[0].value is None


def test_tower_from_json_with_intermediates():
    spec = TowerSpec.from_json(
        {
            "fields": [{"poly": "x-1", "label": "Q"}, {"poly": "x^4+1", "label": "Z8"}],
            "intermediates": [{"step": 1, "fields": [{"poly": "x^2+1", "label": "Qi"}, {"poly": "x^2-2", "label": "Q2"}, {"poly": "x^2+2", "label": "Qm2"}, {"poly": "x^4+1", "label": "Z8"}]}],
        }
    )
    rep = tower_terms(spec, rel_tol=TOL)
    t = rep.terms[0]
    assert t.status == "complete"
    # minimum over intermediates: Q(i) gives 4^(1/4) = sqrt 2
    assert close(t.value, 2**0.5)


def test_radical_tower_divergent():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    rep = radical_tower_check([(p, 1) for p in primes], abs_tol=Fraction(1, 2**40))
    assert rep.strictly_increasing
    assert rep.verdict == "consistent with divergence"
    for p, t in zip(primes, rep.terms):
        assert abs(t.midpoint - Fraction(log(p))) < Fraction(1, 2**20)


def test_radical_tower_bounded_and_empty():
    rep = radical_tower_check([(2, 2), (3, 3), (5, 5)])
    assert [round(float(t.midpoint), 3) for t in rep.terms] == [0.347, 0.366, 0.322]
    assert rep.verdict == "consistent with boundedness"
    assert radical_tower_check([]).terms == ()
    with pytest.raises(InvalidInput):
        radical_tower_check([(3, 1), (2, 1)])
    with pytest.raises(NotPrime):
        radical_tower_check([(4, 1)])


def test_bz_examples():
    r = bz_partial_sum([(2, 1, 1)], TOL)
    assert close(r.sum, log(2) / 6) and close(r.liminf_bound, 2 ** (1 / 6))
    r = bz_partial_sum([], TOL)
    assert r.sum.lo == r.sum.hi == 0 and r.liminf_bound.lo == r.liminf_bound.hi == 1
    r = bz_partial_sum([(3, 1, 1), (2, 1, 1)], TOL)
    assert Fraction("1.2876") <= r.liminf_bound.lo and r.liminf_bound.hi <= Fraction("1.2878")


@given(
    st.lists(st.tuples(st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19]), st.integers(1, 4), st.integers(1, 3)), max_size=8, unique_by=lambda t: t[0]),
    st.integers(0, 8),
)
def test_bz_additivity(rows, k):
    a, b = BZData(rows[:k]), BZData(rows[k:])
    whole = (a + b).coefficients()
    parts = {**a.coefficients(), **b.coefficients()}
    assert whole == parts
    s = bz_partial_sum(a + b, TOL).sum
    sa, sb = bz_partial_sum(a, TOL).sum, bz_partial_sum(b, TOL).sum
    assert (sa + sb).overlaps(s)


def test_bz_rejects_duplicates():
    with pytest.raises(InvalidInput):
        BZData([(2, 1, 1), (2, 2, 1)])


def test_tame_examples():
    z7 = nf_create("x^6+x^5+x^4+x^3+x^2+x+1")
    rep = tame_exponent_check(z7, 6, [2, 3, 5, 7])
    assert rep.passed and rep.largest_ramified == 7
    assert tame_exponent_check(z7, 4, [7]).passed is False
    rep = tame_exponent_check(nf_create("x^2-5"), 2, [5])
    assert rep.passed and rep.largest_ramified == 5
    rep = tame_exponent_check(nf_create("x-1"), 3, [2, 3])
    assert rep.passed and rep.largest_ramified is None


def test_tame_skips_index_primes():
    rep = tame_exponent_check(nf_create("x^2-5"), 2, [2, 5])
    assert rep.skipped and rep.passed
