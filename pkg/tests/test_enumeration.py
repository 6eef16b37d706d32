from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from northcott.config import Config
from northcott.enumeration import (
    EnumerationRequest,
    coefficient_bounds,
    count_degree1,
    enumerate_bounded,
    orbit,
)
from northcott.errors import BudgetExceeded, CapExceeded, DegreeCapExceeded, InvalidInput
from northcott.factor import is_irreducible
from northcott.heights import AlgebraicNumber, weil_height
from northcott.poly import IntPoly, parse_poly

from oracles import brute_enumerate, mp_mahler, reduced_fractions


def run(d, X, **kw):
    return enumerate_bounded(EnumerationRequest(d, X, **kw))


def test_degree_one_examples():
    assert run(1, 1).number_count == 3
    r = run(1, 2)
    assert r.number_count == 7
    roots = sorted(Fraction(-f.coeffs[0], f.coeffs[1]) for f in r.polynomials)
    assert roots == sorted(Fraction(v) for v in ["0", "1", "-1", "2", "-2", "1/2", "-1/2"])


def test_height_one_up_to_degree_two():
    r = run(2, 1)
    assert r.number_count == 9
    assert {str(f) for f in r.polynomials if f.degree == 2} == {"x^2 + 1", "x^2 + x + 1", "x^2 - x + 1"}


@pytest.mark.parametrize("X", range(1, 21))
def test_count_degree1_oracle(X):
    n = count_degree1(X)
    assert n == len(reduced_fractions(X))
    # the default height cap is 16; the oracle range goes to 20
    assert n == enumerate_bounded(EnumerationRequest(1, X), Config(max_enum_height=Fraction(20))).number_count


def test_count_degree1_rational_bound():
    assert count_degree1(Fraction(5, 2)) == count_degree1(2)
    with pytest.raises(InvalidInput):
        count_degree1(Fraction(1, 2))


@pytest.mark.parametrize("k, X", [(2, 2), (2, Fraction(5, 2)), (3, Fraction(5, 4)), (3, Fraction(3, 2)), (4, 1), (4, Fraction(9, 8))])
def test_complete_against_plain_binomial_box(k, X):
    r = run(k, X, mode="exact_degree")
    assert not r.borderline
    assert {f.coeffs for f in r.polynomials} == brute_enumerate(k, X)


def test_listed_polynomials_are_certified():
    X = 2
    r = run(2, X)
    assert len(set(r.polynomials)) == len(r.polynomials)
    assert r.polynomials == sorted(r.polynomials, key=IntPoly.sort_key)
    for f in r.polynomials:
        assert f.lc > 0 and f.is_primitive() and is_irreducible(f)
        assert r.mahler[f].hi <= Fraction(X) ** f.degree
        assert weil_height(AlgebraicNumber(f)).lo <= X
        assert float(mp_mahler(f.coeffs)) <= X**f.degree * (1 + 1e-12)


def test_closure_under_inversion_and_negation():
    listed = set(run(3, Fraction(3, 2)).polynomials)
    for f in listed:
        assert orbit(f) <= listed


def test_monotone_in_X():
    small = set(run(3, Fraction(5, 4)).polynomials)
    mid = set(run(3, Fraction(3, 2)).polynomials)
    big = set(run(3, 2).polynomials)
    assert small <= mid <= big
    assert len(big) > len(mid) > len(small)


@given(st.integers(2, 6), st.fractions(1, 16), st.integers(1, 16), st.integers(1, 16))
def test_coefficient_bounds_within_binomial_box(k, X, lc, a0):
    from math import comb, floor

    T = Fraction(X) ** k
    for j, b in enumerate(coefficient_bounds(k, T, lc, a0), start=1):
        assert b <= floor(comb(k - 1, j) * T + comb(k - 1, j - 1) * lc)
        if lc <= T:
            assert b <= floor(comb(k, j) * T)


def _near_phi_bound():
    # X^2 within 1e-12 of the golden ratio, so M(x^2-x-1) straddles X^2 at coarse precision
    import mpmath

    with mpmath.workdps(40):
        s = mpmath.sqrt((1 + mpmath.sqrt(5)) / 2)
        return Fraction(str(mpmath.nstr(s, 14)))


@pytest.mark.parametrize("policy", ["flag", "include", "exclude"])
def test_borderline_policies(policy):
    X = _near_phi_bound()
    cfg = Config(precision_cap=Fraction(1, 2**20))
    r = enumerate_bounded(EnumerationRequest(2, X, "exact_degree", policy), cfg)
    target = parse_poly("x^2-x-1")
    assert target in r.borderline
    assert (target in r.polynomials) == (policy == "include")
    assert r.summary()["borderline"]


def test_borderline_resolved_at_default_precision():
    r = run(2, _near_phi_bound(), mode="exact_degree")
    assert not r.borderline


def test_caps_and_validation():
    with pytest.raises(DegreeCapExceeded):
        run(7, 2)
    with pytest.raises(CapExceeded):
        run(2, 17)
    with pytest.raises(InvalidInput):
        run(2, Fraction(1, 2))
    with pytest.raises(InvalidInput):
        run(2, 2, mode="sideways")


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_bounded(EnumerationRequest(3, 2), budget_seconds=0.0)


def test_workers_agree_with_serial():
    serial = run(3, Fraction(3, 2))
    par = enumerate_bounded(EnumerationRequest(3, Fraction(3, 2)), Config(workers=2))
    assert list(par.json_lines()) == list(serial.json_lines())


def test_json_lines_deterministic():
    a = list(run(2, 2).json_lines())
    b = list(run(2, 2).json_lines())
    assert a == b
    assert '"summary": true' in a[-1]
