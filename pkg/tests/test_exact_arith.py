from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from northcott.errors import InvalidInput, ParseError
from northcott.factor import factor_over_Z, factor_with_content, is_irreducible
from northcott.intfactor import factor_integer, is_prime
from northcott.poly import (
    IntPoly,
    parse_poly,
    poly_discriminant,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    sylvester_resultant,
)

from oracles import sympy_disc, sympy_factor, sympy_resultant

coeff_lists = st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)
small_polys = coeff_lists.map(IntPoly)


def P(s):
    return parse_poly(s)


@pytest.mark.parametrize(
    "f, g, expected",
    [
        ("x^2-1", "x^3-1", "x-1"),
        ("x^4-1", "x^2+1", "x^2+1"),
        ("6x^2+12x+6", "0", "x^2+2x+1"),
        ("0", "0", "0"),
    ],
)
def test_gcd_examples(f, g, expected):
    assert poly_gcd(P(f), P(g)) == P(expected)


@pytest.mark.parametrize("f, d", [("x^2+1", -4), ("x^3-2", -108), ("x^2-2x+1", 0), ("x^2-x-1", 5)])
def test_discriminant_examples(f, d):
    assert poly_discriminant(P(f)) == d


def test_discriminant_of_constant_rejected():
    with pytest.raises(InvalidInput):
        poly_discriminant(IntPoly([3]))


def test_parse_forms():
    assert P("3x^2 - 2*x + 1") == IntPoly([1, -2, 3])
    assert P("-x^3+x") == IntPoly([0, 1, 0, -1])
    assert P("x**2 + 1") == IntPoly([1, 0, 1])
    assert str(IntPoly([-1, 0, 2])) == "2*x^2 - 1"
    for bad in ["x^^2", "y+1", "", "x^-1"]:
        with pytest.raises(ParseError):
            P(bad)


@given(small_polys, small_polys)
def test_gcd_divides_and_matches_sympy(f, g):
    h = poly_gcd(f, g)
    assert h.divides(f) and h.divides(g)
    ref = sympy.gcd(sympy.Poly(f.coeffs[::-1], sympy.Symbol("x")), sympy.Poly(g.coeffs[::-1], sympy.Symbol("x")))
    ref_c = [int(c) for c in reversed(ref.all_coeffs())]
    if ref_c and ref_c[-1] < 0:
        ref_c = [-c for c in ref_c]
    assert h == IntPoly(ref_c).primitive()


@given(small_polys, small_polys)
def test_resultant_against_sylvester_and_sympy(f, g):
    r = resultant(f, g)
    assert r == sylvester_resultant(f, g)
    assert r == sympy_resultant(f.coeffs, g.coeffs)


@given(small_polys)
def test_discriminant_matches_sympy(f):
    assert poly_discriminant(f) == sympy_disc(f.coeffs)


@given(small_polys, small_polys)
def test_discriminant_of_product(f, g):
    # disc(fg) = disc(f) disc(g) Res(f, g)^2
    assert poly_discriminant(f * g) == poly_discriminant(f) * poly_discriminant(g) * resultant(f, g) ** 2


factor_parts = st.lists(st.integers(-9, 9), min_size=2, max_size=5).filter(lambda c: c[-1] != 0).map(IntPoly)


@given(st.lists(factor_parts, min_size=1, max_size=3), st.integers(-6, 6).filter(bool))
def test_factor_round_trip(parts, c):
    f = IntPoly([c])
    for p in parts:
        f = f * p
    content, facs = factor_with_content(f)
    prod = IntPoly([content])
    for h, e in facs:
        assert h.lc > 0 and h.is_primitive()
        assert is_irreducible(h)
        prod = prod * h**e
    assert prod == f
    sc, sf = sympy_factor(f.coeffs)
    assert [(h.coeffs, e) for h, e in facs] == [(tuple(a), e) for a, e in sf]
    assert sc == content


@pytest.mark.parametrize(
    "f, n_factors",
    [
        ("x^4+1", 1),
        ("x^4+4", 2),  # Sophie Germain
        ("x^8-1", 4),
        ("x^6-2x^3-1", 1),
        ("x^12-1", 6),
        ("4x^4-1", 2),
    ],
)
def test_factor_examples(f, n_factors):
    assert len(factor_over_Z(P(f))) == n_factors


def test_factor_degree_cap():
    from northcott.errors import DegreeCapExceeded

    with pytest.raises(DegreeCapExceeded):
        factor_over_Z(P("x^17+x+1"))


def test_factor_swinnerton_dyer():
    # irreducible over Z but splits into linear or quadratic factors modulo every prime
    sd3 = P("x^8 - 40x^6 + 352x^4 - 960x^2 + 576")
    assert is_irreducible(sd3)
    assert factor_over_Z(sd3 * P("x^2-3")) == [(P("x^2-3"), 1), (sd3, 1)]


@given(small_polys)
def test_squarefree_decomposition(f):
    c, parts = squarefree_decomposition(f)
    prod = IntPoly([c])
    for g, e in parts:
        prod = prod * g**e
        assert poly_gcd(g, g.derivative()).degree == 0
    assert prod == f


@given(st.integers(2, 10**12))
def test_integer_factorization(n):
    fac = factor_integer(n)
    assert fac.complete
    prod = 1
    for p, e in fac.primes.items():
        assert is_prime(p)
        prod *= p**e
    assert prod == n
    assert fac.primes == sympy.factorint(n)


def test_rho_beyond_trial_division():
    n = 1000003 * 1000033 * 4
    assert factor_integer(n).primes == {2: 2, 1000003: 1, 1000033: 1}


def test_rho_cap_leaves_cofactor():
    p, q = 2**61 - 1, 2**89 - 1
    fac = factor_integer(p * q * 9, rho_iterations=10)
    assert not fac.complete
    assert fac.primes == {3: 2} and fac.cofactor == p * q


def test_rational_coefficients_are_exact():
    f = P("x^2 - x - 1")
    assert f(Fraction(1, 2)) == Fraction(-5, 4)
