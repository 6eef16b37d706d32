from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import assume, given, strategies as st

from northcott.errors import InvalidInput, Reducible
from northcott.factor import is_irreducible
from northcott.heights import (
    AlgebraicNumber,
    complex_roots,
    mahler_compare,
    mahler_measure,
    places_Q,
    projective_height_Q,
    unit_circle_root_count,
    weil_height,
)
from northcott.interval import Interval
from northcott.poly import IntPoly, parse_poly, squarefree_decomposition

from oracles import mp_mahler, mp_roots, sym

TOL = Fraction(1, 2**40)
LEHMER = "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"

irreducible_polys = (
    st.lists(st.integers(-12, 12), min_size=2, max_size=7)
    .filter(lambda c: c[-1] > 0 and c[0] != 0)
    .map(IntPoly)
    .filter(lambda f: f.is_primitive() and is_irreducible(f))
)


def encloses(iv: Interval, value) -> bool:
    with mpmath.workdps(50):
        slack = mpmath.mpf(10) ** -30
        lo = mpmath.mpf(iv.lo.numerator) / iv.lo.denominator
        hi = mpmath.mpf(iv.hi.numerator) / iv.hi.denominator
        return lo - slack <= value <= hi + slack


def cyclotomic_polys(max_degree):
    out = []
    for n in range(1, 40):
        if sympy.totient(n) <= max_degree:
            c = sympy.Poly(sympy.cyclotomic_poly(n, sympy.Symbol("x"))).all_coeffs()
            out.append((n, IntPoly([int(a) for a in reversed(c)])))
    return out


def test_golden_ratio_height():
    h = weil_height("x^2-x-1", TOL)
    with mpmath.workdps(40):
        assert encloses(h, mpmath.sqrt((1 + mpmath.sqrt(5)) / 2))
    assert h.rel_width() <= TOL


def test_lehmer_mahler_measure():
    m = mahler_measure(LEHMER, TOL)
    assert encloses(m, mp_mahler(parse_poly(LEHMER).coeffs))
    assert abs(float(m.midpoint) - 1.17628081826) < 1e-10


@pytest.mark.parametrize("f, value", [("x^2+2x+4", 4), ("x^2+1", 1), ("2x-3", 3), ("3x^2-2", 3), ("x^3-2", 2)])
def test_exact_mahler_values(f, value):
    m = mahler_measure(f, TOL)
    assert m.is_exact and m.lo == value


@pytest.mark.parametrize("n, f", cyclotomic_polys(8))
def test_kronecker_exact(n, f):
    h = weil_height(AlgebraicNumber(f), TOL)
    assert h.lo == h.hi == 1
    assert unit_circle_root_count(f) == f.degree


def test_unit_circle_counts():
    assert unit_circle_root_count(parse_poly(LEHMER)) == 8
    assert unit_circle_root_count(parse_poly("x^4-x^3-x^2-x+1")) == 2
    assert unit_circle_root_count(parse_poly("x^2-3x+1")) == 0
    assert unit_circle_root_count(parse_poly("x^2+x+1")) == 2


def test_weil_height_rejects_reducible():
    with pytest.raises(Reducible):
        weil_height("x^2-1")
    with pytest.raises(Reducible):
        AlgebraicNumber.from_poly("x^4+4")
    with pytest.raises(InvalidInput):
        AlgebraicNumber.from_poly("5")


@given(irreducible_polys)
def test_mahler_against_mpmath(f):
    m = mahler_measure(f, TOL, irreducible=True)
    assert m.is_exact or m.rel_width() <= TOL
    assert encloses(m, mp_mahler(f.coeffs))


@given(irreducible_polys)
def test_height_invariant_under_inversion_and_sign(f):
    h = weil_height(AlgebraicNumber(f), TOL)
    rev = f.reverse()
    rev = -rev if rev.lc < 0 else rev
    mir = f.mirror()
    mir = -mir if mir.lc < 0 else mir
    for g in (rev, mir):
        assert weil_height(AlgebraicNumber(g), TOL).overlaps(h)


def _power_minpoly(f: IntPoly, n: int) -> IntPoly:
    x, y = sympy.symbols("x y")
    r = sympy.resultant(sym(f.coeffs).as_expr().subs(sympy.Symbol("x"), y), x - y**n, y)
    g = sympy.Poly(r, x)
    g = sympy.Poly(sympy.sqf_part(g), x)
    c = [int(a) for a in reversed(g.all_coeffs())]
    return IntPoly(c).primitive() if c[-1] > 0 else (-IntPoly(c)).primitive()


@given(irreducible_polys.filter(lambda f: f.degree <= 4), st.integers(2, 3))
def test_power_relation(f, n):
    # H(alpha^n) = H(alpha)^n
    g = _power_minpoly(f, n)
    assume(is_irreducible(g))
    h = weil_height(AlgebraicNumber(f), TOL)
    hn = weil_height(AlgebraicNumber(g), TOL)
    assert (h**n).overlaps(hn)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_product_formula_rationals(p, q):
    r = Fraction(p, q)
    assume(r != 0)
    places = places_Q(r)
    prod = Fraction(1)
    for v in places.values():
        prod *= v
    assert prod == 1
    assert projective_height_Q([1, r]) == max(abs(r.numerator), r.denominator)
    assert weil_height(IntPoly([-r.numerator, r.denominator])).lo == max(abs(r.numerator), r.denominator)


def test_projective_height_scaling():
    assert projective_height_Q([2, 4, 6]) == projective_height_Q([1, 2, 3]) == 3
    assert projective_height_Q([Fraction(1, 2), Fraction(1, 3)]) == 3


@given(irreducible_polys)
def test_root_boxes_hold_the_roots(f):
    eps = Fraction(1, 2**30)
    boxes = complex_roots(f, eps)
    assert len(boxes) == f.degree
    for i, a in enumerate(boxes):
        assert a.width <= 2 * eps or a.radius == 0
        for b in boxes[i + 1 :]:
            assert a.disjoint(b)
    for r in mp_roots(f.coeffs):
        re = Fraction(str(mpmath.nstr(r.real, 40)))
        im = Fraction(str(mpmath.nstr(r.imag, 40)))
        assert sum(1 for b in boxes if b.re_lo - eps <= re <= b.re_hi + eps and b.im_lo - eps <= im <= b.im_hi + eps) >= 1


def test_reducible_mahler_with_multiplicity():
    f = parse_poly("x^2-x-1") ** 2 * parse_poly("x^3") * parse_poly("2x+3") * 5
    m = mahler_measure(f, TOL)
    with mpmath.workdps(40):
        ref = ((1 + mpmath.sqrt(5)) / 2) ** 2 * 3 * 5
    assert encloses(m, ref)


def test_mahler_compare_statuses():
    f = parse_poly("x^2-x-1")
    assert mahler_compare(f, 2)[0] == "le"
    assert mahler_compare(f, Fraction(8, 5))[0] == "gt"
    # bound within 1e-12 of phi, coarse precision floor: undecided
    phi = Fraction(1, 2) + Fraction(5**0.5).limit_denominator(10**7) / 2
    assert mahler_compare(f, phi, min_eps=Fraction(1, 2**20))[0] == "borderline"
    assert mahler_compare(parse_poly("x^2+2x+4"), 4)[0] == "le"


def test_mahler_zero_polynomial_rejected():
    with pytest.raises(InvalidInput):
        mahler_measure(IntPoly([]))
