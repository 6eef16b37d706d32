"""Reference computations that share no code with the package.

sympy supplies factorisation, resultants and arithmetic mod p; mpmath
supplies high-precision roots.  Everything here is slow and simple on purpose.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, floor, gcd

import mpmath
import sympy

x = sympy.Symbol("x")


def sym(coeffs):
    """sympy Poly from low-to-high integer coefficients."""
    return sympy.Poly(list(reversed([int(c) for c in coeffs])), x, domain="ZZ")


def low_to_high(p: sympy.Poly):
    return [int(c) for c in reversed(p.all_coeffs())]


def sympy_factor(coeffs):
    """(content, sorted [(factor coeffs low->high, multiplicity)]) with positive leading coefficients."""
    c, facs = sym(coeffs).factor_list()
    out = []
    for f, e in facs:
        lc = f.LC()
        if lc < 0:
            f = -f
            if e % 2:
                c = -c
        out.append((tuple(low_to_high(f)), e))
    return int(c), sorted(out, key=lambda t: (len(t[0]), t[0][::-1], t[1]))


def sympy_resultant(f, g) -> int:
    return int(sympy.resultant(sym(f).as_expr(), sym(g).as_expr(), x))


def sympy_disc(f) -> int:
    return int(sympy.discriminant(sym(f).as_expr(), x))


def mp_mahler(coeffs, dps: int = 60):
    """M(f) from mpmath roots at ``dps`` digits."""
    with mpmath.workdps(dps):
        roots = mpmath.polyroots([int(c) for c in reversed(coeffs)], maxsteps=400, extraprec=4 * dps)
        m = abs(mpmath.mpf(int(coeffs[-1])))
        for r in roots:
            m *= max(mpmath.mpf(1), abs(r))
        return m


def mp_roots(coeffs, dps: int = 50):
    with mpmath.workdps(dps):
        return mpmath.polyroots([int(c) for c in reversed(coeffs)], maxsteps=400, extraprec=4 * dps)


def dedekind_maximal_at(coeffs, p: int) -> bool:
    """Dedekind criterion: is Z[theta] maximal at p for monic f?"""
    f = sym(coeffs)
    fp = sympy.Poly(f.as_expr(), x, modulus=p)
    _, facs = fp.factor_list()
    g = sympy.Poly(1, x, modulus=p)
    for q, _ in facs:
        g = g * q
    h = fp.quo(g)
    # lift g and h to Z with symmetric coefficients, take (f - g h) / p
    gz = sympy.Poly(g.as_expr(), x, domain="ZZ")
    hz = sympy.Poly(h.as_expr(), x, domain="ZZ")
    F = (f - gz * hz).as_expr()
    Fz = sympy.Poly(sympy.expand(F / p), x, domain="ZZ")
    Fp = sympy.Poly(Fz.as_expr(), x, modulus=p)
    d = sympy.gcd(sympy.gcd(Fp, g), h)
    return d.degree() == 0


def dedekind_disc(coeffs):
    """disc(f) when the Dedekind test passes at every p with p^2 | disc(f), else None."""
    D = sympy_disc(coeffs)
    for p, e in sympy.factorint(abs(D)).items():
        if e >= 2 and not dedekind_maximal_at(coeffs, p):
            return None
    return D


def _charpoly_is_integral(elem, f):
    """elem: rational coefficient list in theta; f: monic sympy Poly."""
    n = f.degree()
    theta = sympy.Poly(x, x, domain="QQ")
    e = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in elem])), x, domain="QQ")
    fq = sympy.Poly(f.as_expr(), x, domain="QQ")
    rows = []
    cur = e
    for _ in range(n):
        r = cur.rem(fq)
        cs = list(reversed(r.all_coeffs()))
        rows.append(cs + [0] * (n - len(cs)))
        cur = (r * theta).rem(fq)
    cp = sympy.Matrix(rows).charpoly().all_coeffs()
    return all(sympy.Rational(c).q == 1 for c in cp)


def is_p_maximal(basis, coeffs, p: int) -> bool:
    """Brute force: no (sum a_i w_i)/p with 0 <= a_i < p, not all zero, is integral.

    ``basis`` rows are rational coordinates in the power basis of theta.
    """
    f = sym(coeffs)
    n = f.degree()
    for a in itertools.product(range(p), repeat=n):
        if not any(a):
            continue
        elem = [sum(Fraction(a[i]) * basis[i][j] for i in range(n)) / p for j in range(n)]
        if _charpoly_is_integral(elem, f):
            return False
    return True


def primes_to_check(D: int):
    return [p for p, e in sympy.factorint(abs(D)).items() if e >= 2]


def brute_enumerate(k: int, X):
    """Primitive irreducible degree-k f, lc > 0, M(f) <= X^k, over the full box |a_j| <= C(k,j) X^k."""
    T = Fraction(X) ** k
    out = set()
    rng = [range(-floor(comb(k, j) * T), floor(comb(k, j) * T) + 1) for j in range(k)]
    for lc in range(1, floor(T) + 1):
        for c in itertools.product(*rng):
            co = list(c) + [lc]
            if co[0] == 0:
                continue
            g = 0
            for a in co:
                g = gcd(g, a)
            if g != 1 or not sym(co).is_irreducible:
                continue
            with mpmath.workdps(50):
                if mp_mahler(co, 50) <= mpmath.mpf(T.numerator) / T.denominator * (1 + mpmath.mpf(10) ** -30):
                    out.add(tuple(co))
    return out


def reduced_fractions(X):
    b = floor(Fraction(X))
    return {(p, q) for q in range(1, b + 1) for p in range(-b, b + 1) if gcd(p, q) == 1}
