"""Factorization of integer polynomials (Zassenhaus).

Squarefree split over Z, factorization modulo the smallest prime p with
p not dividing lc(f) * disc(f), Hensel lifting to p^k beyond twice the
Mignotte bound, and subset recombination.  Inputs above the degree cap are
refused instead of being attempted slowly.
"""

from __future__ import annotations

from itertools import combinations

from . import modp
from .config import DEFAULT
from .errors import DegreeCapExceeded, InvalidInput
from .intfactor import primes_up_to
from .poly import IntPoly, mignotte_factor_bound, squarefree_decomposition

__all__ = ["factor_over_Z", "factor_with_content", "is_irreducible", "factor_squarefree"]


def _check_cap(f: IntPoly, cap):
    cap = DEFAULT.max_factor_degree if cap is None else cap
    if f.degree > cap:
        raise DegreeCapExceeded(f"degree {f.degree} exceeds the factorization cap {cap}")


def factor_with_content(f: IntPoly, cap=None):
    """Return (content, [(factor, multiplicity), ...]) with f = content * prod factor^mult.

    Factors are primitive, irreducible, have positive leading coefficient and
    are sorted by degree, then coefficients (highest degree first).
    """
    if f.is_zero():
        raise InvalidInput("cannot factor the zero polynomial")
    _check_cap(f, cap)
    c, parts = squarefree_decomposition(f)
    out = []
    for g, e in parts:
        for h in factor_squarefree(g):
            out.append((h, e))
    out.sort(key=lambda t: (t[0].sort_key(), t[1]))
    return c, out


def factor_over_Z(f: IntPoly, cap=None):
    return factor_with_content(f, cap)[1]


def choose_prime(g: IntPoly) -> int:
    """Smallest prime p not dividing lc(g) with g squarefree mod p."""
    lc = g.lc
    for p in primes_up_to(10**5):
        if lc % p == 0:
            continue
        gp = modp.reduce(g.coeffs, p)
        if modp.is_squarefree(modp.monic(gp, p), p):
            return p
    raise InvalidInput(f"no suitable prime for {g}")  # pragma: no cover


def factor_squarefree(g: IntPoly):
    """Irreducible factors of a primitive squarefree g with positive leading coefficient."""
    if g.degree <= 1:
        return [g]
    out = []
    if g.coeffs[0] == 0:
        # squarefree, so x divides exactly once
        out.append(IntPoly([0, 1]))
        g = IntPoly(g.coeffs[1:])
        if g.degree < 1:
            return out
        if g.degree == 1:
            return out + [g]
    p = choose_prime(g)
    gp = modp.monic(modp.reduce(g.coeffs, p), p)
    local = modp.factor_squarefree(gp, p)
    if len(local) == 1:
        return out + [g]
    bound = 2 * mignotte_factor_bound(g) + 1
    k, pk = 1, p
    while pk <= bound:
        k += 1
        pk *= p
    lifted = hensel_lift(g, local, p, k)
    return out + _recombine(g, lifted, pk)


def _sym(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _lift_pair(F, u, w, p, k):
    """Lift F = u*w (mod p; F, u, w monic) to a factorization modulo p^k."""
    _, s, t = modp.ext_gcd(u, w, p)
    U, W = list(u), list(w)
    pj = p
    for _ in range(1, k):
        prod = _mul_int(U, W)
        e = [((F[i] if i < len(F) else 0) - (prod[i] if i < len(prod) else 0)) for i in range(max(len(F), len(prod)))]
        e = modp.trim([x // pj % p for x in e])
        if e:
            a = modp.rem(modp.mul(e, t, p), u, p)
            b = modp.divmod_p(modp.sub(e, modp.mul(a, w, p), p), u, p)[0]
            U = _add_scaled(U, a, pj)
            W = _add_scaled(W, b, pj)
        pj *= p
    return [x % pj for x in U], [x % pj for x in W]


def _mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _add_scaled(U, a, m):
    out = list(U)
    for i, x in enumerate(a):
        out[i] += m * x
    return out


def hensel_lift(g: IntPoly, factors, p: int, k: int):
    """Lift monic factors of g mod p to monic factors modulo p^k (lc(g) absorbed)."""
    pk = p**k
    inv = pow(g.lc, -1, pk)
    F = [c * inv % pk for c in g.coeffs]
    return _lift_tree(F, [list(f) for f in factors], p, k, pk)


def _lift_tree(F, factors, p, k, pk):
    if len(factors) == 1:
        return [F]
    half = len(factors) // 2
    u = [1]
    for f in factors[:half]:
        u = modp.mul(u, f, p)
    w = [1]
    for f in factors[half:]:
        w = modp.mul(w, f, p)
    U, W = _lift_pair(F, u, w, p, k)
    return _lift_tree(U, factors[:half], p, k, pk) + _lift_tree(W, factors[half:], p, k, pk)


def _recombine(g: IntPoly, lifted, pk):
    factors = []
    G = g
    T = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(T):
        hit = None
        for S in combinations(T, s):
            lc = G.lc
            c0 = lc
            for i in S:
                c0 = c0 * lifted[i][0] % pk
            c0 = _sym(c0, pk)
            if c0 == 0 or (lc * G.coeffs[0]) % c0 != 0:
                continue
            h = [lc]
            for i in S:
                h = [x % pk for x in _mul_int(h, lifted[i])]
            cand = IntPoly([_sym(x, pk) for x in h]).primitive()
            if cand.degree >= 1 and cand.divides(G):
                q = G.exact_div(cand)
                factors.append(cand)
                G = q.primitive()
                hit = S
                break
        if hit is None:
            s += 1
        else:
            T = [i for i in T if i not in hit]
    factors.append(G.primitive())
    return factors


def is_irreducible(f: IntPoly, cap=None) -> bool:
    if f.degree < 1:
        raise InvalidInput("irreducibility needs degree >= 1")
    if f.degree == 1:
        return f.content() == 1
    if f.content() != 1:
        return False
    if f.coeffs[0] == 0:
        return False
    # one irreducible reduction is a certificate; otherwise factor fully
    lc = f.lc
    for p in (2, 3, 5, 7, 11, 13):
        if lc % p and modp.is_irreducible(list(f.coeffs), p):
            return True
    fac = factor_over_Z(f, cap)
    return len(fac) == 1 and fac[0][1] == 1
