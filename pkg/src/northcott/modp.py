"""Polynomials over F_p as coefficient lists (low-to-high), internal helpers.

Factorization modulo p is deliberately not part of the public API; it feeds
Zassenhaus lifting and Kummer-Dedekind splitting.
"""

from __future__ import annotations

import random


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(coeffs, p):
    return trim([c % p for c in coeffs])


def add(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def sub(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def scalar(a, c, p):
    return trim([x * c % p for x in a])


def divmod_p(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial mod p")
    a = list(a)
    n = len(b) - 1
    if len(a) - 1 < n:
        return [], a
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - n)
    for k in range(len(a) - 1 - n, -1, -1):
        t = a[k + n] * inv % p
        q[k] = t
        if t:
            for i in range(n + 1):
                a[k + i] = (a[k + i] - t * b[i]) % p
    return trim(q), trim(a[:n])


def rem(a, b, p):
    return divmod_p(a, b, p)[1]


def monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def gcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def ext_gcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return scalar(r0, inv, p), scalar(s0, inv, p), scalar(t0, inv, p)


def deriv(a, p):
    return trim([i * c % p for i, c in enumerate(a)][1:])


def powmod(base, e, mod, p):
    result = [1]
    base = rem(base, mod, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), mod, p)
        base = rem(mul(base, base, p), mod, p)
        e >>= 1
    return result


def is_squarefree(f, p):
    return len(gcd(f, deriv(f, p), p)) == 1


def squarefree_decomposition(f, p):
    """Monic squarefree factorization [(g, e)] of a monic f over F_p."""
    out = []
    _sqf(monic(f, p), p, 1, out)
    merged = {}
    for g, e in out:
        if len(g) > 1:
            key = tuple(g)
            merged[key] = merged.get(key, 0) + e
    return [(list(g), e) for g, e in merged.items()]


def _sqf(f, p, mult, out):
    if len(f) <= 1:
        return
    df = deriv(f, p)
    if not df:
        # f is a p-th power: take coefficientwise p-th root (identity on F_p)
        root = [f[i] for i in range(0, len(f), p)]
        _sqf(root, p, mult * p, out)
        return
    c = gcd(f, df, p)
    w = divmod_p(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_p(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i * mult))
        i += 1
        w = y
        c = divmod_p(c, y, p)[0]
    if len(c) > 1:
        root = [c[i] for i in range(0, len(c), p)]
        _sqf(root, p, mult * p, out)


def distinct_degree(f, p):
    """Distinct-degree factorization of a monic squarefree f: [(g, d)]."""
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_p(f, g, p)[0]
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = trim([rng.randrange(p) for _ in range(n)])
        if len(r) < 2:
            continue
        if p == 2:
            t = list(r)
            acc = list(r)
            for _ in range(d - 1):
                acc = rem(mul(acc, acc, p), f, p)
                t = add(t, acc, p)
            g = gcd(f, t, p)
        else:
            e = (p**d - 1) // 2
            g = gcd(f, sub(powmod(r, e, f, p), [1], p), p)
        if 1 < len(g) < len(f):
            q = divmod_p(f, g, p)[0]
            return equal_degree(g, d, p, rng) + equal_degree(monic(q, p), d, p, rng)


def factor_squarefree(f, p, seed=0):
    """Monic irreducible factors of a monic squarefree f over F_p, sorted."""
    rng = random.Random(seed)
    out = []
    for g, d in distinct_degree(f, p):
        out.extend(equal_degree(g, d, p, rng))
    return sorted(out, key=lambda g: (len(g), g[::-1]))


def factor(f, p):
    """Full factorization of f over F_p: (lc, [(monic irreducible, multiplicity)])."""
    f = reduce(f, p)
    if not f:
        raise ZeroDivisionError("zero polynomial mod p")
    lc = f[-1]
    out = []
    for g, e in squarefree_decomposition(f, p):
        for h in factor_squarefree(g, p):
            out.append((h, e))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return lc, out


def is_irreducible(f, p):
    f = reduce(f, p)
    n = len(f) - 1
    if n < 1:
        return False
    f = monic(f, p)
    if not is_squarefree(f, p):
        return False
    dd = distinct_degree(f, p)
    return len(dd) == 1 and dd[0][1] == n
