"""Exact linear algebra over Z, Q and F_p on lists of lists (row-major)."""

from __future__ import annotations

from fractions import Fraction


def hnf(rows, ncols: int):
    """Row Hermite normal form of the lattice spanned by integer ``rows``.

    Returns the nonzero rows, upper triangular, positive pivots, entries
    above each pivot reduced into [0, pivot).
    """
    a = [list(r) for r in rows if any(r)]
    out = []
    col = 0
    while a and col < ncols:
        nz = [r for r in a if r[col]]
        rest = [r for r in a if not r[col]]
        if not nz:
            col += 1
            continue
        # Euclid on column ``col`` until a single row keeps a nonzero entry
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            nxt = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            nz = nxt
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        for i, r in enumerate(out):
            q = r[col] // piv[col]
            if q:
                out[i] = [x - q * y for x, y in zip(r, piv)]
        out.append(piv)
        a = rest
        col += 1
    return out


def det_int(m) -> int:
    """Bareiss fraction-free determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_q(m):
    """Inverse of a square rational matrix by Gauss-Jordan."""
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                t = a[i][c]
                a[i] = [x - t * y for x, y in zip(a[i], a[c])]
    return [r[n:] for r in a]


def vecmat(v, m):
    """Row vector times matrix."""
    ncols = len(m[0]) if m else 0
    out = [0] * ncols
    for x, row in zip(v, m):
        if x:
            for j, y in enumerate(row):
                out[j] += x * y
    return out


def matmul(a, b):
    return [vecmat(r, b) for r in a]


def left_kernel_mod_p(rows, p: int):
    """Basis of {v : v * M = 0 over F_p} for an r x c matrix M (list of rows)."""
    r = len(rows)
    if r == 0:
        return []
    c = len(rows[0])
    # row-reduce [M | I] and keep the identity part of rows whose M part vanished
    a = [[x % p for x in row] + [int(i == j) for j in range(r)] for i, row in enumerate(rows)]
    prow = 0
    for col in range(c):
        piv = next((i for i in range(prow, r) if a[i][col]), None)
        if piv is None:
            continue
        a[prow], a[piv] = a[piv], a[prow]
        inv = pow(a[prow][col], -1, p)
        a[prow] = [x * inv % p for x in a[prow]]
        for i in range(r):
            if i != prow and a[i][col]:
                t = a[i][col]
                a[i] = [(x - t * y) % p for x, y in zip(a[i], a[prow])]
        prow += 1
        if prow == r:
            break
    return [row[c:] for row in a[prow:]]


def charpoly(m):
    """Characteristic polynomial det(xI - M), low-to-high coefficients.

    Faddeev-LeVerrier; integer matrices stay integral because every division is exact.
    """
    n = len(m)
    is_int = all(isinstance(x, int) for r in m for x in r)
    c = [0] * (n + 1)
    c[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A * M_{k-1} + c_{n-k+1} I
        mk = matmul(m, mk)
        for i in range(n):
            mk[i][i] += c[n - k + 1]
        am = matmul(m, mk)
        tr = sum(am[i][i] for i in range(n))
        c[n - k] = -tr // k if is_int else -Fraction(tr) / k
    return c
