"""Certified root isolation, Mahler measure and Weil heights.

Root approximations come from simultaneous (Aberth) iteration.  They are
certified afterwards in exact rational arithmetic: with Weierstrass
corrections W_i = f(z_i) / (lc * prod_{j != i} (z_i - z_j)) every root of f
lies in the union of the disks D(z_i - W_i, (n - 1)|W_i|), and a connected
component made of m disks holds exactly m roots.  Pairwise disjoint disks
therefore isolate the roots one by one.

Roots of modulus exactly one are never approached numerically.  They are
roots of gcd(f, reverse(f)), and their number is read off exactly from a
Sturm count of the trace polynomial q(x + 1/x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import mpmath
import numpy as np

from .config import DEFAULT
from .errors import Inconclusive, InvalidInput, Reducible
from .factor import is_irreducible
from .interval import Interval, bits_for, nth_root
from .poly import IntPoly, parse_poly, poly_gcd, squarefree_decomposition

__all__ = [
    "RootBox",
    "AlgebraicNumber",
    "complex_roots",
    "mahler_measure",
    "mahler_compare",
    "weil_height",
    "projective_height_Q",
    "places_Q",
    "unit_circle_root_count",
    "trace_polynomial",
    "sturm_count",
]

_MAX_BITS = 16384


@dataclass(frozen=True)
class RootBox:
    """Axis-parallel square in C holding exactly one root.

    ``center`` and ``radius`` describe the certified inclusion disk; the box
    is the square circumscribing it.
    """

    re: Fraction
    im: Fraction
    radius: Fraction

    @property
    def re_lo(self):
        return self.re - self.radius

    @property
    def re_hi(self):
        return self.re + self.radius

    @property
    def im_lo(self):
        return self.im - self.radius

    @property
    def im_hi(self):
        return self.im + self.radius

    @property
    def width(self) -> Fraction:
        return 2 * self.radius

    def contains(self, z) -> bool:
        return self.re_lo <= z.real <= self.re_hi and self.im_lo <= z.imag <= self.im_hi

    def disjoint(self, other: RootBox) -> bool:
        return (
            self.re_hi < other.re_lo
            or other.re_hi < self.re_lo
            or self.im_hi < other.im_lo
            or other.im_hi < self.im_lo
        )

    def modulus(self, bits: int = 64) -> Interval:
        """Enclosure of |root| for the root inside the disk."""
        c2 = self.re * self.re + self.im * self.im
        lo, hi = _sqrt_bounds(c2, bits)
        return Interval(max(Fraction(0), lo - self.radius), hi + self.radius)

    def to_json(self) -> dict:
        return {
            "re": [str(self.re_lo), str(self.re_hi)],
            "im": [str(self.im_lo), str(self.im_hi)],
        }


@dataclass(frozen=True)
class AlgebraicNumber:
    """An algebraic number up to conjugacy: its primitive irreducible minimal polynomial.

    ``box`` optionally selects one conjugate.
    """

    minpoly: IntPoly
    box: RootBox | None = None

    @classmethod
    def from_poly(cls, poly, check: bool = True) -> AlgebraicNumber:
        f = parse_poly(poly)
        if f.degree < 1:
            raise InvalidInput("minimal polynomial must have degree >= 1")
        f = f.primitive()
        if check and not is_irreducible(f):
            raise Reducible(f"{f} is not irreducible")
        return cls(f)

    @property
    def degree(self) -> int:
        return self.minpoly.degree


def _sqrt_bounds(q: Fraction, bits: int):
    """Rational lo <= sqrt(q) <= hi with dyadic denominators 2**bits."""
    if q == 0:
        return Fraction(0), Fraction(0)
    a, b = q.numerator, q.denominator
    r = isqrt((a << (2 * bits)) // b)
    lo = Fraction(r, 1 << bits)
    hi = lo if r * r * b == a << (2 * bits) else Fraction(r + 1, 1 << bits)
    return lo, hi


def _sqrt_upper(q: Fraction, bits: int) -> Fraction:
    return _sqrt_bounds(q, bits)[1]


# -- Sturm sequences and the trace polynomial ---------------------------------


def _qpoly_rem(a, b):
    a = list(a)
    n = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= n and a:
        t = a[-1] / lb
        k = len(a) - 1 - n
        for i in range(n + 1):
            a[k + i] -= t * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _qeval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sturm_count(f: IntPoly, a, b) -> int:
    """Number of distinct real roots of f in the half-open interval (a, b]."""
    p0 = [Fraction(c) for c in f.coeffs]
    p1 = [Fraction(i * c) for i, c in enumerate(f.coeffs)][1:]
    seq = [p0, p1]
    while seq[-1]:
        r = _qpoly_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])

    def variations(x):
        signs = [s for s in (_qeval(p, x) for p in seq) if s != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))

    return variations(Fraction(a)) - variations(Fraction(b))


def trace_polynomial(h: IntPoly) -> IntPoly:
    """q with h(x) = x^m q(x + 1/x) for a reciprocal h of degree 2m."""
    if h.degree % 2 or h.coeffs != h.coeffs[::-1]:
        raise InvalidInput(f"{h} is not reciprocal of even degree")
    m = h.degree // 2
    c = h.coeffs
    q = IntPoly([c[m]])
    v_prev, v = IntPoly([2]), IntPoly([0, 1])
    y = IntPoly([0, 1])
    for k in range(1, m + 1):
        q = q + v * c[m + k]
        v_prev, v = v, y * v - v_prev
    return q


def unit_circle_root_count(g: IntPoly) -> int:
    """Exact number of roots of modulus one of a squarefree integer polynomial."""
    h = poly_gcd(g, g.reverse())
    if h.degree < 1:
        return 0
    count = 0
    for r in (1, -1):
        if h(r) == 0:
            count += 1
            h = h.exact_div(IntPoly([-r, 1]))
    if h.degree < 1:
        return count
    if h.coeffs != h.coeffs[::-1]:
        h = -h
    q = trace_polynomial(h)
    # q(+-2) != 0 since the roots +-1 were removed
    return count + 2 * sturm_count(q, -2, 2)


# -- numerical root finding -----------------------------------------------------


def _seeds(f: IntPoly):
    roots = np.roots(np.array(f.coeffs[::-1], dtype=float))
    if len(roots) != f.degree or not np.all(np.isfinite(roots)):
        # overflowing coefficients; fall back to points on a circle
        n = f.degree
        r = float(_cauchy_bound(f))
        roots = [r * complex(np.cos(2 * np.pi * k / n + 0.4), np.sin(2 * np.pi * k / n + 0.4)) for k in range(n)]
    return [complex(z) for z in roots]


def _cauchy_bound(f: IntPoly) -> Fraction:
    lc = abs(f.lc)
    return 1 + Fraction(max(abs(c) for c in f.coeffs[:-1]), lc) if f.degree > 0 else Fraction(0)


def _aberth(f: IntPoly, roots, prec: int, max_iter: int = 200):
    with mpmath.workprec(prec):
        coeffs = [mpmath.mpf(c) for c in f.coeffs[::-1]]
        z = [mpmath.mpc(r) for r in roots]
        n = len(z)
        tiny = mpmath.mpf(2) ** (-prec + 4)
        for _ in range(max_iter):
            done = True
            for i in range(n):
                p, dp = mpmath.polyval(coeffs, z[i], derivative=True)
                if p == 0:
                    continue
                if dp == 0:
                    dp = tiny
                ratio = p / dp
                s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(n) if j != i and z[i] != z[j])
                w = ratio / (1 - ratio * s)
                z[i] -= w
                if abs(w) > tiny * (1 + abs(z[i])):
                    done = False
            if done:
                break
        return z


def _to_gauss(z, bits: int):
    s = 1 << bits
    if isinstance(z, complex):
        re, im = z.real, z.imag
        return round(Fraction(re) * s), round(Fraction(im) * s)
    return _mpf_scaled(z.real, bits), _mpf_scaled(z.imag, bits)


def _mpf_scaled(x, bits: int) -> int:
    """round(x * 2**bits) computed exactly from the binary representation."""
    sign, man, exp, _ = x._mpf_
    man = -int(man) if sign else int(man)
    if man == 0:
        return 0
    e = exp + bits
    if e >= 0:
        return man << e
    return round(Fraction(man, 1 << -e))


def _certify(f: IntPoly, approx, bits: int, radius_bits: int):
    """Exact inclusion disks for approximations z_i = (u_i + i v_i) / 2**bits.

    W_i is evaluated in exact Gaussian integers and rounded once to the fixed
    point grid 2**-radius_bits; the rounding is added to the radius.
    Returns a list of RootBox, or None if the boxes are not pairwise disjoint.
    """
    n = f.degree
    pts = [_to_gauss(z, bits) for z in approx]
    if len(set(pts)) < n:
        return None
    R = max(radius_bits, bits)
    s = 1 << bits
    lift = R - bits
    coeffs = f.coeffs
    lc = f.lc
    raw = []
    for i, (u, v) in enumerate(pts):
        # F = f(z) * s^n as a Gaussian integer, by Horner
        fr, fi = coeffs[-1], 0
        spow = 1
        for c in reversed(coeffs[:-1]):
            spow *= s
            fr, fi = fr * u - fi * v + c * spow, fr * v + fi * u
        # P = prod_{j != i} (z_i - z_j) * s^(n-1)
        pr, pi = 1, 0
        for j, (uj, vj) in enumerate(pts):
            if j != i:
                dr, di = u - uj, v - vj
                pr, pi = pr * dr - pi * di, pr * di + pi * dr
        # W = F / (s * lc * P) = F * conj(P) / (s * lc * |P|^2), on the grid 2^-R
        den = s * lc * (pr * pr + pi * pi)
        wr = ((fr * pr + fi * pi) << R) // den
        wi = ((fi * pr - fr * pi) << R) // den
        # floor division: true W lies in [w, w + 1) per component (sign of den > 0 if lc > 0)
        if den < 0:
            wr, wi = -((-(fr * pr + fi * pi) << R) // -den), -((-(fi * pr - fr * pi) << R) // -den)
        cr = (u << lift) - wr
        ci = (v << lift) - wi
        # |W| <= sqrt((|wr|+1)^2 + (|wi|+1)^2); the center error adds at most sqrt(2) < 2 units
        w2 = (abs(wr) + 1) ** 2 + (abs(wi) + 1) ** 2
        rad = (n - 1) * (isqrt(w2) + 1) + 2
        raw.append((cr, ci, rad))
    # disjointness of the boxes on the integer grid
    for i in range(n):
        ai, bi, ri = raw[i]
        for j in range(i + 1, n):
            aj, bj, rj = raw[j]
            if abs(ai - aj) <= ri + rj and abs(bi - bj) <= ri + rj:
                return None
    den = 1 << R
    return [RootBox(Fraction(a, den), Fraction(b, den), Fraction(r, den)) for a, b, r in raw]


class RootIsolator:
    """Incrementally refined certified root isolation for a squarefree polynomial."""

    def __init__(self, f: IntPoly):
        self.f = f
        self.approx = _seeds(f)
        self.prec = 53
        self.boxes = None
        self.bits = 60

    def _rational_roots(self, boxes):
        """Replace boxes around rational roots by exact points."""
        f = self.f
        lc = f.lc
        out = []
        for b in boxes:
            if b.radius and b.im_lo <= 0 <= b.im_hi:
                r = Fraction(round(b.re * lc), lc)
                if b.re_lo <= r <= b.re_hi and f(r) == 0:
                    out.append(RootBox(r, Fraction(0), Fraction(0)))
                    continue
            out.append(b)
        return out

    def isolate(self, eps) -> list:
        eps = Fraction(eps)
        f = self.f
        if f.degree == 1:
            return [RootBox(Fraction(-f.coeffs[0], f.lc), Fraction(0), Fraction(0))]
        while True:
            rb = max(self.bits, bits_for(eps) + 8)
            boxes = _certify(f, self.approx, self.prec + 8, rb)
            if boxes is not None:
                boxes = self._rational_roots(boxes)
                if all(b.width <= eps for b in boxes):
                    self.boxes = boxes
                    return boxes
            if self.prec >= _MAX_BITS:
                raise Inconclusive(f"root isolation of {f} did not converge")
            self.prec = max(2 * self.prec, bits_for(eps) + 16) if boxes is not None else 2 * self.prec
            self.approx = _aberth(f, self.approx, self.prec)
            self.bits = self.prec + 8


def complex_roots(f, eps=Fraction(1, 2**30)) -> list:
    """Certified disjoint boxes of width <= eps, one per root of a squarefree f.

    Boxes are ordered by real part, then imaginary part.
    """
    f = parse_poly(f)
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidInput("eps must be positive")
    if f.degree < 1:
        raise InvalidInput("root isolation needs degree >= 1")
    if poly_gcd(f, f.derivative()).degree > 0:
        raise InvalidInput(f"{f} is not squarefree; split it first")
    boxes = RootIsolator(f).isolate(eps)
    return sorted(boxes, key=lambda b: (b.re, b.im))


# -- Mahler measure ----------------------------------------------------------------


def _classify(box: RootBox):
    """-1 if the disk is inside the unit circle, +1 outside, 0 if it meets it."""
    c2 = box.re * box.re + box.im * box.im
    r = box.radius
    if r < 1 and c2 < (1 - r) ** 2:
        return -1
    if c2 > (1 + r) ** 2:
        return 1
    return 0


def _mahler_enclosures(g: IntPoly, on_circle: int | None = None, min_eps=None):
    """Successively tighter enclosures of M(g) for a primitive squarefree g with g(0) != 0.

    An exact enclosure ends the sequence, as does reaching ``min_eps``.
    """
    n = g.degree
    lc = abs(g.lc)
    if n == 0:
        yield Interval.point(lc)
        return
    if on_circle is None:
        on_circle = unit_circle_root_count(g)
    if on_circle == n:
        yield Interval.point(lc)
        return
    floor_eps = Fraction(1, 2**_MAX_BITS) if min_eps is None else Fraction(min_eps)
    iso = RootIsolator(g)
    eps = Fraction(1, 2**20)
    while True:
        boxes = iso.isolate(eps)
        kinds = [_classify(b) for b in boxes]
        if kinds.count(0) == on_circle:
            outside = [b for b, k in zip(boxes, kinds) if k == 1]
            if not outside:
                yield Interval.point(lc)
                return
            if len(outside) + on_circle == n:
                yield Interval.point(abs(g.coeffs[0]))
                return
            bits = bits_for(eps) + 16
            lo, hi = Fraction(lc), Fraction(lc)
            for b in outside:
                m = b.modulus(bits)
                lo *= m.lo
                hi *= m.hi
            yield Interval(lo, hi)
        if eps <= floor_eps:
            return
        eps = max(eps * eps if eps > Fraction(1, 2**200) else eps / 2**64, floor_eps)


def _mahler_squarefree(g: IntPoly, rel_tol: Fraction, on_circle: int | None = None) -> Interval:
    for iv in _mahler_enclosures(g, on_circle):
        if iv.is_exact or iv.rel_width() <= rel_tol:
            return iv
    raise Inconclusive(f"Mahler measure of {g} not resolved")


def mahler_compare(f: IntPoly, bound, min_eps=Fraction(1, 2**240)):
    """Decide M(f) <= bound for an irreducible f with f(0) != 0.

    Returns (status, enclosure) with status "le", "gt" or "borderline" (undecided
    once the root boxes are narrower than ``min_eps``).
    """
    g = f.primitive()
    c = abs(f.content())
    on = unit_circle_root_count(g) if g.is_reciprocal() else 0
    last = None
    for iv in _mahler_enclosures(g, on, min_eps):
        last = iv * c
        if last.hi <= bound:
            return "le", last
        if last.lo > bound:
            return "gt", last
    return "borderline", last


def mahler_measure(f, rel_tol=None, irreducible: bool = False) -> Interval:
    """Certified enclosure of M(f) = |lc(f)| * prod max(1, |root|) with hi/lo <= 1 + rel_tol.

    The enclosure is exact (lo == hi) whenever no root lies strictly outside
    the unit circle, or no root lies strictly inside it.
    """
    f = parse_poly(f)
    if f.is_zero():
        raise InvalidInput("Mahler measure of the zero polynomial")
    rel_tol = DEFAULT.rel_tol if rel_tol is None else Fraction(rel_tol)
    if rel_tol <= 0:
        raise InvalidInput("tolerance must be positive")
    if irreducible and f.degree >= 1 and f.coeffs[0] != 0:
        g = f.primitive()
        on = unit_circle_root_count(g) if g.is_reciprocal() else 0
        return _mahler_squarefree(g, rel_tol, on) * abs(f.content())
    c, parts = squarefree_decomposition(f)
    total_deg = sum(g.degree * e for g, e in parts) or 1
    part_tol = rel_tol / (2 * total_deg)
    result = Interval.point(abs(c))
    for g, e in parts:
        k = 0
        while g.coeffs[0] == 0:
            g = IntPoly(g.coeffs[1:])
            k += 1
        m = _mahler_squarefree(g, part_tol)
        result = result * m**e
    if not result.is_exact and result.rel_width() > rel_tol:
        # unreachable with the per-part budget, kept as a guard
        return mahler_measure(f, rel_tol / 2)  # pragma: no cover
    return result


# -- heights -----------------------------------------------------------------------


def weil_height(alpha, rel_tol=None) -> Interval:
    """H(alpha) = M(minpoly)^(1/deg) as a certified enclosure; lo >= 1."""
    rel_tol = DEFAULT.rel_tol if rel_tol is None else Fraction(rel_tol)
    if isinstance(alpha, AlgebraicNumber):
        f = alpha.minpoly
    else:
        f = parse_poly(alpha)
        if f.degree < 1:
            raise InvalidInput("minimal polynomial must have degree >= 1")
        if not is_irreducible(f):
            raise Reducible(f"{f} is not irreducible")
    f = f.primitive()
    n = f.degree
    m = mahler_measure(f, rel_tol / 4, irreducible=True)
    if n == 1:
        return m
    lo = nth_root(m.lo, n, rel_tol / 4).lo
    hi = nth_root(m.hi, n, rel_tol / 4).hi
    return Interval(max(lo, Fraction(1)), max(hi, Fraction(1)))


def projective_height_Q(coords) -> Fraction:
    """Exact H(P) for P in P^n(Q): clear denominators, divide by the gcd, take max |x_i|."""
    qs = [Fraction(c) for c in coords]
    if not qs or all(q == 0 for q in qs):
        raise InvalidInput("the zero vector is not a projective point")
    den = 1
    for q in qs:
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(q * den) for q in qs]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return Fraction(max(abs(a) for a in ints) // g)


def places_Q(alpha) -> dict:
    """|alpha|_v at every place of Q where it differs from 1 ('inf' for the real place)."""
    from .intfactor import factor_integer

    q = Fraction(alpha)
    if q == 0:
        raise InvalidInput("absolute values of 0 are all 0")
    out = {"inf": abs(q)}
    for n, sign in ((q.numerator, 1), (q.denominator, -1)):
        for p, e in factor_integer(n).primes.items():
            out[p] = Fraction(p) ** (-sign * e)
    return out
