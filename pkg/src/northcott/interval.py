"""Certified real enclosures with rational endpoints.

All transcendental values (logarithms, exponentials, k-th roots) are
computed in fixed-point integer arithmetic with an explicit error count and
returned as closed intervals [lo, hi] that provably contain the true value.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import ceil, isqrt

from .errors import InvalidInput

__all__ = [
    "Interval",
    "HeightInterval",
    "iroot",
    "exact_root",
    "nth_root",
    "log_interval",
    "exp_interval",
    "bits_for",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = _frac(self.lo), _frac(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x) -> Interval:
        x = _frac(x)
        return cls(x, x)

    # -- queries ----------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def rel_width(self) -> Fraction:
        """hi/lo - 1 for positive intervals."""
        if self.lo <= 0:
            raise ValueError("relative width needs a positive interval")
        return self.hi / self.lo - 1

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def certainly_le(self, other) -> bool:
        other = _as_interval(other)
        return self.hi <= other.lo

    def certainly_lt(self, other) -> bool:
        other = _as_interval(other)
        return self.hi < other.lo

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __mul__(self, other):
        other = _as_interval(other)
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_interval(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval division by an interval containing 0")
        return self * Interval(1 / other.hi, 1 / other.lo)

    def __rtruediv__(self, other):
        return _as_interval(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return 1 / self**-n
        if self.lo >= 0 or n % 2 == 1:
            return Interval(self.lo**n, self.hi**n)
        if self.hi <= 0:
            return Interval(self.hi**n, self.lo**n)
        return Interval(Fraction(0), max(self.lo**n, self.hi**n))

    def round_out(self, bits: int) -> Interval:
        """Widen to dyadic endpoints with denominator 2**bits."""
        s = 1 << bits
        lo = Fraction((self.lo.numerator * s) // self.lo.denominator, s)
        hi = Fraction(-((-self.hi.numerator * s) // self.hi.denominator), s)
        return Interval(lo, hi)

    # -- rendering ----------------------------------------------------------

    def decimal(self, digits: int = 12) -> str:
        """Midpoint with an explicit +- radius, or the exact value."""
        if self.is_exact:
            return _dec(self.lo, digits)
        rad = self.width / 2
        return f"{_dec(self.midpoint, digits)} ± {_dec_sci(rad)}"

    def to_json(self, digits: int = 12) -> dict:
        return {
            "kind": "exact" if self.is_exact else "interval",
            "lo": str(self.lo),
            "hi": str(self.hi),
            "decimal": self.decimal(digits),
        }

    def __str__(self):
        return self.decimal()

    def __float__(self):
        return float(self.midpoint)


HeightInterval = Interval


def _as_interval(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.point(x)


def _dec(q: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        d = Decimal(q.numerator) / Decimal(q.denominator)
        text = f"{d:.{digits}g}" if abs(d) >= 1 else f"{d:.{digits}f}"
    if "e" not in text and "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def _dec_sci(q: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 10
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return f"{d:.2e}"


# -- roots ---------------------------------------------------------------


def iroot(a: int, n: int) -> int:
    """floor(a ** (1/n)) for a >= 0."""
    if a < 0:
        raise ValueError("iroot of a negative number")
    if a < 2 or n == 1:
        return a
    if n == 2:
        return isqrt(a)
    x = 1 << -(-a.bit_length() // n)
    while True:
        y = ((n - 1) * x + a // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    while x**n > a:
        x -= 1
    while (x + 1) ** n <= a:
        x += 1
    return x


def exact_root(q: Fraction, n: int):
    """The exact rational n-th root of q >= 0 if it exists, else None."""
    q = _frac(q)
    a, b = q.numerator, q.denominator
    ra, rb = iroot(a, n), iroot(b, n)
    if ra**n == a and rb**n == b:
        return Fraction(ra, rb)
    return None


def bits_for(tol: Fraction) -> int:
    tol = _frac(tol)
    if tol <= 0:
        raise InvalidInput("tolerance must be positive")
    return max(1, ceil(tol.denominator.bit_length() - tol.numerator.bit_length() + 1))


def nth_root(x, n: int, rel_tol=Fraction(1, 2**30)) -> Interval:
    """Enclosure of x**(1/n) for rational x >= 0 with hi/lo <= 1 + rel_tol."""
    x = _frac(x)
    if n < 1:
        raise InvalidInput("root index must be >= 1")
    if x < 0:
        raise InvalidInput("real root of a negative number")
    ex = exact_root(x, n)
    if ex is not None:
        return Interval.point(ex)
    a, b = x.numerator, x.denominator
    k = bits_for(rel_tol) + 2 + max(0, (b.bit_length() - a.bit_length()) // n + 1)
    while True:
        r = iroot((a << (n * k)) // b, n)
        if r > 0:
            iv = Interval(Fraction(r, 1 << k), Fraction(r + 1, 1 << k))
            if iv.rel_width() <= rel_tol:
                return iv
        k += k // 2 + 8


# -- logarithm and exponential ---------------------------------------------------


def _atanh_fixed(num: int, den: int, bits: int):
    """(A, err) with |A / 2**bits - atanh(num/den)| <= err / 2**bits, 0 <= num < den."""
    one = 1 << bits
    p = one * num // den
    num2, den2 = num * num, den * den
    total = 0
    j = 0
    while p:
        total += p // (2 * j + 1)
        p = p * num2 // den2
        j += 1
    # per-term floor losses plus the geometric tail below one unit
    return total, 2 * j + 3


@lru_cache(maxsize=64)
def _log2_fixed(bits: int):
    a, e = _atanh_fixed(1, 3, bits)
    return 2 * a, 2 * e


def log_interval(x, abs_tol=Fraction(1, 2**40)) -> Interval:
    """Enclosure of the natural logarithm of rational x > 0 with width <= abs_tol."""
    x = _frac(x)
    if x <= 0:
        raise InvalidInput("logarithm of a non-positive number")
    if x == 1:
        return Interval.point(0)
    # x = m * 2**e with m in [2/3, 4/3]
    e = x.numerator.bit_length() - x.denominator.bit_length()
    m = x / Fraction(2) ** e
    while m > Fraction(4, 3):
        m /= 2
        e += 1
    while m < Fraction(2, 3):
        m *= 2
        e -= 1
    z = (m - 1) / (m + 1)
    bits = bits_for(abs_tol) + 8 + abs(e).bit_length()
    while True:
        sign = -1 if z < 0 else 1
        a, err = _atanh_fixed(abs(z.numerator), z.denominator, bits)
        l2, err2 = _log2_fixed(bits)
        center = 2 * sign * a + e * l2
        radius = 2 * err + abs(e) * err2
        iv = Interval(Fraction(center - radius, 1 << bits), Fraction(center + radius, 1 << bits))
        if iv.width <= abs_tol:
            return iv
        bits += 16


def _exp_fixed(num: int, den: int, bits: int):
    """(E, err) with |E / 2**bits - exp(num/den)| <= err / 2**bits for |num/den| <= 1/2."""
    one = 1 << bits
    term = one
    total = one
    j = 1
    neg = num < 0
    num = abs(num)
    while term:
        term = term * num // (den * j)
        total += -term if (neg and j % 2) else term
        j += 1
    return total, 2 * j + 8


def exp_interval(x, rel_tol=Fraction(1, 2**30)) -> Interval:
    """Enclosure of exp(x) for a rational or an interval x, hi/lo <= 1 + rel_tol."""
    if isinstance(x, Interval):
        if x.is_exact:
            return exp_interval(x.lo, rel_tol)
        lo = exp_interval(x.lo, rel_tol)
        hi = exp_interval(x.hi, rel_tol)
        return Interval(lo.lo, hi.hi)
    x = _frac(x)
    if x == 0:
        return Interval.point(1)
    s = 0
    y = x
    while abs(y) > Fraction(1, 2):
        y /= 2
        s += 1
    bits = bits_for(rel_tol) + 2 * s + 16 + int(abs(x)) * 2
    while True:
        e, err = _exp_fixed(y.numerator, y.denominator, bits)
        iv = Interval(Fraction(e - err, 1 << bits), Fraction(e + err, 1 << bits))
        for _ in range(s):
            iv = (iv * iv).round_out(bits + 4)
        if iv.lo > 0 and iv.rel_width() <= rel_tol:
            return iv
        bits += bits // 2 + 16
