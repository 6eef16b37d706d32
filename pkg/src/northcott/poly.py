"""Dense univariate polynomials with integer coefficients.

Coefficients are stored low-to-high degree in an immutable tuple.  The text
format accepted everywhere is either a dense list ``"[c0,c1,...,cd]"`` or an
expression such as ``"x^3 - 2*x + 1"``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import comb, gcd

from .errors import InvalidInput, ParseError

__all__ = [
    "IntPoly",
    "X",
    "parse_poly",
    "poly_gcd",
    "resultant",
    "sylvester_matrix",
    "sylvester_resultant",
    "bareiss_determinant",
    "poly_discriminant",
    "squarefree_decomposition",
    "mignotte_factor_bound",
]


class IntPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self._hash = None

    @classmethod
    def parse(cls, text) -> IntPoly:
        return parse_poly(text)

    @classmethod
    def monomial(cls, n, c=1) -> IntPoly:
        return cls([0] * n + [c])

    @classmethod
    def from_roots(cls, roots) -> IntPoly:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    # -- basic data -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> IntPoly:
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        if c == 1:
            return self
        return IntPoly([a // c for a in self.coeffs])

    def is_primitive(self) -> bool:
        return self.content() == 1

    def sort_key(self):
        return (self.degree, self.coeffs[::-1])

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"IntPoly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            m = abs(a)
            if i == 0:
                body = str(m)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if m == 1 else f"{m}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_list(self) -> list:
        return list(self.coeffs)

    # -- arithmetic -----------------------------------------------------

    def __neg__(self):
        return IntPoly([-a for a in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([a * other for a in self.coeffs])
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact(self, other: IntPoly):
        """Division over the integers; raises if any quotient coefficient is fractional."""
        q, r = _qdivmod(self.coeffs, other.coeffs)
        if any(c.denominator != 1 for c in q) or any(c.denominator != 1 for c in r):
            raise InvalidInput("division is not exact over the integers")
        return IntPoly([int(c) for c in q]), IntPoly([int(c) for c in r])

    def exact_div(self, other: IntPoly) -> IntPoly:
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise InvalidInput(f"{other} does not divide {self}")
        return q

    def divides(self, other: IntPoly) -> bool:
        """True if ``self`` divides ``other`` in Q[x]."""
        return not any(_qdivmod(other.coeffs, self.coeffs)[1])

    def prem(self, other: IntPoly) -> IntPoly:
        """Pseudo-remainder: lc(other)^(deg self - deg other + 1) * self mod other."""
        m, n = self.degree, other.degree
        if n < 0:
            raise ZeroDivisionError("pseudo-remainder by zero")
        if m < n:
            return self
        r = list(self.coeffs)
        b = other.coeffs
        lb = b[-1]
        e = m - n + 1
        for k in range(m - n, -1, -1):
            t = r[k + n]
            r = [lb * x for x in r]
            if t:
                for i in range(n + 1):
                    r[k + i] -= t * b[i]
            e -= 1
            r.pop()
        if e:
            r = [x * lb**e for x in r]
        return IntPoly(r)

    # -- evaluation and transforms --------------------------------------

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly([i * a for i, a in enumerate(self.coeffs)][1:])

    def reverse(self) -> IntPoly:
        """x^deg * f(1/x)."""
        return IntPoly(self.coeffs[::-1])

    def mirror(self) -> IntPoly:
        """f(-x)."""
        return IntPoly([-a if i & 1 else a for i, a in enumerate(self.coeffs)])

    def shift(self, t: int) -> IntPoly:
        """f(x + t) by Taylor shift."""
        c = list(self.coeffs)
        n = len(c)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] += t * c[j + 1]
        return IntPoly(c)

    def scale(self, a: int) -> IntPoly:
        """f(a*x)."""
        return IntPoly([c * a**i for i, c in enumerate(self.coeffs)])

    def compose(self, g: IntPoly) -> IntPoly:
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * g + a
        return acc

    def monic_transform(self) -> IntPoly:
        """lc^(n-1) * f(x / lc): monic with root lc * alpha for every root alpha."""
        a, n = self.lc, self.degree
        return IntPoly([c * a ** (n - 1 - i) if i < n else 1 for i, c in enumerate(self.coeffs)])

    def is_reciprocal(self) -> bool:
        """True if f = +-x^deg f(1/x)."""
        r = self.coeffs[::-1]
        return r == self.coeffs or r == tuple(-a for a in self.coeffs)

    def l2_norm_squared(self) -> int:
        return sum(a * a for a in self.coeffs)

    def height(self) -> int:
        return max((abs(a) for a in self.coeffs), default=0)


X = IntPoly([0, 1])


def _coerce(other):
    if isinstance(other, IntPoly):
        return other
    if isinstance(other, int):
        return IntPoly([other])
    return NotImplemented


def _qdivmod(a, b):
    """Division of coefficient sequences over Q (low-to-high)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in a]
    n = len(b) - 1
    if len(r) - 1 < n:
        return [], r
    q = [Fraction(0)] * (len(r) - n)
    lb = Fraction(b[-1])
    for k in range(len(r) - 1 - n, -1, -1):
        t = r[k + n] / lb
        q[k] = t
        if t:
            for i in range(n + 1):
                r[k + i] -= t * b[i]
    r = r[:n]
    while r and r[-1] == 0:
        r.pop()
    return q, r


# -- parsing ----------------------------------------------------------------

_TERM = re.compile(r"^(\d*)\*?(?:x(?:(?:\^|\*\*)(\d+))?)?$")


def parse_poly(text) -> IntPoly:
    """Parse ``"[c0,...,cd]"`` or an integer expression in ``x``."""
    if isinstance(text, IntPoly):
        return text
    if isinstance(text, (list, tuple)):
        return IntPoly(_ints(text))
    if isinstance(text, int):
        return IntPoly([text])
    s = str(text).strip()
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad coefficient list {s!r}") from exc
        return IntPoly(_ints(data))
    s = s.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    coeffs = {}
    pos = 0
    for m in re.finditer(r"[+-]?[^+-]+", s):
        if m.start() != pos:
            raise ParseError(f"cannot parse {text!r}")
        pos = m.end()
        term = m.group()
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("+-")
        t = _TERM.match(term)
        if not t or not term:
            raise ParseError(f"cannot parse term {term!r} in {text!r}")
        digits, power = t.group(1), t.group(2)
        has_x = "x" in term
        if not has_x and term.endswith("*"):
            raise ParseError(f"cannot parse term {term!r}")
        c = int(digits) if digits else 1
        if not has_x:
            e = 0
        else:
            e = int(power) if power else 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
    if pos != len(s):
        raise ParseError(f"cannot parse {text!r}")
    n = max(coeffs)
    return IntPoly([coeffs.get(i, 0) for i in range(n + 1)])


def _ints(seq):
    out = []
    for a in seq:
        if isinstance(a, bool) or not isinstance(a, (int, str)):
            raise ParseError(f"non-integer coefficient {a!r}")
        try:
            out.append(int(a))
        except ValueError as exc:
            raise ParseError(f"non-integer coefficient {a!r}") from exc
    return out


# -- gcd, resultants, discriminants ----------------------------------------


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient; gcd(0, 0) = 0."""
    a, b = f.primitive(), g.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.prem(b)
        a, b = b, r.primitive()
    return a.primitive()


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant by the subresultant algorithm."""
    if f.is_zero() or g.is_zero():
        return 0
    a, b = f, g
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree & 1 and b.degree & 1:
            s = -1
    if b.degree == 0:
        return s * b.lc**a.degree
    ca, cb = a.content(), b.content()
    a = IntPoly([x // ca for x in a.coeffs])
    b = IntPoly([x // cb for x in b.coeffs])
    t = ca**b.degree * cb**a.degree
    g_ = h = 1
    while True:
        delta = a.degree - b.degree
        if a.degree & 1 and b.degree & 1:
            s = -s
        r = a.prem(b)
        a = b
        if r.is_zero():
            return 0
        div = g_ * h**delta
        b = IntPoly([x // div for x in r.coeffs])
        g_ = a.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g_
        else:
            h = g_**delta // h ** (delta - 1)
        if b.degree == 0:
            da = a.degree
            if da == 0:
                return s * t * h
            num = b.lc**da
            res = num // h ** (da - 1) if da >= 1 else num
            return s * t * res


def sylvester_matrix(f: IntPoly, g: IntPoly):
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc = f.coeffs[::-1]
    gc = g.coeffs[::-1]
    for i in range(n):
        rows.append([0] * i + list(fc) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(gc) + [0] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def sylvester_resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant as the Sylvester determinant; independent of :func:`resultant`."""
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree == 0 and g.degree == 0:
        return 1
    return bareiss_determinant(sylvester_matrix(f, g))


def poly_discriminant(f: IntPoly) -> int:
    d = f.degree
    if d < 1:
        raise InvalidInput("discriminant needs degree >= 1")
    if d == 1:
        return 1
    r = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) & 1 else 1
    q, rem = divmod(r, f.lc)
    assert rem == 0
    return sign * q


def squarefree_decomposition(f: IntPoly):
    """Yun's algorithm.  Returns (content, [(g_i, i), ...]) with f = content * prod g_i^i.

    Every g_i is primitive with positive leading coefficient and degree >= 1.
    """
    if f.is_zero():
        raise InvalidInput("zero polynomial has no squarefree decomposition")
    c = f.content()
    if f.lc < 0:
        c = -c
    out = []
    if f.degree < 1:
        return c, out
    p = _monic_q(f.coeffs)
    dp = _deriv_q(p)
    a = _gcd_q(p, dp)
    b = _exact_q(p, a)
    cc = _exact_q(dp, a)
    d = _sub_q(cc, _deriv_q(b))
    i = 1
    while len(b) > 1:
        a = _gcd_q(b, d)
        if len(a) > 1:
            out.append((_primitive_from_q(a), i))
        b = _exact_q(b, a)
        cc = _exact_q(d, a)
        d = _sub_q(cc, _deriv_q(b))
        i += 1
    return c, out


# Yun's iteration is carried out in Q[x] on monic coefficient lists.


def _monic_q(a):
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


def _exact_q(a, b):
    q, r = _qdivmod(a, b)
    assert not r
    return q


def _deriv_q(p):
    return [i * a for i, a in enumerate(p)][1:]


def _sub_q(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _gcd_q(a, b):
    """Monic gcd in Q[x]; gcd(a, 0) = monic(a)."""
    a, b = list(a), list(b)
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    return _monic_q(a) if a else a


def _primitive_from_q(q) -> IntPoly:
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPoly([int(c * den) for c in q]).primitive()


def mignotte_factor_bound(f: IntPoly) -> int:
    """Bound on |coefficients| of any integer factor g of f, times |lc(f)|.

    Uses |g_j| <= C(deg g, j) * ||f||_2 with the worst case over j and deg g.
    """
    from math import isqrt

    n = f.degree
    norm = isqrt(f.l2_norm_squared()) + 1
    return max(comb(n, j) for j in range(n + 1)) * norm * abs(f.lc)
