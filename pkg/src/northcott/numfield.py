"""Number fields: maximal orders, element arithmetic, splitting of primes, composita.

A field is given by a monic irreducible integer polynomial f with root theta.
Elements are rational coordinate vectors over the power basis 1, theta, ...

The maximal order is assembled prime by prime.  For every p with p^2 | disc(f)
the Dedekind criterion either certifies Z[theta] as p-maximal or yields a
first enlargement; the Pohst-Zassenhaus (Round 2) step then enlarges the
order through its ring of multipliers of the p-radical until it stabilises.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import modp
from .config import DEFAULT, Config
from .errors import (
    DegreeCapExceeded,
    IndexObstruction,
    InvalidEmbedding,
    InvalidInput,
    NotMonic,
    Reducible,
)
from .factor import factor_over_Z, is_irreducible
from .intfactor import factor_integer, require_prime
from .linalg import charpoly, det_int, hnf, inverse_q, left_kernel_mod_p, matmul, vecmat
from .poly import IntPoly, parse_poly, poly_discriminant, poly_gcd

__all__ = [
    "NumberField",
    "NfElement",
    "Embedding",
    "PrimeSplitReport",
    "CompositumFactor",
    "nf_create",
    "nf_arith",
    "minimal_polynomial",
    "splitting",
    "rel_disc_norm",
    "compositum",
    "check_embedding",
    "find_embeddings",
    "compose_embeddings",
    "basis_discriminant",
    "field_from_json",
    "embedding_from_json",
    "load_field_file",
]


# -- polynomial helpers over Q modulo a monic integer polynomial -------------------


def _mulmod(a, b, f):
    """Product of coordinate vectors a, b (length n) modulo monic f (int coeffs)."""
    n = len(f) - 1
    prod = [Fraction(0)] * (2 * n - 1) if n else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n):
                prod[k - n + i] -= c * f[i]
    return prod[:n]


# -- fields and elements ---------------------------------------------------------------


class NumberField:
    """Q(theta) for a monic irreducible integer polynomial, with its maximal order."""

    def __init__(self, poly, label: str | None = None, abelian_exponent: int | None = None, config: Config | None = None):
        cfg = config or DEFAULT
        f = parse_poly(poly)
        if f.degree < 1:
            raise InvalidInput("defining polynomial must have degree >= 1")
        if f.lc != 1:
            raise NotMonic(f"defining polynomial {f} is not monic")
        if f.degree > cfg.max_field_degree:
            raise DegreeCapExceeded(f"field degree {f.degree} exceeds the cap {cfg.max_field_degree}")
        if not is_irreducible(f, cfg.max_factor_degree):
            raise Reducible(f"defining polynomial {f} is reducible")
        self.defining_poly = f
        self.degree = f.degree
        self.label = label if label is not None else str(f)
        self.abelian_exponent = abelian_exponent
        self._config = cfg
        self._fc = f.coeffs
        self.poly_disc = poly_discriminant(f)
        self._local_index = {}
        self._maximal_order()

    # -- maximal order ---------------------------------------------------

    def _maximal_order(self):
        n = self.degree
        cfg = self._config
        fac = factor_integer(self.poly_disc, cfg.trial_division_bound, cfg.rho_iterations)
        self.unfactored_cofactor = fac.cofactor
        self.unverified = not fac.complete and not _is_squarefree_certain(fac.cofactor)
        den = 1
        rows = [[int(i == j) for j in range(n)] for i in range(n)]
        for p in fac.square_primes():
            W = _p_maximal_order(self._fc, p)
            d, B = _to_integer_basis(W)
            k = _valuation(_index_from(d, B, n), p)
            self._local_index[p] = k
            if k == 0:
                continue
            new_den = lcm(den, d)
            rows = [[x * (new_den // den) for x in r] for r in rows] + [[x * (new_den // d) for x in r] for r in B]
            den = new_den
            rows = hnf(rows, n)
        self._basis_den = den
        self._basis_rows = rows
        self.index = _index_from(den, rows, n)
        disc, rem = divmod(self.poly_disc, self.index**2)
        assert rem == 0, "index^2 must divide disc(f)"
        self.disc = disc
        self.integral_basis = tuple(tuple(Fraction(x, den) for x in r) for r in rows)

    def local_index_exponent(self, p: int) -> int:
        """v_p of the index [O_K : Z[theta]], computing a p-maximal order if needed."""
        p = require_prime(p)
        if p in self._local_index:
            return self._local_index[p]
        if self.poly_disc % (p * p):
            return 0
        if not self.unverified:
            return 0
        d, B = _to_integer_basis(_p_maximal_order(self._fc, p))
        k = _valuation(_index_from(d, B, self.degree), p)
        self._local_index[p] = k
        return k

    # -- elements --------------------------------------------------------

    def element(self, coords) -> NfElement:
        c = [Fraction(x) for x in coords]
        if len(c) > self.degree:
            raise InvalidInput(f"{len(c)} coordinates for a degree {self.degree} field")
        c += [Fraction(0)] * (self.degree - len(c))
        return NfElement(self, tuple(c))

    def from_poly(self, g) -> NfElement:
        """g(theta) for a rational polynomial g given by low-to-high coefficients or an IntPoly."""
        coeffs = g.coeffs if isinstance(g, IntPoly) else tuple(Fraction(c) for c in g)
        acc = self.zero()
        th = self.gen()
        for c in reversed(coeffs):
            acc = acc * th + c
        return acc

    def gen(self) -> NfElement:
        if self.degree == 1:
            return self.element([-self._fc[0]])
        return self.element([0, 1])

    def zero(self) -> NfElement:
        return self.element([])

    def one(self) -> NfElement:
        return self.element([1])

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.defining_poly == other.defining_poly

    def __hash__(self):
        return hash(("NumberField", self.defining_poly))

    def __repr__(self):
        return f"NumberField({str(self.defining_poly)!r})"

    def to_json(self) -> dict:
        out = {
            "label": self.label,
            "poly": str(self.defining_poly),
            "degree": self.degree,
            "disc": self.disc,
            "poly_disc": self.poly_disc,
            "index": self.index,
            "integral_basis": [[str(x) for x in r] for r in self.integral_basis],
            "verified": not self.unverified,
        }
        if self.unverified:
            out["unfactored_cofactor"] = self.unfactored_cofactor
        if self.abelian_exponent is not None:
            out["abelian_exponent"] = self.abelian_exponent
        return out


def _is_squarefree_certain(c: int) -> bool:
    return c == 1


def _valuation(n: int, p: int) -> int:
    k = 0
    while n and n % p == 0:
        n //= p
        k += 1
    return k


def _index_from(den: int, rows, n: int) -> int:
    q, r = divmod(den**n, abs(det_int(rows)))
    assert r == 0
    return q


def _to_integer_basis(W):
    """Rational basis rows -> (den, HNF rows) with the same Z-span times den."""
    n = len(W)
    den = 1
    for r in W:
        for x in r:
            den = lcm(den, x.denominator)
    rows = [[int(x * den) for x in r] for r in W]
    return den, hnf(rows, n)


def _dedekind(fc, p):
    """Dedekind criterion at p.  Returns None if Z[theta] is p-maximal, else the lift U of f/T mod p."""
    _, facs = modp.factor(list(fc), p)
    g = [1]
    for gi, _ in facs:
        g = modp.mul(g, gi, p)
    h = modp.divmod_p(modp.reduce(fc, p), g, p)[0]
    gh = IntPoly(g) * IntPoly(h)
    F = [(a - b) // p for a, b in zip(_pad(fc, len(gh.coeffs)), _pad(gh.coeffs, len(fc)))]
    t = modp.gcd(modp.gcd(modp.reduce(F, p), g, p), h, p)
    if len(t) <= 1:
        return None
    return modp.divmod_p(modp.reduce(fc, p), t, p)[0]


def _pad(a, n):
    a = list(a)
    return a + [0] * (n - len(a))


def _p_maximal_order(fc, p: int):
    """Rational basis (rows over the power basis) of a p-maximal order containing Z[theta]."""
    n = len(fc) - 1
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    U = _dedekind(fc, p)
    if U is None:
        return ident
    # Z[theta] + U(theta)/p Z[theta]
    th = [Fraction(0)] * n
    if n > 1:
        th[1] = Fraction(1)
    u = [Fraction(c) for c in _pad(U, n)]
    gens = []
    for _ in range(n):
        gens.append([int(c) for c in u])
        u = _mulmod(u, th, fc)
    rows = [[p * int(i == j) for j in range(n)] for i in range(n)] + gens
    B = hnf(rows, n)
    W = [[Fraction(x, p) for x in r] for r in B]
    while True:
        W2 = _round2_step(fc, W, p)
        if W2 is None:
            return W
        W = W2


def _round2_step(fc, W, p):
    """One Pohst-Zassenhaus enlargement of the order with basis W at p; None if p-maximal."""
    n = len(W)
    Winv = inverse_q(W)
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = vecmat(_mulmod(W[i], W[j], fc), Winv)
            assert all(x.denominator == 1 for x in v), "basis does not span a ring"
            table[i][j] = table[j][i] = [int(x) for x in v]

    def mul(x, y, mod=None):
        out = [0] * n
        for a, xa in enumerate(x):
            if xa:
                for b, yb in enumerate(y):
                    if yb:
                        c = xa * yb
                        t = table[a][b]
                        for k in range(n):
                            out[k] += c * t[k]
        return [z % mod for z in out] if mod else out

    # the identity of O in O-coordinates
    one = vecmat([Fraction(1)] + [Fraction(0)] * (n - 1), Winv)
    one = [int(x) for x in one]

    def power1(x, e):
        result = list(one)
        base = x
        while e:
            if e & 1:
                result = mul(result, base, p)
            base = mul(base, base, p)
            e >>= 1
        return result

    q = p
    while q < n:
        q *= p
    basis = [[int(i == j) for j in range(n)] for i in range(n)]
    frob = [power1(b, q) for b in basis]
    rad = left_kernel_mod_p(frob, p)
    # p-radical I as a lattice in O-coordinates
    I = hnf([list(v) for v in rad] + [[p * int(i == j) for j in range(n)] for i in range(n)], n)
    Iinv = inverse_q(I)
    rows = []
    for i in range(n):
        row = []
        for beta in I:
            prod = mul(basis[i], beta)
            coords = vecmat(prod, Iinv)
            row.extend(int(c) % p for c in coords)
        rows.append(row)
    ker = left_kernel_mod_p(rows, p)
    if not ker:
        return None
    Ulat = hnf([list(v) for v in ker] + [[p * int(i == j) for j in range(n)] for i in range(n)], n)
    newW = matmul([[Fraction(x, p) for x in r] for r in Ulat], W)
    return newW


@dataclass(frozen=True, eq=False)
class NfElement:
    parent: NumberField
    coords: tuple

    def _check(self, other):
        if isinstance(other, NfElement):
            if other.parent != self.parent:
                raise InvalidInput("elements of different fields")
            return other
        return self.parent.element([other])

    def __add__(self, other):
        o = self._check(other)
        return NfElement(self.parent, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return NfElement(self.parent, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        if self.parent.degree == 1:
            return NfElement(self.parent, (self.coords[0] * o.coords[0],))
        return NfElement(self.parent, tuple(_mulmod(self.coords, o.coords, self.parent._fc)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.parent.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NfElement):
            return self.parent == other.parent and self.coords == other.coords
        try:
            return self.coords == self.parent.element([other]).coords
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.parent, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def matrix(self):
        """Rows: coordinates of a * theta^i; x -> x * M is multiplication by a."""
        K = self.parent
        th = K.gen()
        rows = []
        b = self
        for _ in range(K.degree):
            rows.append(list(b.coords))
            b = b * th
        return rows

    def inverse(self) -> NfElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        inv = inverse_q(self.matrix())
        return NfElement(self.parent, tuple(inv[0]))

    def trace(self) -> Fraction:
        m = self.matrix()
        return sum((m[i][i] for i in range(len(m))), Fraction(0))

    def norm(self) -> Fraction:
        c = charpoly(self.matrix())
        n = len(c) - 1
        return Fraction(c[0]) * (-1) ** n

    def charpoly(self) -> IntPoly:
        """Characteristic polynomial made primitive over Z (positive leading coefficient)."""
        return _primitive_q(charpoly(self.matrix()))

    def minimal_polynomial(self) -> IntPoly:
        return minimal_polynomial(self)

    def __repr__(self):
        return f"NfElement({self.parent.label}, {[str(c) for c in self.coords]})"

    def to_json(self):
        return [str(c) for c in self.coords]


def _primitive_q(coeffs) -> IntPoly:
    d = 1
    for c in coeffs:
        d = lcm(d, Fraction(c).denominator)
    return IntPoly([int(Fraction(c) * d) for c in coeffs]).primitive()


def nf_create(poly, label=None, abelian_exponent=None, config=None) -> NumberField:
    return NumberField(poly, label, abelian_exponent, config)


def nf_arith(a: NfElement, b: NfElement | None, op: str) -> NfElement:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise InvalidInput(f"unknown operation {op!r}")


def minimal_polynomial(a: NfElement) -> IntPoly:
    """Primitive irreducible polynomial of a: squarefree part of its characteristic polynomial."""
    cp = a.charpoly()
    g = poly_gcd(cp, cp.derivative())
    m = cp.exact_div(g) if g.degree > 0 else cp
    return m.primitive()


def basis_discriminant(elements) -> Fraction:
    """det(Tr(x_i x_j)) for n elements of a degree-n field."""
    n = len(elements)
    m = [[(elements[i] * elements[j]).trace() for j in range(n)] for i in range(n)]
    den = 1
    for r in m:
        for x in r:
            den = lcm(den, x.denominator)
    return Fraction(det_int([[int(x * den) for x in r] for r in m]), den**n)


# -- prime splitting ---------------------------------------------------------------


@dataclass(frozen=True)
class PrimeSplitReport:
    p: int
    degree: int
    factors: tuple  # (e, f, witness IntPoly)

    @property
    def ramified(self) -> bool:
        return any(e > 1 for e, _, _ in self.factors)

    @property
    def sum_ef(self) -> int:
        return sum(e * f for e, f, _ in self.factors)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "degree": self.degree,
            "factors": [{"e": e, "f": f, "witness": str(w)} for e, f, w in self.factors],
            "sum_ef": self.sum_ef,
            "ramified": self.ramified,
        }


def splitting(K: NumberField, p) -> PrimeSplitReport:
    """Kummer-Dedekind: p O_K = prod P_i^{e_i} read off f mod p, for p not dividing the index."""
    p = require_prime(p)
    if K.local_index_exponent(p) > 0:
        raise IndexObstruction(f"p = {p} divides the index of Z[theta] in the maximal order of {K.label}")
    _, facs = modp.factor(list(K.defining_poly.coeffs), p)
    out = []
    for g, e in facs:
        out.append((e, len(g) - 1, IntPoly(g)))
    return PrimeSplitReport(p, K.degree, tuple(out))


# -- embeddings --------------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    source: NumberField
    target: NumberField
    image: NfElement

    def __post_init__(self):
        if self.image.parent != self.target:
            raise InvalidInput("embedding image must lie in the target field")

    def apply(self, a: NfElement) -> NfElement:
        if a.parent != self.source:
            raise InvalidInput("element is not in the source field")
        return _apply(self, a)

    def to_json(self) -> dict:
        return {"source": self.source.label, "target": self.target.label, "image_coords": self.image.to_json()}


def _apply(emb: Embedding, a: NfElement) -> NfElement:
    T = emb.target
    if emb.source.degree == 1:
        return T.element([a.coords[0]])
    acc = T.zero()
    for c in reversed(a.coords):
        acc = acc * emb.image + c
    return acc


def check_embedding(emb: Embedding) -> bool:
    """True iff the source defining polynomial vanishes at the image."""
    if emb.target.degree % emb.source.degree:
        return False
    f = emb.source.defining_poly
    acc = emb.target.zero()
    for c in reversed(f.coeffs):
        acc = acc * emb.image + c
    return acc.is_zero()


def compose_embeddings(first: Embedding, second: Embedding) -> Embedding:
    """second o first: source(first) -> target(second)."""
    if first.target != second.source:
        raise InvalidEmbedding("embeddings do not compose")
    return Embedding(first.source, second.target, _apply(second, first.image))


def _companion(fc):
    n = len(fc) - 1
    rows = []
    for i in range(n - 1):
        rows.append([int(j == i + 1) for j in range(n)])
    rows.append([-c for c in fc[:n]])
    return rows


def sum_resolvent(f: IntPoly, g: IntPoly, t: int) -> IntPoly:
    """prod (a_i + t*b_j) over roots a of f and b of g: Res_y(f(x - t y), g(y)) for monic f, g."""
    A, B = _companion(f.coeffs), _companion(g.coeffs)
    m, n = len(A), len(B)
    M = [[0] * (m * n) for _ in range(m * n)]
    for i in range(m):
        for j in range(n):
            r = i * n + j
            for k in range(m):
                if A[i][k]:
                    M[r][k * n + j] += A[i][k]
            for k in range(n):
                if B[j][k]:
                    M[r][i * n + k] += t * B[j][k]
    return IntPoly(charpoly(M))


def _nfpoly_trim(a):
    while a and a[-1].is_zero():
        a.pop()
    return a


def _nfpoly_rem(a, b):
    a = list(a)
    inv = b[-1].inverse()
    n = len(b) - 1
    while len(a) - 1 >= n:
        c = a[-1] * inv
        k = len(a) - 1 - n
        for i in range(n + 1):
            a[k + i] = a[k + i] - c * b[i]
        a.pop()
        _nfpoly_trim(a)
    return a


def _nfpoly_gcd(a, b):
    a, b = _nfpoly_trim(list(a)), _nfpoly_trim(list(b))
    while b:
        a, b = b, _nfpoly_rem(a, b)
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _nfpoly_mul(a, b, L):
    out = [L.zero() for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _nfpoly_compose_linear(f: IntPoly, lin, L):
    """f(lin) in L[y] for a linear polynomial ``lin`` = [c0, c1] over L."""
    acc = [L.zero()]
    for c in reversed(f.coeffs):
        acc = _nfpoly_mul(acc, lin, L)
        acc[0] = acc[0] + c
    return _nfpoly_trim(acc)


def find_embeddings(source: NumberField, target: NumberField):
    """All embeddings source -> target, via roots of the source polynomial in the target (Trager norms)."""
    if target.degree % source.degree:
        return []
    f = source.defining_poly
    g = target.defining_poly
    L = target
    for s in range(0, 64):
        N = sum_resolvent(f, g, s)
        if poly_gcd(N, N.derivative()).degree == 0:
            break
    else:  # pragma: no cover
        raise InvalidInput("no squarefree Trager norm found")
    theta = L.gen()
    roots = []
    fx = [L.element([c]) for c in f.coeffs]
    for Ni, _ in factor_over_Z(N, max(16, N.degree)):
        if Ni.degree != L.degree:
            continue
        # N_i(x + s*theta) over L
        h = _nfpoly_compose_linear(Ni, [theta * s, L.one()], L)
        d = _nfpoly_gcd(fx, h)
        if len(d) == 2:
            roots.append(-d[0])
    embs = [Embedding(source, target, r) for r in roots]
    for e in embs:
        assert check_embedding(e)
    return sorted(embs, key=lambda e: e.image.coords)


# -- relative discriminants and composita -------------------------------------------


def rel_disc_norm(M: NumberField, F: NumberField, emb: Embedding | None = None) -> int:
    """N_{F/Q}(D_{M/F}) = |D_M| / |D_F|^[M:F]."""
    if M.degree % F.degree:
        raise InvalidEmbedding(f"[{M.label}:Q] is not divisible by [{F.label}:Q]")
    if emb is not None:
        if emb.source != F or emb.target != M or not check_embedding(emb):
            raise InvalidEmbedding(f"{F.label} -> {M.label}: invalid embedding")
    k = M.degree // F.degree
    q, r = divmod(abs(M.disc), abs(F.disc) ** k)
    if r:
        raise InvalidEmbedding(f"|D({F.label})|^{k} does not divide |D({M.label})|")
    return q


@dataclass(frozen=True)
class CompositumFactor:
    """One field generated by M and F, with the witnessed embeddings of both."""

    field: NumberField
    from_M: Embedding
    from_F: Embedding
    shift: int

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "shift": self.shift,
            "embedding_M": self.from_M.to_json(),
            "embedding_F": self.from_F.to_json(),
        }


def compositum(M: NumberField, F: NumberField, config: Config | None = None):
    """One factor per irreducible factor of Res_y(f_M(x - t y), f_F(y)), t >= 1 minimal squarefree."""
    cfg = config or M._config
    if M.degree * F.degree > cfg.max_field_degree:
        raise DegreeCapExceeded(f"compositum degree {M.degree * F.degree} exceeds the cap {cfg.max_field_degree}")
    fM, fF = M.defining_poly, F.defining_poly
    t = 1
    while True:
        R = sum_resolvent(fM, fF, t)
        if poly_gcd(R, R.derivative()).degree == 0:
            break
        t += 1
    out = []
    for Ri, _ in factor_over_Z(R, cfg.max_factor_degree):
        L = NumberField(Ri, config=cfg)
        gamma = L.gen()
        # theta_F is the common root of f_F(y) and f_M(gamma - t y)
        h = _nfpoly_compose_linear(fM, [gamma, L.element([-t])], L)
        d = _nfpoly_gcd([L.element([c]) for c in fF.coeffs], h)
        assert len(d) == 2, "compositum embedding is not unique"
        beta = -d[0]
        eF = Embedding(F, L, beta)
        eM = Embedding(M, L, gamma - beta * t)
        if not (check_embedding(eF) and check_embedding(eM)):  # pragma: no cover
            raise InvalidEmbedding("compositum embedding check failed")
        out.append(CompositumFactor(L, eM, eF, t))
    out.sort(key=lambda c: c.field.defining_poly.sort_key())
    return out


# -- JSON input ------------------------------------------------------------------------


def field_from_json(obj, config: Config | None = None) -> NumberField:
    if "poly" not in obj:
        raise InvalidInput("field description needs a 'poly' entry")
    exp = obj.get("abelian_exponent")
    return NumberField(obj["poly"], obj.get("label"), int(exp) if exp is not None else None, config)


def embedding_from_json(obj, fields: dict) -> Embedding:
    try:
        src, tgt = fields[obj["source"]], fields[obj["target"]]
    except KeyError as exc:
        raise InvalidInput(f"embedding refers to unknown field {exc}") from None
    emb = Embedding(src, tgt, tgt.element([Fraction(c) for c in obj["image_coords"]]))
    if not check_embedding(emb):
        raise InvalidEmbedding(f"{src.label} -> {tgt.label}: image is not a root of the source polynomial")
    return emb


def load_field_file(path, config: Config | None = None):
    """Read a field file: one field object, a list of them, or {"fields": [...], "embeddings": [...]}.

    Returns (fields in file order, embeddings).
    """
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"{path}: {exc}") from None
    if isinstance(data, dict) and "fields" in data:
        fobjs, eobjs = data["fields"], data.get("embeddings", [])
    elif isinstance(data, list):
        fobjs, eobjs = data, []
    else:
        fobjs, eobjs = [data], []
    fields = [field_from_json(o, config) for o in fobjs]
    by_label = {f.label: f for f in fields}
    embs = [embedding_from_json(o, by_label) for o in eobjs]
    return fields, embs
