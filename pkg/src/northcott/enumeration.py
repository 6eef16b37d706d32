"""Exhaustive enumeration of algebraic numbers of bounded degree and height.

An algebraic number of degree k has H(alpha) <= X exactly when its primitive
minimal polynomial f satisfies M(f) <= X^k.  For k >= 2 the search runs over
the coefficient box given by Mignotte's inequality

    |a_j| <= C(k-1, j) M(f) + C(k-1, j-1) |a_k|

applied to f and to its reversal.  Candidates pass three stages:

1. vectorised necessary conditions: M(f) >= |f(z)| / 2^k for |z| = 1;
2. a floating point rejection that is itself rigorous: Weierstrass inclusion
   disks around numpy eigenvalue roots, with explicit rounding-error terms,
   certify M(f) > X^k for the bulk of the box;
3. for the survivors, exact primitivity, irreducibility and a certified
   Mahler comparison.

Only stage 3 ever accepts a polynomial.  The search is reduced by the
symmetries x -> -x and x -> 1/x, which preserve M(f) and irreducibility.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, floor, gcd
from typing import Callable

import numpy as np

from .config import DEFAULT, Config
from .errors import BudgetExceeded, CapExceeded, DegreeCapExceeded, InvalidInput
from .factor import is_irreducible
from .heights import mahler_compare
from .interval import Interval
from .poly import IntPoly

__all__ = [
    "EnumerationRequest",
    "EnumerationResult",
    "enumerate_bounded",
    "iter_blocks",
    "count_degree1",
    "coefficient_bounds",
    "orbit",
]

_U = 2.0**-53
_MARGIN = 1e-12
_CHUNK = 1 << 17


@dataclass(frozen=True)
class EnumerationRequest:
    d: int
    X: Fraction
    mode: str = "up_to_degree"  # or exact_degree
    borderline_policy: str = "flag"  # include | exclude | flag

    def __post_init__(self):
        object.__setattr__(self, "X", Fraction(self.X))
        object.__setattr__(self, "d", int(self.d))

    def validate(self, config: Config):
        if self.d < 1:
            raise InvalidInput("degree must be >= 1")
        if self.X < 1:
            raise InvalidInput("height bound X must be >= 1")
        if self.mode not in ("up_to_degree", "exact_degree"):
            raise InvalidInput(f"unknown mode {self.mode!r}")
        if self.borderline_policy not in ("include", "exclude", "flag"):
            raise InvalidInput(f"unknown borderline policy {self.borderline_policy!r}")
        if self.d > config.max_enum_degree:
            raise DegreeCapExceeded(f"degree {self.d} exceeds the enumeration cap {config.max_enum_degree}")
        if self.X > config.max_enum_height:
            raise CapExceeded(f"height bound {self.X} exceeds the enumeration cap {config.max_enum_height}")

    def degrees(self):
        return [self.d] if self.mode == "exact_degree" else list(range(1, self.d + 1))


@dataclass
class EnumerationResult:
    request: EnumerationRequest
    polynomials: list  # canonical order
    mahler: dict  # IntPoly -> Interval
    borderline: list
    stats: dict = field(default_factory=dict)

    @property
    def number_count(self) -> int:
        return sum(f.degree for f in self.polynomials)

    def count_by_degree(self) -> dict:
        out = {}
        for f in self.polynomials:
            out[f.degree] = out.get(f.degree, 0) + 1
        return out

    def records(self):
        for f in self.polynomials:
            m = self.mahler[f]
            yield {"poly": str(f), "degree": f.degree, "mahler_lo": str(m.lo), "mahler_hi": str(m.hi)}

    def summary(self) -> dict:
        r = self.request
        return {
            "summary": True,
            "d": r.d,
            "X": str(r.X),
            "mode": r.mode,
            "borderline_policy": r.borderline_policy,
            "polynomial_count": len(self.polynomials),
            "number_count": self.number_count,
            "count_by_degree": {str(k): v for k, v in sorted(self.count_by_degree().items())},
            "borderline": [{"poly": str(f), "mahler_lo": str(self.mahler[f].lo), "mahler_hi": str(self.mahler[f].hi)} for f in self.borderline],
            "stats": {k: self.stats[k] for k in sorted(self.stats)},
        }

    def json_lines(self):
        for rec in self.records():
            yield json.dumps(rec, sort_keys=True)
        yield json.dumps(self.summary(), sort_keys=True)


def count_degree1(X) -> int:
    """Reduced fractions p/q (q > 0) with max(|p|, q) <= X, by a direct double loop."""
    X = Fraction(X)
    if X < 1:
        raise InvalidInput("X must be >= 1")
    b = floor(X)
    return sum(1 for q in range(1, b + 1) for p in range(-b, b + 1) if gcd(p, q) == 1)


def coefficient_bounds(k: int, T, lc: int, a0: int):
    """Bounds on |a_1|..|a_{k-1}| for degree-k f with M(f) <= T, lc(f) = lc and f(0) = a0."""
    T = Fraction(T)
    out = []
    for j in range(1, k):
        direct = comb(k - 1, j) * T + comb(k - 1, j - 1) * abs(lc)
        rev = comb(k - 1, k - j) * T + comb(k - 1, k - j - 1) * abs(a0)
        out.append(floor(min(direct, rev)))
    return out


def _normalize(coeffs) -> IntPoly:
    f = IntPoly(coeffs)
    return -f if f.lc < 0 else f


def orbit(f: IntPoly):
    """Images of f under x -> -x and x -> 1/x, normalised to positive leading coefficient."""
    m = _normalize(f.mirror().coeffs)
    out = {f, m}
    if f.coeffs[0] != 0:
        out.add(_normalize(f.reverse().coeffs))
        out.add(_normalize(m.reverse().coeffs))
    return out


# -- float stage ---------------------------------------------------------------------------


def _unit_circle_reject(C: np.ndarray, bound: float) -> np.ndarray:
    """True where M(f) >= |f(z)| / 2^k exceeds the bound for z in {1, -1, i}."""
    k = C.shape[1] - 1
    lim = bound * 2.0**k * (1 + _MARGIN)
    f1 = np.abs(C.sum(axis=1))
    sign = np.where(np.arange(k + 1) % 2 == 0, 1.0, -1.0)
    fm1 = np.abs(C @ sign)
    # f(i): real part uses exponents 0 mod 4 (+) and 2 mod 4 (-), imaginary 1 and 3
    e = np.arange(k + 1) % 4
    re = C @ np.select([e == 0, e == 2], [1.0, -1.0], 0.0)
    im = C @ np.select([e == 1, e == 3], [1.0, -1.0], 0.0)
    fi = np.hypot(re, im)
    return (f1 > lim) | (fm1 > lim) | (fi > lim)


def _float_reject(C: np.ndarray, bound: float) -> np.ndarray:
    """Certified rejection mask: True only where M(f) > bound is proved.

    Roots z_i come from numpy; W_i = f(z_i) / (lc prod (z_i - z_j)) is bounded
    from above with the a priori Horner error 64 k u sum |a_j| |z|^j, and every
    other rounding is absorbed by relative margins of 1e-12.  With pairwise
    disjoint disks D(z_i, k |W_i|) each disk holds exactly one root, so
    |lc| prod max(1, |z_i| - k |W_i|) is a lower bound for M(f).
    """
    B, k1 = C.shape
    k = k1 - 1
    lc = C[:, k]
    comp = np.zeros((B, k, k))
    if k > 1:
        comp[:, np.arange(1, k), np.arange(k - 1)] = 1.0
    comp[:, :, k - 1] = -C[:, :k] / lc[:, None]
    with np.errstate(all="ignore"):
        z = np.linalg.eigvals(comp)
        az = np.abs(z)
        fz = np.repeat(lc[:, None], k, axis=1).astype(complex)
        S = np.repeat(np.abs(lc)[:, None], k, axis=1)
        for j in range(k - 1, -1, -1):
            fz = fz * z + C[:, j][:, None]
            S = S * az + np.abs(C[:, j])[:, None]
        err = 64 * k * _U * S
        diff = z[:, :, None] - z[:, None, :]
        idx = np.arange(k)
        diff[:, idx, idx] = 1.0
        P = np.abs(np.prod(diff, axis=2))
        W = (np.abs(fz) + err) / (np.abs(lc)[:, None] * P) * (1 + _MARGIN)
        rho = k * W * (1 + _MARGIN) + 1e-300
        ad = np.abs(diff) * (1 - _MARGIN)
        ad[:, idx, idx] = np.inf
        disjoint = np.all(ad > rho[:, :, None] + rho[:, None, :], axis=(1, 2))
        low = np.maximum(1.0, (az - rho) * (1 - _MARGIN))
        mlo = np.abs(lc) * np.prod(low, axis=1) * (1 - _MARGIN)
        ok = np.isfinite(mlo) & np.all(np.isfinite(rho), axis=1)
    return ok & disjoint & (mlo > bound * (1 + _MARGIN))


# -- exact stage ---------------------------------------------------------------------------


def _exact_check(coeffs, T: Fraction, min_eps):
    """('le'|'gt'|'borderline'|'reducible'|'imprimitive', enclosure or None)."""
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g != 1:
        return "imprimitive", None
    f = IntPoly(coeffs)
    if not is_irreducible(f):
        return "reducible", None
    status, iv = mahler_compare(f, T, min_eps)
    return status, iv


def _block_grid(k, bounds, lc, a0, even_half):
    """All coefficient vectors (low to high) in the box for fixed a_0 and a_k."""
    ranges = []
    for j, b in enumerate(bounds, start=1):
        if even_half and j == k - 1:
            ranges.append(np.arange(0, b + 1))
        else:
            ranges.append(np.arange(-b, b + 1))
    grids = np.meshgrid(*ranges, indexing="ij")
    mid = np.stack([g.ravel() for g in grids], axis=1) if ranges else np.zeros((1, 0))
    n = mid.shape[0]
    return np.hstack([np.full((n, 1), a0), mid, np.full((n, 1), lc)]).astype(float)


def _degree_blocks(k: int, T: Fraction):
    """(lc, a0) pairs of the symmetry-reduced search: lc <= |a0|, a0 > 0 for odd k."""
    top = floor(T)
    blocks = []
    for lc in range(1, top + 1):
        for a in range(lc, top + 1):
            for a0 in ((a,) if k % 2 else (a, -a)):
                blocks.append((lc, a0))
    return blocks


def _run_block(args):
    k, T, lc, a0, min_eps = args
    bound = float(T)
    stats = {"candidates": 0, "rejected_unit_circle": 0, "rejected_float": 0, "imprimitive": 0, "reducible": 0, "rejected_exact": 0}
    accepted, borderline = [], []
    bounds = coefficient_bounds(k, T, lc, a0)
    if any(b < 0 for b in bounds):
        return accepted, borderline, stats
    C = _block_grid(k, bounds, lc, a0, k % 2 == 0)
    stats["candidates"] += C.shape[0]
    for s in range(0, C.shape[0], _CHUNK):
        part = C[s : s + _CHUNK]
        m1 = _unit_circle_reject(part, bound)
        stats["rejected_unit_circle"] += int(m1.sum())
        part = part[~m1]
        if part.shape[0] == 0:
            continue
        m2 = _float_reject(part, bound)
        stats["rejected_float"] += int(m2.sum())
        for row in part[~m2]:
            coeffs = [int(x) for x in row]
            status, iv = _exact_check(coeffs, T, min_eps)
            if status in ("imprimitive", "reducible"):
                stats[status] += 1
            elif status == "gt":
                stats["rejected_exact"] += 1
            elif status == "le":
                accepted.append((tuple(coeffs), iv))
            else:
                borderline.append((tuple(coeffs), iv))
    return accepted, borderline, stats


def _expand(entries):
    """Close canonical representatives under the symmetry group."""
    out = {}
    for coeffs, iv in entries:
        for g in orbit(IntPoly(coeffs)):
            out[g] = iv
    return out


@dataclass
class Block:
    """Output of one coefficient block: newly found polynomials only."""

    degree: int
    index: int
    total: int
    accepted: dict  # IntPoly -> Interval
    borderline: dict
    stats: dict


def iter_blocks(req: EnumerationRequest, config: Config | None = None, budget_seconds: float | None = None):
    """Stream the search block by block; each polynomial appears in exactly one block."""
    cfg = config or DEFAULT
    req.validate(cfg)
    start = time.monotonic()
    X = req.X
    seen = set()

    def fresh(d):
        out = {f: iv for f, iv in d.items() if f not in seen}
        seen.update(out)
        return out

    for k in req.degrees():
        if k == 1:
            b = floor(X)
            acc = {IntPoly([-p, q]): Interval.point(max(abs(p), q)) for q in range(1, b + 1) for p in range(-b, b + 1) if gcd(p, q) == 1}
            yield Block(1, 0, 1, fresh(acc), {}, {})
            continue
        T = X**k
        args = [(k, T, lc, a0, cfg.precision_cap) for lc, a0 in _degree_blocks(k, T)]
        if cfg.workers > 1:
            with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
                for i, (acc, bl, st) in enumerate(ex.map(_run_block, args)):
                    _check_budget(start, budget_seconds, k, i, len(args))
                    yield Block(k, i, len(args), fresh(_expand(acc)), fresh(_expand(bl)), st)
        else:
            for i, a in enumerate(args):
                _check_budget(start, budget_seconds, k, i, len(args))
                acc, bl, st = _run_block(a)
                yield Block(k, i, len(args), fresh(_expand(acc)), fresh(_expand(bl)), st)


def enumerate_bounded(
    req: EnumerationRequest,
    config: Config | None = None,
    budget_seconds: float | None = None,
    progress: Callable[[str], None] | None = None,
) -> EnumerationResult:
    """All primitive irreducible f (lc > 0) with deg f in the requested range and M(f) <= X^deg f."""
    polys, border, stats = {}, {}, {}
    for blk in iter_blocks(req, config, budget_seconds):
        polys.update(blk.accepted)
        border.update(blk.borderline)
        for key, v in blk.stats.items():
            stats[key] = stats.get(key, 0) + v
        if progress:
            progress(f"degree {blk.degree}: block {blk.index + 1}/{blk.total}, {len(polys)} accepted")
    listed = dict(polys)
    if req.borderline_policy == "include":
        listed.update(border)
    ordered = sorted(listed, key=IntPoly.sort_key)
    flagged = sorted(border, key=IntPoly.sort_key)
    mahler = {f: listed[f] for f in ordered}
    for f in flagged:
        mahler.setdefault(f, border[f])
    return EnumerationResult(req, ordered, mahler, flagged, stats)


def _check_budget(start, budget, k, i, n):
    if budget is not None and time.monotonic() - start > budget:
        raise BudgetExceeded(f"time budget of {budget} s exhausted in degree {k} after {i}/{n} coefficient blocks")
