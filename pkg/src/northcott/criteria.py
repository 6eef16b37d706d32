"""Evaluators for height lower bounds and Northcott-type criteria.

Every transcendental quantity is a certified enclosure with rational
endpoints.  Integer inputs (discriminant norms, primes, ramification data)
are echoed verbatim in the JSON reports so each value can be audited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .config import DEFAULT, Config
from .errors import CapExceeded, IndexObstruction, InvalidInput
from .heights import AlgebraicNumber, weil_height
from .interval import Interval, exp_interval, log_interval, nth_root
from .intfactor import is_prime, require_prime
from .numfield import (
    Embedding,
    NumberField,
    compose_embeddings,
    compositum,
    find_embeddings,
    nf_create,
    rel_disc_norm,
    splitting,
)

__all__ = [
    "silverman_bound",
    "verify_silverman",
    "SilvermanReport",
    "SilvermanCase",
    "gamma_lower_bound",
    "GammaEstimate",
    "GammaEntry",
    "TowerSpec",
    "TowerStep",
    "tower_terms",
    "TowerReport",
    "TowerTerm",
    "radical_tower_check",
    "RadicalTowerReport",
    "BZData",
    "BZResult",
    "bz_partial_sum",
    "tame_exponent_check",
    "TameReport",
]

UNVERIFIED = "unverified discriminant"


def _tol(rel_tol, config: Config | None) -> Fraction:
    cfg = config or DEFAULT
    return cfg.rel_tol if rel_tol is None else Fraction(rel_tol)


# -- Silverman bounds ----------------------------------------------------------------


def silverman_bound(N: int, m: int, d: int, form: str = "simplified", rel_tol=None) -> Interval:
    """Lower bound for H(alpha) with [F:Q] = m, [F(alpha):F] = d and N = N_{F/Q}(D_{F(alpha)/F}).

    simplified: (1/2) N^(1/(2 m d^2));  sharp: d^(-1/(2(d-1))) N^(1/(2 m d (d-1))).
    """
    rel_tol = _tol(rel_tol, None)
    N, m, d = int(N), int(m), int(d)
    if N < 1 or m < 1 or d < 1:
        raise InvalidInput("need N >= 1, m >= 1, d >= 1")
    if form == "simplified":
        return nth_root(N, 2 * m * d * d, rel_tol) * Fraction(1, 2)
    if form == "sharp":
        if d < 2:
            raise InvalidInput("the sharp bound needs d >= 2")
        # one root of N / d^(m d) keeps equality cases exact
        return nth_root(Fraction(N, d ** (m * d)), 2 * m * d * (d - 1), rel_tol)
    raise InvalidInput(f"unknown bound form {form!r}")


@dataclass(frozen=True)
class SilvermanCase:
    field: str
    d: int
    N: int
    bound_simplified: Interval
    bound_sharp: Interval | None
    verdict: str
    flags: tuple = ()

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "d": self.d,
            "N": self.N,
            "bound_simplified": self.bound_simplified.to_json(),
            "bound_sharp": self.bound_sharp.to_json() if self.bound_sharp else None,
            "verdict": self.verdict,
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class SilvermanReport:
    """H(alpha) against both bounds, once per field K = F(alpha') over the conjugates alpha'."""

    alpha: str
    base_field: str
    m: int
    height: Interval
    cases: tuple
    verdict: str

    @property
    def d(self) -> int:
        return self.cases[0].d

    @property
    def N(self) -> int:
        return self.cases[0].N

    @property
    def bound_simplified(self) -> Interval:
        return self.cases[0].bound_simplified

    @property
    def bound_sharp(self):
        return self.cases[0].bound_sharp

    def to_json(self) -> dict:
        return {
            "criterion": "silverman",
            "alpha_minpoly": self.alpha,
            "base_field": self.base_field,
            "m": self.m,
            "height": self.height.to_json(),
            "cases": [c.to_json() for c in self.cases],
            "verdict": self.verdict,
        }


def _compare(height: Interval, bound: Interval) -> str:
    if height.lo >= bound.hi:
        return "verified"
    if height.hi < bound.lo:
        return "violated"
    return "inconclusive"


def _silverman_fields(alpha: AlgebraicNumber, F: NumberField | None, config):
    """[(K, d, N, flags)] for every field generated over F by a conjugate of alpha."""
    g = alpha.minpoly.monic_transform()
    if F is None or F.degree == 1:
        K = nf_create(g, config=config)
        flags = (UNVERIFIED,) if K.unverified else ()
        return 1, "Q", [(K, K.degree, abs(K.disc), flags)]
    A = nf_create(g, config=config)
    out = []
    for c in compositum(A, F, config):
        K = c.field
        N = rel_disc_norm(K, F, c.from_F)
        flags = (UNVERIFIED,) if (K.unverified or F.unverified) else ()
        out.append((K, K.degree // F.degree, N, flags))
    return F.degree, F.label, out


def verify_silverman(alpha, F: NumberField | None = None, rel_tol=None, config: Config | None = None) -> SilvermanReport:
    """Certify H(alpha) >= both Silverman bounds for K = F(alpha).

    Overlapping enclosures are recomputed at squared tolerance down to the
    configured precision cap, after which the case is reported inconclusive.
    """
    cfg = config or DEFAULT
    tol = _tol(rel_tol, cfg)
    if not isinstance(alpha, AlgebraicNumber):
        alpha = AlgebraicNumber.from_poly(alpha)
    m, base, fields = _silverman_fields(alpha, F, cfg)
    cases = []
    height = None
    for K, d, N, flags in fields:
        t = tol
        while True:
            if height is None or height.rel_width() > t:
                height = weil_height(alpha, t)
            simp = silverman_bound(N, m, d, "simplified", t)
            sharp = silverman_bound(N, m, d, "sharp", t) if d >= 2 else None
            verdicts = [_compare(height, simp)] + ([_compare(height, sharp)] if sharp else [])
            if "violated" in verdicts:
                verdict = "violated"
            elif all(v == "verified" for v in verdicts):
                verdict = "verified"
            else:
                verdict = "inconclusive"
            if verdict != "inconclusive" or t <= cfg.precision_cap:
                break
            t = max(t * t, cfg.precision_cap)
        cases.append(SilvermanCase(K.label, d, N, simp, sharp, verdict, flags))
    vs = {c.verdict for c in cases}
    overall = "violated" if "violated" in vs else ("inconclusive" if "inconclusive" in vs else "verified")
    return SilvermanReport(str(alpha.minpoly), base, m, height, tuple(cases), overall)


# -- gamma ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GammaEntry:
    candidate: str
    factor: str
    N: int
    exponent: int
    value: Interval
    compatible: bool
    flags: tuple = ()

    def to_json(self) -> dict:
        return {
            "candidate": self.candidate,
            "compositum_factor": self.factor,
            "N": self.N,
            "exponent_denominator": self.exponent,
            "value": self.value.to_json(),
            "K_compatible": self.compatible,
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class GammaEstimate:
    """Lower bound for gamma(M/K) over a finite candidate family."""

    M: str
    K: str
    entries: tuple
    best: Interval | None
    skipped: tuple = ()

    def to_json(self) -> dict:
        return {
            "criterion": "gamma",
            "kind": "lower bound over the candidate family",
            "M": self.M,
            "K": self.K,
            "entries": [e.to_json() for e in self.entries],
            "best": self.best.to_json() if self.best else None,
            "skipped": list(self.skipped),
        }


def _default_embedding(K: NumberField, T: NumberField) -> Embedding:
    if K.degree == 1:
        return Embedding(K, T, T.element([K.gen().coords[0]]))
    embs = find_embeddings(K, T)
    if not embs:
        raise InvalidInput(f"{K.label} does not embed in {T.label}")
    return embs[0]


def gamma_lower_bound(M: NumberField, K: NumberField, candidates, emb_KM: Embedding | None = None, rel_tol=None, config: Config | None = None) -> GammaEstimate:
    """Values N_{F/Q}(D_{MF/F})^(1/([MF:Q][MF:F])) for each candidate F and compositum factor MF.

    ``candidates`` holds fields F or pairs (F, embedding K -> F).  A factor is
    K-compatible when the two induced embeddings of K into MF agree; the best
    value is taken over compatible factors only.
    """
    cfg = config or DEFAULT
    tol = _tol(rel_tol, cfg)
    emb_KM = emb_KM or _default_embedding(K, M)
    entries, skipped = [], []
    for cand in candidates:
        F, emb_KF = cand if isinstance(cand, tuple) else (cand, None)
        emb_KF = emb_KF or _default_embedding(K, F)
        try:
            factors = compositum(M, F, cfg)
        except CapExceeded as exc:
            skipped.append(f"{F.label}: {exc}")
            continue
        for c in factors:
            L = c.field
            N = rel_disc_norm(L, F, c.from_F)
            e = L.degree * (L.degree // F.degree)
            via_M = compose_embeddings(emb_KM, c.from_M).image
            via_F = compose_embeddings(emb_KF, c.from_F).image
            flags = (UNVERIFIED,) if (L.unverified or F.unverified) else ()
            entries.append(GammaEntry(F.label, L.label, N, e, nth_root(N, e, tol), via_M == via_F, flags))
    compat = [e.value for e in entries if e.compatible]
    best = max(compat, key=lambda v: (v.lo, v.hi)) if compat else None
    return GammaEstimate(M.label, K.label, tuple(entries), best, tuple(skipped))


# -- towers --------------------------------------------------------------------------


@dataclass
class TowerStep:
    field: NumberField
    embedding: Embedding | None = None  # from the previous field
    intermediates: list = field(default_factory=list)  # [(M, embedding previous -> M)]


@dataclass
class TowerSpec:
    steps: list  # steps[0] is K_0; its embedding is ignored

    @classmethod
    def from_json(cls, obj, config: Config | None = None) -> TowerSpec:
        from .numfield import embedding_from_json, field_from_json

        fields = [field_from_json(o, config) for o in obj.get("fields", [])]
        by_label = {f.label: f for f in fields}
        if len(by_label) != len(fields):
            raise InvalidInput("tower field labels must be distinct")
        embs = {}
        for o in obj.get("embeddings", []):
            e = embedding_from_json(o, by_label)
            embs[(e.source.label, e.target.label)] = e
        steps = [TowerStep(fields[0])] if fields else []
        for prev, cur in zip(fields, fields[1:]):
            steps.append(TowerStep(cur, embs.get((prev.label, cur.label))))
        for item in obj.get("intermediates", []):
            i = int(item["step"])
            if not 1 <= i < len(steps):
                raise InvalidInput(f"intermediate step index {i} out of range")
            prev = steps[i - 1].field
            for fo in item["fields"]:
                Mf = field_from_json(fo, config)
                local = {prev.label: prev, Mf.label: Mf}
                eo = fo.get("embedding")
                emb = embedding_from_json(eo, local) if eo else _default_embedding(prev, Mf)
                steps[i].intermediates.append((Mf, emb))
        return cls(steps)


@dataclass(frozen=True)
class TowerTerm:
    step: int
    relative_degree: int
    status: str  # complete | incomplete
    value: Interval | None
    candidates: tuple  # (label, N, exponent, value)
    flags: tuple = ()

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "relative_degree": self.relative_degree,
            "status": self.status,
            "value": self.value.to_json() if self.value else None,
            "candidates": [{"field": lab, "N": N, "exponent_denominator": e, "value": v.to_json()} for lab, N, e, v in self.candidates],
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class TowerReport:
    terms: tuple
    growth: str

    def values(self):
        return [t.value for t in self.terms]

    def to_json(self) -> dict:
        return {"criterion": "tower", "terms": [t.to_json() for t in self.terms], "growth": self.growth}


def _is_prime_int(n: int) -> bool:
    return n >= 2 and is_prime(n)


def tower_terms(spec: TowerSpec, rel_tol=None, config: Config | None = None) -> TowerReport:
    """term_i = min over K_{i-1} < M <= K_i of N_{K_{i-1}/Q}(D_{M/K_{i-1}})^(1/([M:K_0][M:K_{i-1}]))."""
    cfg = config or DEFAULT
    tol = _tol(rel_tol, cfg)
    steps = spec.steps
    if not steps:
        return TowerReport((), "empty")
    K0 = steps[0].field
    terms = []
    for i in range(1, len(steps)):
        prev, cur = steps[i - 1].field, steps[i].field
        if cur.degree % prev.degree or cur.degree == prev.degree:
            raise InvalidInput(f"step {i}: [{cur.label}:Q] must be a proper multiple of [{prev.label}:Q]")
        emb = steps[i].embedding or _default_embedding(prev, cur)
        rel = cur.degree // prev.degree
        pool = [(cur, emb)] + list(steps[i].intermediates)
        cands = []
        flags = set()
        for Mf, e in pool:
            if Mf.degree % prev.degree or Mf.degree == prev.degree:
                raise InvalidInput(f"step {i}: intermediate {Mf.label} is not a proper extension")
            N = rel_disc_norm(Mf, prev, e)
            ex = (Mf.degree // K0.degree) * (Mf.degree // prev.degree)
            cands.append((Mf.label, N, ex, nth_root(N, ex, tol)))
            if Mf.unverified or prev.unverified:
                flags.add(UNVERIFIED)
        complete = _is_prime_int(rel) or bool(steps[i].intermediates)
        if complete:
            # the minimum of enclosures: lo = min lo, hi = min hi
            value = Interval(min(c[3].lo for c in cands), min(c[3].hi for c in cands))
            status = "complete"
        else:
            value = None
            status = "incomplete"
        terms.append(TowerTerm(i, rel, status, value, tuple(cands), tuple(sorted(flags))))
    return TowerReport(tuple(terms), _growth([t.value for t in terms]))


def _growth(values) -> str:
    if not values:
        return "empty"
    if any(v is None for v in values):
        return "undetermined (incomplete steps)"
    if len(values) == 1:
        return "single term"
    pairs = list(zip(values, values[1:]))
    if all(a.hi < b.lo for a, b in pairs):
        return "strictly increasing"
    if all(a.hi <= b.lo for a, b in pairs):
        return "nondecreasing"
    if any(a.lo > b.hi for a, b in pairs):
        return "not increasing"
    return "undetermined (overlapping enclosures)"


# -- radical towers ----------------------------------------------------------------------


@dataclass(frozen=True)
class RadicalTowerReport:
    primes: tuple
    degrees: tuple
    terms: tuple
    window: int
    window_minima: tuple
    strictly_increasing: bool
    verdict: str

    def max_term(self):
        return max(self.terms, key=lambda v: v.hi) if self.terms else None

    def to_json(self) -> dict:
        mx = self.max_term()
        return {
            "criterion": "radical_tower",
            "primes": list(self.primes),
            "degrees": list(self.degrees),
            "terms": [t.to_json() for t in self.terms],
            "window": self.window,
            "window_minima": [w.to_json() for w in self.window_minima],
            "strictly_increasing": self.strictly_increasing,
            "max_term": mx.to_json() if mx else None,
            "verdict": self.verdict,
        }


def _interval_min(ivs) -> Interval:
    return Interval(min(v.lo for v in ivs), min(v.hi for v in ivs))


def radical_tower_check(spec, window: int | None = None, abs_tol=None, config: Config | None = None) -> RadicalTowerReport:
    """s_i = log(p_i) / d_i with a finite-prefix verdict.

    The minima of consecutive windows of width W are compared; certified
    strict growth of these minima reads as consistent with divergence,
    anything else as consistent with boundedness.
    """
    cfg = config or DEFAULT
    W = cfg.tower_window if window is None else int(window)
    if W < 1:
        raise InvalidInput("window width must be >= 1")
    tol = Fraction(1, 2**40) if abs_tol is None else Fraction(abs_tol)
    pairs = [(require_prime(p), int(d)) for p, d in spec]
    primes = tuple(p for p, _ in pairs)
    degs = tuple(d for _, d in pairs)
    if any(d < 1 for d in degs):
        raise InvalidInput("degrees d_i must be >= 1")
    if any(a >= b for a, b in zip(primes, primes[1:])):
        raise InvalidInput("primes must be strictly increasing")
    terms = tuple(log_interval(p, tol) * Fraction(1, d) for p, d in pairs)
    strict = all(a.hi < b.lo for a, b in zip(terms, terms[1:]))
    if not terms:
        return RadicalTowerReport(primes, degs, (), W, (), True, "empty")
    w = min(W, len(terms))
    minima = tuple(_interval_min(terms[j : j + w]) for j in range(len(terms) - w + 1))
    growing = len(minima) >= 2 and all(a.hi < b.lo for a, b in zip(minima, minima[1:]))
    verdict = "consistent with divergence" if growing else "consistent with boundedness"
    return RadicalTowerReport(primes, degs, terms, W, minima, strict, verdict)


# -- ramification sums -------------------------------------------------------------


@dataclass(frozen=True)
class BZData:
    """(p, e_p, f_p) triples with distinct primes, kept sorted by p."""

    entries: tuple

    def __init__(self, entries):
        rows = []
        for item in entries:
            if len(item) != 3:
                raise InvalidInput(f"expected (p, e, f), got {item!r}")
            p, e, f = (int(x) for x in item)
            require_prime(p)
            if e < 1 or f < 1:
                raise InvalidInput(f"e and f must be >= 1 at p = {p}")
            rows.append((p, e, f))
        rows.sort()
        if any(a[0] == b[0] for a, b in zip(rows, rows[1:])):
            raise InvalidInput("primes in ramification data must be distinct")
        object.__setattr__(self, "entries", tuple(rows))

    def __add__(self, other: BZData) -> BZData:
        return BZData(self.entries + other.entries)

    def coefficients(self) -> dict:
        """Exact sum as {p: c_p} meaning sum of c_p * log p."""
        return {p: Fraction(1, 2 * e * (p**f + 1)) for p, e, f in self.entries}


@dataclass(frozen=True)
class BZResult:
    data: BZData
    coefficients: dict
    sum: Interval
    liminf_bound: Interval

    def to_json(self) -> dict:
        return {
            "criterion": "ramification_sum",
            "data": [list(t) for t in self.data.entries],
            "sum_exact": [{"p": p, "coefficient_of_log_p": str(c)} for p, c in sorted(self.coefficients.items())],
            "sum": self.sum.to_json(),
            "liminf_bound": self.liminf_bound.to_json(),
        }


def bz_partial_sum(data, rel_tol=None, config: Config | None = None) -> BZResult:
    """sum = (1/2) sum_p log p / (e_p (p^f_p + 1)), bound = exp(sum)."""
    tol = _tol(rel_tol, config)
    if not isinstance(data, BZData):
        data = BZData(data)
    coeffs = data.coefficients()
    total = Interval.point(0)
    k = max(1, len(coeffs))
    for p, c in coeffs.items():
        total = total + log_interval(p, tol / (4 * k)) * c
    return BZResult(data, coeffs, total, exp_interval(total, tol / 2))


# -- tame ramification ---------------------------------------------------------------


@dataclass(frozen=True)
class TameReport:
    field: str
    claimed_exponent: int
    rows: tuple  # (p, [e...], status)
    largest_ramified: int | None
    passed: bool
    skipped: tuple

    def to_json(self) -> dict:
        return {
            "check": "tame_exponent",
            "field": self.field,
            "claimed_exponent": self.claimed_exponent,
            "primes": [{"p": p, "ramification_indices": es, "status": st} for p, es, st in self.rows],
            "largest_ramified_prime": self.largest_ramified,
            "passed": self.passed,
            "skipped": list(self.skipped),
        }


def tame_exponent_check(M: NumberField, claimed_exponent: int, primes) -> TameReport:
    """For tame primes (p not dividing e) every ramification index e must divide the exponent."""
    n = int(claimed_exponent)
    if n < 1:
        raise InvalidInput("claimed exponent must be >= 1")
    rows, skipped = [], []
    largest = None
    ok = True
    for p in sorted({int(q) for q in primes}):
        require_prime(p)
        try:
            rep = splitting(M, p)
        except IndexObstruction as exc:
            skipped.append(f"p = {p}: {exc}")
            continue
        es = sorted({e for e, _, _ in rep.factors})
        if any(e > 1 for e in es):
            largest = p
        tame = [e for e in es if e % p]
        wild = [e for e in es if e % p == 0]
        bad = [e for e in tame if n % e]
        if bad:
            ok = False
            status = f"tame index {bad[0]} does not divide {n}"
        elif wild:
            status = "wild (not asserted)"
        else:
            status = "ok"
        rows.append((p, es, status))
    return TameReport(M.label, n, tuple(rows), largest, ok, tuple(skipped))
