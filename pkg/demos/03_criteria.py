"""
Lower bounds for heights and Northcott-type criteria
====================================================

Each evaluator returns certified intervals; nothing here decides a property of an
infinite field, it only evaluates finite pieces of the relevant sequences.
"""

# %%
from fractions import Fraction

from northcott import (
    bz_partial_sum,
    gamma_lower_bound,
    nf_create,
    radical_tower_check,
    silverman_bound,
    verify_silverman,
)
from northcott.criteria import TowerSpec, tower_terms

# %% Discriminant lower bound for the height, in two strengths
for N, d in [(5, 2), (108, 3), (2304, 4)]:
    a = silverman_bound(N, 1, d, "simplified")
    b = silverman_bound(N, 1, d, "sharp")
    print(f"N={N:5d} d={d}:  simplified {a.decimal(8)}   sharp {b.decimal(8)}")

# %% ... checked against actual heights
for f in ["x^2-5", "x^3-2", "x^2+1", "x^4-10x^2+1", "7x^3-3x+1"]:
    r = verify_silverman(f)
    print(f"{f:14s} H={r.height.decimal(8)}  N={r.N}  {r.verdict}")

# %% Relative version: zeta_8 over Q(i)
r = verify_silverman("x^4+1", nf_create("x^2+1"))
print(r.verdict, [(c.d, c.N) for c in r.cases])

# %% gamma(M/K) can only be bounded from below by a finite candidate family
Q = nf_create("x-1")
est = gamma_lower_bound(nf_create("x^4+1"), Q, [Q, nf_create("x^2+1"), nf_create("x^2-2")])
for e in est.entries:
    print(e.candidate, "->", e.factor, "N =", e.N, "value", e.value.decimal(8), "compatible" if e.compatible else "")
print("best lower bound:", est.best.decimal(8))

# %% Tower terms along Q < Q(sqrt 2) < Q(zeta_8)
spec = TowerSpec.from_json({"fields": [{"poly": "x-1"}, {"poly": "x^2-2"}, {"poly": "x^4+1"}]})
for t in tower_terms(spec).terms:
    print("step", t.step, t.status, t.value.decimal(8))

# %% Radical towers: log(p_i)/d_i
primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
print(radical_tower_check([(p, 1) for p in primes]).verdict)
print(radical_tower_check([(p, p) for p in primes]).verdict)

# %% Ramification sums: the bound grows with every prime that is only mildly ramified
data = []
for p in primes:
    data.append((p, 1, 1))
    print(p, bz_partial_sum(data, Fraction(1, 2**30)).liminf_bound.decimal(8))
