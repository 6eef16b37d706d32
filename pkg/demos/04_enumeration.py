"""
Finitely many points of bounded degree and height
=================================================

An explicit search lists every algebraic number of degree <= d and height <= X,
then the discriminant bound is checked on the whole list.
"""

# %%
import time
from fractions import Fraction

from northcott import EnumerationRequest, count_degree1, enumerate_bounded, verify_silverman
from northcott.heights import AlgebraicNumber

# %% Degree one is just reduced fractions
for X in [1, 2, 3, 5, 10]:
    print(X, count_degree1(X), enumerate_bounded(EnumerationRequest(1, X)).number_count)

# %% Counts grow quickly with X and d
for d, X in [(2, 1), (2, 2), (3, Fraction(3, 2)), (3, 2)]:
    t = time.perf_counter()
    r = enumerate_bounded(EnumerationRequest(d, X))
    print(f"d<={d} X={X}: {len(r.polynomials):6d} polynomials, {r.number_count:6d} numbers, "
          f"{time.perf_counter() - t:.1f} s", r.count_by_degree())

# %% Height one, degree <= 4: zero and roots of unity only
print([str(f) for f in enumerate_bounded(EnumerationRequest(4, 1)).polynomials])

# %% The float stage only rejects; every accepted polynomial passed an exact test
r = enumerate_bounded(EnumerationRequest(3, 2, "exact_degree"))
print(r.stats)

# %% Silverman's bound on a slice of the corpus
sample = r.polynomials[::200]
t = time.perf_counter()
verdicts = [verify_silverman(AlgebraicNumber(f)).verdict for f in sample]
print(len(sample), "checked,", verdicts.count("verified"), "verified,", f"{time.perf_counter() - t:.1f} s")
