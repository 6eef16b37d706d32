"""
Heights of algebraic numbers
============================

Mahler measures and Weil heights as certified intervals with rational endpoints.
"""

# %%
from fractions import Fraction

from northcott import AlgebraicNumber, mahler_measure, weil_height
from northcott.heights import complex_roots, unit_circle_root_count

tol = Fraction(1, 2**40)

# %% The golden ratio: M(x^2-x-1) = phi, so H = sqrt(phi)
h = weil_height("x^2-x-1", tol)
print("H(phi)        =", h.decimal(15))
print("  endpoints   :", h.lo, h.hi)

# %% Lehmer's polynomial has the smallest Mahler measure known above 1
lehmer = "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"
print("M(Lehmer)     =", mahler_measure(lehmer, tol).decimal(15))
print("roots on |z|=1:", unit_circle_root_count(AlgebraicNumber.from_poly(lehmer).minpoly))

# %% Kronecker: roots of unity have height exactly 1, with no rounding at all
for f in ["x^2+1", "x^4+1", "x^6+x^5+x^4+x^3+x^2+x+1", "x^4-x^2+1"]:
    print(f"{f:28s}", weil_height(f).to_json()["kind"], weil_height(f).lo)

# %% Exact values also appear when every root sits on one side of the circle
print("M(x^2+2x+4) =", mahler_measure("x^2+2x+4"))   # both roots have modulus 2
print("H(2^(1/3))  =", weil_height("x^3-2", tol).decimal())

# %% H(alpha) = H(1/alpha) = H(-alpha)
for f in ["3x^3-x+1", "x^3-x^2+3", "3x^3-x-1"]:   # alpha, 1/alpha, -alpha
    print(f, weil_height(f, tol).decimal())

# %% Root isolation behind all of this: disjoint boxes, one root each
for box in complex_roots(AlgebraicNumber.from_poly("x^3-2").minpoly, Fraction(1, 2**20)):
    print(float(box.re), float(box.im), "radius", float(box.radius))
