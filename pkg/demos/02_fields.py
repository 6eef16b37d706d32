"""
Discriminants, splitting and towers
===================================
"""

# %%
from northcott import compositum, find_embeddings, nf_create, rel_disc_norm, splitting

# %% Integral bases and discriminants
for f in ["x^2+1", "x^2-5", "x^3-2", "x^4+1"]:
    K = nf_create(f)
    print(f"{f:8s} disc {K.disc:6d}   disc(f) {K.poly_disc:6d}   index {K.index}")

# %% Dedekind's cubic: 2 divides the index of every Z[alpha], yet the maximal order is found
K = nf_create("x^3-x^2-2x-8")
print("disc", K.disc, "index", K.index)
for row in K.integral_basis:
    print("  ", [str(c) for c in row])

# %% How primes factor in Q(zeta_7): 7 is totally ramified, p = 1 mod 7 splits completely
Z7 = nf_create("x^6+x^5+x^4+x^3+x^2+x+1")
for p in [2, 3, 7, 29]:
    rep = splitting(Z7, p)
    print(p, [(e, f) for e, f, _ in rep.factors])

# %% Towers: |D_M| = |D_F|^[M:F] * N(D_{M/F}) for Q(i), Q(sqrt 2) inside Q(zeta_8)
M = nf_create("x^4+1")
for F in ["x^2+1", "x^2-2", "x^2+2"]:
    Fk = nf_create(F)
    N = rel_disc_norm(M, Fk)
    print(f"{F:6s} N(D_M/F) = {N:3d}   |D_F|^2 * N = {abs(Fk.disc) ** 2 * N}   |D_M| = {abs(M.disc)}")

# %% Embeddings and composita
print([e.image for e in find_embeddings(nf_create("x^2-2"), M)])
for c in compositum(nf_create("x^2-2"), nf_create("x^2-3")):
    print(c.field.defining_poly, "disc", c.field.disc)
