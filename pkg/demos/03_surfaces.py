"""Algebras from triangulated surfaces and cluster-tilted algebras of type tilde A."""

from gentlehh import SurfaceParams, TildeAParams, corpus_entry, h_surface, h_tilde_a, hh_dims_oracle

N = 10

# Annulus with one marked point on each boundary component: the Kronecker algebra.
annulus = h_surface(SurfaceParams(g=0, b=2, c0=0, c1=2, d=0), False, N)
print("annulus h:", annulus)
print("Kronecker oracle:", hh_dims_oracle(corpus_entry("kronecker").presentation, 0, N).dims)

# HH^2 always vanishes for these algebras: f_3 has no z^2 term.
for g in range(3):
    for b in range(1, 4):
        d = max(0, 4 * (1 - g) - 2 * b)  # smallest d with 4(g-1) + 2b + d >= 0
        h = h_surface(SurfaceParams(g, b, d=d), True, N)
        print(f"g={g} b={b} d={d} (char 2): {h}")

for params in [(1, 0, 1, 0), (0, 1, 0, 1), (2, 3, 1, 1)]:
    p = TildeAParams(*params)
    print(params, "c0 =", p.c0, "c1 =", p.c1, "h =", h_tilde_a(p, False, N))
