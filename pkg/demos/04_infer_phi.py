"""How much of phi can be read back from dimension tables.

Characteristic 2 shifts exactly the odd divisor sums psi(k), so comparing the
char 0 and char 2 tables recovers phi(0, k) for odd k by Mobius inversion.
"""

from gentlehh import corpus_entry, hh_dims_oracle, infer_phi_partial, phi
from gentlehh.quiver import euler_characteristic

N = 12
for name in ["dual_numbers", "kronecker", "cycle_Z_3", "Z3_with_arms", "triangle_two_relations"]:
    pres = corpus_entry(name).presentation
    d0, d2 = hh_dims_oracle(pres, 0, N), hh_dims_oracle(pres, 2, N)
    r = infer_phi_partial(d0, d2, euler_characteristic(pres))
    print(name)
    print("  char 0:", d0.dims)
    print("  char 2:", d2.dims)
    print("  phi(1,0) =", r.phi_1_0, " phi(1,1) =", r.phi_1_1)
    print("  phi(0,odd) =", {k: v for k, v in r.phi_0_odd.items() if v})
    if r.finite_gldim:
        print("  finite global dimension; phi(1,n) =", {n: v for n, v in r.phi_1.items() if v})
    print("  actual phi:", phi(pres).to_list())
