"""The dual numbers K[x]/(x^2), computed both ways.

Run with ``python demos/01_dual_numbers.py``.
"""

from gentlehh import hh_dims_closed, hh_dims_oracle, parse_presentation, phi
from gentlehh.ag import critical_cycles, thread_cycles
from gentlehh.oracle import cochain_degree
from gentlehh.quiver import euler_characteristic

pres = parse_presentation("""
vertices: 1
arrow a: 1 -> 1
relation a a
""")

# One permitted thread (the loop), one trivial forbidden thread at vertex 1,
# and the loop is also a cycle with full relations of length 1.
for walk in thread_cycles(pres):
    print("walk:", [(str(h.path), str(f.path)) for h, f in walk])
print("critical cycles:", [str(c) for c in critical_cycles(pres)])

ph = phi(pres)
print("phi =", ph.to_list())

# Degree-1 coboundary: (df)(aa) = a f(a) + f(a) a, i.e. twice a on (a, e_1).
print("d^1 =", cochain_degree(pres, 1).coboundary)

chi = euler_characteristic(pres)
for c in (0, 2, 3):
    oracle = hh_dims_oracle(pres, c, 8).dims
    formula = hh_dims_closed(ph, chi, c == 2, 8).dims
    print(f"char {c}: oracle {oracle}  formula {formula}")
