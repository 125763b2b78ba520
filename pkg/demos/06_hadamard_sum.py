"""xi'/xi as a sum over zeros, taken in conjugate pairs."""

import numpy as np

from zetamono import hadamard_logderiv, load_bundled_zeros
from zetamono.logderiv import xi_logderiv_via_zeta
from zetamono.zeros import hadamard_partial_sums

table = load_bundled_zeros()
print(f"{len(table)} ordinates, first {table.ordinates[0]}, last {table.ordinates[-1]}")

for s in (2 + 9j, -2 + 25j, 0.5 + 0j):
    h = hadamard_logderiv(s, table, 100)
    a = xi_logderiv_via_zeta(s)[0]
    print(f"s = {s}: pair sum {h.value:.6f}, analytic {a:.6f}, |diff| {abs(h.value - a):.2e} <= tail {h.err_bound:.2e}")

partial = hadamard_partial_sums(3 + 15j, table)
print("partial sums after 10, 50, 100 pairs:", np.round(partial[[9, 49, 99]], 6))
