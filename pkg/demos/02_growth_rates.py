"""Horizontal growth rates Re(f'/f) and the gaps that order them.

Re(f'/f) is the sigma-derivative of log|f|, so its sign says whether |f|
grows or shrinks moving right.  Left of the critical line with |t| >= 8 the
three rates line up as eta < zeta < xi.
"""

import numpy as np

from zetamono import eta_zeta_gap, log_derivative_re, xi_zeta_gap
from zetamono.verification import CHAIN_GRID, chain_quantities

s = -3 + 10j
for f in ("eta", "zeta", "xi"):
    print(f"Re({f}'/{f})({s}) = {log_derivative_re(f, s):+.6f}")
print("eta - zeta gap:", eta_zeta_gap(s))
print("xi - zeta gap: ", xi_zeta_gap(s))

# The same comparison over the whole grid sigma in [-15, 0.49], |t| in [8, 100].
q = chain_quantities(CHAIN_GRID)
lo = q["zeta"] - q["eta"]
hi = q["xi"] - q["zeta"]
print(f"{CHAIN_GRID.size} points; smallest eta/zeta gap {lo.min():.4f}, smallest zeta/xi gap {hi.min():.4f}")
k = np.unravel_index(np.argmin(hi), hi.shape)
print("the zeta/xi gap is smallest at", q["points"][k])
