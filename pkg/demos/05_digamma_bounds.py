"""Lower bound on Re Psi and the reflection estimate."""

import math

from zetamono import GridSpec, check_digamma_bounds, digamma

floor = math.log(8) - 1 / 16 - math.sqrt(2) / 192
print(f"analytic floor: {floor:.6f}")
rec = check_digamma_bounds(GridSpec(0.5, 20, 0.1, 8, 50, 0.1), "floor")
print(f"min Re Psi on sigma >= 1/2, t >= 8: {2.0096 + rec.worst_margin:.6f} at {rec.witness}")
print("Re Psi(1/2 + 8i) =", digamma(0.5 + 8j).value.real)

rec = check_digamma_bounds(GridSpec(-3, 4, 0.1, 0.1, 5, 0.01), "reflection")
print(f"|Re Psi(s) - Re Psi(1-s)| - 3 pi exp(-2 pi t): max {rec.worst_margin:.3e} (negative means the bound holds)")
