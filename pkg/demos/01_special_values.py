"""Evaluating Gamma, digamma, zeta, eta and xi.

Every evaluator returns an EvalResult: the value, an absolute error
estimate, and whether that estimate is a proven bound.
"""

import math

from zetamono import derivative, digamma, eta, gamma, log_gamma, xi, zeta

# Classical values first.
print("zeta(2)     ", zeta(2).value.real, " pi^2/6 =", math.pi**2 / 6)
print("zeta(-1)    ", zeta(-1).value.real)
print("eta(1)      ", eta(1).value.real, " log 2 =", math.log(2))
print("zeta'(0)    ", derivative("zeta", 0).value.real)
print("Psi(1)      ", digamma(1).value.real)

# The digamma bound comes from the Stieltjes remainder, so it is rigorous on
# the right half plane; left of it the reflection formula is used.
for s in (0.5 + 8j, -3.7 + 0.5j):
    r = digamma(s)
    print(f"Psi({s}) = {r.value:.12f}  err <= {r.err_bound:.1e}  rigorous={r.rigorous}")

# log Gamma stays on the principal branch; |Gamma| is recovered from it.
print("log Gamma(0.3 + 40i) =", log_gamma(0.3 + 40j).value)
print("|Gamma(2 + 10i)|     =", abs(gamma(2 + 10j).value))

# xi is entire and symmetric under s -> 1 - s.  Far from the real axis it is
# tiny, which is why the package works with log|xi| internally.
print("xi(1/2)              =", xi(0.5).value.real)
print("xi(0.3+10i), xi(0.7+10i):", abs(xi(0.3 + 10j).value), abs(xi(0.7 + 10j).value))
print("eta at 1 + 2 pi i / log 2:", abs(eta(complex(1, 2 * math.pi / math.log(2))).value))
