"""Where does monotonicity in the left region start to fail?

For each t the finder maximises Re(f'/f) over sigma, then bisects t on
whether that maximum is non-negative.
"""

from zetamono import BracketError, find_failure_threshold
from zetamono.verification import max_logderiv_over_sigma

res = find_failure_threshold("zeta", sigma_range=(-30, 0.5), t_bracket=(6, 7), tol=1e-4)
print(f"zeta: t* = {res.t_star:.5f}, attained at sigma = {res.sigma_witness:.3f}")

# With sigma capped at 0 the switch moves lower.
res0 = find_failure_threshold("zeta", sigma_range=(-30, 0), t_bracket=(6, 7), tol=1e-4)
print(f"zeta, sigma <= 0: t* = {res0.t_star:.5f}")

# eta behaves differently: it is already monotone at t = 6.
for t in (2.0, 3.0, 6.0, 7.0):
    m, sg = max_logderiv_over_sigma("eta", t, (-30, 0.5))
    print(f"eta: t = {t}: max Re(eta'/eta) = {m:+.4f} at sigma = {sg:.2f}")
try:
    find_failure_threshold("eta", t_bracket=(6, 7))
except BracketError as exc:
    print("eta in [6, 7]:", exc)
print(f"eta: t* = {find_failure_threshold('eta', t_bracket=(2, 3)).t_star:.4f}")
