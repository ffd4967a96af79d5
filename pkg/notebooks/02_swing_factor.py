# %% [markdown]
# # theta, epsilon and the Citation Swing Factor

# %%
import numpy as np

from citeswing import (
    core_metrics,
    epsilon_from_theta,
    maclaurin_epsilon,
    records_from_counts,
    swing_metrics,
    theta_from_epsilon,
)

s = swing_metrics(core_metrics(records_from_counts([10, 8, 5, 4, 3, 2, 1])))
print(f"theta   = {s.theta:.6f}  (h/e)")
print(f"epsilon = {s.epsilon:.6f}  (e/R)")
print(f"CSF     = {s.csf_exact:.6f}  (-R^3 / (h e^2))")
print(f"branch  = {s.branch.value}")

# %% [markdown]
# epsilon is a function of theta alone, so the swing factor can be checked
# against a numerical derivative of the inverse map.

# %%
h = 1e-6
fd = (theta_from_epsilon(s.epsilon + h) - theta_from_epsilon(s.epsilon - h)) / (2 * h)
print(f"finite difference: {fd:.6f}")

# %% [markdown]
# For small theta the two-term series 1 - theta²/2 tracks epsilon closely and
# falls apart near theta = 1.

# %%
for theta in np.linspace(0.1, 1.0, 10):
    exact = epsilon_from_theta(theta)
    approx = maclaurin_epsilon(theta)
    print(f"theta={theta:.1f}  exact={exact:.5f}  series={approx:.5f}  err={abs(exact - approx):.2e}")
