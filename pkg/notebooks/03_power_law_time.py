# %% [markdown]
# # Fitting theta(t) = theta_m t^-k across snapshots
#
# Build four snapshots where h stays at 2 and the excess grows as e² = t,
# so theta = 2 / sqrt(t) exactly.

# %%
from citeswing import Snapshot, TimedPoint, fit_power_law, records_from_counts
from citeswing.diffusion import snapshot_metrics
from citeswing.temporal import dtheta_components, eval_model

snaps = [Snapshot(f"t{t}", t, records_from_counts([2 + t, 2])) for t in (1, 4, 16, 64)]
metrics = [snapshot_metrics(s) for s in snaps]
for m in metrics:
    print(m.label, m.core.h, m.core.e_sq, round(m.swing.theta, 6))

# %%
fit = fit_power_law(TimedPoint(m.t, m.swing.theta) for m in metrics)
print(fit)
print("theta at t=10:", eval_model(fit, 10))

# %% [markdown]
# The change in theta splits into a part driven by epsilon (the swing factor)
# and a part driven by time. The time part fades as t grows.

# %%
for m in metrics:
    c = dtheta_components(m.core, fit, m.t)
    print(f"t={m.t:>4}: spatial={c.spatial_term:9.4f}  temporal={c.temporal_term:9.5f}")
