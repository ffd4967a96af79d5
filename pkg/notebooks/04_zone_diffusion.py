# %% [markdown]
# # Items moving between tail, core and excess
#
# Generate a rich-get-richer corpus and follow the zone transitions.

# %%
from citeswing import diffusion_series, net_flow
from citeswing.cli import generate_dataset
from citeswing.diffusion import STATES

ds = generate_dataset(seed=3, n_items=60, n_snapshots=6, model="rich")
series = diffusion_series(ds.snapshots)

for m in series.metrics:
    theta = "n/a" if m.swing is None else f"{m.swing.theta:.3f}"
    print(f"{m.label}: h={m.core.h:>2}  e_sq={m.core.e_sq:>4}  theta={theta}")

# %%
print("rows: before, columns: after;", [s.value for s in STATES])
for mx in series.matrices:
    print(f"{mx.from_label} -> {mx.to_label}")
    print(mx.counts)
    print(net_flow(mx))
