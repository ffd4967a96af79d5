# %% [markdown]
# # Splitting a citation record into core, excess and tail
#
# A researcher with seven papers cited 10, 8, 5, 4, 3, 2 and 1 times.

# %%
from citeswing import core_metrics, records_from_counts, zone_partition

records = records_from_counts([10, 8, 5, 4, 3, 2, 1])
m = core_metrics(records)
print(m)

# %% [markdown]
# h = 4: four papers have at least four citations. Those four papers hold
# d² = 27 citations, of which h² = 16 fill the square core and e² = 11 are
# excess. The remaining 6 citations sit in the tail.

# %%
assert m.d_sq == m.h**2 + m.e_sq
assert m.total == m.d_sq + m.tail

for z in zone_partition(records):
    print(f"{z.rank:>2}  {z.item_id}  {z.citations:>3}  {z.zone.value}")

# %% [markdown]
# Inside the h-core, a paper with more than h citations counts as EXCESS and
# one with exactly h as CORE. Ties are broken by item id so the assignment is
# reproducible.
