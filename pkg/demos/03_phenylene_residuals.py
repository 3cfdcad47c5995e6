# %% [markdown]
# # Linear phenylenes: cuts plus a residual
#
# The chain of hexagons joined by squares is neither uniform nor linear, so
# Θ-classes do not apply. Each single edge is still a convex cut, but the two
# vertices shared by a hexagon and a square are never separated. Their
# distance (1) is added back as a residual term.

# %%
from hyperwiener import CutPartition, phenylene, validate_cut_partition, wiener_general

P = phenylene(4)
C = CutPartition.singletons(P)
report = validate_cut_partition(P, C)
print("partition valid:", report.method_valid)
print("unseparated pairs (u, v, distance):", report.unseparated_pairs)

result = wiener_general(P, C, prevalidated=True)
for term in result.per_cut:
    print(f"edge {term.edges}: sizes {sorted(term.sizes)} -> {term.contribution}")
print("cuts", result.total - result.residual, "+ residual", result.residual, "=", result.total)

# %% [markdown]
# The totals follow 12n^3 + 6n^2 - 3n.

# %%
for n in range(2, 11):
    Pn = phenylene(n)
    print(n, wiener_general(Pn, CutPartition.singletons(Pn)).total, 12 * n**3 + 6 * n**2 - 3 * n)
