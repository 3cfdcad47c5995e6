# %% [markdown]
# # Hypertrees
#
# In a linear hypertree every edge on its own is a cut, and removing edge e
# leaves |e| components. The Wiener index is a sum over edges.

# %%
from hyperwiener import example_t1, random_hypertree, wiener_brute, wiener_hypertree

T = example_t1()
result = wiener_hypertree(T)
for term in result.per_cut:
    print(f"edge {term.edges[0]}: sizes {term.sizes} -> {term.contribution}")
print("total", result.total, "brute force", wiener_brute(T))

# %% [markdown]
# Random hypertrees with mixed edge sizes: the edge-sum agrees with BFS.

# %%
for seed in range(5):
    R = random_hypertree([2, 3, 4, 3, 2, 4], seed=seed)
    print(seed, R.vertex_count, wiener_hypertree(R).total, wiener_brute(R))
