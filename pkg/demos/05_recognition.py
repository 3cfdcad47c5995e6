# %% [markdown]
# # Recognising partial cube-hypergraphs
#
# Two independent tests: (a) edge-gated and Θ transitive, (b) edge-gated and
# every edge-partition block convex. They must agree.

# %%
from hyperwiener import build, cartesian_product, cube, phenylene, random_hypertree, recognize

cases = {
    "cube(3,3)": cube(3, 3)[0],
    "hypertree product": cartesian_product(random_hypertree([3, 3], seed=1),
                                           random_hypertree([3, 3, 3], seed=2)),
    "triangle": build(3, [[0, 1], [1, 2], [0, 2]]),
    "K_{2,3}": build(5, [[a, b] for a in (0, 1) for b in (2, 3, 4)]),
    "phenylene(3)": phenylene(3),
}
for name, H in cases.items():
    r = recognize(H, validate_convexity=True)
    print(f"{name:18s} verdict={r.verdict!s:5s} agree={r.routes_agree} ({r.reason})")
