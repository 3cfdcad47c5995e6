# %% [markdown]
# # Cube-hypergraphs
#
# The k-uniform n-cube has the tuples of {0..k-1}^n as vertices; an edge
# collects the k tuples that differ only in one coordinate. Distances are
# Hamming distances, and the Θ-classes are the n coordinate directions.

# %%
from math import comb

import numpy as np

from hyperwiener import cube, distance_table, theta_structure, wiener_brute, wiener_cut

H, coords = cube(3, 2)
print(f"{H.vertex_count} vertices, {H.edge_count} edges")

D = distance_table(H)
C = np.array(coords)
print("distance == Hamming:", np.array_equal(D, (C[:, None] != C[None]).sum(axis=2)))

# %% [markdown]
# Removing one Θ-class splits the cube into k copies of the (n-1)-cube.

# %%
for i, cls in enumerate(theta_structure(H).classes):
    print(f"class {i}: {len(cls.edges)} edges, component sizes {cls.sizes}")

# %% [markdown]
# Summing the pairwise products of component sizes per class gives the
# Wiener index, which matches n * C(k,2) * k^(2(n-1)).

# %%
for k in (2, 3, 4):
    for n in (1, 2, 3):
        Q, _ = cube(k, n)
        print(k, n, wiener_cut(Q).total, wiener_brute(Q), n * comb(k, 2) * k ** (2 * (n - 1)))
