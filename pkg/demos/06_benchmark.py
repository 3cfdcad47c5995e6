# %% [markdown]
# # Timing: cut method against brute force
#
# Brute force runs one BFS per vertex. The cut method runs one component
# search per cut, and a phenylene chain has about a third as many edges as
# vertices.

# %%
from hyperwiener.bench import run_bench, to_csv

records = run_bench([("phenylene", [8, 16, 32, 64])], repeats=3)
print(to_csv(records))
