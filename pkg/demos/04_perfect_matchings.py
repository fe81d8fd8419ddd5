# %% [markdown]
# # Three perfect matchings
#
# mu3 counts the edges missed by the best union of three perfect matchings.
# It is zero exactly for 3-edge-colourable cubic graphs.  For every snark
# we can reach it comes out as 3.

# %%
import numpy as np

from snarkforge import mu3, named_graph, perfect_matchings

j5 = named_graph("J5")
pms = perfect_matchings(j5)
M = np.zeros((len(pms), j5.m), dtype=int)
for i, pm in enumerate(pms):
    M[i, list(pm)] = 1
print(M.shape, "matchings x edges")

# %% [markdown]
# How often is each edge used?  Flower snarks are far from uniform.

# %%
print(np.bincount(M.sum(axis=0)))

# %%
res = mu3(j5)
print(res.mu3, "uncovered, exact =", res.exact)
covered = np.zeros(j5.m, dtype=bool)
for pm in res.best_triple:
    covered[list(pm)] = True
print("missed edges:", [j5.edges[e] for e in np.flatnonzero(~covered)])

# %%
for name in ["P", "B1", "B2", "L1", "J7", "J9"]:
    r = mu3(named_graph(name))
    print(f"{name:>3}: {r.n_matchings:4d} perfect matchings, mu3 = {r.mu3}")
