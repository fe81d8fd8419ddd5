# %% [markdown]
# # Meet the snarks
#
# A snark is a cubic graph with girth at least 5, no cyclic edge cut of
# fewer than four edges, and no proper 3-edge-colouring.  The package ships
# generators for the small named ones.

# %%
from snarkforge import cyclic_edge_connectivity, girth, is_snark, is_three_edge_colorable, named_graph

for name in ["P", "B1", "B2", "J5", "L1", "J7"]:
    g = named_graph(name)
    lam = cyclic_edge_connectivity(g).lambda_c
    print(f"{name:>3}: n={g.n:2d}  girth={girth(g)}  lambda_c={lam}  snark={bool(is_snark(g))}")

# %% [markdown]
# Graphs travel as graph6 strings, the format used by published snark lists.

# %%
p = named_graph("P")
line = p.to_graph6()
print(line)

# %% [markdown]
# Deleting any vertex pair from the Petersen graph makes it colourable.
# Here is one such colouring, as a map from edge index to colour.

# %%
print(is_three_edge_colorable(p, deleted_vertices=[0, 7]))
