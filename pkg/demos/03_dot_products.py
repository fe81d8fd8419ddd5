# %% [markdown]
# # Dot products and suitable edge pairs
#
# The dot product G.H removes two independent edges ab, cd from G and two
# adjacent vertices x, y from H, then reconnects the loose ends.  When ab, cd
# form a suitable pair and H is hypohamiltonian, so is the product.

# %%
from snarkforge import DotSpec, dot_product, find_suitable_pairs, is_hypohamiltonian, is_snark, named_graph
from snarkforge.decompose import decompose_dot
from snarkforge.iso import is_isomorphic

b2 = named_graph("B2")
pairs = find_suitable_pairs(b2)
for r in pairs:
    print("suitable:", r.pair)

# %% [markdown]
# Every report carries the paths that prove it.  For vertex 0, the
# condition on vertex-deleted graphs is met like this:

# %%
label, path = pairs[0].condition_ii[0]
print(label, path)

# %%
p = named_graph("P")
(ab, cd) = pairs[0].ab, pairs[0].cd
spec = DotSpec(b2.edge_id(*ab), b2.edge_id(*cd), 0, 1)
g = dot_product(b2, p, spec)
print(g, "snark:", bool(is_snark(g)), "hypohamiltonian:", bool(is_hypohamiltonian(g)))

# %% [markdown]
# The Petersen graph has no suitable pair, yet both 18-vertex Blanusa snarks
# are products of two Petersen graphs.  Cutting them apart shows it.

# %%
for name in ["B1", "B2"]:
    decs = decompose_dot(named_graph(name), properties=False)
    both = [d for d in decs if is_isomorphic(d.g_factor, p) and is_isomorphic(d.h_factor, p)]
    print(f"{name}: {len(decs)} decompositions, {len(both)} into Petersen . Petersen")
