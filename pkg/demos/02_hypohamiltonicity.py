# %% [markdown]
# # Hypohamiltonian graphs
#
# No hamiltonian cycle, yet one appears as soon as any single vertex is
# removed.  `is_hypohamiltonian` returns the per-vertex cycles as evidence.

# %%
import time

from snarkforge import hamiltonian_cycle, is_hypohamiltonian, named_graph
from snarkforge.witness import is_hamiltonian_cycle

p = named_graph("P")
print("Petersen hamiltonian cycle:", hamiltonian_cycle(p))
res = is_hypohamiltonian(p)
print("hypohamiltonian:", bool(res))
print("cycle of P - 0:", res.witnesses[0])

# %% [markdown]
# The witnesses are checked by a separate verifier that shares no code
# with the search.

# %%
assert all(is_hamiltonian_cycle(p, c, deleted=[v]) for v, c in res.witnesses.items())

# %% [markdown]
# Flower snarks grow by four vertices per star unit.  The search stays fast.

# %%
for name in ["J5", "J7", "J9", "J11", "J13"]:
    g = named_graph(name)
    t = time.perf_counter()
    ok = bool(is_hypohamiltonian(g))
    print(f"{name:>4}  n={g.n}  hypohamiltonian={ok}  {time.perf_counter() - t:.2f} s")
