# %% [markdown]
# # A hypohamiltonian snark of every feasible order
#
# Repeated dot products with B2 (adds 16 vertices) or L1 (adds 20) reach
# every even order from 34 on, starting from a handful of base snarks.
# Orders 26 to 32 need base graphs of their own; `corpus/` holds them.

# %%
from pathlib import Path

from snarkforge.orders import Corpus, plan_orders, uncovered_orders

corpus_dir = Path(__file__).resolve().parent.parent / "corpus"

# %% [markdown]
# Without a corpus one order stays open.

# %%
bare = plan_orders(50)
print("uncovered:", uncovered_orders(bare))

# %%
plans = plan_orders(50, Corpus.from_dir(corpus_dir))
for p in plans:
    if p.feasible:
        print(f"{p.n:3d}  {p.verified:9s}  {p.recipe}")
print("uncovered:", uncovered_orders(plans))
