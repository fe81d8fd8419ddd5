"""Rebuild corpus/hypo_{22,26,28,30,32}.g6.

Two sources feed the corpus.

Dot products G.P and P.G, where G is a hypohamiltonian snark of order
n - 8, cover orders 26, 28 and 30 (their members have a cyclic 4-cut).
Order 32 is out of their reach: every hypohamiltonian snark of that
order is cyclically 5-edge-connected.  For it we wire three 5-poles
(two copies of Petersen and one of J5, each minus a path on three
vertices) around a hub vertex, which is how the second Loupekine snark
of order 22 arises from three Petersen blocks as well.

    python demos/06_small_order_corpus.py [outdir]

Takes about a minute.
"""

import sys
import time
from pathlib import Path

from snarkforge.census import hypohamiltonian_hub_assemblies, hypohamiltonian_products
from snarkforge.generators import named_graph
from snarkforge.iso import is_isomorphic

P = named_graph("P")


def write(out, n, graphs, t0):
    (out / f"hypo_{n}.g6").write_text("".join(g.to_graph6() + "\n" for g in graphs))
    print(f"order {n}: {len(graphs)} hypohamiltonian snarks ({time.perf_counter() - t0:.1f} s)")


def main(outdir):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)

    t = time.perf_counter()
    loupekine = hypohamiltonian_hub_assemblies([P, P, P])
    # L1 first, so that it stays the preferred order-22 graph
    loupekine.sort(key=lambda g: not is_isomorphic(g, named_graph("L1")))
    write(out, 22, loupekine, t)

    sources = {
        26: [named_graph("B1"), named_graph("B2")],
        28: [named_graph("J5")],
        30: loupekine,
    }
    for n, partners in sources.items():
        t = time.perf_counter()
        pairs = [(s, P) for s in partners] + [(P, s) for s in partners]
        write(out, n, hypohamiltonian_products(pairs), t)

    t = time.perf_counter()
    write(out, 32, hypohamiltonian_hub_assemblies([P, P, named_graph("J5")], min_lambda_c=5), t)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus")
