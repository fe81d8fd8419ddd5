"""Acceptance criteria, one test each; verdicts are printed in the run summary."""

import json
import os
import random
import subprocess
import sys
import time
import warnings
from pathlib import Path

import pytest

from conftest import CORPUS, corpus_graphs
from snarkforge.certs import CERT_GRAPHS, Certificate, load_certificates, shipped_files, verify_certificate, verify_file
from snarkforge.coloring import is_bicritical, is_snark, is_three_edge_colorable
from snarkforge.connectivity import cyclic_edge_connectivity, is_cyclic_cut
from snarkforge.decompose import decompose_dot, find_cyclic_4_cuts
from snarkforge.factors import mu3, perfect_matchings, uncovered
from snarkforge.generators import DotSpec, dot_product_map, flower_with_names, named_graph
from snarkforge.graph import CubicGraph, girth, independent_edge_pairs, parse_graph6, write_graph6
from snarkforge.hamilton import check_suitable_pair, find_suitable_pairs, ham_path, hamiltonian_cycle, is_hypohamiltonian
from snarkforge.iso import is_isomorphic
from snarkforge.witness import is_hamiltonian_cycle, is_hamiltonian_path, is_perfect_matching, is_proper_edge_coloring

import oracles
from small_graphs import KNOWN_COUNTS, small_cubic

B2_PAIRS = [((3, 9), (12, 17)), ((4, 7), (13, 15)), ((6, 8), (10, 16))]
L1_PAIRS = [
    ((0, 1), (17, 20)), ((0, 2), (8, 17)), ((1, 5), (14, 20)),
    ((2, 3), (8, 10)), ((3, 4), (10, 12)), ((4, 5), (12, 14)),
]
# the 34-vertex hypohamiltonian snarks with lambda_c = 4, if someone supplies them
HYPO34 = Path(os.environ.get("SNARKFORGE_HYPO34", CORPUS / "hypo_34_lambda4.g6"))


@pytest.mark.criterion("1", "Petersen suite: snark, hypohamiltonian, lambda_c=5, no suitable pair, mu3=3, bicritical, < 1 s")
def test_criterion_1_petersen():
    t = time.perf_counter()
    p = named_graph("P")
    assert is_snark(p)
    assert is_hypohamiltonian(p)
    assert cyclic_edge_connectivity(p).lambda_c == 5
    assert find_suitable_pairs(p) == []
    res = mu3(p)
    assert res.exact and res.mu3 == 3
    assert is_bicritical(p)
    elapsed = time.perf_counter() - t
    assert oracles.mu3_bruteforce(p.n, p.edges) == 3
    assert elapsed < 1.0, f"{elapsed:.2f} s"


@pytest.mark.criterion("2", "suitable pairs: B2 exactly 3, L1 exactly 6, b0c0/b4c4 suitable in J9, J11, J13, < 5 min")
def test_criterion_2_suitable_pairs():
    t = time.perf_counter()
    assert [r.pair for r in find_suitable_pairs(named_graph("B2"))] == B2_PAIRS
    assert [r.pair for r in find_suitable_pairs(named_graph("L1"))] == L1_PAIRS
    for k in (4, 5, 6):
        g, names = flower_with_names(k)
        ab = (names["b0"], names["c0"])
        cd = (names["b4"], names["c4"])
        ids = tuple(sorted((g.edge_id(*ab), g.edge_id(*cd))))
        reps = find_suitable_pairs(g, candidates=[ids])
        assert len(reps) == 1 and reps[0].pair == tuple(sorted((tuple(sorted(ab)), tuple(sorted(cd)))))
    elapsed = time.perf_counter() - t
    assert elapsed < 300, f"{elapsed:.1f} s"


@pytest.mark.criterion("3", "all shipped certificates verify (with symmetry closure) and >= 1000 single-swap mutations fail, < 10 s")
def test_criterion_3_certificates():
    t = time.perf_counter()
    pool = []
    for name, path in zip(CERT_GRAPHS, shipped_files()):
        rep = verify_file(path)
        assert rep.ok, (name, rep.failures, rep.closure, rep.manifest)
        if name in ("B2", "L1"):
            assert rep.closure is not None and rep.closure
        pool += load_certificates(path)
    rng = random.Random(99)
    mutated = 0
    while mutated < 1000:
        c = rng.choice(pool)
        flat = [(k, i) for k, s in enumerate(c.sequences) for i in range(len(s))]
        (k1, i1), (k2, i2) = rng.sample(flat, 2)
        seqs = [list(s) for s in c.sequences]
        seqs[k1][i1], seqs[k2][i2] = seqs[k2][i2], seqs[k1][i1]
        new = tuple(map(tuple, seqs))
        if new == c.sequences:
            continue
        assert not verify_certificate(Certificate(c.graph_name, c.kind, c.deleted_vertex, c.forbidden_edges, new))
        mutated += 1
    elapsed = time.perf_counter() - t
    assert elapsed < 10, f"{elapsed:.1f} s"


@pytest.mark.criterion("4", "20 random (suitable pair of B2/L1) x H in {P, B2, L1} products are hypohamiltonian snarks, < 10 min")
def test_criterion_4_theorem_end_to_end():
    t = time.perf_counter()
    rng = random.Random(4)
    lefts = {"B2": B2_PAIRS, "L1": L1_PAIRS}
    for _ in range(20):
        lname = rng.choice(sorted(lefts))
        g = named_graph(lname)
        ab, cd = rng.choice(lefts[lname])
        h = named_graph(rng.choice(["P", "B2", "L1"]))
        x, y = rng.choice(h.edges)
        if rng.random() < 0.5:
            x, y = y, x
        flips = [rng.random() < 0.5 for _ in range(4)]
        spec = DotSpec(g.edge_id(*ab), g.edge_id(*cd), x, y, *flips)
        prod, _ = dot_product_map(g, h, spec)
        assert prod.n == g.n + h.n - 2
        assert is_snark(prod), (lname, ab, cd, spec)
        assert is_hypohamiltonian(prod), (lname, ab, cd, spec)
    elapsed = time.perf_counter() - t
    assert elapsed < 600, f"{elapsed:.1f} s"


def _orders(extra):
    cmd = [sys.executable, "-m", "snarkforge.cli", "orders", "--max", "50"] + extra
    return subprocess.run(cmd, capture_output=True, text=True)


@pytest.mark.criterion("5", "orders --max 50 with the 26-32 corpus: every feasible order verified, the rest infeasible; graceful without it, < 30 min")
def test_criterion_5_orders():
    t = time.perf_counter()
    assert CORPUS.is_dir(), "corpus directory missing"
    run = _orders(["--corpus", str(CORPUS), "--witnesses"])
    assert run.returncode == 0, run.stderr
    recs = [json.loads(l) for l in run.stdout.splitlines()]
    summary = recs.pop()["summary"]
    by_n = {r["n"]: r for r in recs}
    assert sorted(by_n) == list(range(1, 51))
    feasible = {10, 18, 20, 22} | set(range(26, 51, 2))
    for n, r in by_n.items():
        if n in feasible:
            assert r["feasible"] and r["verified"] == "computed", r
            g = parse_graph6(r["graph6"])
            assert g.n == n and g.is_cubic()
        else:
            assert r["feasible"] is False and r["recipe"] is None, r
    assert {12, 14, 16, 24}.isdisjoint(feasible)
    assert summary["uncovered"] == []

    bare = _orders([])
    assert bare.returncode == 0
    recs = [json.loads(l) for l in bare.stdout.splitlines()]
    assert recs[-1]["summary"]["uncovered"] == [32]
    assert "32" in bare.stderr
    elapsed = time.perf_counter() - t
    assert elapsed < 1800, f"{elapsed:.1f} s"


@pytest.mark.criterion("6", "mu3 = 3 (exact) for every hypohamiltonian snark of order <= 28 in the corpus")
def test_criterion_6_mu3():
    graphs = [named_graph(x) for x in ("P", "B1", "B2", "L1", "J5", "J7")]
    for n in (22, 26, 28):
        extra = corpus_graphs(n)
        assert extra, f"corpus for order {n} missing"
        graphs += extra
    assert len(graphs) >= 6 + 2 + 87 + 30
    for g in graphs:
        res = mu3(g)
        assert res.exact
        assert res.mu3 == 3
        assert all(is_perfect_matching(g, m) for m in res.best_triple)
        assert uncovered(g, res.best_triple) == 3


@pytest.mark.criterion("7a", "both Blanusa snarks decompose into Petersen . Petersen; Petersen has no cyclic 4-cut")
def test_criterion_7a_decomposition():
    p = named_graph("P")
    for name in ("B1", "B2"):
        decs = decompose_dot(named_graph(name), properties=False)
        assert any(is_isomorphic(d.g_factor, p) and is_isomorphic(d.h_factor, p) for d in decs)
    assert find_cyclic_4_cuts(p) == []


@pytest.mark.criterion("7b", "34-vertex lambda_c=4 list: 29365 of 29701 decompose as (26-vertex hypo snark) . Petersen (needs external data)")
def test_criterion_7b_order_34_fraction():
    if not HYPO34.exists():
        warnings.warn(f"34-vertex list not found at {HYPO34}; criterion 7b skipped")
        pytest.skip("34-vertex hypohamiltonian lambda_c=4 list not supplied")
    from snarkforge.graph import read_graph6_file

    graphs = read_graph6_file(HYPO34)
    assert len(graphs) == 29701
    p = named_graph("P")
    hits = 0
    for g in graphs:
        for d in decompose_dot(g, properties=False):
            pair = sorted((d.g_factor, d.h_factor), key=lambda f: f.n)
            if pair[0].n == 10 and pair[1].n == 26 and is_isomorphic(pair[0], p) and is_hypohamiltonian(pair[1]):
                hits += 1
                break
    assert hits == 29365


@pytest.mark.criterion("8", "property suites: engine = naive oracle on all cubic n <= 12, dot laws on 200 specs, graph6 fuzz, witness checks")
def test_criterion_8_property_suites():
    small = small_cubic()
    counts = {}
    for g in small:
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == KNOWN_COUNTS

    rng = random.Random(8)
    for g in small:
        cyc = hamiltonian_cycle(g)
        assert (cyc is not None) == oracles.has_ham_cycle(g.n, g.edges)
        if cyc is not None:
            assert is_hamiltonian_cycle(g, cyc)
        for _ in range(4):
            u, v = rng.sample(range(g.n), 2)
            path = ham_path(g, (u, v))
            assert (path is not None) == oracles.has_ham_path(g.n, g.edges, u, v)
            if path is not None:
                assert is_hamiltonian_path(g, path, endpoints=(u, v))
        col = is_three_edge_colorable(g)
        assert (col is not None) == oracles.is_colorable_via_matchings(g.n, g.edges)
        if col is not None:
            assert is_proper_edge_coloring(g, col)
        pms = perfect_matchings(g)
        assert len(pms) == oracles.hafnian_count(g.n, g.edges)
        assert all(is_perfect_matching(g, m) for m in pms)

    names = ["P", "B1", "B2", "J5", "L1"]
    graphs = {k: named_graph(k) for k in names}
    for _ in range(200):
        g, h = graphs[rng.choice(names)], graphs[rng.choice(names)]
        i, j = rng.choice(independent_edge_pairs(g))
        x, y = rng.choice(h.edges)
        spec = DotSpec(i, j, x, y, *(rng.random() < 0.5 for _ in range(4)))
        prod, hmap = dot_product_map(g, h, spec)
        assert prod.n == g.n + h.n - 2 and prod.is_cubic()
        assert girth(prod) >= min(girth(g), girth(h))
        r = spec.resolve(g, h)
        assert is_cyclic_cut(prod, [prod.edge_id(r[s], hmap[r[s + "'"]]) for s in "abcd"])

    for _ in range(300):
        n = rng.randrange(0, 90)
        pairs = [(u, v) for v in range(n) for u in range(v)]
        g = CubicGraph(n, rng.sample(pairs, min(len(pairs), rng.randrange(0, 150))) if pairs else [])
        s = write_graph6(g)
        assert parse_graph6(s) == g and write_graph6(parse_graph6(s)) == s
