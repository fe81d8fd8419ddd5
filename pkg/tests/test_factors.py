import itertools

import pytest

from conftest import corpus_graphs
from snarkforge.factors import mu3, perfect_matchings, uncovered
from snarkforge.generators import named_graph
from snarkforge.graph import CubicGraph, GraphError
from snarkforge.witness import is_perfect_matching

import oracles
from small_graphs import ids, small_cubic

SMALL = small_cubic()
K4 = CubicGraph(4, itertools.combinations(range(4), 2))


def _check_result(g, res):
    a, b, c = res.best_triple
    assert all(is_perfect_matching(g, m) for m in res.best_triple)
    assert uncovered(g, (a, b, c)) == res.mu3


@pytest.mark.parametrize("g", SMALL, ids=ids(SMALL))
def test_matchings_and_mu3_match_bruteforce(g):
    pms = perfect_matchings(g)
    assert {frozenset(m) for m in pms} == set(oracles.perfect_matchings(g.n, g.edges))
    assert len(pms) == oracles.hafnian_count(g.n, g.edges)
    assert all(is_perfect_matching(g, m) for m in pms)
    res = mu3(g)
    assert res.exact and res.mu3 == oracles.mu3_bruteforce(g.n, g.edges)
    _check_result(g, res)


def test_petersen_matchings(P):
    pms = perfect_matchings(P)
    assert len(pms) == 6
    # every 5-edge subset that is a matching is perfect; count them directly
    direct = [s for s in itertools.combinations(range(15), 5) if is_perfect_matching(P, s)]
    assert sorted(pms) == sorted(direct)


@pytest.mark.parametrize("name, count", [("J5", 32), ("B2", 19), ("L1", 36), ("J7", 128)])
def test_matching_counts_against_hafnian(name, count):
    g = named_graph(name)
    assert len(perfect_matchings(g)) == oracles.hafnian_count(g.n, g.edges) == count


def test_k4():
    assert len(perfect_matchings(K4)) == 3
    assert mu3(K4).mu3 == 0


@pytest.mark.parametrize("name", ["P", "B1", "B2", "J5", "L1", "J7"])
def test_named_snarks_have_mu3_three(name):
    g = named_graph(name)
    res = mu3(g)
    assert res.exact and res.mu3 == 3
    _check_result(g, res)
    if g.n <= 18:
        assert oracles.mu3_bruteforce(g.n, g.edges) == 3


@pytest.mark.parametrize("n", [22, 26, 28])
def test_corpus_mu3(n):
    graphs = corpus_graphs(n)
    if not graphs:
        pytest.skip(f"no corpus file for order {n}")
    for g in graphs:
        res = mu3(g)
        assert res.exact
        assert res.mu3 >= 3, "a snark with mu3 < 3 cannot exist"
        assert res.mu3 == 3
        _check_result(g, res)


def test_budget_validation(P):
    with pytest.raises(ValueError):
        mu3(P, budget=0)
    with pytest.raises(GraphError):
        perfect_matchings(CubicGraph(3, [(0, 1)]))


def test_tiny_budget_is_flagged():
    res = mu3(named_graph("J9"), budget=1e-9)
    assert not res.exact
    _check_result(named_graph("J9"), res)
