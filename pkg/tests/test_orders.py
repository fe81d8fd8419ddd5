import pytest

from conftest import CORPUS
from snarkforge.generators import named_graph
from snarkforge.hamilton import find_suitable_pairs
from snarkforge.orders import (
    Corpus,
    OrderBuilder,
    build_order,
    infeasibility_reason,
    is_feasible,
    plan_orders,
    uncovered_orders,
)
from snarkforge.graph import Graph6Error


def test_feasibility():
    assert [n for n in range(1, 51) if is_feasible(n)] == [10, 18, 20, 22] + list(range(26, 51, 2))
    assert "odd" in infeasibility_reason(27)
    assert "feasible" in infeasibility_reason(24)


def test_base_orders():
    assert build_order(18).recipe == {"base": "B2"}
    assert build_order(24).feasible is False
    p = build_order(10)
    assert p.verified == "computed" and p.snark and p.hypohamiltonian


def test_order_40_uses_l1():
    plan = build_order(40)
    assert plan.recipe["dot"]["left"] == {"base": "L1"}
    assert plan.recipe["dot"]["right"] == {"base": "J5"}
    assert plan.graph.n == 40 and plan.verified == "computed"


def _walk(recipe):
    if "dot" in recipe:
        yield recipe["dot"]
        yield from _walk(recipe["dot"]["right"])


def test_plans_without_corpus():
    plans = plan_orders(50)
    assert uncovered_orders(plans) == [32]
    for p in plans:
        if p.graph is None:
            continue
        assert p.verified == "computed", p.n
        assert p.graph.n == p.n
        for node in _walk(p.recipe):
            left = named_graph(node["left"]["base"])
            pairs = [r.pair for r in find_suitable_pairs(left)]
            assert tuple(sorted((tuple(sorted(node["ab"])), tuple(sorted(node["cd"]))))) in pairs


def test_plans_with_corpus():
    if not CORPUS.is_dir():
        pytest.skip("no corpus directory")
    plans = plan_orders(50, Corpus.from_dir(CORPUS))
    assert uncovered_orders(plans) == []
    for p in plans:
        if p.n % 2 == 0 and (p.n >= 26 or p.n in (10, 18, 20, 22)):
            assert p.feasible and p.verified == "computed", p.n
        else:
            assert not p.feasible and p.graph is None


def test_theoretical_above_verify_max():
    plan = OrderBuilder(verify_max=30).build(34)
    assert plan.verified == "theoretical" and plan.graph.n == 34


def test_corpus_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        Corpus.from_dir(tmp_path / "missing")
    (tmp_path / "bad.g6").write_text("C~~\n")
    with pytest.raises(Graph6Error, match="bad.g6"):
        Corpus.from_dir(tmp_path)


def test_corpus_graph_that_fails_is_not_used(tmp_path):
    # a hamiltonian cubic graph of order 26 is rejected and the dot route takes over
    from snarkforge.graph import cycle_graph

    ring = cycle_graph(26).with_edges([(i, i + 13) for i in range(13)])
    (tmp_path / "a.g6").write_text(ring.to_graph6() + "\n")
    plan = OrderBuilder(Corpus.from_dir(tmp_path)).build(26)
    assert "dot" in plan.recipe and plan.verified == "computed"


def test_plan_json_shape():
    d = build_order(26).to_json()
    assert set(d) == {"n", "feasible", "recipe", "verified", "snark", "hypohamiltonian", "graph6", "note"}
