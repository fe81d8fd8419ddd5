"""Hypohamiltonian snarks of every feasible order, built by iterated dot products.

Feasible orders are 10, 18, 20, 22 and every even n >= 26.  Each plan is a
recipe tree whose leaves are base snarks (named generators first, then
graphs ingested from a corpus directory) and whose inner nodes are dot
products L.S with L in {B2, L1} carrying a suitable edge pair, so the
product of L with any hypohamiltonian snark S of order n - |L| + 2 is again
one.  B2 is tried before L1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .generators import DotSpec, dot_product, named_graph
from .graph import CubicGraph, Graph6Error, read_graph6_file

# order -> generator name, preferred over any corpus graph
NAMED_BASES = {10: "P", 18: "B2", 20: "J5", 22: "L1", 28: "J7", 36: "J9", 44: "J11", 52: "J13"}
LEFT_FACTORS = ("B2", "L1")
DEFAULT_MAX = 50


def is_feasible(n: int) -> bool:
    return n in (10, 18, 20, 22) or (n % 2 == 0 and n >= 26)


def infeasibility_reason(n: int) -> str:
    if n % 2:
        return "odd order: no cubic graph"
    return "no hypohamiltonian snark of this order exists (feasible: 10, 18, 20, 22 and even n >= 26)"


@dataclass
class OrderPlan:
    n: int
    feasible: bool
    recipe: dict | None = None
    graph: CubicGraph | None = field(default=None, repr=False)
    snark: bool | None = None
    hypohamiltonian: bool | None = None
    verified: str = "no"  # "computed", "theoretical" or "no"
    note: str = ""

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "feasible": self.feasible,
            "recipe": self.recipe,
            "verified": self.verified,
            "snark": self.snark,
            "hypohamiltonian": self.hypohamiltonian,
            "graph6": self.graph.to_graph6() if self.graph is not None else None,
            "note": self.note,
        }


class Corpus:
    """Graphs ingested from every *.g6 file of a directory, by order.

    Files are read in name order and graphs keep their file order, so the
    first graph of a given order is well defined.
    """

    def __init__(self, by_order: dict[int, list[tuple[str, CubicGraph]]] | None = None):
        self.by_order = by_order or {}

    @classmethod
    def from_dir(cls, path) -> "Corpus":
        p = Path(path)
        if not p.is_dir():
            raise FileNotFoundError(f"corpus directory {path} not found")
        by: dict[int, list[tuple[str, CubicGraph]]] = {}
        for f in sorted(p.glob("*.g6")):
            try:
                graphs = read_graph6_file(f)
            except Graph6Error as exc:
                raise Graph6Error(f"corpus file {f}: {exc}") from None
            for i, g in enumerate(graphs):
                by.setdefault(g.n, []).append((f"{f.name}#{i}", g))
        return cls(by)

    def orders(self) -> list[int]:
        return sorted(self.by_order)

    def first(self, n: int):
        items = self.by_order.get(n)
        return items[0] if items else None


class OrderBuilder:
    """Memoized planner; `build(n)` returns an OrderPlan.

    Graphs up to `verify_max` vertices are re-checked (snark and
    hypohamiltonian) after construction; larger ones rely on the
    construction and are flagged "theoretical".
    """

    def __init__(self, corpus: Corpus | None = None, verify_max: int = DEFAULT_MAX, jobs: int = 1):
        self.corpus = corpus or Corpus()
        self.verify_max = verify_max
        self.jobs = jobs
        self._plans: dict[int, OrderPlan] = {}
        self._left: dict[str, tuple[CubicGraph, DotSpec]] = {}
        self._verified: dict[CubicGraph, tuple[bool, bool]] = {}

    def _left_factor(self, name: str) -> tuple[CubicGraph, tuple[int, int], tuple[int, int]]:
        if name not in self._left:
            from .hamilton import find_suitable_pairs

            g = named_graph(name)
            reps = find_suitable_pairs(g, jobs=self.jobs)
            if not reps:
                raise RuntimeError(f"{name} has no suitable edge pair")
            first = min(reps, key=lambda r: r.edge_ids)
            self._left[name] = (g, first.ab, first.cd)
        return self._left[name]

    def _check(self, g: CubicGraph) -> tuple[bool, bool]:
        if g not in self._verified:
            from .coloring import is_snark
            from .hamilton import is_hypohamiltonian

            s = bool(is_snark(g))
            h = bool(is_hypohamiltonian(g, jobs=self.jobs)) if s else False
            self._verified[g] = (s, h)
        return self._verified[g]

    def _finish(self, plan: OrderPlan) -> OrderPlan:
        if plan.graph is None:
            return plan
        if plan.n <= self.verify_max:
            plan.snark, plan.hypohamiltonian = self._check(plan.graph)
            plan.verified = "computed" if plan.snark and plan.hypohamiltonian else "failed"
        else:
            plan.verified = "theoretical"
        return plan

    def build(self, n: int) -> OrderPlan:
        if n in self._plans:
            return self._plans[n]
        plan = self._build(n)
        self._plans[n] = plan
        return plan

    def _build(self, n: int) -> OrderPlan:
        if not is_feasible(n):
            return OrderPlan(n, False, note=infeasibility_reason(n))
        if n in NAMED_BASES:
            name = NAMED_BASES[n]
            return self._finish(OrderPlan(n, True, {"base": name}, named_graph(name)))
        hit = self.corpus.first(n)
        if hit is not None:
            src, g = hit
            plan = self._finish(OrderPlan(n, True, {"base": f"corpus:{src}"}, g))
            if plan.verified in ("computed", "theoretical"):
                return plan
        for name in LEFT_FACTORS:
            left, ab, cd = self._left_factor(name)
            m = n - left.n + 2
            if m < 10 or not is_feasible(m):
                continue
            right = self.build(m)
            if right.graph is None or right.verified == "failed":
                continue
            spec = DotSpec(
                left.edge_id(*ab), left.edge_id(*cd), *right.graph.edges[0],
                flip_ab=ab[0] > ab[1], flip_cd=cd[0] > cd[1],
            )
            recipe = {
                "dot": {
                    "left": {"base": name},
                    "right": right.recipe,
                    "ab": list(ab),
                    "cd": list(cd),
                    "xy": list(right.graph.edges[0]),
                }
            }
            return self._finish(OrderPlan(n, True, recipe, dot_product(left, right.graph, spec)))
        return OrderPlan(
            n, True, None,
            note=f"uncovered: no base graph of order {n} and no dot-product route; "
            "supply a corpus containing a hypohamiltonian snark of a suitable order",
        )


def build_order(n: int, corpus: Corpus | None = None, verify_max: int = DEFAULT_MAX) -> OrderPlan:
    return OrderBuilder(corpus, verify_max).build(n)


def plan_orders(max_n: int = DEFAULT_MAX, corpus: Corpus | None = None, verify_max: int | None = None,
                jobs: int = 1) -> list[OrderPlan]:
    """Plans for every order 1..max_n (infeasible ones included)."""
    b = OrderBuilder(corpus, max_n if verify_max is None else verify_max, jobs)
    return [b.build(n) for n in range(1, max_n + 1)]


def uncovered_orders(plans: list[OrderPlan]) -> list[int]:
    return [p.n for p in plans if p.feasible and p.graph is None]
