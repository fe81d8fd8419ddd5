"""Perfect matchings and the mu_3 invariant."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

import numpy as np

from .graph import CubicGraph, GraphError

DEFAULT_BUDGET_SECS = 60.0


def perfect_matchings(g: CubicGraph) -> list[tuple[int, ...]]:
    """All perfect matchings as sorted EdgeId tuples, in lexicographic order.

    Backtracking: the lowest unmatched vertex is matched along each of its
    incident edges in turn.
    """
    if g.n % 2:
        raise GraphError(f"odd order {g.n} has no perfect matching")
    inc = [[g.edge_id(v, w) for w in g.adj[v]] for v in range(g.n)]
    matched = [False] * g.n
    chosen: list[int] = []
    out = []

    def go(v):
        while v < g.n and matched[v]:
            v += 1
        if v == g.n:
            out.append(tuple(sorted(chosen)))
            return
        matched[v] = True
        for e in inc[v]:
            a, b = g.edges[e]
            w = b if a == v else a
            if not matched[w]:
                matched[w] = True
                chosen.append(e)
                go(v + 1)
                chosen.pop()
                matched[w] = False
        matched[v] = False

    go(0)
    return sorted(out)


@dataclass
class Mu3Result:
    mu3: int
    best_triple: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    exact: bool
    n_matchings: int = 0


def default_budget_secs() -> float:
    env = os.environ.get("SNARKFORGE_BUDGET_SECS")
    return float(env) if env else DEFAULT_BUDGET_SECS


def mu3(g: CubicGraph, budget: float | None = None) -> Mu3Result:
    """Fewest edges left uncovered by the union of three perfect matchings.

    All matchings are enumerated once into a 0/1 matrix.  For each first
    matching i the unions with every later j are formed at once; pairs that
    cannot beat the incumbent even if the third matching covered n/2 new
    edges are dropped, and the best third matching for every surviving pair
    comes from one matrix product.  `budget` is wall-clock seconds; when it
    runs out the incumbent is returned with exact=False.
    """
    if budget is None:
        budget = default_budget_secs()
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    g.require_cubic()
    deadline = time.monotonic() + budget
    pms = perfect_matchings(g)
    if not pms:
        raise GraphError("graph has no perfect matching")
    m = g.m
    k = len(pms)
    M = np.zeros((k, m), dtype=np.float32)
    for r, pm in enumerate(pms):
        M[r, list(pm)] = 1.0
    half = g.n // 2

    # the incumbent always names a real triple, so an early stop stays consistent
    best = m - half
    best_t = (0, 0, 0)
    order = np.argsort(-(M @ M.T == 0).sum(axis=1), kind="stable")  # many disjoint partners first
    exact = True
    for i in order:
        if best == 0:
            break
        if time.monotonic() > deadline:
            exact = False
            break
        U = np.maximum(M[i], M)  # (k, m) unions with every j
        unc = m - U.sum(axis=1)
        keep = np.nonzero(unc - half < best)[0]
        if keep.size == 0:
            continue
        gain = (1.0 - U[keep]) @ M.T  # edges of matching t not yet covered
        left = unc[keep][:, None] - gain
        flat = int(np.argmin(left))
        val = int(round(float(left.flat[flat])))
        if val < best:
            r, t = divmod(flat, k)
            best = val
            best_t = (int(i), int(keep[r]), int(t))
    triple = tuple(sorted((pms[best_t[0]], pms[best_t[1]], pms[best_t[2]])))
    return Mu3Result(best, triple, exact, k)


def uncovered(g: CubicGraph, matchings) -> int:
    covered = set()
    for pm in matchings:
        covered.update(pm)
    return g.m - len(covered)
