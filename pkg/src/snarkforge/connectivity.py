"""Edge-connectivity and cyclic edge-connectivity of cubic graphs.

Cyclic edge-connectivity is computed by a branch-and-bound over connected
sides S of a cut.  It rests on a simple exchange argument: if some vertex v
of a minimum cyclic cut had at most one neighbour on its own side, moving v
across would shrink the cut while both sides keep their cycles.  So in a
minimum cyclic cut every vertex sends at most one edge across, and a vertex
outside S with two neighbours in S must belong to S.  Growing S from its
smallest vertex, the only real choices are frontier vertices with exactly
one neighbour in S; excluding one of them commits a cut edge for good,
which gives the bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .graph import CubicGraph, GraphError, components, girth, is_connected

UNDEFINED = "undefined"


@dataclass
class ConnectivityReport:
    """lambda_c is an int, or UNDEFINED when no two disjoint cycles exist."""

    edge_connectivity: int
    lambda_c: int | str
    witness_cut: tuple[int, ...] = ()
    side: tuple[int, ...] = field(default=(), repr=False)


# ---------------------------------------------------------------------------
# max-flow helpers
# ---------------------------------------------------------------------------


def _flow_value(n_nodes, arcs, s, t) -> int:
    """Max s-t flow with unit capacity in both directions of every edge."""
    if not arcs:
        return 0
    a = np.asarray(arcs, dtype=np.int32)
    rows = np.concatenate([a[:, 0], a[:, 1]])
    cols = np.concatenate([a[:, 1], a[:, 0]])
    cap = csr_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n_nodes, n_nodes))
    return int(maximum_flow(cap, s, t).flow_value)


def edge_connectivity(g: CubicGraph) -> int:
    """Minimum number of edges whose removal disconnects g (0 if disconnected)."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    return min(_flow_value(g.n, g.edges, 0, t) for t in range(1, g.n))


def _has_cycle(g: CubicGraph, verts) -> bool:
    vs = set(verts)
    if not vs:
        return False
    e = sum(1 for u, v in g.edges if u in vs and v in vs)
    k = len(components(g, skip=[v for v in range(g.n) if v not in vs]))
    return e > len(vs) - k


def cut_edges(g: CubicGraph, side) -> tuple[int, ...]:
    s = set(side)
    return tuple(i for i, (u, v) in enumerate(g.edges) if (u in s) != (v in s))


def is_cyclic_cut(g: CubicGraph, edge_ids) -> bool:
    """Removing the edges leaves at least two components that contain cycles."""
    h = CubicGraph(g.n, [e for i, e in enumerate(g.edges) if i not in set(edge_ids)])
    return sum(1 for c in components(h) if _has_cycle(h, c)) >= 2


# ---------------------------------------------------------------------------
# branch-and-bound over sides
# ---------------------------------------------------------------------------


class _SideSearch:
    """Connected sides S, min(S) = root, where no vertex has 2+ edges across.

    `on_final(S, cut_size)` is called for every completed side whose cut
    (edges to excluded vertices) is below `self.bound`; it may lower the
    bound.
    """

    def __init__(self, g: CubicGraph, bound: int, size_cap: int, on_final):
        self.g = g
        self.bound = bound
        self.size_cap = size_cap
        self.on_final = on_final

    def run(self, root: int):
        n = self.g.n
        inS = [False] * n
        excl = [False] * n
        cnt = [0] * n
        self._root = root
        self._go(inS, excl, cnt, [root], 0, 0)

    def _go(self, inS, excl, cnt, add, size, lb):
        adj = self.g.adj
        root = self._root
        inS, excl, cnt = inS[:], excl[:], cnt[:]
        while add:
            v = add.pop()
            if inS[v]:
                continue
            if v < root or excl[v]:
                return
            inS[v] = True
            size += 1
            if size > self.size_cap:
                return
            for w in adj[v]:
                if inS[w]:
                    continue
                cnt[w] += 1
                if cnt[w] >= 2:
                    if excl[w]:
                        return
                    add.append(w)
        # smallest undecided frontier vertex
        pick = -1
        for w in range(self.g.n):
            if cnt[w] == 1 and not inS[w] and not excl[w]:
                pick = w
                break
        if pick < 0:
            if lb < self.bound:
                self.on_final(inS, lb)
            return
        if pick > root:
            self._go(inS, excl, cnt, [pick], size, lb)
        if lb + 1 < self.bound:
            excl[pick] = True
            self._go(inS, excl, cnt, [], size, lb + 1)
            excl[pick] = False


def _shortest_cycle_side(g: CubicGraph):
    """Vertex set of one shortest cycle (BFS from each root)."""
    best = None
    for s in range(g.n):
        dist = {s: 0}
        par = {s: -1}
        q = [s]
        for u in q:
            if best is not None and 2 * dist[u] + 1 >= len(best):
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    q.append(w)
                elif w != par[u] and dist[w] >= dist[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < len(best):
                        cyc = set()
                        for x in (u, w):
                            while x != -1:
                                cyc.add(x)
                                x = par[x]
                        if len(cyc) == length:
                            best = cyc
    return best


def cyclic_edge_connectivity(g: CubicGraph) -> ConnectivityReport:
    """Exact cyclic edge-connectivity with a witness cut."""
    g.require_cubic()
    if not is_connected(g):
        raise GraphError("cyclic edge-connectivity needs a connected graph")
    lam = edge_connectivity(g)
    best_side = None
    best = g.m + 1
    cyc = _shortest_cycle_side(g)
    if cyc is not None and _has_cycle(g, set(range(g.n)) - cyc):
        best_side = sorted(cyc)
        best = len(cut_edges(g, cyc))

    found = {}

    def on_final(inS, lb):
        side = [v for v in range(g.n) if inS[v]]
        rest = [v for v in range(g.n) if not inS[v]]
        if _has_cycle(g, side) and _has_cycle(g, rest):
            found["side"] = side
            search.bound = lb

    search = _SideSearch(g, best, g.n // 2, on_final)
    for r in range(g.n):
        search.run(r)
    if "side" in found:
        best_side = found["side"]
        best = search.bound
    if best_side is None:
        return ConnectivityReport(lam, UNDEFINED)
    return ConnectivityReport(lam, best, cut_edges(g, best_side), tuple(best_side))


def cyclically_k_edge_connected(g: CubicGraph, k: int) -> bool:
    """No cyclic cut with fewer than k edges (cheaper than the exact value)."""
    g.require_cubic()
    if not is_connected(g):
        return False
    if girth(g) < k:
        # a shortest cycle C gives a cut of size |C| when the rest has a cycle
        cyc = _shortest_cycle_side(g)
        if _has_cycle(g, set(range(g.n)) - cyc):
            return False
    hit = []

    def on_final(inS, lb):
        side = [v for v in range(g.n) if inS[v]]
        rest = [v for v in range(g.n) if not inS[v]]
        if _has_cycle(g, side) and _has_cycle(g, rest):
            hit.append(side)
            search.bound = -1  # stop accepting

    search = _SideSearch(g, k, g.n // 2, on_final)
    for r in range(g.n):
        if hit:
            break
        search.run(r)
    return not hit


def cyclic_4_cuts(g: CubicGraph) -> list[tuple[int, ...]]:
    """Every cut of four independent edges with both sides connected and cyclic.

    Sides are taken to contain vertex 0, so each cut is listed once.
    """
    g.require_cubic()
    out = set()

    def on_final(inS, lb):
        if lb != 4:
            return
        side = [v for v in range(g.n) if inS[v]]
        rest = [v for v in range(g.n) if not inS[v]]
        if not _has_cycle(g, side) or not _has_cycle(g, rest):
            return
        if len(components(g, skip=side)) != 1:
            return
        out.add(cut_edges(g, side))

    search = _SideSearch(g, 5, g.n, on_final)
    search.run(0)
    return sorted(out)


# ---------------------------------------------------------------------------
# independent oracle
# ---------------------------------------------------------------------------


def induced_cycles(g: CubicGraph) -> list[tuple[int, ...]]:
    """All chordless cycles, each once, starting at its smallest vertex."""
    simple = []
    adj = g.adj

    def extend(path, onpath):
        start, last = path[0], path[-1]
        for w in adj[last]:
            if w == start:
                if len(path) >= 3 and path[1] < path[-1]:
                    simple.append(tuple(path))
            elif w > start and w not in onpath:
                onpath.add(w)
                path.append(w)
                extend(path, onpath)
                path.pop()
                onpath.discard(w)

    for s in range(g.n):
        extend([s], {s})
    out = []
    for c in simple:
        cs = set(c)
        if sum(1 for u, v in g.edges if u in cs and v in cs) == len(c):
            out.append(c)
    return out


def cyclic_edge_connectivity_flow(g: CubicGraph) -> int | str:
    """Oracle: min over disjoint induced-cycle pairs of the separating max-flow."""
    cycles = induced_cycles(g)
    best = None
    for c1, c2 in itertools.combinations(cycles, 2):
        if set(c1) & set(c2):
            continue
        node = list(range(g.n))
        s, t = g.n, g.n + 1
        for v in c1:
            node[v] = s
        for v in c2:
            node[v] = t
        arcs = [(node[u], node[v]) for u, v in g.edges if node[u] != node[v]]
        val = _flow_value(g.n + 2, arcs, s, t)
        if best is None or val < best:
            best = val
    return UNDEFINED if best is None else best
