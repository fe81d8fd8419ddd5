"""3-edge-colourings, snarks and bicriticality."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .graph import CubicGraph, GraphError, girth

EdgeColoring = dict  # EdgeId -> colour in {0, 1, 2}

_ALL = 0b111


def _live_edges(g: CubicGraph, gone: set[int]) -> list[int]:
    return [i for i, (u, v) in enumerate(g.edges) if u not in gone and v not in gone]


def is_three_edge_colorable(g: CubicGraph, deleted_vertices: Iterable[int] = ()) -> EdgeColoring | None:
    """A proper 3-edge-colouring of g - deleted_vertices, or None.

    Forward checking on colour domains: colouring an edge removes that colour
    from every edge sharing an endpoint, and an edge left with a single
    possible colour is coloured immediately.  Branching picks the edge with
    the smallest domain.  Colours are renamed by first appearance in EdgeId
    order, so the output is canonical for a given graph.
    """
    gone = set(deleted_vertices)
    live = _live_edges(g, gone)
    for v in range(g.n):
        if v not in gone and sum(1 for w in g.adj[v] if w not in gone) > 3:
            raise GraphError(f"vertex {v} has degree > 3")
    if not live:
        return {}
    pos = {e: k for k, e in enumerate(live)}
    nbrs = []
    for e in live:
        u, v = g.edges[e]
        ns = set()
        for x in (u, v):
            for w in g.adj[x]:
                if w not in gone:
                    f = pos[g.edge_id(x, w)]
                    if f != pos[e]:
                        ns.add(f)
        nbrs.append(sorted(ns))
    m = len(live)
    dom = [_ALL] * m
    col = [-1] * m

    def assign(k, c, dom, col):
        stack = [(k, c)]
        while stack:
            k, c = stack.pop()
            if col[k] >= 0:
                if col[k] != c:
                    return False
                continue
            if not dom[k] >> c & 1:
                return False
            col[k] = c
            dom[k] = 1 << c
            bit = 1 << c
            for f in nbrs[k]:
                if col[f] < 0 and dom[f] & bit:
                    d = dom[f] & ~bit
                    if not d:
                        return False
                    dom[f] = d
                    if d & (d - 1) == 0:
                        stack.append((f, d.bit_length() - 1))
                elif col[f] == c:
                    return False
        return True

    def solve(dom, col):
        best, best_size = -1, 4
        for k in range(m):
            if col[k] < 0:
                s = bin(dom[k]).count("1")
                if s < best_size:
                    best, best_size = k, s
                    if s == 2:
                        break
        if best < 0:
            return col
        for c in range(3):
            if dom[best] >> c & 1:
                d2, c2 = dom[:], col[:]
                if assign(best, c, d2, c2):
                    res = solve(d2, c2)
                    if res is not None:
                        return res
        return None

    # colour symmetry: fix the colours around the first edge
    ok = assign(0, 0, dom, col)
    if ok and nbrs[0]:
        ok = assign(nbrs[0][0], 1, dom, col)
    res = solve(dom, col) if ok else None
    if res is None:
        return None
    rename: dict[int, int] = {}
    out = {}
    for k, e in enumerate(live):
        c = res[k]
        if c not in rename:
            rename[c] = len(rename)
        out[e] = rename[c]
    return out


@dataclass
class SnarkVerdict:
    snark: bool
    reason: str

    def __bool__(self):
        return self.snark


def is_snark(g: CubicGraph) -> SnarkVerdict:
    """Cubic, girth >= 5, cyclically 4-edge-connected and not 3-edge-colourable.

    The clauses are checked in that order and the first failure is named.
    """
    from .connectivity import cyclically_k_edge_connected

    if not g.is_cubic() or g.n % 2:
        return SnarkVerdict(False, "not cubic")
    gi = girth(g)
    if gi < 5:
        return SnarkVerdict(False, f"girth {gi} < 5")
    if not cyclically_k_edge_connected(g, 4):
        return SnarkVerdict(False, "cyclic edge-connectivity < 4")
    if is_three_edge_colorable(g) is not None:
        return SnarkVerdict(False, "3-edge-colourable")
    return SnarkVerdict(True, "snark")


def _pair_colorable(args):
    g, u, v = args
    return (u, v), is_three_edge_colorable(g, (u, v)) is not None


def is_bicritical(g: CubicGraph, jobs: int = 1, return_failure: bool = False):
    """Every two-vertex-deleted subgraph of a class-2 cubic graph is 3-edge-colourable.

    With `return_failure`, returns (flag, first failing pair or None).
    """
    from .hamilton import _pmap

    g.require_cubic()
    if is_three_edge_colorable(g) is not None:
        raise ValueError("bicriticality is only defined for graphs that are not 3-edge-colourable")
    failing = None
    for pair, ok in _pmap(_pair_colorable, [(g, u, v) for u, v in itertools.combinations(range(g.n), 2)], jobs):
        if not ok:
            failing = pair
            break
    if return_failure:
        return failing is None, failing
    return failing is None
