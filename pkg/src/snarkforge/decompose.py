"""Undo dot products along cyclic 4-edge-cuts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import cyclic_4_cuts
from .generators import DotSpec, dot_product
from .graph import CubicGraph, GraphError
from .iso import is_isomorphic

# the three ways to split four stubs into two pairs
PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


@dataclass
class Decomposition:
    """g is isomorphic to dot_product(g_factor, h_factor, spec).

    `g_side` lists the original vertices that make up the G factor (in the
    order of their new labels 0..); `pairing_choice` indexes PAIRINGS over
    the four cut edges sorted by EdgeId.
    """

    cut: tuple[int, ...]
    g_side: tuple[int, ...]
    pairing_choice: int
    g_factor: CubicGraph
    h_factor: CubicGraph
    spec: DotSpec
    factor_properties: dict = field(default_factory=dict)


def find_cyclic_4_cuts(g: CubicGraph) -> list[tuple[int, ...]]:
    """Cyclic cuts of four pairwise independent edges (EdgeId tuples)."""
    return cyclic_4_cuts(g)


def _invert(g: CubicGraph, cut, g_side: list[int], pairing):
    """Factors for one orientation and pairing, or None if not simple."""
    in_g = set(g_side)
    h_side = [v for v in range(g.n) if v not in in_g]
    stubs = []  # (G-side endpoint, H-side endpoint) per cut edge
    for e in cut:
        u, v = g.edges[e]
        stubs.append((u, v) if u in in_g else (v, u))
    gmap = {v: i for i, v in enumerate(g_side)}
    hmap = {v: i for i, v in enumerate(h_side)}
    (i1, i2), (i3, i4) = pairing
    a, b, c, d = (gmap[stubs[i][0]] for i in (i1, i2, i3, i4))
    ap, bp, cp, dp = (hmap[stubs[i][1]] for i in (i1, i2, i3, i4))
    g_edges = [(gmap[u], gmap[v]) for u, v in g.edges if u in in_g and v in in_g]
    h_edges = [(hmap[u], hmap[v]) for u, v in g.edges if u not in in_g and v not in in_g]
    x, y = len(h_side), len(h_side) + 1
    try:
        gf = CubicGraph(len(g_side), g_edges + [(a, b), (c, d)])
        hf = CubicGraph(len(h_side) + 2, h_edges + [(x, y), (x, ap), (x, bp), (y, cp), (y, dp)])
    except GraphError:
        return None
    e_ab, e_cd = gf.edge_id(a, b), gf.edge_id(c, d)
    spec = DotSpec(
        e_ab, e_cd, x, y,
        flip_ab=a > b,
        flip_x=ap > bp,
        flip_y=cp > dp,
        flip_cd=c > d,
    )
    return gf, hf, spec


def decompose_dot(g: CubicGraph, properties: bool = True) -> list[Decomposition]:
    """Every reconstruction of g as a dot product across a cyclic 4-cut.

    Each cut is tried with either side as the G factor and each of the
    three pairings of its G-side endpoints into the edges ab, cd; the
    H-side endpoints then hang off x and y accordingly.  Every emitted
    decomposition has passed the round-trip isomorphism check.
    """
    from .coloring import is_snark
    from .hamilton import is_hypohamiltonian

    g.require_cubic()
    out = []
    memo: dict[CubicGraph, dict] = {}

    def props(f):
        if f not in memo:
            memo[f] = {"snark": bool(is_snark(f)), "hypohamiltonian": bool(is_hypohamiltonian(f))}
        return memo[f]

    for cut in find_cyclic_4_cuts(g):
        cut_set = set(cut)
        side0 = _side_of(g, cut_set, 0)
        other = [v for v in range(g.n) if v not in set(side0)]
        for g_side in (side0, other):
            for k, pairing in enumerate(PAIRINGS):
                res = _invert(g, cut, g_side, pairing)
                if res is None:
                    continue
                gf, hf, spec = res
                if not is_isomorphic(dot_product(gf, hf, spec), g):
                    raise AssertionError("dot-product inversion failed its round trip")
                fp = {"g": props(gf), "h": props(hf)} if properties else {}
                out.append(Decomposition(tuple(cut), tuple(g_side), k, gf, hf, spec, fp))
    return out


def _side_of(g: CubicGraph, cut_set, start) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen and g.edge_id(u, w) not in cut_set:
                seen.add(w)
                stack.append(w)
    return sorted(seen)
