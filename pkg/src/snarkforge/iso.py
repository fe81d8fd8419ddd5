"""Canonical labeling by colour refinement plus individualization.

The search tree is explored completely (no automorphism pruning), which is
affordable for the cubic graphs handled here (n <= ~60) and has a useful
side effect: every leaf that reproduces the canonical certificate yields an
automorphism, so the full automorphism group falls out of the same pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import CubicGraph, write_graph6


def _refine(adj, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Cells are split by the vector of neighbour counts into every cell; the
    split order depends only on those counts, so the result is
    label-invariant.
    """
    n = len(adj)
    cells = [list(c) for c in cells]
    while True:
        cell_of = [0] * n
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        k = len(cells)
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                cnt = [0] * k
                for w in adj[v]:
                    cnt[cell_of[w]] += 1
                groups.setdefault(tuple(cnt), []).append(v)
            if len(groups) == 1:
                new_cells.append(c)
            else:
                changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
        cells = new_cells
        if not changed:
            return cells


@dataclass(frozen=True)
class CanonicalResult:
    certificate: str  # graph6 of the canonically relabeled graph
    labeling: tuple[int, ...]  # labeling[v] = canonical position of v
    automorphisms: tuple[tuple[int, ...], ...]


def canonical_result(g: CubicGraph, colors: Iterable[int] | None = None) -> CanonicalResult:
    """Canonical form, one canonical labeling, and the automorphism group.

    `colors` optionally gives an initial vertex colouring that automorphisms
    must preserve (vertices are grouped by colour value, ascending).
    """
    adj = g.adj
    n = g.n
    if colors is None:
        init = [list(range(n))] if n else []
    else:
        colors = list(colors)
        by: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            by.setdefault(c, []).append(v)
        init = [by[c] for c in sorted(by)]

    best_key = None
    best_labs: list[list[int]] = []

    def leaf(cells):
        nonlocal best_key, best_labs
        lab = [0] * n
        for i, c in enumerate(cells):
            lab[c[0]] = i
        key = tuple(sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in g.edges))
        if best_key is None or key < best_key:
            best_key = key
            best_labs = [lab]
        elif key == best_key:
            best_labs.append(lab)

    def search(cells):
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            leaf(cells)
            return
        for v in sorted(cells[target]):
            rest = [w for w in cells[target] if w != v]
            split = cells[:target] + [[v], rest] + cells[target + 1 :]
            search(_refine(adj, split))

    search(_refine(adj, init) if n else [])
    if n == 0:
        return CanonicalResult(write_graph6(g), (), ((),))
    lab0 = best_labs[0]
    inv0 = [0] * n
    for v, p in enumerate(lab0):
        inv0[p] = v
    # lab0^-1 o lab maps v -> the vertex occupying v's canonical slot in lab0
    autos = sorted({tuple(inv0[lab[v]] for v in range(n)) for lab in best_labs})
    canon = CubicGraph(n, [(lab0[u], lab0[v]) for u, v in g.edges])
    return CanonicalResult(write_graph6(canon), tuple(lab0), tuple(autos))


def canonical_form(g: CubicGraph) -> str:
    """Isomorphism-invariant string: equal iff the graphs are isomorphic."""
    return canonical_result(g).certificate


def is_isomorphic(a: CubicGraph, b: CubicGraph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(map(len, a.adj)) != sorted(map(len, b.adj)):
        return False
    return canonical_form(a) == canonical_form(b)


def isomorphism(a: CubicGraph, b: CubicGraph) -> list[int] | None:
    """A bijection phi with phi(a) == b, or None."""
    if a.n != b.n or a.m != b.m:
        return None
    ra, rb = canonical_result(a), canonical_result(b)
    if ra.certificate != rb.certificate:
        return None
    inv_b = [0] * b.n
    for v, p in enumerate(rb.labeling):
        inv_b[p] = v
    return [inv_b[ra.labeling[v]] for v in range(a.n)]


def automorphisms(g: CubicGraph, colors: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    return list(canonical_result(g, colors).automorphisms)


def vertex_orbits(g: CubicGraph) -> list[list[int]]:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in automorphisms(g):
        for v, w in enumerate(a):
            rv, rw = find(v), find(w)
            if rv != rw:
                parent[max(rv, rw)] = min(rv, rw)
    orbits: dict[int, list[int]] = {}
    for v in range(g.n):
        orbits.setdefault(find(v), []).append(v)
    return sorted(orbits.values())


def dedupe(graphs: Iterable[CubicGraph]) -> list[CubicGraph]:
    """First representative of every isomorphism class, in input order."""
    seen = set()
    out = []
    for g in graphs:
        c = canonical_form(g)
        if c not in seen:
            seen.add(c)
            out.append(g)
    return out
