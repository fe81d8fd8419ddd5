"""Small-order corpora: dot-product classes and three-block hub assemblies.

Applying an automorphism of H to the choice (x, y, a', b', c', d') gives
an isomorphic product, so only one configuration per Aut(H)-orbit is
built.  The G side keeps every independent edge pair.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

from .generators import DotSpec, dot_product
from .graph import CubicGraph, GraphError, independent_edge_pairs
from .iso import automorphisms, canonical_form


def _h_configs(h: CubicGraph) -> list[tuple[int, int, bool, bool]]:
    """(x, y, flip_x, flip_y), one per Aut(h)-orbit of the resolved tuple."""
    autos = automorphisms(h)
    seen = set()
    reps = []
    for u, v in h.edges:
        for x, y in ((u, v), (v, u)):
            for fx in (False, True):
                for fy in (False, True):
                    ap, bp = [w for w in h.adj[x] if w != y]
                    cp, dp = [w for w in h.adj[y] if w != x]
                    if fx:
                        ap, bp = bp, ap
                    if fy:
                        cp, dp = dp, cp
                    key = (x, y, ap, bp, cp, dp)
                    if key in seen:
                        continue
                    reps.append((x, y, fx, fy))
                    for s in autos:
                        seen.add(tuple(s[t] for t in key))
    return reps


def dot_product_classes(g: CubicGraph, h: CubicGraph) -> dict[str, tuple[CubicGraph, DotSpec]]:
    """canonical form -> (first product found, its spec) over all specs of G.H."""
    out: dict[str, tuple[CubicGraph, DotSpec]] = {}
    hc = _h_configs(h)
    for i, j in independent_edge_pairs(g):
        for x, y, fx, fy in hc:
            spec = DotSpec(i, j, x, y, flip_x=fx, flip_y=fy)
            prod = dot_product(g, h, spec)
            key = canonical_form(prod)
            if key not in out:
                out[key] = (prod, spec)
    return out


def hypohamiltonian_products(pairs: Iterable[tuple[CubicGraph, CubicGraph]], jobs: int = 1) -> list[CubicGraph]:
    """Pairwise non-isomorphic hypohamiltonian snarks among all G.H products."""
    from .coloring import is_snark
    from .hamilton import is_hypohamiltonian

    classes: dict[str, CubicGraph] = {}
    for g, h in pairs:
        for key, (prod, _) in dot_product_classes(g, h).items():
            classes.setdefault(key, prod)
    keep = []
    for key in sorted(classes):
        prod = classes[key]
        if is_snark(prod) and is_hypohamiltonian(prod, jobs=jobs):
            keep.append(prod)
    return keep


# ---------------------------------------------------------------------------
# three 5-poles around a hub vertex
# ---------------------------------------------------------------------------


def path3_representatives(g: CubicGraph) -> list[tuple[int, int, int]]:
    """Paths u-v-w of g, one per Aut(g)-orbit (a path and its reverse coincide)."""
    autos = automorphisms(g)
    seen = set()
    reps = []
    for v in range(g.n):
        nb = g.adj[v]
        for i, j in ((0, 1), (0, 2), (1, 2)):
            p = (nb[i], v, nb[j])
            if p in seen:
                continue
            reps.append(p)
            for s in autos:
                seen.add((s[p[0]], s[p[1]], s[p[2]]))
                seen.add((s[p[2]], s[p[1]], s[p[0]]))
    return reps


def _five_pole(g: CubicGraph, path):
    u, v, w = path
    gone = set(path)
    keep = [x for x in range(g.n) if x not in gone]
    pos = {x: i for i, x in enumerate(keep)}
    edges = [(pos[a], pos[b]) for a, b in g.edges if a not in gone and b not in gone]
    (mid,) = [pos[x] for x in g.adj[v] if x not in gone]
    ends = [pos[x] for y in (u, w) for x in g.adj[y] if x not in gone]
    return len(keep), edges, mid, ends


def _wirings(a, b, c):
    """Join three 4-sets of stubs with two edges between every two sets."""
    for ab_a in combinations(a, 2):
        ac_a = [x for x in a if x not in ab_a]
        for ab_b in combinations(b, 2):
            bc_b = [x for x in b if x not in ab_b]
            for ac_c in combinations(c, 2):
                bc_c = [x for x in c if x not in ac_c]
                for p1 in permutations(ab_b):
                    for p2 in permutations(ac_c):
                        for p3 in permutations(bc_c):
                            yield list(zip(ab_a, p1)) + list(zip(ac_a, p2)) + list(zip(bc_b, p3))


def hub_assemblies(blocks: Sequence[CubicGraph]) -> Iterator[CubicGraph]:
    """Every graph made from three blocks with one path u-v-w removed from each.

    The stub left at each middle vertex v goes to a new hub vertex; the
    four stubs left at u and w are wired to the other blocks, two edges per
    pair of blocks.  With three Petersen blocks this family contains both
    Loupekine snarks of order 22.  Graphs with parallel edges are skipped.
    """
    if len(blocks) != 3:
        raise ValueError("exactly three blocks")
    for choice in product(*(path3_representatives(b) for b in blocks)):
        poles = [_five_pole(b, p) for b, p in zip(blocks, choice)]
        offs = [0]
        for pn, *_ in poles:
            offs.append(offs[-1] + pn)
        hub = offs[-1]
        base = []
        groups = []
        for o, (_, e, mid, ends) in zip(offs, poles):
            base += [(x + o, y + o) for x, y in e]
            base.append((mid + o, hub))
            groups.append([x + o for x in ends])
        for extra in _wirings(*groups):
            try:
                yield CubicGraph(hub + 1, base + extra)
            except GraphError:
                continue


def hypohamiltonian_hub_assemblies(blocks: Sequence[CubicGraph], min_lambda_c: int = 4) -> list[CubicGraph]:
    """Non-isomorphic hypohamiltonian snarks among hub_assemblies(blocks)."""
    from .coloring import is_three_edge_colorable
    from .connectivity import cyclic_edge_connectivity
    from .graph import girth
    from .hamilton import is_hypohamiltonian

    found: dict[str, CubicGraph] = {}
    rejected: set[str] = set()
    for g in hub_assemblies(blocks):
        if girth(g) < 5 or is_three_edge_colorable(g):
            continue
        key = canonical_form(g)
        if key in found or key in rejected:
            continue
        lc = cyclic_edge_connectivity(g).lambda_c
        if lc != "undefined" and lc >= min_lambda_c and is_hypohamiltonian(g):
            found[key] = g
        else:
            rejected.add(key)
    return [found[k] for k in sorted(found)]
