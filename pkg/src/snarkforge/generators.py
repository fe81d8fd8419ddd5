"""Named snarks with the figure labelings, and the dot product."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import CubicGraph, GraphError, components, independent

# Edge lists exactly as drawn in the figures; certificate files refer to
# these integer labels.
PETERSEN_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
)

BLANUSA2_EDGES = (
    (0, 1), (0, 2), (0, 14), (1, 5), (1, 11), (2, 3), (2, 6), (3, 4),
    (3, 9), (4, 5), (4, 7), (5, 6), (6, 8), (7, 8), (7, 17), (8, 9),
    (9, 15), (10, 11), (10, 14), (10, 16), (11, 12), (12, 13), (12, 17),
    (13, 14), (13, 15), (15, 16), (16, 17),
)

LOUPEKINE1_EDGES = (
    (0, 1), (0, 2), (0, 11), (1, 5), (1, 6), (2, 3), (2, 15), (3, 4),
    (3, 19), (4, 5), (4, 18), (5, 7), (6, 8), (6, 9), (7, 9), (7, 10),
    (8, 10), (8, 17), (9, 16), (10, 12), (11, 13), (11, 14), (12, 14),
    (12, 15), (13, 15), (13, 16), (14, 20), (16, 21), (17, 19), (17, 20),
    (18, 20), (18, 21), (19, 21),
)


def petersen() -> CubicGraph:
    return CubicGraph(10, PETERSEN_EDGES)


def blanusa2() -> CubicGraph:
    """Second Blanusa snark, 18 vertices, labelled as in the figure."""
    return CubicGraph(18, BLANUSA2_EDGES)


def blanusa1() -> CubicGraph:
    """First Blanusa snark, built as a Petersen-Petersen dot product.

    Of the two isomorphism classes of P.P, this is the one not isomorphic
    to `blanusa2`; the labeling is the dot-product labeling, not a figure's.
    """
    return dot_product(petersen(), petersen(), DotSpec(0, 8, 0, 1))


def loupekine1() -> CubicGraph:
    """First Loupekine snark, 22 vertices, labelled as in the figure."""
    return CubicGraph(22, LOUPEKINE1_EDGES)


@dataclass(frozen=True)
class FlowerSpec:
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise GraphError(f"flower snark needs k >= 2, got {self.k}")

    @property
    def m(self) -> int:
        """Number of star units, 2k+1."""
        return 2 * self.k + 1

    @property
    def order(self) -> int:
        return 4 * self.m

    # outer ring: b_i = 3i, d_i = 3i+1, c_i = 3i-1 (mod 3m); hub a_i = 3m+i
    def a(self, i: int) -> int:
        return 3 * self.m + i % self.m

    def b(self, i: int) -> int:
        return 3 * (i % self.m)

    def c(self, i: int) -> int:
        return (3 * (i % self.m) - 1) % (3 * self.m)

    def d(self, i: int) -> int:
        return 3 * (i % self.m) + 1

    def names(self) -> dict[str, int]:
        out = {}
        for i in range(self.m):
            for letter in "abcd":
                out[f"{letter}{i}"] = getattr(self, letter)(i)
        return out


def flower(k: int) -> CubicGraph:
    """Isaacs' flower snark J_{2k+1} in the figure numbering.

    Edge set b_i a_i, b_i c_i, b_i d_i, a_i a_{i+1}, c_i d_{i+1}, d_i c_{i+1}
    with indices mod 2k+1.
    """
    return flower_with_names(k)[0]


def flower_with_names(k: int) -> tuple[CubicGraph, dict[str, int]]:
    fs = FlowerSpec(k)
    edges = []
    for i in range(fs.m):
        edges += [
            (fs.b(i), fs.a(i)),
            (fs.b(i), fs.c(i)),
            (fs.b(i), fs.d(i)),
            (fs.a(i), fs.a(i + 1)),
            (fs.c(i), fs.d(i + 1)),
            (fs.d(i), fs.c(i + 1)),
        ]
    return CubicGraph(fs.order, edges), fs.names()


NAMED = {
    "petersen": petersen,
    "P": petersen,
    "B1": blanusa1,
    "blanusa1": blanusa1,
    "B2": blanusa2,
    "blanusa2": blanusa2,
    "L1": loupekine1,
    "loupekine1": loupekine1,
    "J5": lambda: flower(2),
    "J7": lambda: flower(3),
    "J9": lambda: flower(4),
    "J11": lambda: flower(5),
    "J13": lambda: flower(6),
}


def named_graph(name: str) -> CubicGraph:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown graph name {name!r}; known: {sorted(NAMED)}") from None


# ---------------------------------------------------------------------------
# dot product
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DotSpec:
    """One application of the dot product G.H.

    ab = G.edges[g_edge_ab] and cd = G.edges[g_edge_cd] are removed from G,
    the adjacent vertices h_x, h_y are removed from H.  a' and b' are the
    two other neighbours of x, c' and d' those of y; a is joined to a', b to
    b', c to c' and d to d'.  The flips pick which endpoint / neighbour
    plays which role (False = smaller id first).
    """

    g_edge_ab: int
    g_edge_cd: int
    h_x: int
    h_y: int
    flip_ab: bool = False
    flip_x: bool = False
    flip_y: bool = False
    flip_cd: bool = False

    def resolve(self, g: CubicGraph, h: CubicGraph) -> dict[str, int]:
        """The named vertices a, b, c, d (in G) and x, y, a', b', c', d' (in H)."""
        if not (0 <= self.g_edge_ab < g.m and 0 <= self.g_edge_cd < g.m):
            raise GraphError("edge id out of range")
        a, b = g.edges[self.g_edge_ab]
        c, d = g.edges[self.g_edge_cd]
        if self.flip_ab:
            a, b = b, a
        if self.flip_cd:
            c, d = d, c
        if not independent((a, b), (c, d)):
            raise GraphError(f"edges {(a, b)} and {(c, d)} are not independent")
        x, y = self.h_x, self.h_y
        if not (0 <= x < h.n and 0 <= y < h.n) or not h.has_edge(x, y):
            raise GraphError(f"vertices {x}, {y} are not adjacent in H")
        if h.degree(x) != 3 or h.degree(y) != 3:
            raise GraphError("x and y must be cubic vertices of H")
        ap, bp = [w for w in h.adj[x] if w != y]
        cp, dp = [w for w in h.adj[y] if w != x]
        if self.flip_x:
            ap, bp = bp, ap
        if self.flip_y:
            cp, dp = dp, cp
        return {"a": a, "b": b, "c": c, "d": d, "x": x, "y": y,
                "a'": ap, "b'": bp, "c'": cp, "d'": dp}


def dot_product_map(g: CubicGraph, h: CubicGraph, spec: DotSpec) -> tuple[CubicGraph, dict[int, int]]:
    """The product graph and the map from surviving H vertices to new ids.

    G keeps its labels 0..|G|-1; H - {x, y} follows in increasing H order.
    """
    r = spec.resolve(g, h)
    x, y = r["x"], r["y"]
    h_new = {}
    nxt = g.n
    for v in range(h.n):
        if v != x and v != y:
            h_new[v] = nxt
            nxt += 1
    drop = {g.edges[spec.g_edge_ab], g.edges[spec.g_edge_cd]}
    edges = [e for e in g.edges if e not in drop]
    for u, v in h.edges:
        if u in h_new and v in h_new:
            edges.append((h_new[u], h_new[v]))
    for s in "abcd":
        edges.append((r[s], h_new[r[s + "'"]]))
    try:
        prod = CubicGraph(nxt, edges)
    except GraphError as exc:
        raise GraphError(f"dot product is not simple: {exc}") from None
    return prod, h_new


def dot_product(g: CubicGraph, h: CubicGraph, spec: DotSpec) -> CubicGraph:
    """G.H with the aa', bb', cc', dd' joining (the only variant built here).

    Result order is |G| + |H| - 2.  Degrees are preserved, so cubic inputs
    give a cubic output; the result may be disconnected for unlucky inputs
    (see `graph.is_connected`).
    """
    if not g.is_cubic() or not h.is_cubic():
        raise GraphError("dot product factors must be cubic")
    return dot_product_map(g, h, spec)[0]


def is_disconnected_product(g: CubicGraph, h: CubicGraph, spec: DotSpec) -> bool:
    return len(components(dot_product(g, h, spec))) > 1


def enumerate_dot_specs(g: CubicGraph, h: CubicGraph, dedupe: bool = True) -> Iterator[DotSpec]:
    """Every valid DotSpec for G.H.

    Independent edge pairs {e, f} (e < f, ab = e), every edge xy of H in
    both orders, and both neighbour assignments at x and at y: 8 per
    (edge pair, xy-edge).  With `dedupe`, specs that produce an edge set
    already produced are skipped.
    """
    seen = set()
    E = g.edges
    xy_edges = [e for e in h.edges if h.degree(e[0]) == 3 and h.degree(e[1]) == 3]
    for i in range(len(E)):
        for j in range(i + 1, len(E)):
            if not independent(E[i], E[j]):
                continue
            for u, v in xy_edges:
                for x, y in ((u, v), (v, u)):
                    for fx in (False, True):
                        for fy in (False, True):
                            spec = DotSpec(i, j, x, y, flip_x=fx, flip_y=fy)
                            if dedupe:
                                key = dot_product(g, h, spec).edges
                                if key in seen:
                                    continue
                                seen.add(key)
                            yield spec


def count_dot_specs(g: CubicGraph, h: CubicGraph) -> int:
    return sum(1 for _ in enumerate_dot_specs(g, h, dedupe=False))
