"""Immutable simple graphs on vertices 0..n-1, graph6 I/O and basic queries."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

INFINITY = float("inf")

_GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    pass


class CubicGraph:
    """A finite simple undirected graph with dense integer vertex ids.

    Despite the name, arbitrary degrees are allowed; call `require_cubic`
    where the 3-regular contract matters.  Edges are stored as sorted pairs
    ``(u, v)`` with ``u < v`` in lexicographic order, so an EdgeId is simply
    an index into ``edges`` and stays stable for the lifetime of the object.
    """

    __slots__ = ("n", "edges", "adj", "_edge_index", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in norm:
                raise GraphError(f"parallel edge {key}")
            norm.add(key)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self._hash = None

    # -- basic protocol ---------------------------------------------------

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CubicGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __reduce__(self):
        return (CubicGraph, (self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        """EdgeId of the edge uv; KeyError if absent."""
        try:
            return self._edge_index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise KeyError(f"no edge ({u},{v})") from None

    def is_cubic(self) -> bool:
        return all(len(a) == 3 for a in self.adj)

    def require_cubic(self) -> "CubicGraph":
        bad = [v for v in range(self.n) if len(self.adj[v]) != 3]
        if bad:
            raise GraphError(f"not cubic: vertex {bad[0]} has degree {len(self.adj[bad[0]])}")
        if self.n % 2:
            raise GraphError(f"cubic graph must have even order, got {self.n}")
        return self

    # -- derived graphs ---------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "CubicGraph":
        """Graph with vertex v renamed to perm[v]."""
        return CubicGraph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def without_edges(self, removed: Iterable[Sequence[int]]) -> "CubicGraph":
        drop = {self.edges[self.edge_id(*e)] for e in removed}
        return CubicGraph(self.n, (e for e in self.edges if e not in drop))

    def with_edges(self, added: Iterable[Sequence[int]]) -> "CubicGraph":
        return CubicGraph(self.n, list(self.edges) + [tuple(e) for e in added])

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["CubicGraph", list[int]]:
        """Induced subgraph on the remaining vertices, renumbered densely.

        Returns the new graph and ``old_of_new``, the original id of every
        new vertex.
        """
        gone = set(vertices)
        old_of_new = [v for v in range(self.n) if v not in gone]
        new_of_old = {v: i for i, v in enumerate(old_of_new)}
        sub = [
            (new_of_old[u], new_of_old[v])
            for u, v in self.edges
            if u in new_of_old and v in new_of_old
        ]
        return CubicGraph(len(old_of_new), sub), old_of_new

    def to_graph6(self) -> str:
        return write_graph6(self)

    @classmethod
    def from_graph6(cls, text: str) -> "CubicGraph":
        return parse_graph6(text)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph too large for graph6: n={n}")


def write_graph6(g: CubicGraph) -> str:
    """graph6 encoding of g, without header and without trailing newline."""
    n = g.n
    nbits = n * (n - 1) // 2
    bits = bytearray(nbits + (-nbits) % 6)
    for u, v in g.edges:
        # upper triangle, column by column: x(0,1) x(0,2) x(1,2) x(0,3) ...
        bits[v * (v - 1) // 2 + u] = 1
    out = [_encode_n(n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> CubicGraph:
    """Decode one graph6 line.

    A leading ``>>graph6<<`` header and surrounding whitespace are accepted.
    Errors carry the offending byte offset within the line.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    base = 0
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER) :]
        base = len(_GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 byte {ch!r} at offset {base + i}")

    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error(f"truncated length header at offset {base}")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
        if n <= 62:
            raise Graph6Error(f"non-canonical length header at offset {base}")
    else:
        if len(vals) < 8:
            raise Graph6Error(f"truncated length header at offset {base}")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
        if n <= 258047:
            raise Graph6Error(f"non-canonical length header at offset {base}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, found {len(body)} "
            f"(offset {base + pos})"
        )
    edges = []
    k = 0
    u, v = 0, 1
    for bi, val in enumerate(body):
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if k >= nbits:
                if bit:
                    raise Graph6Error(f"nonzero padding bit at offset {base + pos + bi}")
            elif bit:
                edges.append((u, v))
            if k < nbits:
                k += 1
                u += 1
                if u == v:
                    u, v = 0, v + 1
    return CubicGraph(n, edges)


def read_graph6_file(path) -> list[CubicGraph]:
    """All graphs in a graph6 file (one per non-empty line)."""
    graphs = []
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                graphs.append(parse_graph6(line))
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from None
    return graphs


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[CubicGraph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# structural queries
# ---------------------------------------------------------------------------


def components(g: CubicGraph, skip: Iterable[int] = ()) -> list[list[int]]:
    """Connected components (sorted vertex lists), ignoring vertices in skip."""
    seen = [False] * g.n
    for v in skip:
        seen[v] = True
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: CubicGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def girth(g: CubicGraph) -> float:
    """Length of a shortest cycle, or INFINITY for a forest.

    BFS from every vertex; a non-tree edge met at depths (d, d) or (d, d+1)
    closes a cycle of length 2d+1 or 2d+2 through the root, and the minimum
    over all roots is exact.
    """
    best = INFINITY
    n = g.n
    adj = g.adj
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def diameter(g: CubicGraph) -> float:
    if not is_connected(g):
        return INFINITY
    best = 0
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        best = max(best, max(dist))
    return best


def independent(e: Sequence[int], f: Sequence[int]) -> bool:
    return len({e[0], e[1], f[0], f[1]}) == 4


def independent_edge_pairs(g: CubicGraph) -> list[tuple[int, int]]:
    """All (i, j), i < j, of EdgeIds with no common endpoint."""
    E = g.edges
    return [
        (i, j)
        for i in range(len(E))
        for j in range(i + 1, len(E))
        if independent(E[i], E[j])
    ]


def cycle_graph(n: int) -> CubicGraph:
    return CubicGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> CubicGraph:
    return CubicGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> CubicGraph:
    return CubicGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
