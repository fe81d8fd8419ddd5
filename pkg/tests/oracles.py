"""Naive reference implementations used only by the tests.

Nothing here imports the search code of the package; graphs are read
through their `n` / `edges` attributes only.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
import numpy as np


def adjacency(n, edges, deleted=(), forbidden=()):
    gone = set(deleted)
    forb = {frozenset(e) for e in forbidden}
    adj = {v: set() for v in range(n) if v not in gone}
    for u, v in edges:
        if u in gone or v in gone or frozenset((u, v)) in forb:
            continue
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _paths_dp(adj, start):
    """reach[mask] = set of vertices v with a path start..v visiting exactly mask."""
    verts = sorted(adj)
    idx = {v: i for i, v in enumerate(verts)}
    reach = {1 << idx[start]: {start}}
    order = sorted(range(1, 1 << len(verts)), key=lambda m: bin(m).count("1"))
    for mask in order:
        ends = reach.get(mask)
        if not ends:
            continue
        for v in ends:
            for w in adj[v]:
                b = 1 << idx[w]
                if not mask & b:
                    reach.setdefault(mask | b, set()).add(w)
    return reach, (1 << len(verts)) - 1


def has_ham_cycle(n, edges, deleted=(), forbidden=()):
    adj = adjacency(n, edges, deleted, forbidden)
    if len(adj) < 3:
        return False
    s = min(adj)
    reach, full = _paths_dp(adj, s)
    return any(s in adj[v] for v in reach.get(full, ()))


def has_ham_path(n, edges, u, v, deleted=(), forbidden=()):
    adj = adjacency(n, edges, deleted, forbidden)
    if u == v:
        return len(adj) == 1
    reach, full = _paths_dp(adj, u)
    return v in reach.get(full, ())


def is_hypohamiltonian(n, edges):
    return not has_ham_cycle(n, edges) and all(has_ham_cycle(n, edges, deleted=[v]) for v in range(n))


def perfect_matchings(n, edges):
    """All perfect matchings as frozensets of edge indices (recursive, lowest vertex first)."""
    inc = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        inc[u].append(i)
        inc[v].append(i)
    out = []

    def go(free, chosen):
        if not free:
            out.append(frozenset(chosen))
            return
        v = min(free)
        for i in inc[v]:
            a, b = edges[i]
            w = b if a == v else a
            if w in free:
                go(free - {v, w}, chosen + [i])

    go(frozenset(range(n)), [])
    return out


def hafnian_count(n, edges):
    """Number of perfect matchings by a bitmask hafnian recursion."""
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    @lru_cache(maxsize=None)
    def haf(mask):
        if not mask:
            return 1
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        total = 0
        nb = adj[v] & rest
        while nb:
            b = nb & -nb
            total += haf(rest & ~b)
            nb ^= b
        return total

    return haf((1 << n) - 1)


def is_colorable_via_matchings(n, edges):
    """Cubic graph: 3-edge-colourable iff some perfect matching leaves only even cycles."""
    for m in perfect_matchings(n, edges):
        rest = nx.Graph()
        rest.add_edges_from(e for i, e in enumerate(edges) if i not in m)
        if all(len(c) % 2 == 0 for c in nx.connected_components(rest)):
            return True
    return False


def is_colorable_naive(n, edges, deleted=()):
    """Plain backtracking over edges in index order, no propagation."""
    gone = set(deleted)
    live = [e for e in edges if e[0] not in gone and e[1] not in gone]
    used = {v: set() for v in range(n)}

    def go(k):
        if k == len(live):
            return True
        u, v = live[k]
        for c in range(3):
            if c not in used[u] and c not in used[v]:
                used[u].add(c)
                used[v].add(c)
                if go(k + 1):
                    return True
                used[u].discard(c)
                used[v].discard(c)
        return False

    return go(0)


def _has_cycle(vertices, adj):
    sub = nx.Graph()
    sub.add_nodes_from(vertices)
    sub.add_edges_from((u, w) for u in vertices for w in adj[u] if w in vertices)
    return sub.number_of_edges() > sub.number_of_nodes() - nx.number_connected_components(sub)


def cyclic_connectivity_bruteforce(n, edges):
    """min |cut(S)| over vertex sets S where both sides contain a cycle; None if no such S."""
    adj = adjacency(n, edges)
    best = None
    for mask in range(1, 1 << (n - 1)):
        s = {v for v in range(n) if mask >> v & 1}
        t = set(range(n)) - s
        if len(s) < 3 or len(t) < 3:
            continue
        cut = sum(1 for u, v in edges if (u in s) != (v in s))
        if best is not None and cut >= best:
            continue
        if _has_cycle(s, adj) and _has_cycle(t, adj):
            best = cut
    return best


def mu3_bruteforce(n, edges):
    ms = perfect_matchings(n, edges)
    m = len(edges)
    return min(m - len(a | b | c) for a, b, c in itertools.combinations_with_replacement(ms, 3))


def two_factor_two_odd(n, edges):
    for m in perfect_matchings(n, edges):
        rest = nx.Graph()
        rest.add_edges_from(e for i, e in enumerate(edges) if i not in m)
        sizes = [len(c) for c in nx.connected_components(rest)]
        if len(sizes) == 2 and all(s % 2 for s in sizes):
            return True
    return False


def girth_bfs(n, edges):
    g = nx.Graph(list(edges))
    best = float("inf")
    for r in range(n):
        dist = {r: 0}
        parent = {r: None}
        queue = [r]
        for u in queue:
            for w in g[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _profile(h):
    # WL refinement cannot split regular graphs; the adjacency spectrum can
    a = nx.to_numpy_array(h, nodelist=sorted(h))
    return tuple(np.round(np.linalg.eigvalsh(a), 6) + 0.0)


def all_connected_cubic(max_n):
    """Every connected cubic graph on 4..max_n vertices, keyed by order.

    For each order we start from one cubic graph and close under double
    edge swaps (ab, cd -> ac, bd) that keep the graph simple and
    connected; that move set connects all such graphs.  Isomorphic copies
    are merged by spectrum first and networkx VF2 second.
    """
    levels = {}
    for n in range(4, max_n + 1, 2):
        start = nx.circulant_graph(n, [1, n // 2])
        buckets = {}
        found = []

        def add(h):
            key = _profile(h)
            if any(nx.is_isomorphic(h, o) for o in buckets.get(key, ())):
                return False
            buckets.setdefault(key, []).append(h)
            found.append(h)
            return True

        add(start)
        for g in found:
            es = list(g.edges())
            for (a, b), (c, d) in itertools.combinations(es, 2):
                if len({a, b, c, d}) < 4:
                    continue
                for x, y, z, w in ((a, c, b, d), (a, d, b, c)):
                    if g.has_edge(x, y) or g.has_edge(z, w):
                        continue
                    h = g.copy()
                    h.remove_edges_from([(a, b), (c, d)])
                    h.add_edges_from([(x, y), (z, w)])
                    if nx.is_connected(h):
                        add(h)
        levels[n] = found
    return levels


def has_path_pair(n, edges, ab, cd, deleted=(), forbidden=()):
    """Disjoint a..b and c..d paths covering every live vertex.

    Enumerates every simple a..b path by DFS and asks the DP oracle for a
    hamiltonian c..d path on what is left.
    """
    adj = adjacency(n, edges, deleted, forbidden)
    (a, b), (c, d) = ab, cd
    live = set(adj)
    found = False

    def dfs(u, seen):
        nonlocal found
        if found:
            return
        if u == b:
            rest = live - seen
            if c in rest and d in rest:
                sub = {v: adj[v] & rest for v in rest}
                reach, full = _paths_dp(sub, c)
                if d in reach.get(full, ()):
                    found = True
            return
        for w in adj[u]:
            if w not in seen and w not in (c, d):
                seen.add(w)
                dfs(w, seen)
                seen.discard(w)

    dfs(a, {a})
    return found


def is_suitable(n, edges, ab, cd):
    """Both suitability conditions, straight from their definition."""
    (a, b), (c, d) = ab, cd
    forb = [ab, cd]
    for v in range(n):
        ok = False
        for (s, t) in (ab, cd):
            if v not in (s, t) and has_ham_path(n, edges, s, t, deleted=[v], forbidden=forb):
                ok = True
                break
        if not ok:
            return False
    for s, t in ((a, c), (a, d), (b, c), (b, d)):
        if not has_ham_path(n, edges, s, t, forbidden=forb):
            return False
    return has_path_pair(n, edges, ab, cd, forbidden=forb)
