"""Exact hamiltonicity engine and the path predicates built on it.

Every question is reduced to finding a spanning 2-regular subgraph with a
constraint on its cycles:

* hamiltonian cycle - one cycle through every live vertex;
* hamiltonian u-v path - the same after adding an auxiliary vertex joined
  to u and v (both auxiliary edges forced);
* spanning path pair (a..b, c..d) - a 2-factor with exactly two cycles,
  one through an auxiliary vertex joined to a and b, the other through a
  second auxiliary vertex joined to c and d;
* 2-factor with exactly two odd cycles.

The search decides edges in/out.  Each live vertex needs exactly two chosen
edges, which drives unit propagation (two chosen -> exclude the rest; only
two left -> include them).  Chosen edges form path fragments whose ends are
tracked so that premature cycle closure is detected immediately, and the
graph of non-excluded edges must stay connected.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import CubicGraph, GraphError, independent_edge_pairs

PathWitness = tuple[int, ...]

_HAM = 0
_TWO_ODD = 1
_PAIR = 2


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search could decide."""


def default_budget(n: int) -> int | None:
    env = os.environ.get("SNARKFORGE_NODE_BUDGET")
    if env:
        return int(env)
    return None


class _Search:
    __slots__ = (
        "nv", "ends", "inc", "need", "mode", "budget", "nodes",
        "st", "din", "dfree", "other", "flen", "tag", "ncyc", "covered",
        "_live", "_forced_in", "_forbidden", "_first_live",
    )

    def __init__(self, nv, edges, live, forced_in, forbidden, mode, budget, tags=None):
        self.nv = nv
        self.ends = edges
        self.inc = [[] for _ in range(nv)]
        for i, (u, v) in enumerate(edges):
            self.inc[u].append(i)
            self.inc[v].append(i)
        self.need = sum(live)
        self.mode = mode
        self.budget = budget
        self.nodes = 0
        self.st = [0] * len(edges)
        self.din = [0] * nv
        self.dfree = [len(self.inc[v]) for v in range(nv)]
        self.other = list(range(nv))
        self.flen = [1] * nv
        # bit mask of auxiliary pair vertices inside the fragment ending here
        self.tag = list(tags) if tags else [0] * nv
        self.ncyc = 0
        self.covered = 0
        self._live = live
        self._forced_in = forced_in
        self._forbidden = forbidden

    # state is (st, din, dfree, other, flen, tag, ncyc, covered)
    def _snapshot(self):
        return (self.st[:], self.din[:], self.dfree[:], self.other[:], self.flen[:], self.tag[:],
                self.ncyc, self.covered)

    def _restore(self, snap):
        st, din, dfree, other, flen, tag, self.ncyc, self.covered = snap
        self.st, self.din, self.dfree, self.other, self.flen, self.tag = (
            st[:], din[:], dfree[:], other[:], flen[:], tag[:])

    def _propagate(self, todo):
        """Apply (edge, value) decisions with unit propagation; False on conflict."""
        st, din, dfree, other, flen, tag, ends, inc, live = (
            self.st, self.din, self.dfree, self.other, self.flen, self.tag, self.ends, self.inc, self._live)
        mode = self.mode
        while todo:
            e, val = todo.pop()
            cur = st[e]
            if cur == val:
                continue
            if cur != 0:
                return False
            x, y = ends[e]
            st[e] = val
            dfree[x] -= 1
            dfree[y] -= 1
            if val == 1:
                dx, dy = din[x], din[y]
                if dx >= 2 or dy >= 2:
                    return False
                ex = other[x] if dx == 1 else x
                ey = other[y] if dy == 1 else y
                din[x] = dx + 1
                din[y] = dy + 1
                if ex == y:
                    length = flen[x]
                    if mode == _HAM:
                        if length != self.need:
                            return False
                    else:
                        if mode == _TWO_ODD and length % 2 == 0:
                            return False
                        if mode == _PAIR and tag[x] not in (1, 2):
                            return False
                        if self.ncyc >= 2:
                            return False
                        self.ncyc += 1
                        self.covered += length
                        if self.ncyc == 2 and self.covered != self.need:
                            return False
                else:
                    length = flen[ex] + flen[ey]
                    t = tag[ex] | tag[ey]
                    if t == 3:
                        return False
                    other[ex] = ey
                    other[ey] = ex
                    flen[ex] = length
                    flen[ey] = length
                    tag[ex] = t
                    tag[ey] = t
                    if (mode == _HAM and length < self.need) or (mode == _PAIR and t == 0):
                        # joining the two ends would close a short cycle
                        for f in inc[ex]:
                            if st[f] == 0 and (ends[f][0] == ey or ends[f][1] == ey):
                                todo.append((f, -1))
            for v in (x, y):
                if not live[v]:
                    continue
                dv, fv = din[v], dfree[v]
                if dv + fv < 2:
                    return False
                if fv:
                    if dv == 2:
                        for f in inc[v]:
                            if st[f] == 0:
                                todo.append((f, -1))
                    elif dv + fv == 2:
                        for f in inc[v]:
                            if st[f] == 0:
                                todo.append((f, 1))
        return True

    def _connected(self):
        """All live vertices reachable through non-excluded edges.

        For path pairs the requirement relaxes to: every live vertex can
        reach one of the two auxiliary vertices (the last two).
        """
        st, ends, inc = self.st, self.ends, self.inc
        starts = [self.nv - 2, self.nv - 1] if self.mode == _PAIR else [self._first_live]
        seen = bytearray(self.nv)
        for s in starts:
            seen[s] = 1
        stack = list(starts)
        count = len(starts)
        while stack:
            u = stack.pop()
            for f in inc[u]:
                if st[f] >= 0:
                    a, b = ends[f]
                    w = b if a == u else a
                    if not seen[w]:
                        seen[w] = 1
                        count += 1
                        stack.append(w)
        return count == self.need

    def run(self):
        live = self._live
        self._first_live = next((v for v in range(self.nv) if live[v]), None)
        if self._first_live is None:
            return None
        todo = [(e, -1) for e in self._forbidden]
        for v in range(self.nv):
            if not live[v]:
                todo += [(e, -1) for e in self.inc[v]]
        todo += [(e, 1) for e in self._forced_in]
        if not self._propagate(todo):
            return None
        for v in range(self.nv):
            if live[v] and self.din[v] + self.dfree[v] < 2:
                return None
            if live[v]:
                # trigger forcing for vertices untouched by the initial decisions
                if self.dfree[v] and self.din[v] + self.dfree[v] == 2:
                    if not self._propagate([(f, 1) for f in self.inc[v] if self.st[f] == 0]):
                        return None
        if self.mode != _TWO_ODD and not self._connected():
            return None
        if self._dfs():
            return [i for i, s in enumerate(self.st) if s == 1]
        return None

    def _choose(self):
        """Most constrained live vertex still needing edges (smallest id on ties)."""
        best, best_opts = -1, 99
        din, dfree, live = self.din, self.dfree, self._live
        for v in range(self.nv):
            if live[v] and din[v] < 2:
                f = dfree[v]
                opts = f if din[v] == 1 else f * (f - 1) // 2
                if opts < best_opts:
                    best, best_opts = v, opts
                    if opts <= 2:
                        break
        return best

    def _dfs(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(f"node budget {self.budget} exhausted")
        v = self._choose()
        if v < 0:
            if self.mode == _HAM:
                return True
            return self.ncyc == 2
        free = [f for f in self.inc[v] if self.st[f] == 0]
        if self.din[v] == 1:
            branches = [[(f, 1)] + [(g, -1) for g in free if g != f] for f in free]
        else:
            branches = [
                [(f, 1) for f in combo] + [(g, -1) for g in free if g not in combo]
                for combo in itertools.combinations(free, 2)
            ]
        snap = self._snapshot()
        for decisions in branches:
            if self._propagate(list(decisions)) and (self.mode == _TWO_ODD or self._connected()):
                if self._dfs():
                    return True
            self._restore(snap)
        return False


def _edge_ids(g: CubicGraph, items: Iterable) -> set[int]:
    out = set()
    for it in items:
        if isinstance(it, int):
            if not 0 <= it < g.m:
                raise GraphError(f"edge id {it} out of range")
            out.add(it)
        else:
            u, v = it
            if g.has_edge(u, v):
                out.add(g.edge_id(u, v))
    return out


def _walk_cycle(nv, edges, chosen, start):
    nbr = [[] for _ in range(nv)]
    for i in chosen:
        u, v = edges[i]
        nbr[u].append(v)
        nbr[v].append(u)
    seq = [start]
    prev, cur = -1, start
    while True:
        a, b = nbr[cur]
        nxt = a if a != prev else b
        if nxt == start:
            return seq
        seq.append(nxt)
        prev, cur = cur, nxt


def _search(g, live, extra_edges, forced_extra, forbidden, mode, budget, tags=None):
    nv = len(live)
    edges = list(g.edges) + list(extra_edges)
    forced = list(range(g.m, g.m + len(extra_edges))) if forced_extra else []
    s = _Search(nv, edges, live, forced, sorted(forbidden), mode, budget, tags)
    chosen = s.run()
    return chosen, edges, nv


def hamiltonian_cycle(
    g: CubicGraph,
    forbidden: Iterable = (),
    deleted: Iterable[int] = (),
    budget: int | None = None,
) -> PathWitness | None:
    """A hamiltonian cycle of g - deleted avoiding `forbidden`, or None.

    `forbidden` holds EdgeIds or vertex pairs.  The cycle is returned as a
    vertex sequence starting at its smallest vertex (first vertex not
    repeated).  Raises SearchBudgetExceeded if `budget` nodes do not suffice.
    """
    gone = set(deleted)
    live = [v not in gone for v in range(g.n)]
    if sum(live) < 3:
        return None
    chosen, edges, nv = _search(g, live, [], False, _edge_ids(g, forbidden), _HAM, budget)
    if chosen is None:
        return None
    start = min(v for v in range(g.n) if live[v])
    seq = _walk_cycle(nv, edges, chosen, start)
    if len(seq) > 2 and seq[1] > seq[-1]:
        seq = [seq[0]] + seq[1:][::-1]
    return tuple(seq)


def ham_path(
    g: CubicGraph,
    endpoints: Sequence[int],
    deleted_vertices: Iterable[int] = (),
    forbidden_edges: Iterable = (),
    budget: int | None = None,
) -> PathWitness | None:
    """A hamiltonian path of g - deleted_vertices - forbidden_edges from u to v."""
    u, v = endpoints
    gone = set(deleted_vertices)
    if u == v:
        raise ValueError("path endpoints must differ")
    if u in gone or v in gone:
        raise ValueError(f"endpoint deleted: {sorted({u, v} & gone)}")
    z = g.n
    live = [w not in gone for w in range(g.n)] + [True]
    chosen, edges, nv = _search(
        g, live, [(u, z), (v, z)], True, _edge_ids(g, forbidden_edges), _HAM, budget
    )
    if chosen is None:
        return None
    cyc = _walk_cycle(nv, edges, chosen, z)
    path = cyc[1:]
    if path[0] != u:
        path.reverse()
    return tuple(path)


def spanning_path_pair(
    g: CubicGraph,
    ab: Sequence[int],
    cd: Sequence[int],
    forbidden_edges: Iterable = (),
    deleted_vertices: Iterable[int] = (),
    budget: int | None = None,
) -> tuple[PathWitness, PathWitness] | None:
    """Two disjoint paths a..b and c..d that together span the graph.

    z1 (joined to a and b) and z2 (joined to c and d) turn the paths into
    two cycles; the search wants a 2-factor made of exactly those two.
    Joining b to c and d to a instead would also admit a..c plus b..d.
    """
    a, b = ab
    c, d = cd
    if len({a, b, c, d}) != 4:
        raise ValueError(f"endpoint pairs {tuple(ab)} and {tuple(cd)} overlap")
    gone = set(deleted_vertices)
    if gone & {a, b, c, d}:
        raise ValueError("endpoint deleted")
    z1, z2 = g.n, g.n + 1
    live = [w not in gone for w in range(g.n)] + [True, True]
    tags = [0] * g.n + [1, 2]
    chosen, edges, nv = _search(
        g, live, [(a, z1), (b, z1), (c, z2), (d, z2)], True,
        _edge_ids(g, forbidden_edges), _PAIR, budget, tags,
    )
    if chosen is None:
        return None
    out = []
    for z, first in ((z1, a), (z2, c)):
        cyc = _walk_cycle(nv, edges, chosen, z)
        if cyc[1] != first:
            cyc = [cyc[0]] + cyc[1:][::-1]
        out.append(tuple(cyc[1:]))
    return out[0], out[1]


# ---------------------------------------------------------------------------
# hypohamiltonicity
# ---------------------------------------------------------------------------


@dataclass
class HypoResult:
    hypohamiltonian: bool
    cycle: PathWitness | None = None  # a hamiltonian cycle of g, if any
    failing_vertex: int | None = None  # v with g - v non-hamiltonian
    witnesses: dict[int, PathWitness] = field(default_factory=dict)

    def __bool__(self):
        return self.hypohamiltonian


def _cycle_without(args):
    g, v, budget = args
    return v, hamiltonian_cycle(g, deleted=[v], budget=budget)


def _pmap(fn, items, jobs):
    items = list(items)
    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def is_hypohamiltonian(g: CubicGraph, jobs: int = 1, budget: int | None = None) -> HypoResult:
    """g is non-hamiltonian while every vertex-deleted subgraph is hamiltonian."""
    cyc = hamiltonian_cycle(g, budget=budget)
    if cyc is not None:
        return HypoResult(False, cycle=cyc)
    witnesses = {}
    for v, c in _pmap(_cycle_without, [(g, v, budget) for v in range(g.n)], jobs):
        if c is None:
            return HypoResult(False, failing_vertex=v)
        witnesses[v] = c
    return HypoResult(True, witnesses=witnesses)


# ---------------------------------------------------------------------------
# suitable edge pairs
# ---------------------------------------------------------------------------


@dataclass
class SuitableReport:
    """Witnesses that edges ab, cd satisfy both suitability conditions.

    condition_i maps the labels "ac", "ad", "bc", "bd" to hamiltonian paths
    of G - {ab, cd} and "pair" to the two spanning paths a..b, c..d.
    condition_ii maps every vertex v to ("ab" | "cd", path) - a hamiltonian
    path of G - {v, ab, cd} between the endpoints of that edge.
    """

    ab: tuple[int, int]
    cd: tuple[int, int]
    edge_ids: tuple[int, int]
    condition_i: dict
    condition_ii: dict

    @property
    def pair(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two edges as sorted vertex pairs, smaller EdgeId first."""
        return tuple(sorted((tuple(sorted(self.ab)), tuple(sorted(self.cd)))))


def _good_either(g, first, second, deleted, forbidden, budget):
    """Witness for 'at least one of first/second is good'; interleaves budgets."""
    cands = []
    for label, ends in (first, second):
        if not set(ends) & set(deleted):
            cands.append((label, ends))
    if not cands:
        return None
    limit = 2000
    open_ = list(cands)
    while open_:
        still = []
        for label, ends in open_:
            cap = limit if len(open_) > 1 else budget
            try:
                p = ham_path(g, ends, deleted, forbidden, budget=cap)
            except SearchBudgetExceeded:
                if cap == budget:
                    raise
                still.append((label, ends))
                continue
            if p is not None:
                return label, p
        open_ = still
        limit *= 4
    return None


def check_suitable_pair(g: CubicGraph, ab: Sequence[int], cd: Sequence[int], budget: int | None = None):
    """SuitableReport for the edge pair, or None if a condition fails."""
    a, b = ab
    c, d = cd
    if not (g.has_edge(a, b) and g.has_edge(c, d)) or len({a, b, c, d}) != 4:
        raise ValueError(f"{tuple(ab)}, {tuple(cd)} are not two independent edges")
    forb = [(a, b), (c, d)]
    cond_i = {}
    # condition (ii) first: it fails fast on most non-suitable pairs
    cond_ii = {}
    for v in range(g.n):
        w = _good_either(g, ("ab", (a, b)), ("cd", (c, d)), [v], forb, budget)
        if w is None:
            return None
        cond_ii[v] = w
    for label, ends in (("ac", (a, c)), ("ad", (a, d)), ("bc", (b, c)), ("bd", (b, d))):
        p = ham_path(g, ends, (), forb, budget=budget)
        if p is None:
            return None
        cond_i[label] = p
    pp = spanning_path_pair(g, (a, b), (c, d), forb, budget=budget)
    if pp is None:
        return None
    cond_i["pair"] = pp
    return SuitableReport((a, b), (c, d), (g.edge_id(a, b), g.edge_id(c, d)), cond_i, cond_ii)


def _check_ids(args):
    g, i, j, budget = args
    return (i, j), check_suitable_pair(g, g.edges[i], g.edges[j], budget)


def _map_report(g, rep: SuitableReport, sigma) -> SuitableReport:
    """Image of a report under the automorphism sigma (a vertex map)."""
    def img(p):
        return tuple(sigma[v] for v in p)

    ab = img(rep.ab)
    cd = img(rep.cd)
    cond_i = {k: (img(v[0]), img(v[1])) if k == "pair" else img(v) for k, v in rep.condition_i.items()}
    cond_ii = {sigma[v]: (lab, img(p)) for v, (lab, p) in rep.condition_ii.items()}
    i_ab, i_cd = g.edge_id(*ab), g.edge_id(*cd)
    if i_ab > i_cd:
        # rename (a, b, c, d) -> (c, d, a, b) so the smaller edge comes first
        ab, cd, i_ab, i_cd = cd, ab, i_cd, i_ab
        cond_ii = {v: ("cd" if lab == "ab" else "ab", p) for v, (lab, p) in cond_ii.items()}
        old = cond_i
        cond_i = {
            "ac": old["ac"][::-1],
            "ad": old["bc"][::-1],
            "bc": old["ad"][::-1],
            "bd": old["bd"][::-1],
            "pair": (old["pair"][1], old["pair"][0]),
        }
    return SuitableReport(ab, cd, (i_ab, i_cd), cond_i, cond_ii)


def find_suitable_pairs(
    g: CubicGraph,
    jobs: int = 1,
    candidates: Iterable[tuple[int, int]] | None = None,
    use_symmetry: bool = True,
    budget: int | None = None,
) -> list[SuitableReport]:
    """All suitable independent edge pairs of a non-hamiltonian graph.

    `candidates` restricts the search to the given EdgeId pairs.  With
    `use_symmetry`, one pair per automorphism orbit is searched and the
    reports are transported to the rest of the orbit.
    """
    if hamiltonian_cycle(g, budget=budget) is not None:
        raise ValueError("graph is hamiltonian; suitable pairs require a non-hamiltonian graph")
    pairs = sorted(tuple(sorted(p)) for p in candidates) if candidates is not None else independent_edge_pairs(g)
    pairs_set = set(pairs)
    reps = pairs
    orbit_of: dict[tuple[int, int], tuple[tuple[int, int], tuple]] = {}
    if use_symmetry:
        from .iso import automorphisms

        autos = automorphisms(g)
        reps = []
        done = set()
        for p in pairs:
            if p in done:
                continue
            reps.append(p)
            e, f = g.edges[p[0]], g.edges[p[1]]
            for sigma in autos:
                q = tuple(sorted((g.edge_id(sigma[e[0]], sigma[e[1]]), g.edge_id(sigma[f[0]], sigma[f[1]]))))
                if q in pairs_set and q not in done:
                    done.add(q)
                    orbit_of[q] = (p, sigma)
    results = dict(_pmap(_check_ids, [(g, i, j, budget) for i, j in reps], jobs))
    out = []
    for p in pairs:
        if use_symmetry:
            rep_p, sigma = orbit_of[p]
            rep = results[rep_p]
            if rep is not None:
                rep = rep if rep_p == p else _map_report(g, rep, sigma)
        else:
            rep = results[p]
        if rep is not None:
            out.append(rep)
    return out


# ---------------------------------------------------------------------------
# 2-factors with two odd cycles
# ---------------------------------------------------------------------------


def two_factor_two_odd_cycles(g: CubicGraph, budget: int | None = None):
    """(True, [cycle1, cycle2]) if some 2-factor is exactly two odd cycles.

    Returns (False, None) otherwise.
    """
    if not g.is_cubic():
        raise GraphError("two_factor_two_odd_cycles needs a cubic graph")
    live = [True] * g.n
    chosen, edges, nv = _search(g, live, [], False, set(), _TWO_ODD, budget)
    if chosen is None:
        return False, None
    cycles = []
    left = set(range(g.n))
    while left:
        cyc = _walk_cycle(nv, edges, chosen, min(left))
        cycles.append(tuple(cyc))
        left -= set(cyc)
    return True, cycles
