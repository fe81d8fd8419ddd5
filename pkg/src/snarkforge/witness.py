"""Stand-alone checkers for paths, cycles, colourings and matchings.

Nothing here imports the search engines; these functions are the
independent side of every witness check.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import CubicGraph


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _forbidden_pairs(g: CubicGraph, forbidden: Iterable) -> set[tuple[int, int]]:
    out = set()
    for f in forbidden:
        if isinstance(f, int):
            out.add(g.edges[f])
        else:
            out.add(_norm(int(f[0]), int(f[1])))
    return out


def path_problems(
    g: CubicGraph,
    seq: Sequence[int],
    *,
    endpoints: Sequence[int] | None = None,
    deleted: Iterable[int] = (),
    forbidden: Iterable = (),
    cycle: bool = False,
    spanning: bool = True,
) -> list[str]:
    """Reasons why `seq` is not a hamiltonian path/cycle; empty if it is."""
    gone = set(deleted)
    bad_edges = _forbidden_pairs(g, forbidden)
    problems = []
    if len(set(seq)) != len(seq):
        problems.append("repeated vertex")
    for v in seq:
        if not 0 <= v < g.n:
            problems.append(f"vertex {v} out of range")
            return problems
        if v in gone:
            problems.append(f"deleted vertex {v} used")
    steps = list(zip(seq, seq[1:]))
    if cycle and len(seq) > 2:
        steps.append((seq[-1], seq[0]))
    for u, v in steps:
        if not g.has_edge(u, v):
            problems.append(f"non-adjacent step {u}-{v}")
        elif _norm(u, v) in bad_edges:
            problems.append(f"forbidden edge {u}-{v} used")
    if spanning:
        want = set(range(g.n)) - gone
        if set(seq) != want:
            problems.append(f"covers {len(set(seq) & want)} of {len(want)} vertices")
    if endpoints is not None and not cycle:
        if not seq or {seq[0], seq[-1]} != set(endpoints) or len(seq) < 2:
            problems.append(f"endpoints {seq[:1] + seq[-1:]} != {list(endpoints)}")
    return problems


def is_hamiltonian_path(g, seq, endpoints=None, deleted=(), forbidden=()) -> bool:
    return not path_problems(g, seq, endpoints=endpoints, deleted=deleted, forbidden=forbidden)


def is_hamiltonian_cycle(g, seq, deleted=(), forbidden=()) -> bool:
    if len(seq) < 3:
        return False
    return not path_problems(g, seq, deleted=deleted, forbidden=forbidden, cycle=True)


def path_pair_problems(g, p, q, ends_p, ends_q, deleted=(), forbidden=()) -> list[str]:
    """Reasons why (p, q) are not two disjoint paths spanning g."""
    problems = []
    if set(p) & set(q):
        problems.append("paths intersect")
    problems += path_problems(g, p, endpoints=ends_p, deleted=deleted, forbidden=forbidden, spanning=False)
    problems += path_problems(g, q, endpoints=ends_q, deleted=deleted, forbidden=forbidden, spanning=False)
    want = set(range(g.n)) - set(deleted)
    if set(p) | set(q) != want:
        problems.append("paths do not span the graph")
    return problems


def is_spanning_path_pair(g, p, q, ends_p, ends_q, deleted=(), forbidden=()) -> bool:
    return not path_pair_problems(g, p, q, ends_p, ends_q, deleted, forbidden)


def is_proper_edge_coloring(g: CubicGraph, coloring: dict[int, int], deleted: Iterable[int] = (), ncolors: int = 3) -> bool:
    """coloring maps EdgeId -> colour; must be total on edges avoiding `deleted`."""
    gone = set(deleted)
    live = [i for i, (u, v) in enumerate(g.edges) if u not in gone and v not in gone]
    if set(coloring) != set(live):
        return False
    seen = {}
    for i in live:
        c = coloring[i]
        if not 0 <= c < ncolors:
            return False
        for v in g.edges[i]:
            if (v, c) in seen:
                return False
            seen[(v, c)] = i
    return True


def is_perfect_matching(g: CubicGraph, edge_ids: Iterable[int]) -> bool:
    covered = []
    for i in edge_ids:
        covered += g.edges[i]
    return len(covered) == g.n and len(set(covered)) == g.n
