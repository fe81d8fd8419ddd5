"""Hamiltonian-path certificates for the suitable edge pairs of the named snarks.

File format (UTF-8, one record per line, ``#`` starts a comment)::

    graph J9 n=36
    HAMPATH [del=<v>] [forbid=(u,v);(u,v)] : v0 v1 ... vk
    PATHPAIR [forbid=...] : v0 ... vi | w0 ... wj

The two forbidden edges of a file are the suitable pair ab, cd.  A HAMPATH
with ``del`` must join the ends of one forbidden edge; one without ``del``
must join an end of ab to an end of cd.  A PATHPAIR consists of an a..b path
and a c..d path.  Vertex ids are the figure labels of the named generator.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .generators import named_graph
from .graph import CubicGraph
from .witness import path_pair_problems, path_problems

CERT_GRAPHS = ("J9", "J11", "J13", "B2", "L1")

# records per shipped file: HAMPATH count, PATHPAIR count
MANIFEST = {
    "J9": (40, 1),
    "J11": (48, 1),
    "J13": (56, 1),
    "B2": (10, 1),
    "L1": (16, 1),
}


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    graph_name: str
    kind: str  # "HAMPATH" or "PATHPAIR"
    deleted_vertex: int | None
    forbidden_edges: tuple[tuple[int, int], ...]
    sequences: tuple[tuple[int, ...], ...]
    line: int = field(default=0, compare=False)


@dataclass
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


_HEADER = re.compile(r"^graph\s+(\S+)\s+n=(\d+)\s*$")
_FORBID = re.compile(r"^\((\d+),(\d+)\)$")


def _data_path(name: str) -> Path:
    return Path(str(resources.files("snarkforge") / "data" / name))


def resolve_cert_path(path) -> Path:
    """`path` itself, or the shipped file of the same name."""
    p = Path(path)
    if p.exists():
        return p
    shipped = _data_path(p.name)
    if shipped.exists():
        return shipped
    raise FileNotFoundError(f"no certificate file {path}")


def shipped_files() -> list[Path]:
    return [_data_path(f"appendix_{name}.cert") for name in CERT_GRAPHS]


def parse_certificates(text: str, source: str = "<string>") -> list[Certificate]:
    name = None
    n = None
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        def bad(msg):
            return CertificateFormatError(f"{source}:{lineno}: {msg}")

        m = _HEADER.match(line)
        if m:
            name, n = m.group(1), int(m.group(2))
            if name not in CERT_GRAPHS:
                raise bad(f"unknown graph name {name!r}")
            if named_graph(name).n != n:
                raise bad(f"{name} has {named_graph(name).n} vertices, header says {n}")
            continue
        if name is None:
            raise bad("record before the 'graph' header")
        if ":" not in line:
            raise bad("missing ':' between fields and vertices")
        head, body = line.split(":", 1)
        fields = head.split()
        kind = fields[0]
        if kind not in ("HAMPATH", "PATHPAIR"):
            raise bad(f"unknown record kind {kind!r}")
        deleted = None
        forbidden = []
        for f in fields[1:]:
            if f.startswith("del="):
                try:
                    deleted = int(f[4:])
                except ValueError:
                    raise bad(f"bad deleted vertex {f!r}") from None
            elif f.startswith("forbid="):
                for part in f[7:].split(";"):
                    fm = _FORBID.match(part)
                    if not fm:
                        raise bad(f"bad forbidden edge {part!r}")
                    forbidden.append((int(fm.group(1)), int(fm.group(2))))
            else:
                raise bad(f"unknown field {f!r}")
        parts = body.split("|")
        if (kind == "HAMPATH") != (len(parts) == 1) or len(parts) > 2:
            raise bad(f"{kind} needs {'one sequence' if kind == 'HAMPATH' else 'two sequences'}")
        if kind == "PATHPAIR" and deleted is not None:
            raise bad("PATHPAIR records take no deleted vertex")
        seqs = []
        for part in parts:
            try:
                seq = tuple(int(x) for x in part.split())
            except ValueError:
                raise bad("non-integer vertex id") from None
            if not seq:
                raise bad("empty vertex sequence")
            seqs.append(seq)
        for v in [x for s in seqs for x in s] + ([deleted] if deleted is not None else []) + [
            x for e in forbidden for x in e
        ]:
            if not 0 <= v < n:
                raise bad(f"vertex {v} out of range for {name}")
        out.append(Certificate(name, kind, deleted, tuple(forbidden), tuple(seqs), lineno))
    return out


def load_certificates(path) -> list[Certificate]:
    p = resolve_cert_path(path)
    return parse_certificates(p.read_text(encoding="utf-8"), str(path))


def _graph(name: str, cache: dict = {}) -> CubicGraph:
    if name not in cache:
        cache[name] = named_graph(name)
    return cache[name]


def verify_certificate(c: Certificate) -> Verdict:
    """Re-check one record against the figure-labelled graph."""
    g = _graph(c.graph_name)
    forb = c.forbidden_edges
    for u, v in forb:
        if not g.has_edge(u, v):
            return Verdict(False, f"forbidden pair ({u},{v}) is not an edge of {c.graph_name}")
    deleted = () if c.deleted_vertex is None else (c.deleted_vertex,)
    if c.kind == "PATHPAIR":
        if len(forb) != 2:
            return Verdict(False, "PATHPAIR needs the two forbidden edges")
        p, q = c.sequences
        ends = [{p[0], p[-1]}, {q[0], q[-1]}]
        want = [set(forb[0]), set(forb[1])]
        if ends != want and ends != want[::-1]:
            return Verdict(False, "path ends are not the two forbidden edges")
        probs = path_pair_problems(g, p, q, (p[0], p[-1]), (q[0], q[-1]), deleted, forb)
        return Verdict(not probs, "; ".join(probs))
    (seq,) = c.sequences
    if len(seq) < 2:
        return Verdict(False, "path too short")
    ends = {seq[0], seq[-1]}
    if c.deleted_vertex is not None:
        if not any(ends == set(e) for e in forb):
            return Verdict(False, f"ends {sorted(ends)} are not a forbidden edge")
    elif len(forb) == 2:
        if not (len(ends & set(forb[0])) == 1 and len(ends & set(forb[1])) == 1):
            return Verdict(False, f"ends {sorted(ends)} do not pick one end of each forbidden edge")
    probs = path_problems(g, seq, endpoints=(seq[0], seq[-1]), deleted=deleted, forbidden=forb)
    return Verdict(not probs, "; ".join(probs))


def manifest_problems(certs: list[Certificate]) -> list[str]:
    counts: dict[str, list[int]] = {}
    for c in certs:
        k = counts.setdefault(c.graph_name, [0, 0])
        k[0 if c.kind == "HAMPATH" else 1] += 1
    return [
        f"{name}: {tuple(got)} records, manifest says {MANIFEST[name]}"
        for name, got in counts.items()
        if name in MANIFEST and tuple(got) != MANIFEST[name]
    ]


# ---------------------------------------------------------------------------
# symmetry closure for the representative-only listings
# ---------------------------------------------------------------------------


def suitable_pair_of(certs: list[Certificate]) -> tuple[tuple[int, int], tuple[int, int]]:
    pairs = {c.forbidden_edges for c in certs}
    if len(pairs) != 1:
        raise CertificateFormatError("records disagree on the forbidden edge pair")
    ab, cd = pairs.pop()
    return ab, cd


def build_symmetry_table(name: str, certs: list[Certificate]) -> dict:
    """Map each uncertified vertex to (representative, automorphism).

    The automorphism fixes the edge set {ab, cd} and sends the
    representative to the vertex.
    """
    from .iso import automorphisms

    g = _graph(name)
    ab, cd = suitable_pair_of(certs)
    pair = {frozenset(ab), frozenset(cd)}
    reps = sorted(c.deleted_vertex for c in certs if c.deleted_vertex is not None)
    good = [s for s in automorphisms(g) if {frozenset((s[u], s[v])) for u, v in (ab, cd)} == pair]
    table = {}
    for v in range(g.n):
        if v in reps:
            continue
        for s in good:
            hit = [r for r in reps if s[r] == v]
            if hit:
                table[str(v)] = {"rep": hit[0], "automorphism": list(s)}
                break
        else:
            raise ValueError(f"{name}: vertex {v} is not the image of a certified vertex")
    return {"graph": name, "closure": table}


def load_symmetry_table(name: str) -> dict | None:
    p = _data_path(f"symmetry_{name}.json")
    if not p.exists():
        return None
    return json.loads(p.read_text(encoding="utf-8"))


def verify_symmetry_closure(name: str, certs: list[Certificate], table: dict) -> Verdict:
    """Every vertex is certified directly or through a checked automorphism.

    For a mapped vertex v = s(r), the representative's path is transported
    by s and re-verified as a path of G - {v, ab, cd}.
    """
    g = _graph(name)
    edges = set(g.edges)
    ab, cd = suitable_pair_of(certs)
    by_del = {c.deleted_vertex: c for c in certs if c.deleted_vertex is not None}
    covered = set(by_del)
    for key, entry in table.get("closure", {}).items():
        v, r, s = int(key), entry["rep"], entry["automorphism"]
        if sorted(s) != list(range(g.n)):
            return Verdict(False, f"vertex {v}: map is not a permutation")
        if {tuple(sorted((s[a], s[b]))) for a, b in g.edges} != edges:
            return Verdict(False, f"vertex {v}: map is not an automorphism")
        if {frozenset((s[a], s[b])) for a, b in (ab, cd)} != {frozenset(ab), frozenset(cd)}:
            return Verdict(False, f"vertex {v}: map moves the suitable pair")
        if s[r] != v or r not in by_del:
            return Verdict(False, f"vertex {v}: representative {r} does not map to it")
        src = by_del[r]
        img = Certificate(name, "HAMPATH", v, src.forbidden_edges,
                          (tuple(s[x] for x in src.sequences[0]),))
        verdict = verify_certificate(img)
        if not verdict:
            return Verdict(False, f"vertex {v}: transported path fails: {verdict.reason}")
        covered.add(v)
    missing = sorted(set(range(g.n)) - covered)
    if missing:
        return Verdict(False, f"vertices without a certificate: {missing}")
    return Verdict(True)


@dataclass
class FileReport:
    path: str
    total: int
    failures: list = field(default_factory=list)  # (line, reason)
    closure: Verdict | None = None
    manifest: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and (self.closure is None or bool(self.closure)) and not self.manifest


def verify_file(path) -> FileReport:
    certs = load_certificates(path)
    rep = FileReport(str(path), len(certs))
    for c in certs:
        v = verify_certificate(c)
        if not v:
            rep.failures.append((c.line, v.reason))
    if resolve_cert_path(path).resolve() in {f.resolve() for f in shipped_files()}:
        rep.manifest = manifest_problems(certs)
    names = {c.graph_name for c in certs}
    if len(names) == 1:
        name = names.pop()
        dels = {c.deleted_vertex for c in certs if c.deleted_vertex is not None}
        n = _graph(name).n
        if dels and len(dels) < n:
            table = load_symmetry_table(name) or {"closure": {}}
            rep.closure = verify_symmetry_closure(name, certs, table)
    return rep
