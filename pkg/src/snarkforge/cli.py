"""snarkforge command line.

Graph arguments are graph6 files (one graph per line), ``-`` for stdin, or
a generator name such as ``petersen`` or ``J9``.  Batch subcommands print
one JSON document per input graph (JSON Lines) in input order; ``--format
report`` wraps them in a single object with the tool version and a digest
of the input.  Exit status: 0 success, 1 some check failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .generators import NAMED, DotSpec, dot_product, flower, named_graph
from .graph import CubicGraph, GraphError, parse_graph6


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_graphs(arg: str | None) -> tuple[list[CubicGraph], bytes]:
    if arg is None or arg == "-":
        data = sys.stdin.buffer.read()
    elif os.path.exists(arg):
        try:
            with open(arg, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc}") from None
    elif arg in NAMED:
        g = named_graph(arg)
        return [g], g.to_graph6().encode()
    else:
        raise UsageError(f"{arg}: no such file or generator name")
    graphs = []
    for lineno, line in enumerate(data.decode("ascii", errors="replace").splitlines(), 1):
        if line.strip():
            try:
                graphs.append(parse_graph6(line))
            except GraphError as exc:
                raise UsageError(f"{arg or '<stdin>'}:{lineno}: {exc}") from None
    return graphs, data


def _one_graph(arg: str) -> CubicGraph:
    graphs, _ = _read_graphs(arg)
    if len(graphs) != 1:
        raise UsageError(f"{arg}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


class _Out:
    def __init__(self, fmt: str, data: bytes, command: str):
        self.fmt = fmt
        self.items = []
        self.data = data
        self.command = command

    def emit(self, obj):
        if self.fmt == "report":
            self.items.append(obj)
        else:
            print(_dump(obj))

    def close(self):
        if self.fmt == "report":
            print(_dump({
                "tool": "snarkforge",
                "version": __version__,
                "command": self.command,
                "input_sha256": hashlib.sha256(self.data).hexdigest(),
                "results": self.items,
            }))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.name == "flower":
        if args.k is None:
            raise UsageError("gen flower needs --k")
        g = flower(args.k)
    else:
        g = named_graph(args.name)
    print(g.to_graph6())
    return 0


def _hypo_json(g, args):
    from .hamilton import is_hypohamiltonian

    r = is_hypohamiltonian(g, jobs=args.jobs)
    out = {"hypohamiltonian": r.hypohamiltonian}
    if r.cycle is not None:
        out["reason"] = "hamiltonian"
    elif r.failing_vertex is not None:
        out["reason"] = f"G-{r.failing_vertex} is not hamiltonian"
        out["failing_vertex"] = r.failing_vertex
    if args.witnesses:
        if r.cycle is not None:
            out["cycle"] = list(r.cycle)
        if r.witnesses:
            out["cycles"] = {str(v): list(c) for v, c in sorted(r.witnesses.items())}
    return out, r.hypohamiltonian


def _snark_json(g, args):
    from .coloring import is_snark

    v = is_snark(g)
    return {"snark": v.snark, "reason": v.reason}, v.snark


def _bicritical_json(g, args):
    from .coloring import is_bicritical, is_three_edge_colorable

    if not g.is_cubic():
        return {"bicritical": False, "reason": "not cubic"}, False
    if is_three_edge_colorable(g) is not None:
        return {"bicritical": False, "reason": "3-edge-colourable"}, False
    ok, pair = is_bicritical(g, jobs=args.jobs, return_failure=True)
    out = {"bicritical": ok}
    if pair is not None:
        out["failing_pair"] = list(pair)
    return out, ok


def _lambda_json(g, args):
    from .connectivity import cyclic_edge_connectivity

    r = cyclic_edge_connectivity(g)
    out = {"edge_connectivity": r.edge_connectivity, "lambda_c": r.lambda_c}
    if args.witnesses:
        out["cut"] = [list(g.edges[e]) for e in r.witness_cut]
    return out, True


CHECKS = {"hypo": _hypo_json, "snark": _snark_json, "bicritical": _bicritical_json, "lambda-c": _lambda_json}


def cmd_check(args) -> int:
    graphs, data = _read_graphs(args.input)
    out = _Out(args.format, data, f"check {args.property}")
    status = 0
    for i, g in enumerate(graphs):
        t = time.perf_counter()
        try:
            res, ok = CHECKS[args.property](g, args)
        except GraphError as exc:
            res, ok = {"error": str(exc)}, False
        res["graph_index"] = i
        res["n"] = g.n
        if args.timings:
            res["seconds"] = round(time.perf_counter() - t, 4)
        out.emit(res)
        if not ok:
            status = 1
    out.close()
    return status


def _report_json(rep, witnesses):
    d = {"ab": list(rep.ab), "cd": list(rep.cd), "edge_ids": list(rep.edge_ids)}
    if witnesses:
        d["condition_i"] = {
            k: ([list(v[0]), list(v[1])] if k == "pair" else list(v)) for k, v in rep.condition_i.items()
        }
        d["condition_ii"] = {str(v): {"good": lab, "path": list(p)} for v, (lab, p) in sorted(rep.condition_ii.items())}
    return d


def cmd_suitable(args) -> int:
    from .hamilton import find_suitable_pairs

    graphs, data = _read_graphs(args.input)
    out = _Out(args.format, data, "suitable")
    status = 0
    for i, g in enumerate(graphs):
        try:
            reps = find_suitable_pairs(g, jobs=args.jobs)
        except ValueError as exc:
            print(f"graph {i}: {exc}", file=sys.stderr)
            out.emit({"graph_index": i, "error": str(exc)})
            status = 1
            continue
        out.emit([_report_json(r, args.witnesses) for r in reps])
    out.close()
    return status


def _parse_spec(text: str) -> DotSpec:
    parts = text.split(",")
    if len(parts) not in (4, 8):
        raise UsageError("--spec takes i,j,x,y or i,j,x,y,flip_ab,flip_x,flip_y,flip_cd")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad --spec {text!r}") from None
    flips = [bool(v) for v in nums[4:]] if len(nums) == 8 else []
    return DotSpec(*nums[:4], *flips)


def cmd_dot(args) -> int:
    from .hamilton import find_suitable_pairs

    g = _one_graph(args.g)
    h = _one_graph(args.h)
    if args.spec:
        spec = _parse_spec(args.spec)
    else:
        reps = find_suitable_pairs(g, jobs=args.jobs)
        if not reps:
            raise UsageError("G has no suitable edge pair; pass --spec explicitly")
        r = min(reps, key=lambda r: r.edge_ids)
        spec = DotSpec(g.edge_id(*r.ab), g.edge_id(*r.cd), *h.edges[0],
                       flip_ab=r.ab[0] > r.ab[1], flip_cd=r.cd[0] > r.cd[1])
    try:
        prod = dot_product(g, h, spec)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    print(prod.to_graph6())
    return 0


def cmd_decompose(args) -> int:
    from .decompose import decompose_dot

    graphs, data = _read_graphs(args.input)
    out = _Out(args.format, data, "decompose")
    for i, g in enumerate(graphs):
        items = []
        for d in decompose_dot(g):
            fp = d.factor_properties
            if args.require_hypo_factors and not (fp["g"]["hypohamiltonian"] and fp["h"]["hypohamiltonian"]):
                continue
            items.append({
                "cut": [list(g.edges[e]) for e in d.cut],
                "g_side": list(d.g_side),
                "pairing": d.pairing_choice,
                "g_factor": d.g_factor.to_graph6(),
                "h_factor": d.h_factor.to_graph6(),
                "g_properties": fp["g"],
                "h_properties": fp["h"],
            })
        out.emit({"graph_index": i, "n": g.n, "decompositions": items})
    out.close()
    return 0


def cmd_mu3(args) -> int:
    from .factors import default_budget_secs, mu3

    budget = args.budget if args.budget is not None else default_budget_secs()
    if budget <= 0:
        raise UsageError("--budget must be positive")
    graphs, data = _read_graphs(args.input)
    out = _Out(args.format, data, "mu3")
    for i, g in enumerate(graphs):
        r = mu3(g, budget)
        res = {"graph_index": i, "mu3": r.mu3, "exact": r.exact}
        if args.witnesses:
            res["triple"] = [list(m) for m in r.best_triple]
        out.emit(res)
    out.close()
    return 0


def cmd_certs(args) -> int:
    from .certs import CertificateFormatError, shipped_files, verify_file

    paths = args.paths or [str(p) for p in shipped_files()]
    total = 0
    bad = 0
    for p in paths:
        try:
            rep = verify_file(p)
        except (CertificateFormatError, FileNotFoundError) as exc:
            raise UsageError(str(exc)) from None
        total += rep.total
        for line, reason in rep.failures:
            print(f"{p}:{line}: FAIL {reason}", file=sys.stderr)
        bad += len(rep.failures)
        if rep.closure is not None and not rep.closure:
            print(f"{p}: symmetry closure FAIL {rep.closure.reason}", file=sys.stderr)
            bad += 1
        for msg in rep.manifest:
            print(f"{p}: manifest FAIL {msg}", file=sys.stderr)
            bad += 1
    if bad:
        print(f"{bad} of {total} certificate checks failed")
        return 1
    print(f"all {total} certificates pass")
    return 0


def cmd_orders(args) -> int:
    from .orders import Corpus, plan_orders, uncovered_orders

    corpus = None
    if args.corpus:
        try:
            corpus = Corpus.from_dir(args.corpus)
        except (FileNotFoundError, GraphError) as exc:
            raise UsageError(str(exc)) from None
    plans = plan_orders(args.max, corpus, jobs=args.jobs)
    status = 0
    for p in plans:
        d = p.to_json()
        if not args.witnesses:
            d.pop("graph6")
        print(_dump(d))
        if p.verified == "failed":
            status = 1
    missing = uncovered_orders(plans)
    summary = {"summary": {"max": args.max, "corpus": args.corpus, "uncovered": missing}}
    print(_dump(summary))
    if missing:
        print(f"uncovered feasible orders: {', '.join(map(str, missing))} "
              "(add a corpus of hypohamiltonian snarks with --corpus)", file=sys.stderr)
    return status


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    common.add_argument("--witnesses", action="store_true", help="include witness paths/cuts in JSON")
    common.add_argument("--format", choices=("jsonl", "report"), default="jsonl")
    common.add_argument("--timings", action="store_true", help="add per-graph seconds (not deterministic)")

    p = argparse.ArgumentParser(prog="snarkforge", description="Hypohamiltonian snark toolkit.")
    p.add_argument("--version", action="version", version=f"snarkforge {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="print a named graph as graph6")
    s.add_argument("name", choices=sorted(set(NAMED) | {"flower"}))
    s.add_argument("--k", type=int, help="flower snark parameter (order 4(2k+1))")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("check", parents=[common], help="test a property of each input graph")
    s.add_argument("property", choices=sorted(CHECKS))
    s.add_argument("input", nargs="?")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("suitable", parents=[common], help="list suitable edge pairs")
    s.add_argument("input", nargs="?")
    s.set_defaults(func=cmd_suitable)

    s = sub.add_parser("dot", parents=[common], help="dot product G.H as graph6")
    s.add_argument("g")
    s.add_argument("h")
    s.add_argument("--spec", help="i,j,x,y[,flip_ab,flip_x,flip_y,flip_cd]; default: first suitable pair of G")
    s.set_defaults(func=cmd_dot)

    s = sub.add_parser("decompose", parents=[common], help="undo dot products along cyclic 4-cuts")
    s.add_argument("input", nargs="?")
    s.add_argument("--require-hypo-factors", action="store_true")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("mu3", parents=[common], help="mu_3 of each input graph")
    s.add_argument("input", nargs="?")
    s.add_argument("--budget", type=float, help="seconds per graph (default 60 or $SNARKFORGE_BUDGET_SECS)")
    s.set_defaults(func=cmd_mu3)

    s = sub.add_parser("certs", parents=[common], help="certificate files")
    s.add_argument("action", choices=("verify",))
    s.add_argument("paths", nargs="*", help="default: every shipped file")
    s.set_defaults(func=cmd_certs)

    s = sub.add_parser("orders", parents=[common], help="build a hypohamiltonian snark of every feasible order")
    s.add_argument("--max", type=int, default=50)
    s.add_argument("--corpus", help="directory of .g6 files with base snarks")
    s.set_defaults(func=cmd_orders)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"snarkforge: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"snarkforge: {exc.args[0]}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
