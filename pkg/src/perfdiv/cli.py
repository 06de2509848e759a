"""Command-line entry point: ``perfdiv <subcommand> ...``.

Output is JSON unless ``--human`` is given; ``--quiet`` prints only the
verdict line. Exit status 0 means the query ran (a missing division is a
valid answer), 1 means a verify/hunt run found a violation, and 2 is
reserved for usage, parse, precondition and capability errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify
from ._version import __version__
from .catalog import PATTERN_NAMES, mycielski, pattern
from .divisibility import (
    certify_minimal,
    division_through_vertex,
    find_division,
    is_divisible,
)
from .errors import CapabilityError, GraphError, ParseError, PreconditionError
from .formats import graph6, iter_graph6_file, parse_edgelist, parse_graph6
from .graph import Graph, members, to_mask
from .invariants import chromatic_number, clique_number, independence_number
from .perfection import is_perfect
from .structure import (
    basins,
    clique_cutsets,
    homogeneous_sets,
    simplicial_peeling,
    simplicial_vertices,
    substitute,
    weight_expand,
)

CLAIMS = ("pd", "h2pd", "pwd", "2div", "mnpd", "mn2d")


class UsageError(Exception):
    pass


def _graph_args(p: argparse.ArgumentParser, prefix: str = "", required: bool = True) -> None:
    g = p.add_argument_group("graph input")
    src = g.add_mutually_exclusive_group(required=required)
    src.add_argument(f"--{prefix}graph6", metavar="STRING", help="graph in graph6 form")
    src.add_argument(f"--{prefix}file", metavar="PATH", help="graph6 or edge-list file (first graph)")
    src.add_argument(f"--{prefix}pattern", metavar="NAME", help=f"named graph: {', '.join(PATTERN_NAMES)}")
    g.add_argument(f"--{prefix}size", type=int, metavar="K", help="size for kn/cn/pn patterns")


def _load_graph(args, prefix: str = "") -> Graph:
    get = lambda k: getattr(args, f"{prefix}{k}")
    if get("graph6") is not None:
        return parse_graph6(get("graph6"))
    if get("pattern") is not None:
        return pattern(get("pattern"), get("size"))
    path = Path(get("file"))
    if not path.is_file():
        raise UsageError(f"no such file: {path}")
    text = path.read_bytes()
    first = text.lstrip().split(b"\n", 1)[0].strip()
    if first.isdigit():
        return parse_edgelist(text)
    for G in iter_graph6_file(path):
        return G
    raise UsageError(f"{path} contains no graph")


def _read_weights(path: str, n: int) -> tuple[int, ...]:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such weights file: {p}")
    tokens = p.read_text().replace(",", " ").split()
    try:
        w = tuple(int(t) for t in tokens)
    except ValueError:
        raise UsageError(f"weights file {p} must contain integers") from None
    if len(w) != n:
        raise UsageError(f"weights file has {len(w)} values for {n} vertices")
    return w


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


# ------------------------------------------------------------------ commands

def cmd_info(args):
    G = _load_graph(args)
    deg = G.degrees()
    out = {
        "graph6": graph6(G),
        "n": G.n,
        "m": G.num_edges,
        "omega": clique_number(G),
        "alpha": independence_number(G),
        "chi": chromatic_number(G),
        "degree": {"min": min(deg), "max": max(deg), "mean": round(sum(deg) / G.n, 6)},
    }
    return out, f"n={out['n']} omega={out['omega']} alpha={out['alpha']} chi={out['chi']}", 0


def cmd_perfect(args):
    G = _load_graph(args)
    v = is_perfect(G)
    out = {"graph6": graph6(G), **v.to_dict()}
    return out, "true" if v.perfect else "false", 0


def cmd_divide(args):
    G = _load_graph(args)
    h = _read_weights(args.weights, G.n) if args.weights else None
    if args.through is not None:
        if not 0 <= args.through < G.n:
            raise UsageError(f"vertex {args.through} out of range")
        if args.kind != "perfect" or h is not None:
            raise UsageError("--through only applies to unweighted perfect divisions")
        d = division_through_vertex(G, args.through)
    else:
        target = to_mask(args.target) if args.target else None
        d = find_division(G, target, args.kind, h)
    out = {"graph6": graph6(G), "division": d.to_dict() if d else "none"}
    line = "none" if d is None else f"A={members(d.A)} B={members(d.B)}"
    return out, line, 0


def cmd_certify(args):
    G = _load_graph(args)
    if args.claim in ("mnpd", "mn2d"):
        cert = certify_minimal(G, args.claim)
    elif args.claim == "pd" and args.weights:
        cert = is_divisible(G, "h", h=_read_weights(args.weights, G.n))
    else:
        scheme = {"pd": "pd", "h2pd": "h2", "pwd": "pwd", "2div": "2div"}[args.claim]
        cert = is_divisible(G, scheme, weight_bound=args.weight_bound)
    return cert.to_dict(), "true" if cert.verdict else "false", 0


def cmd_structure(args):
    G = _load_graph(args)
    out: dict = {"graph6": graph6(G), "find": args.find}
    if args.find == "homogeneous":
        found = [members(X) for X in homogeneous_sets(G, args.mode or "all_minimal")]
    elif args.find == "cutsets":
        found = [members(X) for X in clique_cutsets(G, args.mode or "all")]
    elif args.find == "peeling":
        X = to_mask(args.subset) if args.subset else None
        out["decomposition"] = simplicial_peeling(G, X).to_dict()
        return out, str(out["decomposition"]["parts"]), 0
    elif args.find == "simplicial":
        found = members(simplicial_vertices(G))
    else:
        found = [{"vertices": members(b.vertices), "minimal": b.minimal}
                 for b in basins(G, args.max_size)]
    out["result"] = found
    return out, json.dumps(found), 0


def cmd_construct(args):
    G = _load_graph(args)
    weights = None
    if args.op == "mycielski":
        R = mycielski(G)
    elif args.op == "substitute":
        if args.vertex is None:
            raise UsageError("substitute needs --vertex")
        if all(getattr(args, f"with_{k}") is None for k in ("graph6", "file", "pattern")):
            raise UsageError("substitute needs --with-graph6, --with-file or --with-pattern")
        R = substitute(G, args.vertex, _load_graph(args, "with_"))
    else:
        if not args.weights:
            raise UsageError("weight-expand needs --weights")
        R, weights = weight_expand(G, _read_weights(args.weights, G.n), args.vertex)
    out = {"graph6": graph6(R), "n": R.n, "m": R.num_edges}
    if weights is not None:
        out["weights"] = list(weights)
    return out, out["graph6"], 0


def _suite_outcome(result: verify.SuiteResult):
    if "error" in result.report:
        print(f"perfdiv: error: {result.report['error']}", file=sys.stderr)
        return result.report, "error", 2
    status = "fail" if result.exit_code else "pass"
    return result.report, status, result.exit_code


def cmd_verify(args):
    cfg = verify.load_config(args.config) if args.config else verify.load_config(None)
    if args.output:
        cfg["output"] = args.output
    if args.jobs:
        cfg["jobs"] = args.jobs
    return _suite_outcome(verify.run_suite(cfg))


def cmd_hunt(args):
    cfg = {
        "corpus": {"max_n": None if args.corpus_file else args.max_n, "min_n": args.min_n,
                   "files": [args.corpus_file] if args.corpus_file else [], "patterns": []},
        "theorems": [],
        "hunts": [args.problem],
        "hunt_max_n": verify.PD_CAP if args.corpus_file else args.max_n,
        "weight_bound": args.weight_bound,
        "artifacts_dir": args.artifacts,
        "output": args.output,
    }
    if args.jobs:
        cfg["jobs"] = args.jobs
    return _suite_outcome(verify.run_suite(cfg))


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--human", action="store_true", help="indented, human-readable output")
    mode.add_argument("--quiet", action="store_true", help="print only the verdict line")

    parser = argparse.ArgumentParser(prog="perfdiv", description="Perfect divisibility toolkit.")
    parser.add_argument("--version", action="version", version=f"perfdiv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    p = sub.add_parser("info", parents=[common], help="basic invariants")
    _graph_args(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("perfect", parents=[common], help="perfection verdict and witness")
    _graph_args(p)
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("divide", parents=[common], help="find a division")
    _graph_args(p)
    p.add_argument("--kind", choices=("perfect", "two"), default="perfect")
    p.add_argument("--weights", metavar="FILE", help="vertex weights, one integer per vertex")
    p.add_argument("--through", type=int, metavar="VERTEX", help="require VERTEX on the perfect side")
    p.add_argument("--target", type=int, nargs="+", metavar="V", help="divide G[target] instead of G")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("certify", parents=[common], help="certify a divisibility claim")
    _graph_args(p)
    p.add_argument("--claim", choices=CLAIMS, required=True)
    p.add_argument("--weight-bound", type=_positive, default=3, metavar="W")
    p.add_argument("--weights", metavar="FILE", help="weights for the pd claim (h-perfect divisibility)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("structure", parents=[common], help="structural searches")
    _graph_args(p)
    p.add_argument("--find", choices=("homogeneous", "cutsets", "peeling", "simplicial", "basins"),
                   required=True)
    p.add_argument("--mode", help="homogeneous: all_minimal|any|two_clique; cutsets: any|minimum|all")
    p.add_argument("--subset", type=int, nargs="+", metavar="V", help="peeling target set")
    p.add_argument("--max-size", type=_positive, help="basins: largest set size")
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("construct", parents=[common], help="build a graph, emitting graph6")
    _graph_args(p)
    _graph_args(p, prefix="with-", required=False)
    p.add_argument("--op", choices=("substitute", "mycielski", "weight-expand"), required=True)
    p.add_argument("--vertex", type=int)
    p.add_argument("--weights", metavar="FILE")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="run the theorem suite")
    p.add_argument("--config", metavar="PATH", help="JSON suite configuration")
    p.add_argument("--output", metavar="PATH", help="write the JSON report here")
    p.add_argument("--jobs", type=_positive, help="worker processes (default $PERFDIV_JOBS or 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hunt", parents=[common], help="search for open-problem counterexamples")
    p.add_argument("--problem", choices=sorted(verify.PROBLEMS), required=True)
    p.add_argument("--max-n", type=_positive, default=6)
    p.add_argument("--min-n", type=_positive, default=1)
    p.add_argument("--corpus-file", metavar="PATH", help="graph6 corpus instead of enumeration")
    p.add_argument("--weight-bound", type=_positive, default=3, metavar="W")
    p.add_argument("--artifacts", metavar="DIR", default="counterexamples")
    p.add_argument("--output", metavar="PATH")
    p.add_argument("--jobs", type=_positive)
    p.set_defaults(func=cmd_hunt)
    return parser


def _render(out, line, args) -> str:
    if args.quiet:
        return line
    if args.human:
        return json.dumps(out, indent=2, sort_keys=True, ensure_ascii=False)
    return json.dumps(out, sort_keys=True)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, line, code = args.func(args)
    except CapabilityError as exc:
        print(f"perfdiv: capability cap '{exc.cap}' exceeded: limit {exc.limit}, requested {exc.requested}",
              file=sys.stderr)
        return 2
    except (ParseError, GraphError, PreconditionError, UsageError, verify.ConfigError) as exc:
        print(f"perfdiv: error: {exc}", file=sys.stderr)
        return 2
    print(_render(out, line, args))
    return code


if __name__ == "__main__":
    sys.exit(main())
