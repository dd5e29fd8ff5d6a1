"""Command-line entry point: ``treeconn {kappa3,kappa-set,construct,verify,filter}``.

Exit codes: 0 success, 1 a mathematical violation was found, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._pool import default_workers
from .constructions import build_extremal, build_h, figure_fixture, smooth
from .formats import (
    FormatError,
    certificate_dict,
    emit_certificate,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from .graph import Graph, GraphError
from .packing import KappaResult, kappa3, kappa_of_set
from .verify import (
    FilterSummary,
    filter_kappa,
    kappa_at_least,
    kappa_equals,
    verify_lemma3,
    verify_lemma4,
    verify_lemma5,
    verify_theorem1,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise UsageError("no graph6 line in input")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _fmt_set(vs) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def _tree_lines(result: KappaResult) -> list[str]:
    trees = sorted(result.family.trees, key=lambda t: t.edges)
    return [f"tree {i}: " + " ".join(f"{u}-{v}" for u, v in t.edges) for i, t in enumerate(trees)]


def _emit_result(result: KappaResult, args, header: str) -> None:
    if args.certificates:
        _write(args.certificates, emit_certificate(result))
    if args.dot:
        _write(args.dot, emit_dot(result.graph, result.family.trees))
    if args.json:
        sys.stdout.write(json.dumps(certificate_dict(result), indent=2) + "\n")
        return
    print(header)
    for line in _tree_lines(result):
        print(line)


def cmd_kappa3(args) -> int:
    g = _load(args.input, args.format)
    r = kappa3(g, limit=args.limit, workers=args.parallel)
    _emit_result(r, args, f"kappa3 = {r.kappa}, witness {_fmt_set(r.witness_set)}")
    return EXIT_OK


def cmd_kappa_set(args) -> int:
    g = _load(args.input, args.format)
    try:
        members = [int(x) for x in args.set.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --set {args.set!r}") from None
    if len(set(members)) != len(members):
        raise UsageError("--set repeats a vertex")
    if len(members) < 2:
        raise UsageError("--set needs at least two vertices")
    r = kappa_of_set(g, members, limit=args.limit)
    _emit_result(r, args, f"kappa(S) = {r.kappa}, S = {_fmt_set(r.witness_set)}")
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "h":
        g = build_h(args.k)
    elif args.kind == "figure":
        g = figure_fixture(args.id)
    elif args.kind == "extremal":
        g = build_extremal(args.n)
    else:
        g = smooth(_load(args.input, args.in_format), args.vertex)
    text = emit_graph6(g) + "\n" if args.format == "g6" else emit_edge_list(g)
    _write(args.output, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.campaign == "lemma3":
        rep = verify_lemma3(workers=args.parallel, limit=args.limit)
    elif args.campaign == "lemma4":
        rep = verify_lemma4(workers=args.parallel, limit=args.limit)
    elif args.campaign == "lemma5":
        rep = verify_lemma5(args.samples, args.seed, workers=args.parallel, limit=args.limit)
    else:
        rep = verify_theorem1(args.max_k, workers=args.parallel, limit=args.limit)
    sys.stdout.write(rep.to_json() if args.json else rep.to_text())
    print(f"elapsed {rep.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_filter(args) -> int:
    if args.kappa3 is not None:
        pred = kappa_equals(args.kappa3)
    elif args.kappa3_at_least is not None:
        pred = kappa_at_least(args.kappa3_at_least)
    else:
        raise UsageError("give --kappa3 or --kappa3-at-least")
    summary = FilterSummary()
    for line in filter_kappa(sys.stdin, pred, summary, workers=args.parallel, limit=args.limit):
        sys.stdout.write(line + "\n")
    sys.stdout.flush()
    for lineno, msg in summary.errors:
        print(f"line {lineno}: skipped: {msg}", file=sys.stderr)
    print(summary.line(), file=sys.stderr)
    if args.strict and summary.errors:
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=int, default=None, help="solver vertex limit (default 20 or $TREECONN_SOLVER_LIMIT)")
    common.add_argument("--parallel", type=int, default=default_workers(), help="worker processes")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", help="graph file, or - for standard input")
    graph_in.add_argument("--format", choices=("edges", "g6"), default="edges")
    graph_in.add_argument("--certificates", metavar="PATH", help="write the certificate document here")
    graph_in.add_argument("--dot", metavar="PATH", help="write a DOT drawing with the trees coloured")

    p = argparse.ArgumentParser(prog="treeconn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    k3 = sub.add_parser("kappa3", parents=[common, graph_in], help="generalized 3-connectivity")
    k3.set_defaults(func=cmd_kappa3)

    ks = sub.add_parser("kappa-set", parents=[common, graph_in], help="kappa(S) for one terminal set")
    ks.add_argument("--set", required=True, help="comma-separated vertices, e.g. 0,1,2")
    ks.set_defaults(func=cmd_kappa_set)

    con = sub.add_parser("construct", help="write a named graph")
    csub = con.add_subparsers(dest="kind", required=True)
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=("edges", "g6"), default="edges")
    out.add_argument("--output", "-o", default=None)
    c = csub.add_parser("h", parents=[out], help="the H(k) family")
    c.add_argument("--k", type=int, required=True)
    c = csub.add_parser("figure", parents=[out], help="figure fixtures 1..6")
    c.add_argument("--id", type=int, required=True)
    c = csub.add_parser("extremal", parents=[out], help="fewest edges with kappa3 = 2")
    c.add_argument("--n", type=int, required=True)
    c = csub.add_parser("smooth", parents=[out], help="smooth a degree-2 vertex of INPUT")
    c.add_argument("input")
    c.add_argument("--vertex", type=int, required=True)
    c.add_argument("--in-format", choices=("edges", "g6"), default="edges")
    con.set_defaults(func=cmd_construct)

    ver = sub.add_parser("verify", help="run a verification campaign")
    vsub = ver.add_subparsers(dest="campaign", required=True)
    vsub.add_parser("lemma3", parents=[common])
    vsub.add_parser("lemma4", parents=[common])
    c = vsub.add_parser("lemma5", parents=[common])
    c.add_argument("--samples", type=int, default=200)
    c.add_argument("--seed", type=int, default=7)
    c = vsub.add_parser("theorem1", parents=[common])
    c.add_argument("--max-k", type=int, default=3)
    ver.set_defaults(func=cmd_verify)

    flt = sub.add_parser("filter", parents=[common], help="filter graph6 lines on stdin by kappa3")
    grp = flt.add_mutually_exclusive_group()
    grp.add_argument("--kappa3", type=int, default=None, help="keep graphs with exactly this kappa3")
    grp.add_argument("--kappa3-at-least", type=int, default=None)
    flt.add_argument("--strict", action="store_true", help="exit 2 if any line is unreadable")
    flt.set_defaults(func=cmd_filter)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "parallel", 1) < 1:
        print("error: --parallel must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, FormatError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
