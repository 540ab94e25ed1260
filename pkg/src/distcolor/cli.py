"""Command-line interface.

Exit codes: 0 success, 1 semantic negative (labeling rejected, counterexample
found), 2 usage or parse error, 3 search budget exceeded, 4 internal
construction defect.  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructive, exact
from .autom import BudgetExceeded, automorphism_group, format_perm
from .graph import (
    FAMILIES,
    FamilySpec,
    GenerationInfeasible,
    GraphFormatError,
    generate,
    iter_graph6,
    parse_dimacs,
    parse_graph6,
    to_dimacs,
    to_graph6,
)
from .labeling import Labeling, LabelingSizeError, verify
from .structure import ACYCLIC, PreconditionError, bipartition, girth, is_connected

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET, EXIT_DEFECT = 0, 1, 2, 3, 4

_DIMACS_SUFFIXES = {".col", ".dimacs", ".dim"}


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _format_for(path: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    return "dimacs" if Path(path).suffix.lower() in _DIMACS_SUFFIXES else "graph6"


def _load_graph(path: str, fmt: str | None):
    text = _read_text(path)
    if _format_for(path, fmt) == "dimacs":
        return parse_dimacs(text)
    for line in text.splitlines():
        if line.strip():
            return parse_graph6(line.strip())
    raise GraphFormatError("no graph in input", 0)


def _girth_str(g):
    gr = girth(g)
    return "inf" if gr == ACYCLIC else str(gr)


def cmd_analyze(args, out) -> int:
    g = _load_graph(args.input, args.format)
    info = {
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree,
        "girth": _girth_str(g),
        "bipartite": bipartition(g) is not None,
        "connected": is_connected(g),
    }
    code = EXIT_OK
    try:
        info["aut_order"] = automorphism_group(g, budget=args.budget).order if g.n else 1
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        info["aut_order"] = None
        code = EXIT_BUDGET
    if args.output == "json":
        print(json.dumps(info), file=out)
    else:
        yn = {True: "yes", False: "no"}
        aut = "?" if info["aut_order"] is None else info["aut_order"]
        print(f"n={g.n} m={g.m} Δ={g.max_degree} girth={info['girth']} "
              f"bipartite={yn[info['bipartite']]} connected={yn[info['connected']]} |Aut|={aut}",
              file=out)
    return code


_METHODS = {
    "theorem2": constructive.label_bipartite_girth6,
    "unicyclic": constructive.label_unicyclic,
    "tree": constructive.label_tree,
    "auto": constructive.label_auto,
}


def cmd_label(args, out) -> int:
    g = _load_graph(args.input, args.format)
    try:
        lab = _METHODS[args.method](g)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except constructive.ConstructionDefect as exc:
        print(f"defect: {exc}\nstate: {exc.state!r}", file=sys.stderr)
        return EXIT_DEFECT
    print(lab.to_json(), file=out)
    return EXIT_OK


_QUANTITIES = {
    "chi": lambda g, a: exact.chromatic_number(g, a.node_cap),
    "d": lambda g, a: exact.distinguishing_number(g, a.node_cap, a.budget),
    "chid": lambda g, a: exact.distinguishing_chromatic_number(g, a.node_cap, a.budget),
}


def cmd_exact(args, out) -> int:
    g = _load_graph(args.input, args.format)
    if g.n < 1:
        raise _UsageError("graph has no vertices")
    try:
        res = _QUANTITIES[args.quantity](g, args)
    except (exact.ExactBudgetExceeded, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        lower = getattr(exc, "lower_bound", None)
        best = getattr(exc, "best", None)
        upper = best.labels_used if best is not None else None
        if args.output == "json":
            print(json.dumps({"quantity": args.quantity, "value": None,
                              "lower_bound": lower, "upper_bound": upper}), file=out)
        else:
            print(f"unknown lower_bound={lower} upper_bound={upper}", file=out)
        return EXIT_BUDGET
    if args.output == "json":
        print(json.dumps({"quantity": args.quantity, "value": res.value,
                          "witness": json.loads(res.witness.to_json())}), file=out)
    else:
        print(res.value, file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = _load_graph(args.input, args.format)
    try:
        lab = Labeling.from_json(_read_text(args.labeling))
    except (ValueError, json.JSONDecodeError) as exc:
        raise _UsageError(f"bad labeling file: {exc}") from None
    try:
        rep = verify(g, lab.labels, budget=args.budget)
    except LabelingSizeError as exc:
        raise _UsageError(str(exc)) from None
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.output == "json":
        print(json.dumps({
            "proper": rep.proper,
            "distinguishing": rep.distinguishing,
            "labels_used": rep.labels_used,
            "bad_edge": list(rep.bad_edge) if rep.bad_edge else None,
            "witness": format_perm(rep.witness) if rep.witness else None,
        }), file=out)
    else:
        print(rep, file=out)
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def cmd_gen(args, out) -> int:
    try:
        spec = FamilySpec(args.family, tuple(args.params), args.seed)
        g = generate(spec)
    except GenerationInfeasible as exc:
        print(f"error: generation infeasible: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if args.format == "dimacs":
        out.write(to_dimacs(g))
    else:
        print(to_graph6(g), file=out)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    text = _read_text(args.input)
    if _format_for(args.input, args.format) == "dimacs":
        graphs = [parse_dimacs(text)]
    else:
        graphs = list(iter_graph6(text.splitlines()))
    report = exact.scan_conjecture(args.max_n, graphs, workers=args.workers,
                                   node_cap=args.node_cap, aut_budget=args.budget)
    if args.output == "json":
        print(report.to_json(), file=out)
    else:
        for line in report.lines():
            print(line, file=out)
    if report.counterexamples:
        return EXIT_NEGATIVE
    if report.skipped:
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="distcolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp, output=True):
        sp.add_argument("input", help="graph file, or - for stdin")
        sp.add_argument("--format", choices=["graph6", "dimacs"],
                        help="input format (default: by extension, graph6 for stdin)")
        sp.add_argument("--budget", type=int, default=None,
                        help="automorphism search node cap (default: $DISTCOLOR_BUDGET or 10^7)")
        if output:
            sp.add_argument("--output", choices=["text", "json"], default="text")

    sp = sub.add_parser("analyze", help="basic invariants and |Aut(G)|")
    graph_input(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("label", help="constructive labeling as JSON")
    graph_input(sp, output=False)
    sp.add_argument("--method", choices=sorted(_METHODS), default="auto")
    sp.set_defaults(func=cmd_label)

    sp = sub.add_parser("exact", help="exact chi, D or chi_D")
    sp.add_argument("quantity", choices=sorted(_QUANTITIES))
    graph_input(sp)
    sp.add_argument("--node-cap", type=int, default=exact.DEFAULT_NODE_CAP)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("verify", help="check a labeling is proper and distinguishing")
    graph_input(sp)
    sp.add_argument("labeling", help="labeling JSON file")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="write a graph from a named family")
    sp.add_argument("family", choices=sorted(FAMILIES))
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--format", choices=["graph6", "dimacs"], default="graph6")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("scan-conjecture", help="exact chi_D over girth >= 5 graphs")
    graph_input(sp)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--node-cap", type=int, default=exact.DEFAULT_NODE_CAP)
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (_UsageError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
