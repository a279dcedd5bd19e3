"""Command-line front end.

Exit codes: 0 success / statement verified, 1 counterexample or failed
check, 2 usage error, 3 inconclusive (search budget ran out).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coloring import TotalColoring, check_total_proper_connected, has_strong_property
from .families import (
    build_family,
    FamilySpec,
    color_bipartite_plus_vertex,
    color_h_family,
    color_traceable,
    color_tree,
    family_names,
)
from .graphs import (
    complement,
    enumerate_connected_graphs,
    enumerate_trees,
    find_hamiltonian_path,
    is_complete,
    is_connected,
    is_tree,
    is_two_connected,
    parse_graph6,
    read_graph6_file,
    to_graph6,
)
from .harness import (
    STATEMENT_DESCRIPTIONS,
    STATEMENT_IDS,
    TheoremCase,
    emit_report,
    ng_rows_to_csv,
    ng_scan,
    verify_statement,
    write_atomic,
)
from .solver import (
    DEFAULT_BUDGET,
    SolveBudget,
    certificate_to_json_dict,
    tpc_exact,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _default_jobs() -> int:
    raw = os.environ.get("TPC_LAB_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _parse_orders(text: str) -> tuple[int, ...]:
    # accepts "6", "3-6", and comma lists of both
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out or any(v < 1 for v in out):
        raise ValueError(f"bad order list {text!r}")
    return tuple(sorted(set(out)))


def _load_graphs(arg: str):
    if os.path.isfile(arg):
        return read_graph6_file(arg)
    return [parse_graph6(arg)]


def _load_json_arg(arg: str) -> dict:
    if os.path.isfile(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(arg)


def _emit(payload: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")
    else:
        write_atomic(path, payload)


def _cmd_solve(args) -> int:
    budget = SolveBudget(max_nodes=args.budget, ham_steps=DEFAULT_BUDGET.ham_steps)
    graphs = _load_graphs(args.graph6)
    docs = []
    inconclusive = False
    for g in graphs:
        cert = tpc_exact(g, budget)
        inconclusive = inconclusive or cert.status != "exact"
        docs.append(certificate_to_json_dict(cert))
    if len(docs) == 1:
        payload = json.dumps(docs[0], indent=2) + "\n"
    else:
        payload = "\n".join(json.dumps(d) for d in docs) + "\n"
    _emit(payload, args.output)
    return EXIT_INCONCLUSIVE if inconclusive else EXIT_OK


def _cmd_check(args) -> int:
    (g,) = _load_graphs(args.graph6)
    coloring = TotalColoring.from_json_dict(_load_json_arg(args.coloring))
    if args.strong:
        ok = has_strong_property(g, coloring)
        print("pass" if ok else "fail: strong two-path property does not hold")
        return EXIT_OK if ok else EXIT_FAIL
    result = check_total_proper_connected(g, coloring)
    if result.ok:
        print("pass")
        return EXIT_OK
    print(f"fail: no total-proper path for pair {result.failing_pair}")
    return EXIT_FAIL


def _constructive_coloring(spec: FamilySpec, g) -> TotalColoring:
    # the family's witness coloring; falls back to the exact solver
    if spec.kind in ("h1", "h2", "h3", "h4"):
        from .harness import _H_RULE_MIN

        if spec.params[0] >= _H_RULE_MIN[spec.kind]:
            return color_h_family(spec.kind, spec.params[0])[1]
    if spec.kind == "kst-plus-v":
        s, t = spec.params[0], spec.params[1]
        if s >= t >= 2:
            return color_bipartite_plus_vertex(s, t, spec.params[2:])[1]
    if spec.kind == "h-prime":
        return color_bipartite_plus_vertex(spec.params[0], 2, "h-prime")[1]
    if is_complete(g):
        return TotalColoring(g.n, [1] * g.n, {e: 1 for e in g.edges})
    if is_tree(g) and g.n >= 3:
        return color_tree(g)
    ham = find_hamiltonian_path(g)
    if ham.status == "found":
        return color_traceable(g, ham.path)
    return tpc_exact(g).witness


def _cmd_color_family(args) -> int:
    params = tuple(int(p) for p in args.params.split(",")) if args.params else ()
    spec = FamilySpec(args.family, params)
    g = build_family(spec)
    coloring = _constructive_coloring(spec, g)
    doc = {
        "family": spec.kind,
        "params": list(spec.params),
        "graph6": to_graph6(g),
        "colors": coloring.num_colors(),
        "coloring": coloring.to_json_dict(),
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    case = TheoremCase(
        statement=args.statement,
        n_values=_parse_orders(args.n),
        budget=SolveBudget(max_nodes=args.budget, ham_steps=DEFAULT_BUDGET.ham_steps),
        jobs=args.jobs,
        graph6_path=args.input,
        samples=args.samples,
    )
    report = verify_statement(case)
    payload = emit_report(report, args.format)
    _emit(payload, args.output)
    if report.counterexamples:
        return EXIT_FAIL
    if report.timeouts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_ng_scan(args) -> int:
    budget = SolveBudget(max_nodes=args.budget, ham_steps=DEFAULT_BUDGET.ham_steps)
    report, rows = ng_scan(args.n, budget, args.jobs, args.input)
    _emit(ng_rows_to_csv(rows), args.output)
    if args.report:
        emit_report(report, "json", args.report)
    if report.counterexamples:
        return EXIT_FAIL
    if report.timeouts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


_FILTERS = {
    "coconnected": lambda g: is_connected(complement(g)),
    "two-connected": is_two_connected,
    "tree": is_tree,
}


def _cmd_enumerate(args) -> int:
    if args.filter == "tree":
        graphs = enumerate_trees(args.n)
    else:
        predicate = _FILTERS.get(args.filter) if args.filter else None
        if args.filter and predicate is None:
            raise ValueError(
                f"unknown filter {args.filter!r}; known: {', '.join(sorted(_FILTERS))}"
            )
        graphs = enumerate_connected_graphs(args.n, predicate)
    lines = [to_graph6(g) for g in graphs]
    _emit("\n".join(lines) + ("\n" if lines else ""), args.output)
    return EXIT_OK


def _cmd_complement(args) -> int:
    (g,) = _load_graphs(args.graph6)
    print(to_graph6(complement(g)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpc-lab",
        description=(
            "Exact total-proper connection numbers, constructive colorings, "
            "and exhaustive verification of the built-in statement registry."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact tpc with a certificate")
    p.add_argument("--graph6", required=True, help="graph6 string or file of them")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET.max_nodes,
                   help="search node limit per decision")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("check", help="validate a coloring against a graph")
    p.add_argument("--graph6", required=True)
    p.add_argument("--coloring", required=True, help="coloring JSON string or file")
    p.add_argument("--strong", action="store_true",
                   help="check the two-path endpoint-spread property instead")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("color-family", help="build a family graph and its witness coloring")
    p.add_argument("--family", required=True, choices=family_names())
    p.add_argument("--params", default="", help="comma-separated integers")
    p.add_argument("--output", help="write JSON here instead of stdout")
    p.set_defaults(fn=_cmd_color_family)

    p = sub.add_parser("verify", help="verify one registered statement over small orders")
    p.add_argument("--statement", required=True, choices=STATEMENT_IDS,
                   help="; ".join(f"{k}: {v}" for k, v in STATEMENT_DESCRIPTIONS.items()))
    p.add_argument("--n", required=True, help='orders, e.g. "6" or "3-6" or "4,6"')
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET.max_nodes)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--samples", type=int, default=200,
                   help="sample count for statements quantifying over pairs")
    p.add_argument("--input", help="external graph6 file instead of built-in enumeration")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("ng-scan", help="tpc sums over complement-connected pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET.max_nodes)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--input", help="external graph6 file instead of built-in enumeration")
    p.add_argument("--output", help="write row CSV here instead of stdout")
    p.add_argument("--report", help="also write a JSON report here")
    p.set_defaults(fn=_cmd_ng_scan)

    p = sub.add_parser("enumerate", help="connected isomorphism classes as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", help="coconnected, two-connected, or tree")
    p.add_argument("--output", help="write lines here instead of stdout")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("complement", help="complement of a graph6 graph")
    p.add_argument("--graph6", required=True)
    p.set_defaults(fn=_cmd_complement)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
