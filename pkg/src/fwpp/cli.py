"""Command line front end.

Subcommands::

    solve     enumerate solutions of one squared Markov type equation
    classify  list the plane classes of one integral degree
    sing      singularity report for a degree matrix (JSON on stdin or arg)
    graph     adjacency graph of one (degree, mu) family
    iso       isomorphism test for two degree matrices

Exit codes: 0 success (including empty results), 1 negative verdict from
``iso``, 2 usage or input errors.  All big integers are serialized as
decimal strings in JSON output so downstream 64-bit consumers cannot
truncate them; output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import adjacency, markov, planes

USAGE_ERROR = 2
DEFAULT_NORM_BOUND = 10**6
DEFAULT_MAX_NODES = 4096


class _InputError(Exception):
    pass


def _parse_degree_matrix(text: str) -> planes.DegreeMatrix:
    try:
        obj = json.loads(text)
        return planes.DegreeMatrix.from_json_obj(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise _InputError(f"not a degree matrix: {exc}") from exc


def _read_matrix_arg(value: str) -> planes.DegreeMatrix:
    if value == "-":
        return _parse_degree_matrix(sys.stdin.read())
    return _parse_degree_matrix(value)


def _capped_tree(a: int, bound: int, depth: int | None, max_nodes: int) -> markov.MutationTree:
    try:
        return markov.enumerate_tree(a, bound, depth, max_nodes=max_nodes)
    except markov.EnumerationCapExceeded as exc:
        raise _InputError(f"{exc}; raise --max-nodes to continue") from exc


def cmd_solve(args) -> int:
    if args.a < 1:
        raise _InputError(f"--a must be a positive integer, got {args.a}")
    tree = _capped_tree(args.a, args.bound, args.depth, args.max_nodes)
    rows = sorted(tree.nodes, key=lambda u: (markov.norm(u), u))
    if args.format == "json":
        print(json.dumps(tree.to_json_obj(), indent=None, separators=(",", ":")))
    elif args.format == "dot":
        sys.stdout.write(tree.to_dot())
    elif args.format == "md":
        print("| u | norm | initial |")
        print("|---|---|---|")
        for u in rows:
            initial = u[2] <= u[0] + u[1]
            print(f"| ({u[0]},{u[1]},{u[2]}) | {markov.norm(u)} | {'yes' if initial else 'no'} |")
    else:
        for u in rows:
            print(f"{u[0]}\t{u[1]}\t{u[2]}\t{markov.norm(u)}")
    return 0


def cmd_classify(args) -> int:
    if args.a < 1:
        raise _InputError(f"--a must be a positive integer, got {args.a}")
    classes = planes.classify(args.a, args.bound)
    if len(classes) > args.max_nodes:
        raise _InputError(f"{len(classes)} classes exceed the --max-nodes cap {args.max_nodes}")
    if args.format == "json":
        payload = [planes.plane_json_obj(c, with_report=args.report) for c in classes]
        print(json.dumps(payload, separators=(",", ":")))
    elif args.format == "md":
        print("| series | u | eta | weights | degree |")
        print("|---|---|---|---|---|")
        for c in classes:
            u = "({},{},{})".format(*c.matrix.u)
            eta = "({},{},{})".format(*c.matrix.eta)
            w = "({},{},{})".format(*c.weights)
            print(f"| {c.series} | {u} | {eta} | {w} | {args.a} |")
    else:
        for c in classes:
            u = ",".join(str(x) for x in c.matrix.u)
            eta = ",".join(str(x) for x in c.matrix.eta)
            w = ",".join(str(x) for x in c.weights)
            print(f"{c.series}\t{u}\t{eta}\t{w}\t{args.a}")
    return 0


def cmd_sing(args) -> int:
    q = _read_matrix_arg(args.matrix)
    report = planes.singularity_report(q)
    if args.format == "md":
        sys.stdout.write(planes.report_markdown([report]))
    elif args.format == "tsv":
        for k in range(3):
            d = report.d[k] if report.d[k] is not None else "-"
            print(f"z({k})\t{report.cl[k]}\t{report.iota[k]}\t{'+' if report.is_t[k] else '-'}\t{d}\t{report.res_curves[k]}")
    else:
        obj = q.to_json_obj()
        try:
            obj["series"] = str(planes.series_id(planes.adjust(q)[0]))
        except ValueError:
            pass  # non-integral degree has no series label
        obj["weights"] = [str(w) for w in planes.fake_weights_of_degree_matrix(q)]
        obj["degree"] = str(planes.degree(planes.fake_weights_of_degree_matrix(q)))
        obj["report"] = report.to_json_obj()
        print(json.dumps(obj, separators=(",", ":")))
    return 0


def cmd_graph(args) -> int:
    if (args.a, args.mu) not in planes.SERIES_ETAS:
        raise _InputError(f"no series family for degree {args.a} with torsion order {args.mu}")
    graph = adjacency.adjacency_graph(args.a, args.mu, args.bound)
    if len(graph.nodes) > args.max_nodes:
        raise _InputError(f"{len(graph.nodes)} nodes exceed the --max-nodes cap {args.max_nodes}")
    if args.format == "json":
        print(json.dumps(graph.to_json_obj(), separators=(",", ":")))
    else:
        sys.stdout.write(graph.to_dot())
    return 0


def cmd_iso(args) -> int:
    q1 = _read_matrix_arg(args.first)
    q2 = _read_matrix_arg(args.second)
    witness = planes.isomorphism_witness(q1, q2)
    if args.format == "json":
        obj = {"isomorphic": witness is not None}
        if witness is not None:
            phi, perm = witness
            obj["automorphism"] = {"eps": phi.eps, "a": phi.a, "c": phi.c}
            obj["columnPermutation"] = list(perm)
        print(json.dumps(obj, separators=(",", ":")))
    else:
        if witness is None:
            print("not isomorphic")
        else:
            phi, perm = witness
            print(f"isomorphic\tphi=(eps={phi.eps},a={phi.a},c={phi.c})\tperm={list(perm)}")
    return 0 if witness is not None else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwpp",
        description="Squared Markov equations, fake weighted projective planes and their adjacency graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default_format):
        p.add_argument("--bound", type=int, default=DEFAULT_NORM_BOUND, help="norm bound on the fake weight vector")
        p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES, help="abort when the enumeration grows past this many nodes")
        p.add_argument("--jobs", type=int, default=1, help="worker hint; results are independent of it")
        p.add_argument("--format", choices=formats, default=default_format)

    p_solve = sub.add_parser("solve", help="enumerate equation solutions up to a norm bound")
    p_solve.add_argument("--a", type=int, required=True)
    p_solve.add_argument("--depth", type=int, default=None, help="optional mutation-depth truncation")
    common(p_solve, ("tsv", "json", "md", "dot"), "tsv")
    p_solve.set_defaults(func=cmd_solve)

    p_classify = sub.add_parser("classify", help="list plane classes of one integral degree")
    p_classify.add_argument("--a", type=int, required=True)
    p_classify.add_argument("--report", action="store_true", help="attach singularity reports (json format)")
    common(p_classify, ("tsv", "json", "md"), "tsv")
    p_classify.set_defaults(func=cmd_classify)

    p_sing = sub.add_parser("sing", help="singularity report for one degree matrix")
    p_sing.add_argument("matrix", help='degree matrix JSON, e.g. \'{"mu":8,"u":["1","1","2"],"eta":[0,1,3]}\'; "-" reads stdin')
    common(p_sing, ("json", "md", "tsv"), "json")
    p_sing.set_defaults(func=cmd_sing)

    p_graph = sub.add_parser("graph", help="adjacency graph of one (degree, mu) family")
    p_graph.add_argument("--a", type=int, required=True)
    p_graph.add_argument("--mu", type=int, required=True)
    common(p_graph, ("dot", "json"), "dot")
    p_graph.set_defaults(func=cmd_graph)

    p_iso = sub.add_parser("iso", help="isomorphism test for two degree matrices")
    p_iso.add_argument("first")
    p_iso.add_argument("second")
    common(p_iso, ("json", "tsv"), "json")
    p_iso.set_defaults(func=cmd_iso)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    if getattr(args, "jobs", 1) < 1:
        print("--jobs must be at least 1", file=sys.stderr)
        return USAGE_ERROR
    try:
        return args.func(args)
    except (_InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
