"""Command-line front end.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 guard/budget-only
outcome.  All output is deterministic: identical invocations produce
byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebraic import build_O, build_Oprime, minrank, orthogonality_dimension
from .coloring import chromatic_number
from .errors import BudgetExceeded, GuardExceeded, WitnessError
from .generators import from_name
from .graphs import parse_graph, serialize_graph
from .index_coding import (
    IndexCode,
    coloring_from_index_code,
    line_coloring_from_index_code,
    linear_code_from_matrix,
    optimal_index_code_bruteforce,
    verify_index_code,
)
from .reduction import check_witnesses, paper_report, reduce_graph
from .subspaces import build_S, build_Sprime

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _read_graph(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise _Usage(f"cannot read graph file {path!r}: {e.strerror}") from None
    try:
        return parse_graph(text)
    except ValueError as e:
        raise _Usage(f"bad DIMACS in {path!r}: {e}") from None


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise _Usage(f"cannot read JSON file {path!r}: {e}") from None


class _Usage(Exception):
    pass


def _dump_json(obj, path):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="odlab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("chi", help="exact chromatic number with witness")
    sp.add_argument("graph")
    sp.add_argument("--json", dest="json_out")

    for name in ("od", "minrank"):
        sp = sub.add_parser(name, help=f"exact {name} over GF(q) with witness")
        sp.add_argument("graph")
        sp.add_argument("--field", type=int, required=True)
        sp.add_argument("--max-k", type=int, default=None)

    sp = sub.add_parser("reduce", help="emit the reduction instance for a target parameter")
    sp.add_argument("graph")
    sp.add_argument("--target", choices=["od", "minrank", "ic"], required=True)

    sp = sub.add_parser("subspace-graph", help="emit an orthogonality/subspace target graph")
    sp.add_argument("--field", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", choices=["S", "Sprime", "O", "Oprime"], required=True)

    sp = sub.add_parser("index-code", help="index-coding operations")
    isub = sp.add_subparsers(dest="ic_command", required=True)
    v = isub.add_parser("verify")
    v.add_argument("graph")
    v.add_argument("code")
    fm = isub.add_parser("from-minrank")
    fm.add_argument("graph")
    fm.add_argument("--field", type=int, required=True)
    br = isub.add_parser("brute")
    br.add_argument("graph")
    br.add_argument("--s", type=int, required=True)
    br.add_argument("--max-k", type=int, default=None)
    ex = isub.add_parser("extract-coloring")
    ex.add_argument("graph")
    ex.add_argument("code")
    ex.add_argument("--line", action="store_true", help="code is for the complement of H, not of G")

    sp = sub.add_parser("gen", help="emit a named graph as DIMACS")
    sp.add_argument("name")

    sp = sub.add_parser("verify", help="verification reports")
    sp.add_argument("what", choices=["paper"])
    sp.add_argument("graph")
    sp.add_argument("--field", type=int, action="append", default=None)
    sp.add_argument("--json", dest="json_out")

    sp = sub.add_parser("check-witness", help="re-verify all witnesses in a report")
    sp.add_argument("report")
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return _dispatch(args)
    except _Usage as e:
        print(f"error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (GuardExceeded, BudgetExceeded) as e:
        print(f"unknown: {e}", file=sys.stderr)
        return EXIT_GUARD
    except WitnessError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED


def _dispatch(args) -> int:
    if args.command == "chi":
        g = _read_graph(args.graph)
        chi, col = chromatic_number(g)
        if args.json_out is not None:
            _dump_json({"chi": chi, "colors": {str(v): c for v, c in col.assignment.items()}}, args.json_out)
        else:
            print(f"chi {chi}")
            for v in g.vertices:
                print(f"v {v} {col.assignment[v]}")
        return EXIT_OK

    if args.command == "od":
        g = _read_graph(args.graph)
        k_max = args.max_k if args.max_k is not None else max(1, g.n)
        res = orthogonality_dimension(g, args.field, k_max)
        if res is None:
            print(f"od exceeds {k_max}")
            return EXIT_GUARD
        k, rep = res
        print(f"od {k}")
        for v in g.vertices:
            print(f"v {v} {','.join(map(str, rep.vectors[v]))}")
        return EXIT_OK

    if args.command == "minrank":
        g = _read_graph(args.graph)
        k_max = args.max_k if args.max_k is not None else max(1, g.n)
        res = minrank(g, args.field, k_max)
        if res is None:
            print(f"minrank exceeds {k_max}")
            return EXIT_GUARD
        k, m = res
        print(f"minrank {k}")
        for row in m.rows:
            print("r " + " ".join(map(str, row)))
        return EXIT_OK

    if args.command == "reduce":
        g = _read_graph(args.graph)
        out = reduce_graph(g, args.target)
        sys.stdout.write(serialize_graph(out.graph))
        for i, v in enumerate(out.graph.vertices, start=1):
            print(f"c map {i} {v}")
        return EXIT_OK

    if args.command == "subspace-graph":
        builders = {"S": build_S, "Sprime": build_Sprime, "O": build_O, "Oprime": build_Oprime}
        graph = builders[args.kind](args.field, args.n)
        sys.stdout.write(serialize_graph(graph))
        for i, v in enumerate(graph.vertices, start=1):
            print(f"c label {i} {v}")
        return EXIT_OK

    if args.command == "index-code":
        return _dispatch_index_code(args)

    if args.command == "gen":
        try:
            g = from_name(args.name)
        except ValueError as e:
            raise _Usage(str(e)) from None
        sys.stdout.write(serialize_graph(g))
        return EXIT_OK

    if args.command == "verify":
        g = _read_graph(args.graph)
        fields = tuple(args.field) if args.field else (2,)
        report = paper_report(g, fields)
        _dump_json(report, args.json_out)
        statuses = {c["status"] for c in report["checks"]}
        if "fail" in statuses:
            return EXIT_CHECK_FAILED
        if "unknown" in statuses:
            return EXIT_GUARD
        return EXIT_OK

    if args.command == "check-witness":
        report = _read_json(args.report)
        ok, messages = check_witnesses(report)
        for line in messages:
            print(line)
        return EXIT_OK if ok else EXIT_CHECK_FAILED

    raise _Usage(f"unhandled command {args.command!r}")


def _dispatch_index_code(args) -> int:
    g = _read_graph(args.graph)
    if args.ic_command == "verify":
        code = IndexCode.from_json_obj(_read_json(args.code))
        valid = verify_index_code(g, code)
        print("valid" if valid else "invalid")
        return EXIT_OK if valid else EXIT_CHECK_FAILED

    if args.ic_command == "from-minrank":
        res = minrank(g, args.field, max(1, g.n))
        if res is None:
            return EXIT_GUARD
        _, m = res
        code = linear_code_from_matrix(g, m)
        _dump_json(code.to_json_obj(), None)
        return EXIT_OK

    if args.ic_command == "brute":
        k_max = args.max_k
        best = optimal_index_code_bruteforce(g, args.s, k_max)
        if best is None:
            print(f"optimal length exceeds {k_max}")
            return EXIT_GUARD
        print(f"optimal length {best}")
        return EXIT_OK

    if args.ic_command == "extract-coloring":
        code = IndexCode.from_json_obj(_read_json(args.code))
        col = line_coloring_from_index_code(g, code) if args.line else coloring_from_index_code(g, code)
        _dump_json({"palette": col.palette, "colors": {str(v): c for v, c in col.assignment.items()}}, None)
        return EXIT_OK

    raise _Usage(f"unhandled index-code command {args.ic_command!r}")


if __name__ == "__main__":
    sys.exit(main())
