"""Command line front end.

Exit codes: 0 ok, 1 a checked claim failed, 2 usage error, 3 capacity
refusal, 4 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from .forcing import (
    derived_coloring,
    first_non_forcing_extension,
    is_failed,
    is_maximal_failed,
    is_stalled,
    is_zero_forcing_set,
)
from .graph import (
    CapacityError,
    GraphError,
    ParameterError,
    ParseError,
    VertexSet,
    build,
    format_set,
    parse_expression,
    parse_graph,
    parse_set,
    serialize_graph,
)
from .oracle import DEFAULT_CAP, CapacityRefusal, failed_zero_forcing_number, thm27_upper_bound, zero_forcing_number
from .report import render, rows

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_CAPACITY, EXIT_IO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _read_graph(source: str):
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return parse_graph(text)


def _read_set(text: str, order: int) -> VertexSet:
    try:
        return VertexSet.of(order, parse_set(text, order))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _labelled(g, vs, use_labels: bool) -> str:
    if use_labels and g.labels is not None:
        return ",".join(g.labels[v] for v in vs)
    return format_set(vs)


def _emit(args, text: str, record: dict) -> None:
    if args.format == "structured":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def cmd_gen(args) -> int:
    try:
        spec = parse_expression(args.expression)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None
    g = build(spec)
    if args.format == "structured":
        print(json.dumps({"kind": "graph", "expression": str(spec), "order": g.order, "edges": g.edges()}))
    else:
        print(f"# {spec}")
        print(serialize_graph(g))
    return EXIT_OK


def cmd_simulate(args) -> int:
    g = _read_graph(args.graph)
    blue = _read_set(args.blue, g.order)
    final, chain = derived_coloring(g, blue)
    forcing = len(final) == g.order
    white = final.complement()
    verdict = "ZERO FORCING" if forcing else "FAILED"
    lines = [f"{g.label(u) if args.seed_labels else u} -> {g.label(v) if args.seed_labels else v}" for u, v in chain]
    lines.append(f"forces: {len(chain)}")
    lines.append(f"final: {_labelled(g, final, args.seed_labels)}")
    if not forcing:
        lines.append(f"white: {_labelled(g, white, args.seed_labels)}")
    lines.append(verdict)
    _emit(
        args,
        "\n".join(lines),
        {
            "kind": "simulation",
            "initial": blue.to_list(),
            "chain": [list(s) for s in chain],
            "final": final.to_list(),
            "verdict": verdict,
        },
    )
    return EXIT_OK


def cmd_exact(args) -> int:
    g = _read_graph(args.graph)
    fn = failed_zero_forcing_number if args.stat == "F" else zero_forcing_number
    cert = fn(g, cap=args.cap, workers=args.workers)
    _emit(args, cert.to_text(), cert.to_record())
    return EXIT_OK


def _construct(tag: str, params: list[str], cap: int) -> cons.ConstructionResult:
    if tag in ("lex", "corona"):
        if len(params) != 2:
            raise UsageError(f"{tag} takes two graph expressions")
        try:
            g, h = (build(parse_expression(p)) for p in params)
        except ParameterError as exc:
            raise UsageError(str(exc)) from None
        fn = cons.lexicographic_construction if tag == "lex" else cons.corona_construction
        return fn(g, h, None, cap=cap)
    arity = 1 if tag == "prism" else 2
    if len(params) != arity or not all(p.isdigit() for p in params):
        raise UsageError(f"{tag} takes {arity} integer parameter(s)")
    try:
        return cons.CONSTRUCTIONS[tag](*map(int, params))
    except ParameterError as exc:
        raise UsageError(str(exc)) from None


def cmd_construct(args) -> int:
    res = _construct(args.tag, args.params, args.cap)
    verdicts = res.check()
    ok = all(verdicts.values())
    if args.format == "structured":
        rec = res.to_record()
        rec["verdicts"] = verdicts
        print(json.dumps(rec, sort_keys=True))
    else:
        print(res.to_text())
        for claim, passed in verdicts.items():
            print(f"{claim}: {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    s = _read_set(args.set, g.order)
    final, chain = derived_coloring(g, s)
    if args.check == "zfs":
        ok = is_zero_forcing_set(g, s)
        reason = "all vertices forced" if ok else f"stalls with white {format_set(final.complement())}"
    elif args.check == "failed":
        ok = is_failed(g, s)
        reason = f"white remains: {format_set(final.complement())}" if ok else "forces everything:\n" + chain.format()
    elif args.check == "stalled":
        ok = is_stalled(g, s)
        if ok:
            reason = "no blue vertex has exactly one white neighbour"
        elif len(s) == g.order:
            reason = "not a proper subset"
        else:
            u, v = chain.steps[0]
            reason = f"force available: {u} -> {v}"
    else:
        ok = is_maximal_failed(g, s)
        if ok:
            reason = "failed, and adding any white vertex forces everything"
        elif not is_failed(g, s):
            reason = "not failed; forces everything:\n" + chain.format()
        else:
            reason = f"adding vertex {first_non_forcing_extension(g, s)} still fails"
    _emit(
        args,
        f"{'PASS' if ok else 'FAIL'} {args.check}: {reason}",
        {"kind": "verdict", "check": args.check, "set": s.to_list(), "pass": ok, "reason": reason},
    )
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_bound(args) -> int:
    if args.cartesian:
        f_g, n_g, f_h, n_h = args.cartesian
        value = cons.cartesian_lower_bound(f_g, n_g, f_h, n_h)
        _emit(args, f"lower bound: {value}", {"kind": "bound", "lower": value})
        return EXIT_OK
    if args.graph is None:
        raise UsageError("bound needs a graph file or --cartesian")
    g = _read_graph(args.graph)
    bound, basis = thm27_upper_bound(g)
    _emit(args, f"upper bound: {bound}\nbasis: {basis}", {"kind": "bound", "upper": bound, "basis": basis})
    return EXIT_OK


def cmd_report(args) -> int:
    table = list(rows(workers=args.workers))
    if args.format == "structured":
        for r in table:
            print(
                json.dumps(
                    {"claim": r.claim, "expected": r.expected, "computed": r.computed, "route": r.route, "pass": r.passed},
                    ensure_ascii=False,
                    sort_keys=True,
                )
            )
    else:
        print(render(table))
    return EXIT_OK if all(r.passed for r in table) else EXIT_CLAIM


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest order for exhaustive search")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed-labels", action="store_true", help="print vertex labels instead of indices")

    parser = argparse.ArgumentParser(prog="zforce", description="zero forcing and failed zero forcing tools")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a family or product graph as an edge list")
    p.add_argument("expression", nargs="+")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("simulate", parents=[common], help="run the color-change rule")
    p.add_argument("graph")
    p.add_argument("--blue", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("exact", parents=[common], help="exhaustive Z or F")
    p.add_argument("graph")
    p.add_argument("--stat", choices=("F", "Z"), default="F")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("construct", parents=[common], help="build and check a product construction")
    p.add_argument("tag", choices=sorted(cons.CONSTRUCTIONS))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check a set predicate")
    p.add_argument("graph")
    p.add_argument("set")
    p.add_argument("--check", choices=("zfs", "failed", "stalled", "maximal"), required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", parents=[common], help="structural upper bound or Cartesian lower bound")
    p.add_argument("graph", nargs="?")
    p.add_argument("--cartesian", type=int, nargs=4, metavar=("F_G", "N_G", "F_H", "N_H"))
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("report", parents=[common], help="recompute the published values")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "expression", None) is not None:
        args.expression = " ".join(args.expression)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityRefusal, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParseError, GraphError, cons.WitnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
