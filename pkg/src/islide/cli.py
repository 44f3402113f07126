"""Command-line front end.

Exit codes: 0 success, 1 domain verdict (not realizable, witness found under
--expect-none, lemma failure, seed rejection), 2 usage or parse error,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    DiamondFoundError,
    FormatError,
    GraphError,
    InvalidParameterError,
    InvalidThetaSpecError,
    NotALineGraphError,
    SetCountCapError,
)
from .formats import from_edge_list, from_graph6, to_edge_list, to_graph6
from .graphs import Graph, fan_graph, line_graph, path_graph, cycle_graph, theta_graph, wheel_graph
from .independence import DEFAULT_SET_CAP, independence_report
from .iso import is_isomorphic
from .linegraphs import seed_from_line_graph
from .planar import parse_rotation_file
from .reconfig import (
    SlideGraph,
    build_slide_graph,
    slide_graph_to_dot,
    slide_graph_to_json,
)
from .search import confirm_non_realizable, find_seed
from .seeds import build_theta_seed_complement, planar_seed, verify_theta_seed

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _read_graph(args) -> Graph:
    if getattr(args, "g6", None):
        return from_graph6(args.g6)
    with open(args.input, encoding="utf-8") as fh:
        return from_edge_list(fh.read())


def _add_input_options(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--input", help="edge-list file (first line n, then 'u v' lines)")
    grp.add_argument("--g6", help="inline graph6 string")


def _print_slide_graph(sg: SlideGraph, rep, fmt: str) -> None:
    if fmt == "json":
        stats = {
            "i": rep.i,
            "alpha": rep.alpha,
            "i_set_count": len(rep.i_sets),
            "alpha_set_count": len(rep.alpha_sets),
            "total_mis_count": rep.total_mis_count,
        }
        body = json.loads(slide_graph_to_json(sg))
        body["stats"] = stats
        print(json.dumps(body, indent=2, sort_keys=True))
    elif fmt == "dot":
        print(slide_graph_to_dot(sg), end="")
    elif fmt == "graph6":
        print(to_graph6(sg.skeleton))
    else:
        print(f"base: n={sg.base.n} m={sg.base.edge_count()}")
        print(f"i={rep.i} alpha={rep.alpha} i-sets={len(rep.i_sets)} "
              f"alpha-sets={len(rep.alpha_sets)} maximal-independent-sets={rep.total_mis_count}")
        for idx, node in enumerate(sg.nodes):
            vs = ",".join(str(v) for v in _bits_list(node))
            print(f"node {idx}: {{{vs}}}")
        for a, b, x, y in sg.edges:
            print(f"edge {a} -- {b}  (slide {x} -> {y})")


def _bits_list(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def cmd_compute(args) -> int:
    g = _read_graph(args)
    rep = independence_report(g, cap=args.cap)
    family = rep.alpha_sets if args.alpha else rep.i_sets
    sg = build_slide_graph(g, list(family))
    _print_slide_graph(sg, rep, args.format)
    return EXIT_OK


def cmd_seed(args) -> int:
    result = build_theta_seed_complement(args.j, args.k, args.l)
    if result.verdict == "invalid_spec":
        print(f"invalid spec: {result.reason}", file=sys.stderr)
        return EXIT_USAGE
    if result.verdict == "not_realizable":
        print(f"not realizable: exception {result.reason}")
        return EXIT_VERDICT
    gbar = result.gbar
    g = gbar.complement()
    if args.format == "graph6":
        print(to_graph6(gbar))
        print(to_graph6(g))
    elif args.format == "text":
        print("complement seed gbar:")
        print(to_edge_list(gbar), end="")
        print("seed G = complement(gbar):")
        print(to_edge_list(g), end="")
    elif args.format == "dot":
        from .formats import to_dot

        labels = {idx: name for name, idx in result.trace.names.items()}
        print(to_dot(gbar, labels=labels, name="ComplementSeed"), end="")
    else:
        payload = json.loads(result.trace.to_json())
        payload["gbar_graph6"] = to_graph6(gbar)
        payload["seed_graph6"] = to_graph6(g)
        print(json.dumps(payload, indent=2, sort_keys=True))
    if args.verify:
        verification = verify_theta_seed(args.j, args.k, args.l)
        for clause in verification.clauses:
            mark = "pass" if clause.passed else "FAIL"
            print(f"{mark} {clause.name}: {clause.detail}")
        if not verification.passed:
            return EXIT_VERDICT
    return EXIT_OK


def cmd_lemmas(args) -> int:
    failures = 0
    for k in range(4, args.wheel_max + 1):
        g = wheel_graph(k).complement()
        rep = independence_report(g)
        ig = build_slide_graph(g, list(rep.i_sets))
        ag = build_slide_graph(g, list(rep.alpha_sets))
        ok = is_isomorphic(ig.skeleton, cycle_graph(k)) and is_isomorphic(
            ag.skeleton, cycle_graph(k)
        )
        failures += not ok
        print(f"{'pass' if ok else 'FAIL'} wheel rim {k}: i-graph and alpha-graph ~ C_{k}")
    for k in range(2, args.fan_max + 1):
        g = fan_graph(k).complement()
        rep = independence_report(g)
        ig = build_slide_graph(g, list(rep.i_sets))
        ag = build_slide_graph(g, list(rep.alpha_sets))
        ok = is_isomorphic(ig.skeleton, path_graph(k - 1)) and is_isomorphic(
            ag.skeleton, path_graph(k - 1)
        )
        failures += not ok
        print(f"{'pass' if ok else 'FAIL'} fan {k}: i-graph and alpha-graph ~ P_{k-1}")
    from .search import enumerate_labeled_graphs

    checked = 0
    bad = 0
    for n in range(2, args.line_max + 1):
        for f in enumerate_labeled_graphs(n, connected_only=True):
            if f.has_triangle():
                continue
            checked += 1
            target = line_graph(f)
            g = f.complement()
            rep = independence_report(g)
            ig = build_slide_graph(g, list(rep.i_sets))
            if not is_isomorphic(ig.skeleton, target):
                bad += 1
    failures += bad
    print(
        f"{'pass' if bad == 0 else 'FAIL'} line-graph sweep: {checked} connected "
        f"triangle-free roots on 2..{args.line_max} vertices, {bad} mismatches"
    )
    return EXIT_VERDICT if failures else EXIT_OK


def cmd_search(args) -> int:
    if args.theta:
        target = theta_graph(*args.theta)
    elif args.target:
        target = from_graph6(args.target)
    else:
        print("search needs --target or --theta", file=sys.stderr)
        return EXIT_USAGE
    if args.expect_none:
        report = confirm_non_realizable(target, max_n=args.max_n, jobs=args.jobs)
    else:
        report = find_seed(
            target,
            max_n=args.max_n,
            connected_only=args.connected,
            find_all=args.all,
            jobs=args.jobs,
        )
    print(report.to_json())
    if args.expect_none and report.found:
        print("FATAL: witness found for a target expected to have none", file=sys.stderr)
        return EXIT_VERDICT
    return EXIT_OK


def cmd_lineseed(args) -> int:
    h = _read_graph(args)
    try:
        g = seed_from_line_graph(h)
    except DiamondFoundError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    except NotALineGraphError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_VERDICT
    rep = independence_report(g)
    sg = build_slide_graph(g, list(rep.i_sets))
    ok = is_isomorphic(sg.skeleton, h)
    print(f"seed graph6: {to_graph6(g)}")
    print(f"i={rep.i} alpha={rep.alpha} i-sets={len(rep.i_sets)}")
    print(f"{'pass' if ok else 'FAIL'} i-graph matches the input")
    return EXIT_OK if ok else EXIT_VERDICT


def cmd_dualseed(args) -> int:
    g = _read_graph(args)
    with open(args.rotation, encoding="utf-8") as fh:
        rot = parse_rotation_file(fh.read(), g)
    seed = planar_seed(g, rot)
    rep = independence_report(seed)
    sg = build_slide_graph(seed, list(rep.i_sets))
    from .iso import contains_induced

    contains = contains_induced(sg.skeleton, g)
    print(f"seed graph6: {to_graph6(seed)}")
    print(f"i={rep.i} alpha={rep.alpha} i-sets={len(rep.i_sets)}")
    exact = sg.node_count() == g.n and is_isomorphic(sg.skeleton, g)
    print(f"{'pass' if contains else 'FAIL'} i-graph contains the input as an induced subgraph")
    if exact:
        print("pass i-graph is exactly the input")
    return EXIT_OK if contains else EXIT_VERDICT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="islide",
        description="Slide reconfiguration graphs of minimum independent dominating sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="i-graph or alpha-graph of a graph")
    _add_input_options(p)
    p.add_argument("--alpha", action="store_true", help="use alpha-sets instead of i-sets")
    p.add_argument("--format", choices=("text", "json", "dot", "graph6"), default="text")
    p.add_argument("--cap", type=int, default=DEFAULT_SET_CAP,
                   help="abort if the graph has more maximal independent sets")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("seed", help="complement seed for theta(j,k,l)")
    p.add_argument("j", type=int)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--verify", action="store_true", help="run the verification clauses")
    p.add_argument("--format", choices=("json", "text", "graph6", "dot"), default="json")
    p.set_defaults(func=cmd_seed)

    p = sub.add_parser("lemmas", help="wheel, fan, and line-graph sweeps")
    p.add_argument("--wheel-max", type=int, default=10)
    p.add_argument("--fan-max", type=int, default=10)
    p.add_argument("--line-max", type=int, default=6)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("search", help="exhaustive seed search over small labeled graphs")
    p.add_argument("--target", help="target as graph6")
    p.add_argument("--theta", nargs=3, type=int, metavar=("J", "K", "L"))
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--all", action="store_true", help="collect every witness")
    p.add_argument("--expect-none", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("lineseed", help="seed a diamond-free line graph via its root")
    _add_input_options(p)
    p.set_defaults(func=cmd_lineseed)

    p = sub.add_parser("dualseed", help="seed a cubic bipartite planar graph via its dual")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--rotation", required=True, help="rotation file: 'v: a-b a-c ...'")
    p.set_defaults(func=cmd_dualseed)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except SetCountCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FormatError, InvalidParameterError, InvalidThetaSpecError,
            FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_VERDICT


if __name__ == "__main__":
    sys.exit(main())
