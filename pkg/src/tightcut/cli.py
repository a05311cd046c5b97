"""Command-line entry point: ``tightcut {decompose,witness,check}``.

Exit codes: 0 success, 1 input or parse error, 2 a semantic precondition
failed (not factorizable, not a brick, bad shore or matching, size bound),
3 an internal claim failed (always a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from .canonical import decompose
from .checks import run_all
from .engine import fat_witness
from .errors import GraphInputError, PreconditionError, ProofClaimError
from .formats import DecompositionReport, matching_pairs, parse_matching, parse_vertex_list, read_graph, to_dot
from .matching import brick_violation
from .testkit import canonical_shore, star_shores, tight_cuts_bruteforce

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_CLAIM = 0, 1, 2, 3


def _emit(obj):
    print(json.dumps(obj, indent=2))


def cmd_decompose(args) -> int:
    g = read_graph(args.path)
    d = decompose(g)
    if args.dot:
        sys.stdout.write(to_dot(g, d))
        return EXIT_OK
    report = DecompositionReport.from_decomposition(d)
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return EXIT_OK


def cmd_witness(args) -> int:
    g = read_graph(args.path)
    shore = parse_vertex_list(args.shore)
    if not shore <= g.vertices:
        raise PreconditionError("shore contains unknown vertices")
    m = parse_matching(g, args.matching) if args.matching else None
    w = fat_witness(g, shore, m, prefer_proper_ears=not args.first_ear)
    _emit({
        "shore": sorted(w.shore),
        "input_matching": matching_pairs(g, w.input_matching),
        "output_matching": matching_pairs(g, w.output_matching),
        "crossing_edges": w.crossing,
        "circuit": None if w.circuit is None else list(w.circuit),
        "trace": list(w.trace),
    })
    return EXIT_OK


def cmd_check(args) -> int:
    g = read_graph(args.path)
    if args.what == "brick":
        if len(g) < 4 or len(g) % 2:
            _emit({"brick": False, "reason": "needs an even number of vertices, at least 4"})
            return EXIT_OK
        pair = brick_violation(g)
        _emit({"brick": pair is None} if pair is None else {"brick": False, "failing_pair": list(pair)})
        return EXIT_OK
    if args.what == "tight-cuts":
        cuts = tight_cuts_bruteforce(g)
        stars = {canonical_shore(g, s) for s in star_shores(g)}
        _emit({"tight_cuts": [sorted(c) for c in cuts], "only_star_cuts": set(cuts) <= stars})
        return EXIT_OK
    results = run_all(g)
    failed = {k: v for k, v in results.items() if v}
    for name, problems in results.items():
        print(f"{name}: {'ok' if not problems else f'{len(problems)} violation(s)'}")
        for p in problems[:5]:
            print(f"  {p}")
    if failed:
        return EXIT_CLAIM
    print("all invariants hold")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tightcut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="canonical decomposition of a factorizable graph")
    p.add_argument("path")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable report")
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT rendering")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("witness", help="perfect matching with two or more edges in a cut of a brick")
    p.add_argument("path")
    p.add_argument("--shore", required=True, help="comma-separated vertex ids, e.g. 1,2,3")
    p.add_argument("--matching", help='starting perfect matching, e.g. "1-2,3-6,4-5"')
    p.add_argument("--first-ear", action="store_true", help="take the first ear found instead of a proper one")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("check", help="brick test, brute-force tight cuts, or full invariant check")
    p.add_argument("path")
    p.add_argument("what", choices=["brick", "tight-cuts", "verify-decomp"])
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ProofClaimError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CLAIM
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
