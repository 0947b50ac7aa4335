"""Command-line front end: counting, family formulas, conjecture sweeps,
chain sampling, and class enumeration.

Exit codes: 0 success / everything verified; 1 usage or input error;
2 a verification sweep found a counterexample; 3 a resource guard refused
the request.  Counts are always printed as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import conjectures
from .conjectures import EXHAUSTIVE_GUARD
from .enumeration import GuardExceeded, connected_graphs
from .facets import facet_count
from .formulas import FamilySpec
from .graph import MultigraphError, ParseError, graph_from_json, graph_to_json, parse_graph
from .sampler import ChainConfig, figure_csv, records_jsonl, run_chain

GUARD_ENV = "SEP_FACETS_GUARD"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_graph(path: str):
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_graph(text)


def _effective_guard(no_guard: bool) -> int:
    if no_guard:
        return 8
    env = os.environ.get(GUARD_ENV)
    if env:
        return int(env)
    return EXHAUSTIVE_GUARD


def _build_parser() -> _Parser:
    p = _Parser(prog="sepfacets", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="facet count of one graph")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", metavar="FILE", help="edge-list or JSON graph file")
    src.add_argument(
        "--family",
        nargs="+",
        metavar="SPEC",
        help="family name and integer parameters, e.g. --family windmill 7 3",
    )

    f = sub.add_parser("formula", help="closed-form family count")
    f.add_argument("family", help="family name, e.g. cycle, theta, windmill")
    f.add_argument("params", nargs="+", type=int, help="family parameters")
    f.add_argument("--tail", type=int, default=0, help="trailing pendant edges (wedge-cycles)")

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument(
        "check",
        choices=[
            "nnmax",
            "disjoint",
            "fbounds",
            "f-leq-m",
            "mixed-cb",
            "nn1",
            "windmill",
            "identities",
        ],
    )
    v.add_argument("--n", type=int, help="first (or only) parameter value")
    v.add_argument("--max-n", type=int, help="sweep up to this value inclusive")
    v.add_argument("--jobs", type=int, default=1, help="worker processes for exhaustive sweeps")
    v.add_argument("--no-guard", action="store_true", help="allow exhaustive n = 8")
    v.add_argument("--skip-leaves", action="store_true", help="nn1: skip classes with a leaf")
    v.add_argument("--bound-only", action="store_true", help="mixed-cb: maximizer-vs-bound scan only")
    v.add_argument("--samples", type=int, default=200, help="windmill sampling size beyond the guard")
    v.add_argument("--seed", type=int, default=2022, help="windmill sampling seed")

    s = sub.add_parser("sample", help="run a seeded sampling chain")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--edges", type=int, required=True)
    s.add_argument("--samples", type=int, required=True)
    s.add_argument("--burn-in", type=int, default=None)
    s.add_argument("--thin", type=int, default=None)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    s.add_argument("--mode", choices=["scatter", "histogram"], default="scatter")
    s.add_argument("--initial", metavar="FILE", help="starting graph (edge-list or JSON)")
    s.add_argument(
        "--deterministic",
        action="store_true",
        help="suppress the timestamp so equal seeds give byte-identical output",
    )

    e = sub.add_parser("enumerate", help="list isomorphism classes")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--edges", type=int, required=True)
    e.add_argument("--out", required=True)
    e.add_argument("--no-guard", action="store_true")
    return p


def _run_verify(args) -> int:
    guard = _effective_guard(args.no_guard)
    check = args.check
    reports = []
    if check == "identities":
        k_max = args.max_n if args.max_n is not None else 10000
        reports.append(conjectures.check_identities(k_max))
    elif check == "mixed-cb" and args.bound_only:
        if args.max_n is None:
            raise SystemExit2("--max-n is required for --bound-only")
        reports.append(conjectures.check_cb_maximizer_bound(args.max_n))
    else:
        if args.n is None:
            raise SystemExit2(f"--n is required for {check}")
        last = args.max_n if args.max_n is not None else args.n
        for n in range(args.n, last + 1):
            if check == "nnmax":
                reports.append(conjectures.check_nn_max(n, guard=guard, jobs=args.jobs))
            elif check == "disjoint":
                reports.append(conjectures.check_disjoint_cycle_bound(n))
            elif check == "fbounds":
                reports.append(conjectures.check_f_bounds(n))
            elif check == "f-leq-m":
                reports.append(conjectures.check_general_f_leq_m(n))
            elif check == "mixed-cb":
                reports.append(conjectures.check_mixed_cb(n))
            elif check == "nn1":
                reports.append(
                    conjectures.check_nn1_exhaustive(
                        n, guard=guard, jobs=args.jobs, skip_leaves=args.skip_leaves
                    )
                )
            elif check == "windmill":
                reports.append(
                    conjectures.check_windmill(
                        n, guard=guard, jobs=args.jobs,
                        samples=args.samples, seed=args.seed,
                    )
                )
    for rep in reports:
        print(json.dumps(rep.to_json(), sort_keys=True))
    if any(r.status == "counterexample" for r in reports):
        return 2
    return 0


class SystemExit2(Exception):
    """Usage problem detected after argparse; mapped to exit code 1."""


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "count":
            if args.edges:
                g = _load_graph(args.edges)
            else:
                g = FamilySpec.parse(args.family).graph()
            print(facet_count(g))
            return 0
        if args.command == "formula":
            spec = FamilySpec(args.family, tuple(args.params), args.tail)
            print(spec.count())
            return 0
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "sample":
            initial = _load_graph(args.initial) if args.initial else None
            cfg = ChainConfig.for_samples(
                args.n,
                args.edges,
                args.samples,
                seed=args.seed,
                burn_in=args.burn_in,
                thin=args.thin,
                initial=initial,
            )
            records = list(run_chain(cfg))
            if args.format == "csv":
                text = figure_csv(records, args.mode, cfg, args.deterministic)
            else:
                text = records_jsonl(records, cfg, args.deterministic)
            Path(args.out).write_text(text)
            return 0
        if args.command == "enumerate":
            guard = 8 if args.no_guard else _effective_guard(False)
            lines = [
                json.dumps(graph_to_json(g))
                for g in connected_graphs(args.n, args.edges, guard=guard)
            ]
            Path(args.out).write_text("\n".join(lines) + ("\n" if lines else ""))
            return 0
    except GuardExceeded as exc:
        print(f"sepfacets: {exc}", file=sys.stderr)
        return 3
    except SystemExit2 as exc:
        print(f"sepfacets: {exc}", file=sys.stderr)
        return 1
    except (ParseError, MultigraphError, ValueError, OSError) as exc:
        print(f"sepfacets: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
