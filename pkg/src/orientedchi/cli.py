"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 budget exhausted,
4 assertion failure. ``ORIENTEDCHI_BUDGET`` overrides the default node budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds, chromatic, diameter, experiment, graph, io

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET, EXIT_ASSERT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_budget() -> int:
    raw = os.environ.get("ORIENTEDCHI_BUDGET")
    return int(raw) if raw else chromatic.DEFAULT_BUDGET


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


# -- gen ------------------------------------------------------------------------


def cmd_gen(args) -> int:
    def need(name):
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"gen {args.kind} needs --{name}")
        return val

    try:
        if args.kind == "hypercube":
            g = graph.gen_hypercube(need("d"))
        elif args.kind == "lemma2":
            g = diameter.lemma2_digraph(need("p"))
        elif args.kind == "k11n-oriented":
            g = graph.gen_k11n_oriented(need("n"))
        else:
            g = graph.gen_basic(args.kind, need("n"))
    except graph.GraphError as exc:
        raise UsageError(str(exc)) from None
    _emit(io.serialize_graph(g), args.out)
    und = graph.underlying(g) if isinstance(g, graph.OrientedGraph) else g
    print(f"n={g.n} m={g.m} max_degree={und.max_degree}", file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK


# -- chi ------------------------------------------------------------------------


def cmd_chi(args) -> int:
    g = io.read_graph(args.file)
    budget = args.budget if args.budget is not None else default_budget()
    oriented = isinstance(g, graph.OrientedGraph)
    if args.all_orientations:
        if oriented:
            raise UsageError("--all-orientations needs an undirected ('p edge') input")
        if args.heuristic:
            raise UsageError("--all-orientations is exact only")
        try:
            res = chromatic.ochi_graph_exact(g, budget, seed=args.seed)
        except graph.GraphError as exc:
            raise UsageError(str(exc)) from None
        quantity = "chi_o(G)"
    else:
        if not oriented:
            raise UsageError("undirected input: pass --all-orientations to compute chi_o(G)")
        if args.heuristic:
            res = chromatic.ochi_heuristic(g, args.seed)
        else:
            res = chromatic.ochi_exact(g, budget, args.seed)
        quantity = "chi_o(D)"

    status = "heuristic" if args.heuristic else ("exact" if res.completed else "budget exhausted")
    if args.witness_out and res.witness is not None:
        Path(args.witness_out).write_text(io.serialize_colouring(res.witness.assignment))
    if args.json:
        doc = {"quantity": quantity, "status": status, **res.as_dict()}
        doc.pop("elapsed")
        print(json.dumps(doc, indent=2))
    else:
        print(f"{quantity} = {res.value} ({status})")
        if not res.completed and not args.heuristic:
            print(f"certified range: [{res.lower}, {res.value}]")
        if res.mask is not None:
            print(f"maximising orientation mask: {res.mask}")
        print(f"nodes: {res.nodes}")
    if not args.heuristic and not res.completed:
        return EXIT_BUDGET
    return EXIT_OK


# -- bounds ---------------------------------------------------------------------


def _bounds_text(rep: bounds.BoundsReport, hyper: bounds.HypercubeBracket | None) -> str:
    d = rep.as_dict()
    lines = [
        f"n={rep.n} m={rep.m} max_degree={rep.max_degree} avg_degree={_fmt(d['graph']['avg_degree'])}",
        "lower bounds:",
        *(f"  {k:<10} {_fmt(v)}" for k, v in d["lower"].items()),
        "upper bounds:",
        *(f"  {k:<10} {_fmt(v)}" for k, v in d["upper"].items()),
        f"bracket: [{rep.lo}, {rep.hi}]",
    ]
    if hyper is not None:
        lines.append(
            f"hypercube d={hyper.d}: {_fmt(hyper.lower)} <= chi_o(Q_d) <= {_fmt(hyper.upper)}"
            f" (gap factor about 5d/2 = {_fmt(hyper.factor_remark)})"
        )
    lines += [f"note: {f}" for f in rep.flags]
    return "\n".join(lines) + "\n"


def cmd_bounds(args) -> int:
    if (args.file is None) == (args.hypercube is None):
        raise UsageError("give exactly one of FILE or --hypercube D")
    if args.epsilon is not None and args.epsilon <= 0:
        raise UsageError("--epsilon must be positive")
    hyper = None
    if args.hypercube is not None:
        try:
            g = graph.gen_hypercube(args.hypercube)
        except graph.GraphError as exc:
            raise UsageError(str(exc)) from None
        hyper = bounds.hypercube_bracket(args.hypercube)
    else:
        g = io.read_graph(args.file)
        if isinstance(g, graph.OrientedGraph):
            g = graph.underlying(g)
    rep = bounds.bounds_report(g, args.epsilon)
    if args.json:
        print(json.dumps(rep.as_dict(), indent=2))
    else:
        sys.stdout.write(_bounds_text(rep, hyper))
    return EXIT_OK


# -- oclique / lemma2 -------------------------------------------------------------


def cmd_oclique(args) -> int:
    g = io.read_graph(args.file)
    if not isinstance(g, graph.OrientedGraph):
        raise UsageError("oclique-check needs an oriented ('p oriented') input")
    rep = diameter.pair_diameter(g)
    ok = rep.value <= 2
    if args.json:
        print(json.dumps({"n": g.n, "is_oclique": ok, "pair_diameter": rep.as_dict()}, indent=2))
    elif ok:
        print(f"oclique: pair-diameter {rep.as_dict()['value']}, hence chi_o = n = {g.n}")
    else:
        val = rep.as_dict()["value"]
        print(
            f"not an oclique; witness pair ({rep.witness_pair[0]},{rep.witness_pair[1]}) "
            f"at distance {'infinity' if val is None else val}"
        )
    return EXIT_OK if ok else EXIT_ASSERT


def cmd_verify_lemma2(args) -> int:
    try:
        rep = diameter.verify_lemma2(args.p)
    except graph.GraphError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps(rep.as_dict(), indent=2))
    else:
        print(f"p={rep.p} n={rep.n} max_degree={rep.max_degree}")
        for c in rep.clauses:
            print(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    return EXIT_OK if rep.passed else EXIT_ASSERT


# -- experiment -----------------------------------------------------------------


def cmd_experiment(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    fmt = args.format or ("json" if args.out and args.out.endswith(".json") else "csv")
    try:
        rec = experiment.run_experiment(args.d, args.trials, args.seed, budget, args.jobs, args.timing)
    except (graph.GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    text = rec.to_json() if fmt == "json" else rec.to_csv()
    _emit(text, args.out)
    summary = (
        f"d={rec.d} trials={rec.trials}: best certified lower bound {rec.best_lower} "
        f"(seed {rec.best_seed}); target 0.80074*sqrt(2^d) = {rec.target:.6g}"
    )
    print(summary, file=sys.stdout if args.out else sys.stderr)
    if not all(r.witness_ok for r in rec.records):
        return EXIT_ASSERT
    return EXIT_OK


# -- wiring -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orientedchi", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a generated graph or digraph")
    g.add_argument(
        "kind",
        choices=["hypercube", "path", "cycle", "complete", "star", "lemma2", "k11n-oriented"],
    )
    g.add_argument("--d", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--p", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("chi", help="oriented chromatic number of a file")
    c.add_argument("file")
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--heuristic", action="store_true")
    c.add_argument("--all-orientations", action="store_true")
    c.add_argument("--budget", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--witness-out")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_chi)

    b = sub.add_parser("bounds", help="evaluate every bound for a graph")
    b.add_argument("file", nargs="?")
    b.add_argument("--hypercube", type=int, metavar="D")
    b.add_argument("--epsilon", type=float)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    o = sub.add_parser("oclique-check", help="pair-diameter test of a digraph")
    o.add_argument("file")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oclique)

    v = sub.add_parser("verify-lemma2", help="check the dense oclique construction")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify_lemma2)

    e = sub.add_parser("experiment", help="random hypercube orientation search")
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--trials", type=int, default=100)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--budget", type=int)
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--out")
    e.add_argument("--format", choices=["csv", "json"])
    e.add_argument("--timing", action="store_true", help="fill the millis column")
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"orientedchi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except io.FormatError as exc:
        print(f"orientedchi: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"orientedchi: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
