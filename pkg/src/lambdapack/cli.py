"""Command-line front end: solve, analyze, verify, generate, replay."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .constructive import recognize_blowup
from .corpus import family_corpus, iter_graph6_file, parse_labels
from .families import Family, FamilySpec, generate, is_class_A
from .graph import Graph, GraphError, VertexPath3
from .graph6 import emit_graph6, parse_graph6
from .harness import THEOREMS, CheckConfig, Filters, Summary, SweepConfig, dumps, replay, resolve_theorems, sweep
from .solver import ConstraintError, PackingConstraints, ResourceExhausted, Solver, default_budget
from .structure import block_decomposition, find_claw, is_cubic, triangle_profile, vertex_connectivity

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_graph(arg: str | None) -> tuple[Graph, dict[str, int]]:
    """A graph from the argument or the first graph6 line of stdin, plus ``# name=v`` labels."""
    if arg is not None:
        lines = [arg]
    else:
        lines = sys.stdin.read().splitlines()
    labels: dict[str, int] = {}
    g6 = None
    for raw in lines:
        line = raw.strip()
        if line.startswith("#"):
            labels.update(parse_labels(line))
        elif line and g6 is None:
            g6 = line
    if g6 is None:
        raise UsageError("no graph6 input")
    try:
        return parse_graph6(g6), labels
    except GraphError as exc:
        raise UsageError(f"bad graph6: {exc}") from exc


def _vertex(tok: str, labels: dict[str, int]) -> int:
    tok = tok.strip()
    if tok in labels:
        return labels[tok]
    try:
        return int(tok)
    except ValueError:
        raise UsageError(f"unknown vertex {tok!r}") from None


def _vertices(spec: str, labels: dict[str, int], count: int) -> tuple[int, ...]:
    out = tuple(_vertex(t, labels) for t in spec.split(","))
    if len(out) != count:
        raise UsageError(f"expected {count} comma-separated vertices, got {spec!r}")
    return out


def _path(spec: str, labels: dict[str, int]) -> VertexPath3:
    a, b, c = _vertices(spec, labels, 3)
    try:
        return VertexPath3.of(a, b, c)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc


# -- solve -------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    g, labels = _read_graph(args.graph6)
    try:
        c = PackingConstraints(
            required_path=_path(args.require_path, labels) if args.require_path else None,
            required_edge=_vertices(args.require_edge, labels, 2) if args.require_edge else None,
            forbidden_edges=frozenset(_vertices(e, labels, 2) for e in args.forbid_edge),
            deleted_vertices=frozenset(_vertex(v, labels) for v in args.delete_vertex),
        )
        c.check(g)
    except (ConstraintError, GraphError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(str(exc)) from exc
    solver = Solver(args.budget if args.budget is not None else default_budget())
    try:
        packing = solver.max_packing(g, c)
    except ConstraintError:
        print("no factor")
        print("size 0")
        return EXIT_OK
    except ResourceExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    packing.validate(g, c)
    alive = g.n - len(c.deleted_vertices)
    print("factor" if 3 * packing.size == alive else "no factor")
    print(f"size {packing.size}")
    for p in packing.paths:
        print(p)
    return EXIT_OK


# -- analyze -----------------------------------------------------------------


def analyze_report(g: Graph) -> dict:
    bd = block_decomposition(g)
    tp = triangle_profile(g)
    claw = find_claw(g)
    return {
        "n": g.n,
        "m": g.m,
        "graph6": emit_graph6(g),
        "degrees": g.degrees(),
        "connectivity": vertex_connectivity(g),
        "claw_free": claw is None,
        "claw": list(claw) if claw else None,
        "cubic": g.n > 0 and is_cubic(g),
        "blocks": [sorted(b) for b in bd.blocks],
        "cut_vertices": sorted(bd.cut_vertices),
        "eb": bd.eb,
        "triangles": [list(t) for t in tp.triangles],
        "class_A": g.n > 0 and is_class_A(g),
        "triangle_blowup": recognize_blowup(g) is not None,
    }


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, list):
        return " ".join(_fmt(x) if not isinstance(x, list) else "{" + ",".join(map(str, x)) + "}" for x in v) or "-"
    return str(v)


def cmd_analyze(args: argparse.Namespace) -> int:
    g, _ = _read_graph(args.graph6)
    rep = analyze_report(g)
    if args.json:
        print(json.dumps(rep, sort_keys=True))
    else:
        for k, v in rep.items():
            print(f"{k}={_fmt(v)}")
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        theorems = resolve_theorems(args.theorem)
        filters = Filters.parse(args.filter)
    except (KeyError, ValueError) as exc:
        raise UsageError(exc.args[0]) from exc
    budget = args.budget if args.budget is not None else default_budget()
    try:
        cfg = SweepConfig(
            theorems=theorems,
            filters=filters,
            check=CheckConfig(budget, args.exhaustive_limit, args.sample_size, args.seed),
            jobs=args.jobs,
            timing=args.timing,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.generator:
        try:
            records = list(family_corpus(args.generator))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad generator spec: {exc}") from exc
    else:
        records = iter_graph6_file(args.corpus)
    summary = Summary()
    try:
        for rec, summary in sweep(records, cfg):
            print(dumps(rec))
    except OSError as exc:
        print(f"error: cannot read corpus: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.flush()
    print(f"summary: {summary.render()}", file=sys.stderr)
    return EXIT_FAIL if summary.counterexamples else EXIT_OK


def cmd_replay(args: argparse.Namespace) -> int:
    """Re-run COUNTEREXAMPLE records; exit 1 if any failure reproduces."""
    fh = sys.stdin if args.verdicts == "-" else open(args.verdicts, encoding="utf-8")
    reproduced = 0
    with fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            if rec.get("outcome") != "COUNTEREXAMPLE":
                continue
            ok = replay(rec)
            reproduced += ok
            print(f"{rec['theorem']} {rec['graph']} {'reproduced' if ok else 'NOT reproduced'}")
    return EXIT_FAIL if reproduced else EXIT_OK


# -- generate ----------------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    fam = Family(args.family)
    params: dict[str, int] = {}
    if fam in (Family.CLASS_A, Family.H_GRAPH):
        params["steps"] = args.steps
    if fam in (Family.R_GRAPH, Family.Q_GRAPH):
        if args.la is None or args.lb is None:
            raise UsageError(f"--family {fam.value} needs --la and --lb")
        params.update(la=args.la, lb=args.lb)
    base = None
    if fam is Family.BLOWUP:
        if args.base is None:
            raise UsageError("--family blowup needs --base GRAPH6")
        base, _ = _read_graph(args.base)
    try:
        g, labels = generate(FamilySpec(fam, params), base)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not args.plain:
        tags = " ".join(f"{k}={v}" for k, v in labels.items())
        print(f"# family={fam.value} n={g.n}" + (f" {tags}" if tags else ""))
    print(emit_graph6(g))
    return EXIT_OK


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lambdapack", description="Packings of 3-vertex paths in graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="maximum packing / factor of one graph")
    p.add_argument("graph6", nargs="?", help="graph6 string (default: first line of stdin)")
    p.add_argument("--require-edge", metavar="U,V")
    p.add_argument("--forbid-edge", metavar="U,V", action="append", default=[])
    p.add_argument("--require-path", metavar="A,B,C", help="path A-B-C with center B")
    p.add_argument("--delete-vertex", metavar="V", action="append", default=[])
    p.add_argument("--budget", type=int, help="search node budget")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("analyze", help="structural report of one graph")
    p.add_argument("graph6", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check theorems over a corpus")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--corpus", default="-", help="graph6 file, .gz allowed (default: stdin)")
    src.add_argument("--generator", help="e.g. classA:0..8, H:0..3, R:4,4, Q:5,5, net, random-cubic:N:COUNT:SEED")
    p.add_argument("--theorem", action="append", help=f"ids, comma separated or repeated; any of {', '.join(THEOREMS)}")
    p.add_argument("--filter", action="append", default=[], help="claw-free, cubic, connected, kappa>=K, nmod3=R, n<=N, n>=N")
    p.add_argument("--budget", type=int, help="node budget per theorem check (overrides $LAMBDAPACK_BUDGET)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive-limit", type=int, default=15, help="quantify exhaustively up to this n")
    p.add_argument("--sample-size", type=int, default=64, help="sampled universals above the limit")
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds to records")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("replay", help="re-run COUNTEREXAMPLE verdict records")
    p.add_argument("verdicts", nargs="?", default="-")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("generate", help="emit a family member as graph6")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--steps", type=int, default=0)
    p.add_argument("--la", type=int)
    p.add_argument("--lb", type=int)
    p.add_argument("--base", help="cubic base graph (graph6) for blowup")
    p.add_argument("--plain", action="store_true", help="omit the label comment line")
    p.set_defaults(func=cmd_generate)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lambdapack {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
