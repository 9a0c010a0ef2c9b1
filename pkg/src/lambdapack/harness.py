"""Machine checks of the packing theorems on individual graphs and corpora.

Each theorem is a hypothesis test plus a claim over finitely many
*instances*.  An instance is a fully serialisable query (graph6, deleted
vertices, forbidden edges, required edge or path, path kind, and whether
the surviving graph must be connected) together with the answer the
theorem predicts.  A claim says that at least ``need`` of a list of
instances come out as predicted; a failing claim is reported with every
instance it involved so it can be replayed independently.
"""

from __future__ import annotations

import enum
import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from math import ceil
from typing import Callable, Iterable, Iterator

from .constructive import ConstructionError, applicable_modes, blowup_factor, mode_holds, recognize_blowup
from .corpus import Record
from .families import is_class_A
from .graph import Edge, Graph, GraphError, VertexPath3, is_connected, paths_in
from .graph6 import emit_graph6, parse_graph6
from .solver import LambdaPacking, PackingConstraints, PathKind, ResourceExhausted, Solver
from .structure import (
    EdgeTripleClass,
    block_decomposition,
    classify_edge_triple,
    is_claw_free,
    is_cubic,
    is_k_connected,
    triangle_profile,
)


class Outcome(str, enum.Enum):
    NOT_APPLICABLE = "NOT_APPLICABLE"
    HOLDS = "HOLDS"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    RESOURCE_EXHAUSTED = "RESOURCE_EXHAUSTED"


@dataclass(frozen=True)
class Instance:
    """One solver query and the answer a theorem predicts for it."""

    delete: tuple[int, ...] = ()
    forbid: tuple[Edge, ...] = ()
    edge: Edge | None = None
    path: tuple[int, int, int] | None = None  # (end, center, end)
    kind: str = PathKind.ANY.value
    connected: bool = False
    min_size: int | None = None
    expect: bool = True

    def constraints(self) -> PackingConstraints:
        req = VertexPath3.of(*self.path) if self.path else None
        return PackingConstraints(req, self.edge, frozenset(self.forbid), frozenset(self.delete))

    def to_dict(self) -> dict:
        d: dict = {"expect": self.expect}
        if self.delete:
            d["delete"] = list(self.delete)
        if self.forbid:
            d["forbid"] = [list(e) for e in self.forbid]
        if self.edge:
            d["edge"] = list(self.edge)
        if self.path:
            d["path"] = list(self.path)
        if self.kind != PathKind.ANY.value:
            d["kind"] = self.kind
        if self.connected:
            d["connected"] = True
        if self.min_size is not None:
            d["min_size"] = self.min_size
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Instance:
        return cls(
            delete=tuple(d.get("delete", ())),
            forbid=tuple(tuple(e) for e in d.get("forbid", ())),
            edge=tuple(d["edge"]) if d.get("edge") else None,
            path=tuple(d["path"]) if d.get("path") else None,
            kind=d.get("kind", PathKind.ANY.value),
            connected=d.get("connected", False),
            min_size=d.get("min_size"),
            expect=d["expect"],
        )


def evaluate(g: Graph, inst: Instance, solver: Solver) -> tuple[bool, LambdaPacking | None]:
    """Decide an instance: does the query succeed, and with which witness."""
    c = inst.constraints()
    if inst.min_size is not None:
        p = solver.max_packing(g, c)
        p.validate(g, c)
        return p.size >= inst.min_size, p
    if inst.connected:
        alive = g.full_mask
        for v in inst.delete:
            alive &= ~(1 << v)
        adj = list(g.adj)
        for u, v in inst.forbid:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        if not is_connected(Graph._trusted(g.n, tuple(adj)), alive):
            return False, None
    p = solver.has_factor(g, c, PathKind(inst.kind))
    if p is None:
        return False, None
    p.validate(g, c, factor=True)
    if inst.kind == PathKind.ALL_TRIANGLE.value and not all(q.induces_triangle(g) for q in p.paths):
        raise AssertionError("solver returned a non-triangle path in ALL_TRIANGLE mode")
    if inst.kind == PathKind.NO_TRIANGLE.value and any(q.induces_triangle(g) for q in p.paths):
        raise AssertionError("solver returned a triangle path in NO_TRIANGLE mode")
    return True, p


class _Failed(Exception):
    def __init__(self, instances: list[Instance], need: int, note: str) -> None:
        super().__init__(note)
        self.instances = instances
        self.need = need
        self.note = note


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    graph_id: str
    graph6: str
    outcome: Outcome
    reason: str = ""
    instances: int = 0
    sampled: bool = False
    certificate: dict | None = None
    nodes: int = 0
    seconds: float = 0.0

    def record(self, timing: bool = False) -> dict:
        d = {
            "theorem": self.theorem,
            "graph": self.graph_id,
            "graph6": self.graph6,
            "outcome": self.outcome.value,
            "instances": self.instances,
            "nodes": self.nodes,
        }
        if self.reason:
            d["reason"] = self.reason
        if self.sampled:
            d["sampled"] = True
        if self.certificate is not None:
            d["certificate"] = self.certificate
        if timing:
            d["seconds"] = round(self.seconds, 6)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.record(timing), sort_keys=True, separators=(",", ":"))


def replay(verdict: TheoremVerdict | dict) -> bool:
    """Re-run a COUNTEREXAMPLE's instances from scratch; True iff the failure reproduces."""
    rec = verdict.record() if isinstance(verdict, TheoremVerdict) else verdict
    cert = rec["certificate"]
    g = parse_graph6(rec["graph6"])
    solver = Solver()
    hits = 0
    for d in cert["instances"]:
        inst = Instance.from_dict(d)
        ok, _ = evaluate(g, inst, solver)
        hits += ok == inst.expect
    return hits < cert["need"]


# -- per-graph facts ------------------------------------------------------


class Facts:
    """Lazily computed structure of one graph, shared by all theorem checks."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._kappa: dict[int, bool] = {}

    def connected_at_least(self, k: int) -> bool:
        if k not in self._kappa:
            self._kappa[k] = is_k_connected(self.g, k)
        return self._kappa[k]

    @cached_property
    def claw_free(self) -> bool:
        return is_claw_free(self.g)

    @cached_property
    def cubic(self) -> bool:
        return is_cubic(self.g)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def eb(self) -> int:
        return block_decomposition(self.g).eb

    @cached_property
    def one_triangle_each(self) -> bool:
        return all(c == 1 for c in triangle_profile(self.g).vertex_count)

    @cached_property
    def blowup(self):
        return recognize_blowup(self.g)

    @cached_property
    def class_a(self) -> bool:
        return self.g.n > 0 and is_class_A(self.g)


# -- checking context -----------------------------------------------------


@dataclass
class CheckConfig:
    budget: int | None = None
    exhaustive_limit: int = 15
    sample_size: int = 64
    seed: int = 0


class Context:
    def __init__(self, theorem: str, g: Graph, facts: Facts, cfg: CheckConfig) -> None:
        self.theorem = theorem
        self.g = g
        self.facts = facts
        self.cfg = cfg
        self.solver = Solver(cfg.budget)
        self.instances = 0
        self.validated = 0
        self.sampled = False
        self.witness: LambdaPacking | None = None

    def universe(self, items: Iterable) -> list:
        """All of ``items`` for small graphs, else a seeded sample."""
        items = list(items)
        if self.g.n <= self.cfg.exhaustive_limit or len(items) <= self.cfg.sample_size:
            return items
        self.sampled = True
        rng = random.Random(f"{self.cfg.seed}:{self.theorem}:{emit_graph6(self.g)}")
        picked = sorted(rng.sample(range(len(items)), self.cfg.sample_size))
        return [items[i] for i in picked]

    def claim(self, insts: list[Instance], need: int | None = None, note: str = "") -> int:
        """Require at least ``need`` (default: all) instances to come out as predicted."""
        need = len(insts) if need is None else need
        hits = 0
        for inst in insts:
            ok, witness = evaluate(self.g, inst, self.solver)
            self.instances += 1
            if witness is not None:
                self.validated += 1
                if self.witness is None:
                    self.witness = witness
            if ok == inst.expect:
                hits += 1
                if hits >= need:
                    return hits
        raise _Failed(insts, need, note)

    def edges(self) -> list[Edge]:
        return self.g.edges()

    def vertices(self) -> list[int]:
        return list(range(self.g.n))


# -- theorems --------------------------------------------------------------


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    hypothesis: Callable[[Facts], str | None]
    check: Callable[[Context], None]


def _need(*conds: tuple[bool, str]) -> str | None:
    for ok, why in conds:
        if not ok:
            return why
    return None


def _mod3(f: Facts, r: int) -> tuple[bool, str]:
    return f.g.n % 3 == r, f"n mod 3 != {r}"


def _kappa(f: Facts, k: int) -> tuple[bool, str]:
    return f.connected_at_least(k), f"not {k}-connected"


def _clawfree(f: Facts) -> tuple[bool, str]:
    return f.claw_free, "not claw-free"


def _path_tuple(p: VertexPath3) -> tuple[int, int, int]:
    return (p.ends[0], p.center, p.ends[1])


def _hyp_blowup(f: Facts) -> str | None:
    m = f.blowup
    if m is None:
        return "not a triangle blow-up of a simple cubic graph"
    if not is_k_connected(m.base, 2):
        return "base graph not 2-connected"
    return None


def _check_t2_1(ctx: Context) -> None:
    m = ctx.facts.blowup
    g = ctx.g
    for l in ctx.universe(paths_in(g)):
        lt = _path_tuple(l)
        ctx.claim([Instance(delete=l.vertices)], note=f"G - {l} has no factor")
        for mode in applicable_modes(g, l):
            built = blowup_factor(m, l, mode)
            if not mode_holds(g, built, l, mode):
                raise ConstructionError(f"mode {mode.value} construction for {l} is not valid")
            ctx.validated += 1
        if l.induces_triangle(g):
            ctx.claim([Instance(path=lt, kind=PathKind.ALL_TRIANGLE.value)], note=f"no all-triangle factor through {l}")
        else:
            ctx.claim([Instance(path=lt, kind=PathKind.NO_TRIANGLE.value)], note=f"no triangle-free factor through {l}")
            others = [t for t in m.triangles if not set(t) & set(l.vertices)]
            ctx.claim([Instance(path=lt, delete=t) for t in others], need=1, note=f"no factor through {l} with a triangle component")


def _check_t2_2(ctx: Context) -> None:
    g = ctx.g
    for x in ctx.universe(ctx.vertices()):
        cands = [Instance(delete=(x, z), connected=True) for z in g.neighbors(x)]
        ctx.claim(cands, need=2, note=f"fewer than two good edges at {x}")


def _check_t2_3(ctx: Context) -> None:
    for x, y in ctx.universe(ctx.edges()):
        ctx.claim([Instance(delete=(x, y))], note=f"G - {{{x},{y}}} has no factor")


def _check_t2_4(ctx: Context) -> None:
    g = ctx.g
    ordered = [(x, y) for u, v in ctx.edges() for x, y in ((u, v), (v, u))]
    for x, y in ctx.universe(ordered):
        cands = [Instance(delete=(x, y, w), connected=True) for w in g.neighbors(y) if w != x]
        ctx.claim(cands, need=2, note=f"fewer than two good paths {x}-{y}-*")


def _check_t2_5(ctx: Context) -> None:
    g = ctx.g
    for l in ctx.universe(p for p in paths_in(g) if g.degree(p.center) == 3):
        ctx.claim([Instance(delete=l.vertices, connected=True)], note=f"G - {l} fails")


def _check_t2_6(ctx: Context) -> None:
    for l in ctx.universe(paths_in(ctx.g)):
        ctx.claim([Instance(delete=l.vertices, connected=True)], note=f"G - {l} fails")


def _check_t2_7(ctx: Context) -> None:
    for e in ctx.universe(ctx.edges()):
        ctx.claim([Instance(edge=e)], note=f"no factor containing {e}")
        ctx.claim([Instance(forbid=(e,))], note=f"no factor avoiding {e}")


def _check_t2_8(ctx: Context) -> None:
    for e in ctx.universe(ctx.edges()):
        ctx.claim([Instance(forbid=(e,))], note=f"G - {e} has no factor")


def _check_t2_9(ctx: Context) -> None:
    ctx.claim([Instance(expect=False)], note="class-A graph has a factor")


def _is_claw_or_triangle(triple: tuple[Edge, ...]) -> bool:
    common = set(triple[0]) & set(triple[1]) & set(triple[2])
    verts = {x for e in triple for x in e}
    return bool(common) or len(verts) == 3


def _check_t2_10(ctx: Context) -> None:
    g = ctx.g
    for triple in ctx.universe(itertools.combinations(ctx.edges(), 3)):
        cls = classify_edge_triple(g, triple)
        blocked = cls is not EdgeTripleClass.NONE
        ctx.claim([Instance(forbid=triple, expect=not blocked)], note=f"{list(triple)} classified {cls.value}")


def _check_t2_11(ctx: Context) -> None:
    for pair in ctx.universe(itertools.combinations(ctx.edges(), 2)):
        ctx.claim([Instance(forbid=pair)], note=f"G - {list(pair)} has no factor")


def _check_t2_12(ctx: Context) -> None:
    for triple in ctx.universe(itertools.combinations(ctx.edges(), 3)):
        bad = _is_claw_or_triangle(triple)
        ctx.claim([Instance(forbid=triple, expect=not bad)], note=f"{list(triple)} claw/triangle={bad}")


def _check_t2_13(ctx: Context) -> None:
    for x in ctx.universe(ctx.vertices()):
        ctx.claim([Instance(delete=(x,))], note=f"G - {x} has no factor")


def _check_t2_14(ctx: Context) -> None:
    pairs = [(x, e) for x in ctx.vertices() for e in ctx.edges()]
    for x, e in ctx.universe(pairs):
        ctx.claim([Instance(delete=(x,), forbid=(e,))], note=f"G - {{{x},{e}}} has no factor")


def _check_b1_1(ctx: Context) -> None:
    ctx.claim([Instance(min_size=ceil(ctx.g.n / 4))], note="lambda below n/4")


def _check_b1_9(ctx: Context) -> None:
    ctx.claim([Instance(min_size=ctx.g.n // 3)], note="lambda below floor(n/3)")


def _check_b1_10(ctx: Context) -> None:
    eb = ctx.facts.eb
    ctx.claim([Instance(min_size=(ctx.g.n - eb + 2) // 3)], note=f"lambda below floor((n - {eb} + 2)/3)")


THEOREMS: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem(
            "T2_1",
            "blow-up of a cubic 2-connected graph: G - L has a factor, and L extends to factors of each triangle shape",
            _hyp_blowup,
            _check_t2_1,
        ),
        Theorem(
            "T2_2",
            "2-connected claw-free, n = 2 mod 3: every x has two edges xz with G - {x,z} connected and factorable",
            lambda f: _need(_kappa(f, 2), _clawfree(f), _mod3(f, 2)),
            _check_t2_2,
        ),
        Theorem(
            "T2_3",
            "3-connected claw-free, n = 2 mod 3: G - {x,y} has a factor for every edge xy",
            lambda f: _need(_kappa(f, 3), _clawfree(f), _mod3(f, 2)),
            _check_t2_3,
        ),
        Theorem(
            "T2_4",
            "3-connected claw-free, n = 0 mod 3: two paths x-y-w with G - L connected and factorable",
            lambda f: _need(_kappa(f, 3), _clawfree(f), _mod3(f, 0)),
            _check_t2_4,
        ),
        Theorem(
            "T2_5",
            "3-connected claw-free, n = 0 mod 3: G - L connected and factorable when L's center has degree 3",
            lambda f: _need(_kappa(f, 3), _clawfree(f), _mod3(f, 0)),
            _check_t2_5,
        ),
        Theorem(
            "T2_6",
            "4-connected claw-free, n = 0 mod 3: G - L connected and factorable for every L",
            lambda f: _need(_kappa(f, 4), _clawfree(f), _mod3(f, 0)),
            _check_t2_6,
        ),
        Theorem(
            "T2_7",
            "3-connected claw-free, n = 0 mod 3: factors containing and avoiding every edge",
            lambda f: _need(_kappa(f, 3), _clawfree(f), _mod3(f, 0)),
            _check_t2_7,
        ),
        Theorem(
            "T2_8",
            "2-connected claw-free, n = 0 mod 3: G - e has a factor",
            lambda f: _need(_kappa(f, 2), _clawfree(f), _mod3(f, 0)),
            _check_t2_8,
        ),
        Theorem(
            "T2_9",
            "class A graphs have no factor",
            lambda f: _need((f.class_a, "not in class A")),
            _check_t2_9,
        ),
        Theorem(
            "T2_10",
            "cubic 2-connected, one triangle per vertex: G - E unfactorable iff E is a claw, a triangle or a cut pattern",
            lambda f: _need((f.cubic, "not cubic"), _kappa(f, 2), (f.one_triangle_each, "vertex not in exactly one triangle")),
            _check_t2_10,
        ),
        Theorem(
            "T2_11",
            "cubic 2-connected, one triangle per vertex: G - E has a factor for |E| = 2",
            lambda f: _need((f.cubic, "not cubic"), _kappa(f, 2), (f.one_triangle_each, "vertex not in exactly one triangle")),
            _check_t2_11,
        ),
        Theorem(
            "T2_12",
            "cubic 3-connected claw-free, n >= 6: G - E factorable iff E is not a claw or triangle",
            lambda f: _need((f.cubic, "not cubic"), _kappa(f, 3), _clawfree(f), (f.g.n >= 6, "n < 6")),
            _check_t2_12,
        ),
        Theorem(
            "T2_13",
            "2-connected claw-free, n = 1 mod 3: G - x has a factor",
            lambda f: _need(_kappa(f, 2), _clawfree(f), _mod3(f, 1)),
            _check_t2_13,
        ),
        Theorem(
            "T2_14",
            "3-connected claw-free, n = 1 mod 3: G - {x, e} has a factor",
            lambda f: _need(_kappa(f, 3), _clawfree(f), _mod3(f, 1)),
            _check_t2_14,
        ),
        Theorem(
            "B1_1",
            "cubic: lambda >= ceil(n/4)",
            lambda f: _need((f.cubic and f.g.n > 0, "not cubic")),
            _check_b1_1,
        ),
        Theorem(
            "B1_9",
            "claw-free, 2-connected or connected with two end-blocks: lambda = floor(n/3)",
            lambda f: _need(
                _clawfree(f),
                (f.connected_at_least(2) or (f.connected and f.eb == 2), "neither 2-connected nor eb = 2"),
            ),
            _check_b1_9,
        ),
        Theorem(
            "B1_10",
            "connected claw-free with eb >= 2: lambda >= floor((n - eb + 2)/3)",
            lambda f: _need((f.connected, "not connected"), _clawfree(f), (f.eb >= 2, "eb < 2")),
            _check_b1_10,
        ),
    ]
}

ALIASES = {"T2_1a": "T2_1"}


def resolve_theorems(ids: Iterable[str] | None) -> list[str]:
    if not ids:
        return list(THEOREMS)
    out = []
    for raw in ids:
        for t in raw.split(","):
            t = ALIASES.get(t.strip(), t.strip())
            if t == "all":
                out.extend(THEOREMS)
            elif t not in THEOREMS:
                raise KeyError(f"unknown theorem id {t!r}")
            else:
                out.append(t)
    return list(dict.fromkeys(out))


def check_theorem(
    theorem_id: str,
    g: Graph,
    graph_id: str = "",
    cfg: CheckConfig | None = None,
    facts: Facts | None = None,
) -> TheoremVerdict:
    theorem_id = ALIASES.get(theorem_id, theorem_id)
    thm = THEOREMS[theorem_id]
    cfg = cfg or CheckConfig()
    facts = facts or Facts(g)
    g6 = emit_graph6(g)
    start = time.perf_counter()
    why = thm.hypothesis(facts)
    if why is not None:
        return TheoremVerdict(theorem_id, graph_id, g6, Outcome.NOT_APPLICABLE, reason=why)
    ctx = Context(theorem_id, g, facts, cfg)
    try:
        thm.check(ctx)
    except ResourceExhausted as exc:
        return TheoremVerdict(
            theorem_id, graph_id, g6, Outcome.RESOURCE_EXHAUSTED, reason=str(exc),
            instances=ctx.instances, sampled=ctx.sampled, nodes=ctx.solver.nodes,
            seconds=time.perf_counter() - start,
        )
    except _Failed as fail:
        cert = {"instances": [i.to_dict() for i in fail.instances], "need": fail.need}
        return TheoremVerdict(
            theorem_id, graph_id, g6, Outcome.COUNTEREXAMPLE, reason=fail.note,
            instances=ctx.instances, sampled=ctx.sampled, certificate=cert, nodes=ctx.solver.nodes,
            seconds=time.perf_counter() - start,
        )
    cert = {"validated": ctx.validated}
    if ctx.witness is not None:
        cert["witness"] = str(ctx.witness)
    return TheoremVerdict(
        theorem_id, graph_id, g6, Outcome.HOLDS, instances=ctx.instances, sampled=ctx.sampled,
        certificate=cert, nodes=ctx.solver.nodes, seconds=time.perf_counter() - start,
    )


# -- sweeps ----------------------------------------------------------------


@dataclass
class Filters:
    min_connectivity: int = 0
    claw_free: bool = False
    cubic: bool = False
    connected: bool = False
    n_mod3: int | None = None
    min_n: int = 0
    max_n: int | None = None

    def accept(self, f: Facts) -> bool:
        g = f.g
        if g.n < self.min_n or (self.max_n is not None and g.n > self.max_n):
            return False
        if self.n_mod3 is not None and g.n % 3 != self.n_mod3:
            return False
        if self.cubic and not f.cubic:
            return False
        if self.claw_free and not f.claw_free:
            return False
        if self.connected and not f.connected:
            return False
        if self.min_connectivity and not f.connected_at_least(self.min_connectivity):
            return False
        return True

    @classmethod
    def parse(cls, tokens: Iterable[str]) -> Filters:
        """Tokens like ``claw-free``, ``cubic``, ``connected``, ``kappa>=3``, ``nmod3=0``, ``n<=11``, ``n>=6``."""
        f = cls()
        for raw in tokens:
            for tok in raw.split(","):
                tok = tok.strip().replace(" ", "")
                if not tok:
                    continue
                if tok in ("claw-free", "clawfree"):
                    f.claw_free = True
                elif tok == "cubic":
                    f.cubic = True
                elif tok == "connected":
                    f.connected = True
                elif tok.startswith("kappa>="):
                    f.min_connectivity = int(tok[7:])
                elif tok.startswith("nmod3="):
                    f.n_mod3 = int(tok[6:])
                elif tok.startswith("n<="):
                    f.max_n = int(tok[3:])
                elif tok.startswith("n>="):
                    f.min_n = int(tok[3:])
                else:
                    raise ValueError(f"unknown filter {tok!r}")
        if f.n_mod3 is not None and f.n_mod3 not in (0, 1, 2):
            raise ValueError("nmod3 must be 0, 1 or 2")
        return f


@dataclass
class SweepConfig:
    theorems: list[str] = field(default_factory=lambda: list(THEOREMS))
    filters: Filters = field(default_factory=Filters)
    check: CheckConfig = field(default_factory=CheckConfig)
    jobs: int = 1
    timing: bool = False

    def __post_init__(self) -> None:
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        if self.check.budget is not None and self.check.budget <= 0:
            raise ValueError("budget must be positive")


@dataclass
class Summary:
    graphs: int = 0
    accepted: int = 0
    malformed: int = 0
    errors: int = 0
    counts: dict[str, int] = field(default_factory=lambda: {o.value: 0 for o in Outcome})

    def add(self, rec: dict) -> None:
        if "error" in rec:
            if rec.get("kind") == "malformed":
                self.malformed += 1
            else:
                self.errors += 1
            return
        self.counts[rec["outcome"]] += 1

    @property
    def counterexamples(self) -> int:
        return self.counts[Outcome.COUNTEREXAMPLE.value]

    def render(self) -> str:
        parts = [f"graphs={self.graphs}", f"accepted={self.accepted}"]
        parts += [f"{k}={v}" for k, v in self.counts.items()]
        parts += [f"malformed={self.malformed}", f"errors={self.errors}"]
        return " ".join(parts)


def _work(args: tuple[Record, SweepConfig]) -> tuple[bool, list[dict]]:
    rec, cfg = args
    try:
        g = parse_graph6(rec.line)
    except GraphError as exc:
        return False, [{"error": str(exc), "graph": rec.graph_id, "kind": "malformed", "line": rec.lineno}]
    facts = Facts(g)
    if not cfg.filters.accept(facts):
        return False, []
    out = []
    for tid in cfg.theorems:
        try:
            v = check_theorem(tid, g, rec.graph_id, cfg.check, facts)
        except ConstructionError as exc:
            out.append({"error": str(exc), "graph": rec.graph_id, "kind": "construction", "theorem": tid})
            continue
        out.append(v.record(cfg.timing))
    return True, out


def sweep(records: Iterable[Record], cfg: SweepConfig) -> Iterator[tuple[dict, Summary]]:
    """Yield ``(record, running summary)`` in corpus order, whatever the worker count."""
    summary = Summary()
    tasks = ((r, cfg) for r in records)
    if cfg.jobs == 1:
        results: Iterable = map(_work, tasks)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=cfg.jobs)
        results = pool.map(_work, tasks, chunksize=16)
    try:
        for accepted, recs in results:
            summary.graphs += 1
            summary.accepted += accepted
            for rec in recs:
                summary.add(rec)
                yield rec, summary
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def run_sweep(records: Iterable[Record], cfg: SweepConfig) -> tuple[list[dict], Summary]:
    out = []
    summary = Summary()
    for rec, summary in sweep(records, cfg):
        out.append(rec)
    return out, summary


def dumps(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))
