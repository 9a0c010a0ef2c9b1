"""Exact maximum Lambda-packing and constrained Lambda-factor search.

The search branches on the lowest uncovered vertex ``v``: every 3-vertex
path through ``v`` (as center or as an end) in the surviving graph, and,
when maximising, leaving ``v`` uncovered.  Surviving vertex sets that fall
apart are solved component by component.  In factor mode a component
whose order is not divisible by three is a dead end, and dead ends are
memoised by vertex mask.

Ties are broken by path order ``(center, ends)``: the first optimum found
is kept, so results are deterministic.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Edge, Graph, GraphError, VertexPath3, bits, norm_edge

BUDGET_ENV = "LAMBDAPACK_BUDGET"


class ConstraintError(ValueError):
    """The constraints are inconsistent with each other or with the graph."""


class InvalidPacking(ValueError):
    pass


class ResourceExhausted(RuntimeError):
    """The node budget ran out before the search was decided."""

    def __init__(self, nodes: int) -> None:
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes


class PathKind(enum.Enum):
    ANY = "any"
    ALL_TRIANGLE = "all_triangle"
    NO_TRIANGLE = "no_triangle"


@dataclass(frozen=True)
class PackingConstraints:
    required_path: VertexPath3 | None = None
    required_edge: Edge | None = None
    forbidden_edges: frozenset[Edge] = frozenset()
    deleted_vertices: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "forbidden_edges", frozenset(norm_edge(*e) for e in self.forbidden_edges))
        object.__setattr__(self, "deleted_vertices", frozenset(self.deleted_vertices))
        if self.required_edge is not None:
            object.__setattr__(self, "required_edge", norm_edge(*self.required_edge))
        if self.required_edge is not None and self.required_path is not None:
            raise ConstraintError("required_edge and required_path are mutually exclusive")

    def check(self, g: Graph) -> None:
        for v in self.deleted_vertices:
            if not 0 <= v < g.n:
                raise ConstraintError(f"deleted vertex {v} out of range")
        for u, v in self.forbidden_edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.adj[u] >> v & 1:
                raise ConstraintError(f"forbidden edge {u},{v} is not an edge")
        if self.required_edge is not None:
            u, v = self.required_edge
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.adj[u] >> v & 1:
                raise ConstraintError(f"required edge {u},{v} is not an edge")
            if self.required_edge in self.forbidden_edges:
                raise ConstraintError(f"required edge {u},{v} is forbidden")
            if u in self.deleted_vertices or v in self.deleted_vertices:
                raise ConstraintError(f"required edge {u},{v} touches a deleted vertex")
        p = self.required_path
        if p is not None:
            if not p.is_valid_in(g):
                raise ConstraintError(f"required path {p} is not a path in the graph")
            if set(p.edges) & self.forbidden_edges:
                raise ConstraintError(f"required path {p} uses a forbidden edge")
            if set(p.vertices) & self.deleted_vertices:
                raise ConstraintError(f"required path {p} uses a deleted vertex")


NO_CONSTRAINTS = PackingConstraints()


@dataclass(frozen=True)
class LambdaPacking:
    paths: tuple[VertexPath3, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(sorted(self.paths)))

    @property
    def size(self) -> int:
        return len(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p.vertices)

    def validate(self, g: Graph, c: PackingConstraints = NO_CONSTRAINTS, *, factor: bool = False) -> None:
        """Raise :class:`InvalidPacking` unless this is a packing of ``g`` obeying ``c``."""
        seen: set[int] = set()
        for p in self.paths:
            if not p.is_valid_in(g):
                raise InvalidPacking(f"{p} is not a path in the graph")
            if seen & set(p.vertices):
                raise InvalidPacking(f"{p} overlaps another path")
            seen.update(p.vertices)
            if set(p.vertices) & c.deleted_vertices:
                raise InvalidPacking(f"{p} uses a deleted vertex")
            if set(p.edges) & c.forbidden_edges:
                raise InvalidPacking(f"{p} uses a forbidden edge")
        if self.size > g.n // 3:
            raise InvalidPacking("more than n/3 paths")
        if c.required_path is not None and c.required_path not in self.paths:
            raise InvalidPacking(f"required path {c.required_path} missing")
        if c.required_edge is not None and not any(c.required_edge in p.edges for p in self.paths):
            raise InvalidPacking(f"required edge {c.required_edge} not covered by a path")
        if factor and len(seen) != g.n - len(c.deleted_vertices):
            raise InvalidPacking("not a factor: some surviving vertex is uncovered")

    def is_factor_of(self, g: Graph, c: PackingConstraints = NO_CONSTRAINTS) -> bool:
        try:
            self.validate(g, c, factor=True)
        except InvalidPacking:
            return False
        return True

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.paths)


def default_budget() -> int | None:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else None


@dataclass
class Solver:
    """One exact search engine; counts nodes and enforces an optional budget.

    Node counts accumulate over calls so a caller can budget a whole
    theorem check with one instance.
    """

    budget: int | None = None
    nodes: int = 0

    # -- public API ----------------------------------------------------

    def max_packing(self, g: Graph, c: PackingConstraints = NO_CONSTRAINTS) -> LambdaPacking:
        c.check(g)
        s = _Search(self, g, c, PathKind.ANY)
        return LambdaPacking(tuple(s.run_max()))

    def has_factor(
        self, g: Graph, c: PackingConstraints = NO_CONSTRAINTS, kind: PathKind = PathKind.ANY
    ) -> LambdaPacking | None:
        c.check(g)
        alive = g.n - len(c.deleted_vertices)
        if alive % 3:
            return None
        s = _Search(self, g, c, kind)
        found = s.run_factor()
        return None if found is None else LambdaPacking(tuple(found))

    def factor_respecting_triangles(self, g: Graph, mode: PathKind) -> LambdaPacking | None:
        if mode is PathKind.ANY:
            raise ValueError("mode must be ALL_TRIANGLE or NO_TRIANGLE")
        return self.has_factor(g, NO_CONSTRAINTS, mode)

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise ResourceExhausted(self.budget)


class _Search:
    # Paths are plain tuples ``(center, lo, hi, mask)`` inside the search;
    # tuple order is the (center, ends) tie-break order.

    def __init__(self, solver: Solver, g: Graph, c: PackingConstraints, kind: PathKind) -> None:
        self.solver = solver
        self.g = g
        self.c = c
        self.kind = kind
        adj = list(g.adj)
        for u, v in c.forbidden_edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        self.adj = adj
        dead = 0
        for v in c.deleted_vertices:
            dead |= 1 << v
        self.alive = g.full_mask & ~dead
        self.failed: set[int] = set()
        self.best: dict[int, list] = {}

    def _allowed(self, p: tuple) -> bool:
        if self.kind is PathKind.ANY:
            return True
        tri = bool(self.g.adj[p[1]] >> p[2] & 1)
        return tri if self.kind is PathKind.ALL_TRIANGLE else not tri

    def paths_through(self, v: int, rem: int) -> Iterable[tuple]:
        """Paths through ``v`` inside ``rem``, in tie-break order."""
        out = _enumerate_through(self.adj, v, rem)
        if self.kind is not PathKind.ANY:
            return filter(self._allowed, out)
        return out

    def paths_with_edge(self, e: Edge, rem: int) -> list[tuple]:
        u, v = e
        adj = self.adj
        out = []
        for c, o in ((u, v), (v, u)):
            for w in bits(adj[c] & rem & ~(1 << o)):
                lo, hi = (o, w) if o < w else (w, o)
                out.append((c, lo, hi, (1 << c) | (1 << o) | (1 << w)))
        if self.kind is not PathKind.ANY:
            out = [p for p in out if self._allowed(p)]
        out.sort()
        return out

    def _first_moves(self) -> list[tuple]:
        """Forced opening moves from the constraints; ``[()]`` when unconstrained."""
        if self.c.required_path is not None:
            p = self.c.required_path
            t = (p.center, p.ends[0], p.ends[1], p.mask)
            return [(t,)] if self._allowed(t) else []
        if self.c.required_edge is not None:
            return [(p,) for p in self.paths_with_edge(self.c.required_edge, self.alive)]
        return [()]

    # -- factor mode ---------------------------------------------------

    def run_factor(self) -> list[VertexPath3] | None:
        for opening in self._first_moves():
            rem = self.alive
            for p in opening:
                rem &= ~p[3]
            rest = self.factor(rem)
            if rest is not None:
                return _to_paths(list(opening) + rest)
        return None

    def factor(self, rem: int) -> list | None:
        if not rem:
            return []
        if rem in self.failed:
            return None
        self.solver.tick()
        comps = _components(self.adj, rem)
        for comp in comps:
            if comp.bit_count() % 3:
                self.failed.add(rem)
                return None
        if len(comps) > 1:
            out: list = []
            for comp in comps:
                part = self.factor(comp)
                if part is None:
                    self.failed.add(rem)
                    return None
                out.extend(part)
            return out
        v = (rem & -rem).bit_length() - 1
        for p in self.paths_through(v, rem):
            rest = self.factor(rem & ~p[3])
            if rest is not None:
                rest.append(p)
                return rest
        self.failed.add(rem)
        return None

    # -- maximisation --------------------------------------------------

    def run_max(self) -> list[VertexPath3]:
        best: list | None = None
        for opening in self._first_moves():
            rem = self.alive
            for p in opening:
                rem &= ~p[3]
            cand = list(opening) + self.maximum(rem)
            if best is None or len(cand) > len(best):
                best = cand
            if len(best) == self.alive.bit_count() // 3:
                break
        if best is None:
            raise ConstraintError("no packing satisfies the required path/edge")
        return _to_paths(best)

    def maximum(self, rem: int) -> list:
        k = rem.bit_count()
        if k < 3:
            return []
        hit = self.best.get(rem)
        if hit is not None:
            return hit
        self.solver.tick()
        comps = _components(self.adj, rem)
        if len(comps) > 1:
            out: list = []
            for comp in comps:
                out.extend(self.maximum(comp))
            self.best[rem] = out
            return out
        upper = k // 3
        v = (rem & -rem).bit_length() - 1
        best: list | None = None
        for p in self.paths_through(v, rem):
            sub = self.maximum(rem & ~p[3])
            if best is None or len(sub) + 1 > len(best):
                best = [p] + sub
                if len(best) == upper:
                    break
        if best is None or (k - 1) // 3 > len(best):
            cand = self.maximum(rem & ~(1 << v))
            if best is None or len(cand) > len(best):
                best = cand
        self.best[rem] = best
        return best


def _enumerate_through(adj, v: int, rem: int) -> Iterator[tuple]:
    """Every path through ``v`` inside ``rem``, lazily, in (center, lo, hi) order."""
    vbit = 1 << v
    nb = adj[v] & rem
    centers = nb | vbit
    while centers:
        cbit = centers & -centers
        centers ^= cbit
        if cbit == vbit:
            x = nb
            while x:
                abit = x & -x
                x ^= abit
                a = abit.bit_length() - 1
                y = x
                while y:
                    bbit = y & -y
                    y ^= bbit
                    yield (v, a, bbit.bit_length() - 1, vbit | abit | bbit)
        else:
            c = cbit.bit_length() - 1
            y = adj[c] & rem & ~vbit
            while y:
                wbit = y & -y
                y ^= wbit
                w = wbit.bit_length() - 1
                yield (c, v, w, vbit | cbit | wbit) if v < w else (c, w, v, vbit | cbit | wbit)


def _to_paths(raw: list) -> list[VertexPath3]:
    return [VertexPath3(c, (a, b)) for c, a, b, _ in raw]


def _components(adj: list[int], rem: int) -> list[int]:
    out = []
    while rem:
        frontier = rem & -rem
        comp = frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & rem & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rem &= ~comp
    return out


def max_packing(g: Graph, c: PackingConstraints = NO_CONSTRAINTS, budget: int | None = None) -> LambdaPacking:
    return Solver(budget if budget is not None else default_budget()).max_packing(g, c)


def has_factor(
    g: Graph,
    c: PackingConstraints = NO_CONSTRAINTS,
    kind: PathKind = PathKind.ANY,
    budget: int | None = None,
) -> LambdaPacking | None:
    return Solver(budget if budget is not None else default_budget()).has_factor(g, c, kind)


def factor_respecting_triangles(g: Graph, mode: PathKind, budget: int | None = None) -> LambdaPacking | None:
    return Solver(budget if budget is not None else default_budget()).factor_respecting_triangles(g, mode)


def lambda_number(g: Graph, budget: int | None = None) -> int:
    return max_packing(g, budget=budget).size


def constraints(
    *,
    require_path: VertexPath3 | None = None,
    require_edge: Edge | None = None,
    forbid: Iterable[Edge] = (),
    delete: Iterable[int] = (),
) -> PackingConstraints:
    return PackingConstraints(require_path, require_edge, frozenset(forbid), frozenset(delete))


__all__ = [
    "ConstraintError",
    "GraphError",
    "InvalidPacking",
    "LambdaPacking",
    "PackingConstraints",
    "PathKind",
    "ResourceExhausted",
    "Solver",
    "constraints",
    "factor_respecting_triangles",
    "has_factor",
    "lambda_number",
    "max_packing",
]
