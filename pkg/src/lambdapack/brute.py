"""Exhaustive reference for maximum Lambda-packings on tiny graphs.

Deliberately naive: list every 3-vertex path once, then walk every family
of pairwise disjoint paths.  It shares no pruning with the solver and
exists to cross-check it.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, VertexPath3
from .solver import ConstraintError, LambdaPacking, NO_CONSTRAINTS, PackingConstraints

MAX_N = 12


def _all_paths(g: Graph, c: PackingConstraints) -> list[tuple[int, int, int]]:
    live = [v for v in range(g.n) if v not in c.deleted_vertices]
    usable = {
        frozenset((u, v))
        for u, v in combinations(live, 2)
        if g.adj[u] >> v & 1 and (min(u, v), max(u, v)) not in c.forbidden_edges
    }
    out = []
    for center in live:
        for a, b in combinations(live, 2):
            if center in (a, b):
                continue
            if frozenset((center, a)) in usable and frozenset((center, b)) in usable:
                out.append((center, a, b))
    return out


def _satisfies(family: list[tuple[int, int, int]], c: PackingConstraints) -> bool:
    if c.required_path is not None:
        p = c.required_path
        if (p.center, *p.ends) not in family:
            return False
    if c.required_edge is not None:
        u, v = c.required_edge
        hit = any(
            (center == u and v in (a, b)) or (center == v and u in (a, b)) for center, a, b in family
        )
        if not hit:
            return False
    return True


def brute_force_max_packing(g: Graph, c: PackingConstraints = NO_CONSTRAINTS) -> LambdaPacking:
    if g.n > MAX_N:
        raise ValueError(f"brute force is limited to n <= {MAX_N}, got {g.n}")
    c.check(g)
    paths = _all_paths(g, c)
    best: list[tuple[int, int, int]] | None = None
    chosen: list[tuple[int, int, int]] = []
    used: set[int] = set()

    def walk(start: int) -> None:
        nonlocal best
        if _satisfies(chosen, c) and (best is None or len(chosen) > len(best)):
            best = list(chosen)
        for i in range(start, len(paths)):
            p = paths[i]
            if used.isdisjoint(p):
                chosen.append(p)
                used.update(p)
                walk(i + 1)
                chosen.pop()
                used.difference_update(p)

    walk(0)
    if best is None:
        raise ConstraintError("no packing satisfies the required path/edge")
    return LambdaPacking(tuple(VertexPath3(center, (a, b)) for center, a, b in best))
