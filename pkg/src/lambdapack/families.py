"""Generators and recognisers for the small obstruction families.

* the net: a triangle with one pendant leaf on each corner;
* class A: connected, max degree 3, every vertex of degree 2 or 3 in
  exactly one triangle, exactly three leaves (none has a Lambda-factor);
* H: the net joined to a disjoint triangle ``t1 t2 t3`` by all edges
  ``v_i t_j`` with ``i != j``;
* R and Q: two cycles joined through one apex ``z`` (R) or through an
  adjacent apex pair ``z1 z2`` (Q).

Generators return the distinguished vertices/edges the constructions name.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .constructive import triangle_blowup
from .graph import Edge, Graph, is_connected
from .structure import triangle_profile


class Family(enum.Enum):
    NET = "net"
    CLASS_A = "classA"
    H_GRAPH = "H"
    R_GRAPH = "R"
    Q_GRAPH = "Q"
    BLOWUP = "blowup"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: dict[str, int] = field(default_factory=dict)


NET_EDGES = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]


def gen_net() -> Graph:
    """Triangle ``0 1 2`` with leaves ``3, 4, 5`` hanging off ``0, 1, 2``."""
    return Graph.from_edges(6, NET_EDGES)


def _class_a_edges(steps: int) -> tuple[int, list[Edge], list[int]]:
    edges = list(NET_EDGES)
    leaves = [3, 4, 5]
    n = 6
    for step in range(steps):
        slot = step % 3
        v = leaves[slot]
        # v keeps its edge to its parent and becomes corner v1 of a new triangle
        v2, v3, leaf = n, n + 1, n + 2
        edges += [(v, v2), (v, v3), (v2, v3), (v2, leaf)]
        leaves[slot] = leaf
        n += 3
    return n, edges, leaves


def gen_class_A(steps: int) -> Graph:
    """A member of class A on ``6 + 3*steps`` vertices grown from the net.

    Each step replaces a leaf ``v`` (round-robin over the three branches)
    by a triangle ``v v2 v3`` and hangs a fresh leaf on ``v2``.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    n, edges, _ = _class_a_edges(steps)
    g = Graph.from_edges(n, edges)
    if not is_class_A(g):
        raise AssertionError("class-A generator produced a non-member")
    return g


def class_A_leaves(steps: int) -> list[int]:
    return _class_a_edges(steps)[2]


def is_class_A(g: Graph) -> bool:
    if not is_connected(g):
        return False
    deg = g.degrees()
    if max(deg) > 3 or deg.count(1) != 3:
        return False
    prof = triangle_profile(g)
    return all(prof.vertex_count[v] == 1 for v in range(g.n) if deg[v] >= 2)


def _join_triangle(core_n: int, core_edges: list[Edge], leaves: list[int]) -> tuple[Graph, tuple[int, int, int]]:
    t = (core_n, core_n + 1, core_n + 2)
    edges = list(core_edges) + [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
    for i, v in enumerate(leaves):
        for j, tj in enumerate(t):
            if i != j:
                edges.append((v, tj))
    return Graph.from_edges(core_n + 3, edges), t


def gen_H() -> tuple[Graph, tuple[int, int, int]]:
    """The 9-vertex graph H and its triangle ``T = (6, 7, 8)``; net leaves are ``3, 4, 5``."""
    return _join_triangle(6, NET_EDGES, [3, 4, 5])


def gen_H_extended(steps: int) -> tuple[Graph, tuple[int, int, int]]:
    """H with the net replaced by ``gen_class_A(steps)``."""
    n, edges, leaves = _class_a_edges(steps)
    return _join_triangle(n, edges, leaves)


def _two_cycles(la: int, lb: int) -> list[Edge]:
    if la < 3 or lb < 3:
        raise ValueError("cycle lengths must be at least 3")
    edges = [(i, (i + 1) % la) for i in range(la)]
    edges += [(la + i, la + (i + 1) % lb) for i in range(lb)]
    return edges


def gen_R(la: int, lb: int) -> tuple[Graph, Edge, Edge]:
    """Cycles ``0..la-1`` and ``la..la+lb-1`` plus apex ``z = la+lb`` on edges ``a``, ``b``.

    Returns ``(graph, a, b)`` with ``a = (0, 1)`` and ``b = (la, la+1)``.
    """
    edges = _two_cycles(la, lb)
    z = la + lb
    a, b = (0, 1), (la, la + 1)
    edges += [(a[0], z), (a[1], z), (b[0], z), (b[1], z)]
    return Graph.from_edges(la + lb + 1, edges), a, b


def gen_Q(la: int, lb: int) -> tuple[Graph, Edge]:
    """Cycles as in :func:`gen_R` plus adjacent apexes ``z1 = la+lb``, ``z2 = la+lb+1``.

    Both apexes see ``a1 a2 = 0 1`` and ``b1 b2 = la la+1``; returns ``(graph, (z1, z2))``.
    """
    edges = _two_cycles(la, lb)
    z1, z2 = la + lb, la + lb + 1
    for z in (z1, z2):
        edges += [(0, z), (1, z), (la, z), (la + 1, z)]
    edges.append((z1, z2))
    return Graph.from_edges(la + lb + 2, edges), (z1, z2)


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.adj[v].bit_count() == 1]


def generate(spec: FamilySpec, base: Graph | None = None) -> tuple[Graph, dict[str, int]]:
    """Build the graph a spec names, with its distinguished elements as labels."""
    p = spec.params
    fam = spec.family
    if fam is Family.NET:
        return gen_net(), {"v1": 3, "v2": 4, "v3": 5}
    if fam is Family.CLASS_A:
        steps = p.get("steps", 0)
        v1, v2, v3 = class_A_leaves(steps)
        return gen_class_A(steps), {"v1": v1, "v2": v2, "v3": v3}
    if fam is Family.H_GRAPH:
        steps = p.get("steps", 0)
        g, t = gen_H_extended(steps) if steps else gen_H()
        return g, {"t1": t[0], "t2": t[1], "t3": t[2]}
    if fam is Family.R_GRAPH:
        g, a, b = gen_R(p["la"], p["lb"])
        return g, {"a1": a[0], "a2": a[1], "b1": b[0], "b2": b[1], "z": g.n - 1}
    if fam is Family.Q_GRAPH:
        g, e = gen_Q(p["la"], p["lb"])
        la = p["la"]
        return g, {"a1": 0, "a2": 1, "b1": la, "b2": la + 1, "z1": e[0], "z2": e[1]}
    if fam is Family.BLOWUP:
        if base is None:
            raise ValueError("blowup needs a cubic base graph")
        return triangle_blowup(base).blown, {}
    raise ValueError(f"unknown family {fam}")
