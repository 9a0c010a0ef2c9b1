"""Structural predicates: claws, connectivity, blocks, triangles, degrees."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Edge, Graph, GraphError, bits, components, is_connected, norm_edge


class StructureError(ValueError):
    """The graph does not have the structure an operation requires."""


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def is_cubic(g: Graph) -> bool:
    return all(row.bit_count() == 3 for row in g.adj)


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """Return ``(center, a, b, c)`` for some induced claw, or None."""
    adj = g.adj
    for v in range(g.n):
        nb = adj[v]
        if nb.bit_count() < 3:
            continue
        for a in bits(nb):
            rest_a = nb & ~adj[a] & ~((2 << a) - 1)
            for b in bits(rest_a):
                rest_b = rest_a & ~adj[b] & ~((2 << b) - 1)
                if rest_b:
                    return (v, a, b, (rest_b & -rest_b).bit_length() - 1)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


# -- connectivity ----------------------------------------------------------


def _disconnects(g: Graph, removed: int) -> bool:
    alive = g.full_mask & ~removed
    return alive != 0 and not is_connected(g, alive)


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``vertex_connectivity(g) >= k``, by cut enumeration of size < k."""
    if k <= 0:
        return True
    if g.n < k + 1 or not is_connected(g):
        return False
    if g.m == g.n * (g.n - 1) // 2:
        return True
    for size in range(1, k):
        for cut in combinations(range(g.n), size):
            removed = 0
            for v in cut:
                removed |= 1 << v
            if _disconnects(g, removed):
                return False
    return True


def _local_connectivity(g: Graph, s: int, t: int, limit: int) -> int:
    """Number of internally disjoint s-t paths (s, t non-adjacent), capped at ``limit``.

    Unit-capacity max flow on the split graph: vertex v becomes v_in=2v,
    v_out=2v+1 joined by an arc of capacity 1.
    """
    cap: dict[tuple[int, int], int] = {}
    out: dict[int, list[int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out.setdefault(a, []).append(b)
            out.setdefault(b, []).append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = g.n + 1
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex-cut size; ``n-1`` for complete graphs, 0 if disconnected or n <= 1."""
    if g.n <= 1 or not is_connected(g):
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    best = min(g.degrees())
    # some vertex among any best+1 vertices lies outside a minimum cut
    for s in range(min(best + 1, g.n)):
        for t in range(g.n):
            if t == s or g.adj[s] >> t & 1:
                continue
            best = min(best, _local_connectivity(g, s, t, best))
    return best


# -- blocks ----------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    boundary: tuple[frozenset[int], ...]
    eb: int
    block_edges: tuple[tuple[Edge, ...], ...] = field(repr=False, default=())

    def end_blocks(self) -> list[int]:
        return [i for i, b in enumerate(self.boundary) if len(b) == 1]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks (2-connected pieces and bridges), cut vertices and end-block count.

    A component that is a single bridge counts as two end-blocks; a
    component that is one 2-connected block counts as none; isolated
    vertices form no block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[Edge] = []
    raw: list[list[Edge]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(bits(g.adj[root]))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(sorted(bits(g.adj[w])))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block = []
                while True:
                    e = edge_stack.pop()
                    block.append(norm_edge(*e))
                    if e == (parent, v):
                        break
                raw.append(block)

    vert_sets = [frozenset(x for e in b for x in e) for b in raw]
    order = sorted(range(len(raw)), key=lambda i: (min(vert_sets[i]), sorted(vert_sets[i])))
    blocks = tuple(vert_sets[i] for i in order)
    block_edges = tuple(tuple(sorted(raw[i])) for i in order)

    count = [0] * n
    for b in blocks:
        for v in b:
            count[v] += 1
    cuts = frozenset(v for v in range(n) if count[v] >= 2)
    boundary = tuple(frozenset(v for v in b if count[v] >= 2) for b in blocks)

    eb = sum(1 for bd in boundary if len(bd) == 1)
    for b, bd in zip(blocks, boundary):
        if not bd and len(b) == 2:
            eb += 2
    return BlockDecomposition(blocks, cuts, boundary, eb, block_edges)


def end_block_count(g: Graph) -> int:
    return block_decomposition(g).eb


# -- triangles -------------------------------------------------------------


@dataclass(frozen=True)
class TriangleProfile:
    triangles: tuple[tuple[int, int, int], ...]
    vertex_count: tuple[int, ...]
    edge_count: dict[Edge, int]

    def triangles_of(self, v: int) -> list[tuple[int, int, int]]:
        return [t for t in self.triangles if v in t]


def triangle_profile(g: Graph) -> TriangleProfile:
    tris = []
    adj = g.adj
    for a in range(g.n):
        above_a = adj[a] >> (a + 1) << (a + 1)
        for b in bits(above_a):
            for c in bits(above_a & adj[b] >> (b + 1) << (b + 1)):
                tris.append((a, b, c))
    vcount = [0] * g.n
    ecount = {e: 0 for e in g.edges()}
    for a, b, c in tris:
        for v in (a, b, c):
            vcount[v] += 1
        for e in ((a, b), (a, c), (b, c)):
            ecount[e] += 1
    return TriangleProfile(tuple(tris), tuple(vcount), ecount)


def every_vertex_in_one_triangle(g: Graph) -> bool:
    return all(c == 1 for c in triangle_profile(g).vertex_count)


# -- edge triples in triangle blow-ups --------------------------------------


class EdgeTripleClass(enum.Enum):
    E1_CLAW = "E1_CLAW"
    E2_TRIANGLE = "E2_TRIANGLE"
    E3 = "E3"
    E4 = "E4"
    NONE = "NONE"


def _edge_components(edges: list[Edge]) -> list[list[Edge]]:
    comps: list[list[Edge]] = []
    for e in edges:
        touching = [c for c in comps if any(set(e) & set(f) for f in c)]
        merged = [e]
        for c in touching:
            merged.extend(c)
            comps.remove(c)
        comps.append(merged)
    return comps


def classify_edge_triple(g: Graph, triple) -> EdgeTripleClass:
    """Classify three edges of a graph in which every vertex lies in exactly one triangle.

    The classes are the four obstructions to a Lambda-factor of ``g - E``
    (claw, triangle, and the two disconnection patterns) or NONE.
    """
    edges = [norm_edge(*e) for e in triple]
    if len(set(edges)) != 3:
        raise GraphError("need three distinct edges")
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"{u},{v} is not an edge")
    if not is_cubic(g):
        raise StructureError("edge-triple classification needs a cubic graph")
    prof = triangle_profile(g)
    bad = [v for v, c in enumerate(prof.vertex_count) if c != 1]
    if bad:
        raise StructureError(f"vertex {bad[0]} lies in {prof.vertex_count[bad[0]]} triangles, expected 1")
    tri_of = {}
    for t in prof.triangles:
        for v in t:
            tri_of[v] = t

    def triangle_containing(e: Edge):
        t = tri_of[e[0]]
        return t if e[1] in t else None

    shared = set(edges[0]) & set(edges[1]) & set(edges[2])
    if shared:
        return EdgeTripleClass.E1_CLAW
    verts = {x for e in edges for x in e}
    if len(verts) == 3:
        return EdgeTripleClass.E2_TRIANGLE

    comps = _edge_components(edges)
    if len(comps) != 2:
        return EdgeTripleClass.NONE
    two = next(c for c in comps if len(c) == 2)
    (one,) = next(c for c in comps if len(c) == 1)
    tri_two = triangle_containing(two[0])
    if tri_two is None or triangle_containing(two[1]) != tri_two:
        return EdgeTripleClass.NONE
    rest = delete_edge_set(g, edges)
    tri_one = triangle_containing(one)
    if tri_one is None:
        if not is_connected(rest):
            return EdgeTripleClass.E3
        return EdgeTripleClass.NONE

    # d: the non-triangle edge at the vertex of D off the edge ``one``
    (w,) = set(tri_one) - set(one)
    d = _outside_edge(g, w, tri_one)
    # t: the edge of g - E at the vertex isolated in T - E
    (z,) = set(two[0]) & set(two[1])
    t = _outside_edge(g, z, tri_two)
    cut = delete_edge_set(g, [d, t])
    comp_of = {}
    for i, c in enumerate(components(cut)):
        for v in bits(c):
            comp_of[v] = i
    if comp_of[one[0]] != comp_of[two[0][0]]:
        return EdgeTripleClass.E4
    return EdgeTripleClass.NONE


def _outside_edge(g: Graph, v: int, tri) -> Edge:
    (u,) = [x for x in bits(g.adj[v]) if x not in tri]
    return norm_edge(v, u)


def delete_edge_set(g: Graph, edges) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph._trusted(g.n, tuple(adj))


__all__ = [
    "BlockDecomposition",
    "EdgeTripleClass",
    "StructureError",
    "TriangleProfile",
    "block_decomposition",
    "classify_edge_triple",
    "degree",
    "end_block_count",
    "every_vertex_in_one_triangle",
    "find_claw",
    "is_claw_free",
    "is_cubic",
    "is_k_connected",
    "triangle_profile",
    "vertex_connectivity",
]
