"""Triangle blow-ups of cubic graphs and the explicit Lambda-factors they carry.

Blowing up a cubic graph ``F`` replaces each vertex ``v`` by a triangle
``D(v)`` whose three corners take over the three edges at ``v``.  The
edges of the blow-up that lie in no triangle correspond one-to-one to the
edges of ``F`` (the map ``alpha`` below).

:func:`blowup_factor` builds a Lambda-factor containing a prescribed
3-vertex path ``l`` in one of three shapes:

* ``A1``: ``l`` spans a triangle; take every triangle.
* ``A2``: ``l`` does not; take a 2-factor of ``F`` through the base image
  of ``l``, lift each cycle to a Hamiltonian cycle of length ``3k`` in the
  blow-up and cut it into paths, none of which is a triangle.
* ``A3``: ``l`` does not; lift one non-spanning cycle through the base
  image of ``l`` the same way and cover the rest by triangles.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .graph import Edge, Graph, VertexPath3, bits, norm_edge, paths_in
from .solver import LambdaPacking
from .structure import is_cubic, is_k_connected, triangle_profile


class ConstructionError(RuntimeError):
    """A construction step that should always succeed did not."""


class Mode(enum.Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"


@dataclass(frozen=True)
class BlowupMap:
    base: Graph
    blown: Graph
    triangles: tuple[tuple[int, int, int], ...]
    alpha: dict[Edge, Edge]

    def __post_init__(self) -> None:
        owner = {}
        for v, tri in enumerate(self.triangles):
            for x in tri:
                owner[x] = v
        object.__setattr__(self, "_owner", owner)

    def owner(self, x: int) -> int:
        """Base vertex whose triangle contains blown vertex ``x``."""
        return self._owner[x]  # type: ignore[attr-defined]

    def corner(self, v: int, u: int) -> int:
        """Corner of ``D(v)`` carrying the lifted edge ``vu``."""
        for x in self.triangles[v]:
            for y in bits(self.blown.adj[x]):
                if self.owner(y) == u:
                    return x
        raise KeyError((v, u))

    def check(self) -> None:
        """Assert every structural invariant of the map."""
        b, g = self.base, self.blown
        assert g.n == 3 * b.n
        assert sorted(x for t in self.triangles for x in t) == list(range(g.n))
        for t in self.triangles:
            x, y, z = t
            assert g.adj[x] >> y & 1 and g.adj[y] >> z & 1 and g.adj[x] >> z & 1
        prof = triangle_profile(g)
        off_triangle = {e for e, c in prof.edge_count.items() if c == 0}
        assert set(self.alpha) == set(b.edges())
        assert set(self.alpha.values()) == off_triangle
        assert len(set(self.alpha.values())) == len(self.alpha)
        for (u, v), (x, y) in self.alpha.items():
            assert {self.owner(x), self.owner(y)} == {u, v}


def triangle_blowup(f: Graph) -> BlowupMap:
    """Replace every vertex of cubic ``f`` by a triangle.

    Vertex ``v`` becomes ``3v, 3v+1, 3v+2``; corner ``3v+i`` carries the
    edge from ``v`` to its ``i``-th neighbour in increasing order.
    """
    if not is_cubic(f):
        raise ValueError("triangle blow-up needs a cubic graph")
    nbrs = [list(bits(f.adj[v])) for v in range(f.n)]
    edges = []
    alpha = {}
    for v in range(f.n):
        edges += [(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]
    for u, v in f.edges():
        e = norm_edge(3 * u + nbrs[u].index(v), 3 * v + nbrs[v].index(u))
        edges.append(e)
        alpha[(u, v)] = e
    blown = Graph.from_edges(3 * f.n, edges)
    tris = tuple((3 * v, 3 * v + 1, 3 * v + 2) for v in range(f.n))
    return BlowupMap(f, blown, tris, alpha)


def recognize_blowup(g: Graph) -> BlowupMap | None:
    """Recover ``F`` with ``g = F`` blown up, if ``g`` has that form with ``F`` simple.

    Requires ``g`` cubic with every vertex in exactly one triangle; base
    vertices are numbered by the smallest corner of their triangle.
    """
    if g.n == 0 or not is_cubic(g):
        return None
    prof = triangle_profile(g)
    if any(c != 1 for c in prof.vertex_count):
        return None
    tris = tuple(sorted(prof.triangles))
    owner = {x: i for i, t in enumerate(tris) for x in t}
    base_edges: dict[Edge, Edge] = {}
    for e, c in prof.edge_count.items():
        if c:
            continue
        be = norm_edge(owner[e[0]], owner[e[1]])
        if be in base_edges:
            return None
        base_edges[be] = e
    base = Graph.from_edges(len(tris), base_edges)
    return BlowupMap(base, g, tris, base_edges)


# -- 2-factors -------------------------------------------------------------


def perfect_matching(g: Graph, avoid: frozenset[Edge] = frozenset()) -> list[Edge] | None:
    """Some perfect matching of ``g`` minus ``avoid``, by exhaustive search."""
    adj = list(g.adj)
    for u, v in avoid:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    dead: set[int] = set()

    def match(rem: int) -> list[Edge] | None:
        if not rem:
            return []
        if rem in dead:
            return None
        v = (rem & -rem).bit_length() - 1
        for u in bits(adj[v] & rem):
            rest = match(rem & ~(1 << v) & ~(1 << u))
            if rest is not None:
                rest.append((v, u))
                return rest
        dead.add(rem)
        return None

    if g.n % 2:
        return None
    found = match(g.full_mask)
    return None if found is None else sorted(found)


def cycles_of_two_factor(n: int, edges: list[Edge]) -> list[tuple[int, ...]]:
    """Split a 2-regular spanning edge set into cycles, each starting at its smallest vertex."""
    nb: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in edges:
        nb[u].append(v)
        nb[v].append(u)
    if any(len(x) != 2 for x in nb.values()):
        raise ConstructionError("edge set is not 2-regular and spanning")
    seen: set[int] = set()
    out = []
    for s in range(n):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = s, min(nb[s])
        while cur != s:
            cyc.append(cur)
            seen.add(cur)
            a, b = nb[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(tuple(cyc))
    return out


def two_factor_containing_path(a: Graph, j: VertexPath3) -> list[tuple[int, ...]]:
    """A 2-factor of cubic ``a`` using both edges of ``j``.

    In a cubic graph the 2-factors are exactly the complements of perfect
    matchings, so this looks for a perfect matching avoiding ``j``.
    """
    if not is_cubic(a):
        raise ValueError("2-factor construction needs a cubic graph")
    if not j.is_valid_in(a):
        raise ValueError(f"{j} is not a path in the graph")
    pm = perfect_matching(a, frozenset(j.edges))
    if pm is None:
        raise ConstructionError(f"no perfect matching of the graph minus the edges of {j}")
    matched = set(pm)
    rest = [e for e in a.edges() if e not in matched]
    return cycles_of_two_factor(a.n, rest)


# -- Lambda-factors of blow-ups ---------------------------------------------


def _triangle_path(tri: tuple[int, int, int]) -> VertexPath3:
    x, y, z = sorted(tri)
    return VertexPath3(x, (y, z))


def _lift_cycle(m: BlowupMap, cycle: list[int]) -> list[VertexPath3]:
    """Cut the lifted Hamiltonian cycle of base cycle ``cycle`` into 3-vertex paths.

    Each path is ``middle(v_i) - exit(v_i) - entry(v_{i+1})``, so no path
    lies inside one triangle.
    """
    k = len(cycle)
    ham = []
    for i, v in enumerate(cycle):
        entry = m.corner(v, cycle[i - 1])
        exit_ = m.corner(v, cycle[(i + 1) % k])
        (middle,) = set(m.triangles[v]) - {entry, exit_}
        ham += [entry, middle, exit_]
    if len(ham) % 3 or len(set(ham)) != len(ham):
        raise ConstructionError("lifted cycle is not a simple cycle of length 0 mod 3")
    g = m.blown
    for i in range(len(ham)):
        if not g.adj[ham[i]] >> ham[(i + 1) % len(ham)] & 1:
            raise ConstructionError("lifted cycle is not a cycle of the blow-up")
    return [VertexPath3(ham[(3 * i + 2)], (ham[3 * i + 1], ham[(3 * i + 3) % len(ham)])) for i in range(k)]


def _orient(cycle: tuple[int, ...], before: int, at: int, after: int) -> list[int]:
    """Rotate/reverse ``cycle`` so it reads ``..., before, at, after, ...``."""
    c = list(cycle)
    i = c.index(at)
    if c[i - 1] == before and c[(i + 1) % len(c)] == after:
        return c
    c.reverse()
    i = c.index(at)
    if c[i - 1] == before and c[(i + 1) % len(c)] == after:
        return c
    raise ConstructionError("cycle does not traverse the base path")


def base_path(m: BlowupMap, l: VertexPath3) -> tuple[int, int, int, int, int]:
    """Base image of a non-triangle path ``l = x - z - z1``.

    Returns ``(s1', s', z1', x, z1)``: ``l`` has its triangle edge ``xz``
    in ``D(s')`` and its other edge ``z z1`` lifted from ``s' z1'``;
    ``s1'`` is the neighbour of ``s'`` across the third corner of ``D(s')``.
    """
    z = l.center
    sp = m.owner(z)
    a, b = l.ends
    x, z1 = (a, b) if m.owner(a) == sp else (b, a)
    if m.owner(x) != sp or m.owner(z1) == sp:
        raise ValueError(f"{l} is not a triangle edge followed by a lifted edge")
    z1p = m.owner(z1)
    (s,) = set(m.triangles[sp]) - {x, z}
    (s1,) = [y for y in bits(m.blown.adj[s]) if m.owner(y) != sp]
    return m.owner(s1), sp, z1p, x, z1


def _check_base(m: BlowupMap) -> None:
    if not is_cubic(m.base) or not is_k_connected(m.base, 2):
        raise ValueError("base graph must be cubic and 2-connected")


def non_spanning_cycle(f: Graph, s1: int, s: int, z1: int) -> list[int] | None:
    """Shortest cycle through the path ``s1 - s - z1`` that misses some vertex.

    Breadth-first search from ``z1`` to ``s1`` in ``f - s``; if even the
    shortest such cycle is Hamiltonian, every one is, and None is returned.
    """
    prev = {z1: z1}
    queue = deque([z1])
    while queue:
        a = queue.popleft()
        if a == s1:
            break
        for b in bits(f.adj[a]):
            if b != s and b not in prev:
                prev[b] = a
                queue.append(b)
    if s1 not in prev:
        return None
    walk = [s1]
    while walk[-1] != z1:
        walk.append(prev[walk[-1]])
    cycle = [s] + walk[::-1]  # s, z1, ..., s1
    if len(cycle) == f.n:
        return None
    return cycle


def blowup_factor(m: BlowupMap, l: VertexPath3, mode: Mode) -> LambdaPacking:
    _check_base(m)
    g = m.blown
    if not l.is_valid_in(g):
        raise ValueError(f"{l} is not a path in the blow-up")
    tri = l.induces_triangle(g)
    if mode is Mode.A1:
        if not tri:
            raise ValueError("mode A1 needs a path spanning a triangle")
        home = m.owner(l.center)
        paths = [l] + [_triangle_path(t) for v, t in enumerate(m.triangles) if v != home]
        return LambdaPacking(tuple(paths))
    if tri:
        raise ValueError(f"mode {mode.value} needs a path that is not a triangle")

    s1p, sp, z1p, _, _ = base_path(m, l)
    if mode is Mode.A2:
        cycles = two_factor_containing_path(m.base, VertexPath3(sp, (s1p, z1p)))
        paths: list[VertexPath3] = []
        for cyc in cycles:
            if sp in cyc:
                oriented = _orient(cyc, s1p, sp, z1p)
            else:
                oriented = list(cyc)
            paths += _lift_cycle(m, oriented)
    else:
        cyc = non_spanning_cycle(m.base, s1p, sp, z1p)
        if cyc is None:
            raise ConstructionError("no non-spanning cycle through the base path")
        oriented = _orient(tuple(cyc), s1p, sp, z1p)
        paths = _lift_cycle(m, oriented)
        on_cycle = set(cyc)
        paths += [_triangle_path(t) for v, t in enumerate(m.triangles) if v not in on_cycle]
    if l not in paths:
        raise ConstructionError(f"{l} is not a component of the constructed factor")
    return LambdaPacking(tuple(paths))


def mode_holds(g: Graph, packing: LambdaPacking, l: VertexPath3, mode: Mode) -> bool:
    """Whether ``packing`` is a Lambda-factor containing ``l`` with the triangle shape of ``mode``."""
    if l not in packing.paths or not packing.is_factor_of(g):
        return False
    tri = [p.induces_triangle(g) for p in packing.paths]
    if mode is Mode.A1:
        return all(tri)
    if mode is Mode.A2:
        return not any(tri)
    return any(tri)


def applicable_modes(g: Graph, l: VertexPath3) -> list[Mode]:
    return [Mode.A1] if l.induces_triangle(g) else [Mode.A2, Mode.A3]


__all__ = [
    "BlowupMap",
    "ConstructionError",
    "Mode",
    "applicable_modes",
    "blowup_factor",
    "mode_holds",
    "non_spanning_cycle",
    "paths_in",
    "perfect_matching",
    "recognize_blowup",
    "triangle_blowup",
    "two_factor_containing_path",
]
