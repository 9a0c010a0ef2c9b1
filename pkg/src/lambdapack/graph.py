"""Immutable simple graphs on vertices ``0..n-1`` and 3-vertex paths.

Adjacency is stored as one integer bitmask per vertex, which keeps the
exact search in :mod:`lambdapack.solver` cheap.  All "mutations" return a
fresh graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for out-of-range vertices, non-edges and malformed input."""


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at {u},{v}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # caller guarantees a symmetric, loop-free, in-range adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u},{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def induced(self, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Induced subgraph on ``keep`` relabelled in increasing order."""
        kept = sorted(set(keep))
        for v in kept:
            self._check(v)
        relabel = {old: new for new, old in enumerate(kept)}
        edges = [(relabel[u], relabel[v]) for u, v in self.edges() if u in relabel and v in relabel]
        return Graph.from_edges(len(kept), edges), relabel

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True, order=True)
class VertexPath3:
    """A path ``ends[0] - center - ends[1]``; equal up to swapping the ends."""

    center: int
    ends: tuple[int, int]

    def __post_init__(self) -> None:
        a, b = self.ends
        if len({a, b, self.center}) != 3:
            raise GraphError(f"path vertices must be distinct: {a},{self.center},{b}")
        if a > b:
            object.__setattr__(self, "ends", (b, a))

    @classmethod
    def of(cls, a: int, center: int, b: int) -> VertexPath3:
        return cls(center, (a, b))

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.ends[0], self.center, self.ends[1])

    @property
    def mask(self) -> int:
        return (1 << self.center) | (1 << self.ends[0]) | (1 << self.ends[1])

    @property
    def edges(self) -> tuple[Edge, Edge]:
        return (norm_edge(self.ends[0], self.center), norm_edge(self.center, self.ends[1]))

    def is_valid_in(self, g: Graph) -> bool:
        c = self.center
        if not all(0 <= v < g.n for v in self.vertices):
            return False
        return bool(g.adj[c] >> self.ends[0] & 1 and g.adj[c] >> self.ends[1] & 1)

    def induces_triangle(self, g: Graph) -> bool:
        return bool(g.adj[self.ends[0]] >> self.ends[1] & 1)

    def __str__(self) -> str:
        a, b = self.ends
        return f"{a}-{self.center}-{b}"


def paths_in(g: Graph) -> list[VertexPath3]:
    """Every 3-vertex path of ``g`` in (center, ends) order."""
    out = []
    for c in range(g.n):
        for a, b in combinations(bits(g.adj[c]), 2):
            out.append(VertexPath3(c, (a, b)))
    return out


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``g - S`` together with the old-to-new label map of the survivors."""
    gone = set(vertices)
    for v in gone:
        g._check(v)
    return g.induced(v for v in range(g.n) if v not in gone)


def delete_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    adj = list(g.adj)
    seen = set()
    for u, v in edges:
        e = norm_edge(u, v)
        if e in seen:
            continue
        seen.add(e)
        if not g.has_edge(u, v):
            raise GraphError(f"{u},{v} is not an edge")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph._trusted(g.n, tuple(adj))


def delete_path(g: Graph, path: VertexPath3) -> tuple[Graph, dict[int, int]]:
    if not path.is_valid_in(g):
        raise GraphError(f"{path} is not a path in the graph")
    return delete_vertices(g, path.vertices)


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as bitmasks, ordered by lowest vertex."""
    rest = g.full_mask if within is None else within
    out = []
    adj = g.adj
    while rest:
        frontier = rest & -rest
        comp = frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph, within: int | None = None) -> bool:
    """True for a non-empty connected vertex set (the empty graph is not connected)."""
    return len(components(g, within)) == 1
