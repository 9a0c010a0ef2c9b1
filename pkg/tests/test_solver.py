from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lambdapack.brute import brute_force_max_packing
from lambdapack.constructive import triangle_blowup
from lambdapack.families import gen_net, gen_Q
from lambdapack.graph import Graph, VertexPath3, paths_in
from lambdapack.solver import (
    ConstraintError,
    InvalidPacking,
    LambdaPacking,
    PackingConstraints,
    PathKind,
    ResourceExhausted,
    Solver,
    constraints,
    factor_respecting_triangles,
    has_factor,
    lambda_number,
    max_packing,
)

from test_graph6 import graphs

K33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])


def test_max_packing_examples():
    assert max_packing(Graph.cycle(6)).size == 2
    assert max_packing(gen_net()).size == 1
    k4 = Graph.complete(4)
    assert max_packing(k4, constraints(forbid=[(0, 1), (2, 3)])).size == 1


def test_has_factor_examples():
    tri = has_factor(Graph.complete(3))
    assert tri is not None and tri.size == 1
    assert has_factor(gen_net()) is None
    q, e = gen_Q(5, 5)
    assert has_factor(q, constraints(require_edge=e)) is None
    assert has_factor(q) is not None


def test_brute_examples():
    assert brute_force_max_packing(Graph.empty(0)).size == 0
    assert brute_force_max_packing(K33).size == 2
    with pytest.raises(ValueError):
        brute_force_max_packing(Graph.empty(13))


def test_triangle_modes():
    two = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert factor_respecting_triangles(two, PathKind.ALL_TRIANGLE) is not None
    c6 = Graph.cycle(6)
    assert factor_respecting_triangles(c6, PathKind.NO_TRIANGLE) is not None
    assert factor_respecting_triangles(c6, PathKind.ALL_TRIANGLE) is None
    k4d = triangle_blowup(Graph.complete(4)).blown
    for mode in (PathKind.ALL_TRIANGLE, PathKind.NO_TRIANGLE):
        p = factor_respecting_triangles(k4d, mode)
        assert p is not None and p.is_factor_of(k4d)
        want = mode is PathKind.ALL_TRIANGLE
        assert all(q.induces_triangle(k4d) == want for q in p.paths)
    with pytest.raises(ValueError):
        factor_respecting_triangles(c6, PathKind.ANY)


def test_constraint_validation():
    c6 = Graph.cycle(6)
    with pytest.raises(ConstraintError):
        PackingConstraints(required_path=VertexPath3.of(0, 1, 2), required_edge=(0, 1))
    for bad in (
        constraints(forbid=[(0, 2)]),
        constraints(require_edge=(0, 3)),
        constraints(require_edge=(0, 1), forbid=[(0, 1)]),
        constraints(require_edge=(0, 1), delete=[1]),
        constraints(require_path=VertexPath3.of(0, 2, 4)),
        constraints(require_path=VertexPath3.of(0, 1, 2), delete=[2]),
        constraints(require_path=VertexPath3.of(0, 1, 2), forbid=[(1, 2)]),
        constraints(delete=[9]),
    ):
        with pytest.raises(ConstraintError):
            max_packing(c6, bad)


def test_required_edge_unsatisfiable():
    # an isolated edge can never lie on a 3-vertex path
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    with pytest.raises(ConstraintError):
        max_packing(g, constraints(require_edge=(0, 1)))
    assert has_factor(g, constraints(require_edge=(0, 1), delete=[2, 3, 4])) is None


def test_packing_validation():
    c6 = Graph.cycle(6)
    good = LambdaPacking((VertexPath3.of(0, 1, 2), VertexPath3.of(3, 4, 5)))
    good.validate(c6, factor=True)
    with pytest.raises(InvalidPacking):
        LambdaPacking((VertexPath3.of(0, 1, 2), VertexPath3.of(2, 3, 4))).validate(c6)
    with pytest.raises(InvalidPacking):
        LambdaPacking((VertexPath3.of(0, 2, 4),)).validate(c6)
    with pytest.raises(InvalidPacking):
        LambdaPacking((VertexPath3.of(0, 1, 2),)).validate(c6, factor=True)
    with pytest.raises(InvalidPacking):
        good.validate(c6, constraints(forbid=[(0, 1)]))


def test_budget():
    g = triangle_blowup(Graph.complete(4)).blown
    s = Solver(budget=2)
    with pytest.raises(ResourceExhausted):
        s.max_packing(g, constraints(delete=[0]))
    s = Solver()
    s.has_factor(g)
    assert s.nodes > 0


def test_budget_env(monkeypatch):
    monkeypatch.setenv("LAMBDAPACK_BUDGET", "1")
    with pytest.raises(ResourceExhausted):
        max_packing(triangle_blowup(Graph.complete(4)).blown, constraints(delete=[0]))


def test_deterministic_tie_break():
    g = triangle_blowup(Graph.complete(4)).blown
    assert [str(max_packing(g)) for _ in range(3)] == [str(max_packing(g))] * 3


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_matches_brute_force_with_constraints(g, rnd):
    edges = g.edges()
    forbid = [e for e in edges if rnd.random() < 0.2]
    delete = [v for v in range(g.n) if rnd.random() < 0.15]
    live_paths = [
        p for p in paths_in(g) if not set(p.vertices) & set(delete) and not set(p.edges) & set(forbid)
    ]
    req = {}
    roll = rnd.random()
    if live_paths and roll < 0.3:
        req["require_path"] = rnd.choice(live_paths)
    elif live_paths and roll < 0.6:
        req["require_edge"] = rnd.choice(rnd.choice(live_paths).edges)
    c = constraints(forbid=forbid, delete=delete, **req)
    got = max_packing(g, c)
    got.validate(g, c)
    assert got.size == brute_force_max_packing(g, c).size
    f = has_factor(g, c)
    alive = g.n - len(delete)
    assert (f is not None) == (got.size * 3 == alive)
    if f is not None:
        f.validate(g, c, factor=True)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_properties(g):
    lam = lambda_number(g)
    assert lam <= g.n // 3
    # deleting an edge never helps; adding a disjoint copy doubles
    for e in g.edges()[:3]:
        assert max_packing(g, constraints(forbid=[e])).size <= lam
    double = Graph.from_edges(2 * g.n, g.edges() + [(u + g.n, v + g.n) for u, v in g.edges()]) if g.n <= 12 else g
    assert lambda_number(double) == 2 * lam


def test_random_larger_graphs_consistent():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(10, 12)
        edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.3]
        g = Graph.from_edges(n, edges)
        assert max_packing(g).size == brute_force_max_packing(g).size
