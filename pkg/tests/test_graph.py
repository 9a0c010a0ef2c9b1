from __future__ import annotations

import pytest

from lambdapack.families import gen_H, gen_net
from lambdapack.graph import (
    Graph,
    GraphError,
    VertexPath3,
    components,
    delete_edges,
    delete_path,
    delete_vertices,
    is_connected,
    paths_in,
)
from lambdapack.structure import is_cubic


def iso_key(g: Graph) -> tuple:
    # enough for the tiny relabelling checks below
    return (g.n, g.m, tuple(sorted(g.degrees())))


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_parallel_edges_collapse():
    g = Graph.from_edges(2, [(0, 1), (1, 0)])
    assert g.m == 1


def test_path3_identified_up_to_endpoint_swap():
    assert VertexPath3.of(2, 0, 1) == VertexPath3.of(1, 0, 2)
    assert hash(VertexPath3.of(2, 0, 1)) == hash(VertexPath3.of(1, 0, 2))
    with pytest.raises(GraphError):
        VertexPath3.of(1, 0, 1)


def test_path3_validity_and_triangle():
    k3 = Graph.complete(3)
    p = VertexPath3.of(1, 0, 2)
    assert p.is_valid_in(k3) and p.induces_triangle(k3)
    c4 = Graph.cycle(4)
    assert VertexPath3.of(1, 0, 3).is_valid_in(c4)
    assert not VertexPath3.of(1, 0, 2).is_valid_in(c4)


def test_paths_in_counts():
    # sum over v of C(deg v, 2)
    for g in (Graph.complete(4), Graph.cycle(6), gen_net()):
        expect = sum(d * (d - 1) // 2 for d in g.degrees())
        assert len(paths_in(g)) == expect == len(set(paths_in(g)))


def test_delete_vertices_examples():
    k4 = Graph.complete(4)
    tri, _ = delete_vertices(k4, {2})
    assert tri == Graph.complete(3)
    same, relabel = delete_vertices(k4, set())
    assert same == k4 and relabel == {v: v for v in range(4)}
    net = gen_net()
    core, _ = delete_vertices(net, {3, 4, 5})
    assert core == Graph.complete(3)


def test_delete_edges_examples():
    c6 = Graph.cycle(6)
    p = delete_edges(c6, [(5, 0)])
    assert p == Graph.path(6)
    assert delete_edges(c6, []) == c6
    c4 = delete_edges(Graph.complete(4), [(0, 1), (2, 3)])
    assert all(d == 2 for d in c4.degrees()) and is_connected(c4)
    with pytest.raises(GraphError):
        delete_edges(c6, [(0, 3)])


def test_delete_path_examples():
    c6 = Graph.cycle(6)
    rest, _ = delete_path(c6, VertexPath3.of(0, 1, 2))
    assert iso_key(rest) == iso_key(Graph.path(3)) and is_connected(rest)
    empty, _ = delete_path(Graph.complete(3), VertexPath3.of(1, 0, 2))
    assert empty.n == 0
    h, t = gen_H()
    net, _ = delete_path(h, VertexPath3.of(t[0], t[1], t[2]))
    assert net == gen_net()


def test_delete_path_rejects_foreign_path():
    with pytest.raises(GraphError):
        delete_path(Graph.cycle(6), VertexPath3.of(0, 2, 4))


def test_components_and_connectivity():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    assert components(g) == [0b11, 0b1100, 0b10000]
    assert not is_connected(g)
    assert is_connected(Graph.complete(1))
    assert not is_connected(Graph.empty(0))


def test_induced_relabels_in_order():
    k4 = Graph.complete(4)
    sub, relabel = k4.induced([3, 1])
    assert relabel == {1: 0, 3: 1} and sub.m == 1
    assert is_cubic(k4)
