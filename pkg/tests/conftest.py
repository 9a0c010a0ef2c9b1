from __future__ import annotations

from pathlib import Path

import networkx as nx
import pytest

from lambdapack.corpus import iter_graph6_file
from lambdapack.graph import Graph
from lambdapack.graph6 import parse_graph6

FIXTURES = Path(__file__).parent / "fixtures"
CONNECTED_SMALL = FIXTURES / "connected_n1-7.g6"
CUBIC = FIXTURES / "cubic_connected_n4-14.g6"
CLAWFREE = FIXTURES / "clawfree_connected_n1-11.g6.gz"
CLAWFREE_DEG3_12 = FIXTURES / "clawfree_connected_maxdeg3_n12.g6"


def load(path: Path) -> list[Graph]:
    return [parse_graph6(r.line) for r in iter_graph6_file(path)]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture(scope="session")
def small_connected() -> list[Graph]:
    return load(CONNECTED_SMALL)


@pytest.fixture(scope="session")
def cubic_graphs() -> list[Graph]:
    return load(CUBIC)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} ({detail})")
