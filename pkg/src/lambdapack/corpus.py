"""Graph corpora: graph6 files (plain or gzip) and seeded generators."""

from __future__ import annotations

import gzip
import random
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .graph import Graph
from .graph6 import HEADER, emit_graph6
from .structure import is_cubic


@dataclass(frozen=True)
class Record:
    """One corpus entry: a graph6 line with where it came from."""

    graph_id: str
    line: str
    lineno: int


def _open(path: str | Path):
    if str(path) == "-":
        return sys.stdin
    if str(path).endswith(".gz"):
        return gzip.open(path, "rt", encoding="ascii")
    return open(path, encoding="ascii")


def iter_graph6_file(path: str | Path) -> Iterator[Record]:
    """Yield records in file order; blank lines, ``#`` comments and headers are skipped."""
    name = "stdin" if str(path) == "-" else Path(path).name
    fh = _open(path)
    try:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if line.startswith(HEADER):
                line = line[len(HEADER):]
            if not line or line.startswith("#"):
                continue
            yield Record(f"{name}:{lineno}", line, lineno)
    finally:
        if fh is not sys.stdin:
            fh.close()


def read_comment_labels(path: str | Path) -> dict[str, int]:
    """``name=vertex`` bindings from ``# ...`` comment lines of a graph6 stream."""
    labels: dict[str, int] = {}
    for raw in _open(path):
        if raw.startswith("#"):
            labels.update(parse_labels(raw))
    return labels


def parse_labels(comment: str) -> dict[str, int]:
    return {k: int(v) for k, v in re.findall(r"(\w+)=(\d+)\b", comment)}


def random_cubic_graph(n: int, rng: random.Random, max_tries: int = 10_000) -> Graph:
    """Uniform-ish cubic graph by pairing ``3n`` stubs, rejecting loops and multi-edges."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need even n >= 4")
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            g = Graph.from_edges(n, sorted(edges))
            assert is_cubic(g)
            return g
    raise RuntimeError(f"no simple cubic pairing found in {max_tries} tries")


def random_cubic_corpus(n: int, count: int, seed: int) -> Iterator[Record]:
    rng = random.Random(seed)
    for i in range(count):
        g = random_cubic_graph(n, rng)
        yield Record(f"random-cubic-n{n}-s{seed}:{i}", emit_graph6(g), i + 1)


def family_corpus(spec: str) -> Iterator[Record]:
    """Records from a generator spec.

    ``classA:0..8``, ``H:0..3``, ``R:4,4``, ``Q:5,5``, ``net``,
    ``random-cubic:N:COUNT:SEED``.
    """
    from .families import gen_H_extended, gen_Q, gen_R, gen_class_A, gen_net

    name, _, arg = spec.partition(":")
    if name == "random-cubic":
        n, count, seed = (int(x) for x in arg.split(":"))
        yield from random_cubic_corpus(n, count, seed)
        return
    graphs: list[tuple[str, Graph]] = []
    if name == "net":
        graphs = [("net", gen_net())]
    elif name in ("classA", "H"):
        lo, _, hi = arg.partition("..")
        for k in range(int(lo or 0), int(hi or lo or 0) + 1):
            g = gen_class_A(k) if name == "classA" else gen_H_extended(k)[0]
            graphs.append((f"{name}:{k}", g))
    elif name == "R":
        la, lb = (int(x) for x in arg.split(","))
        graphs = [(spec, gen_R(la, lb)[0])]
    elif name == "Q":
        la, lb = (int(x) for x in arg.split(","))
        graphs = [(spec, gen_Q(la, lb)[0])]
    else:
        raise ValueError(f"unknown generator spec {spec!r}")
    for i, (gid, g) in enumerate(graphs, 1):
        yield Record(gid, emit_graph6(g), i)
