"""graph6 reading and writing (short form, at most 62 vertices).

The upper triangle of the adjacency matrix is written column by column,
``(0,1), (0,2), (1,2), (0,3), ...``, six bits per printable character
offset by 63, with the vertex count in the first character.
"""

from __future__ import annotations

from .graph import Graph, GraphError

MAX_N = 62
HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        where = "" if offset is None else f" at byte {offset}"
        super().__init__(f"{message}{where}")


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty record", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} out of range", base + i)
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form vertex count (n > 62) is not supported", base)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nchars:
        raise Graph6Error(f"truncated bit field: expected {nchars} data bytes, got {len(body)}", base + 1 + len(body))
    if len(body) > nchars:
        raise Graph6Error("trailing data after bit field", base + 1 + nchars)

    stream = 0
    for ch in body:
        stream = stream << 6 | (ord(ch) - 63)
    padding = 6 * nchars - nbits
    if stream & ((1 << padding) - 1):
        raise Graph6Error("nonzero padding bits", base + nchars)
    stream >>= padding
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise Graph6Error(f"n={g.n} exceeds the short-form limit of {MAX_N}")
    out = [chr(g.n + 63)]
    acc = nacc = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)
