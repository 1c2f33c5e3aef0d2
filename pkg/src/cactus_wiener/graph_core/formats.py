"""graph6 and plain edge-list text formats."""

from __future__ import annotations

from ..errors import MalformedEdgeList, MalformedGraph6
from .graph import Graph, from_edge_list

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError("graph6 vertex count above 258047 is not supported")


def emit_graph6(g: Graph) -> str:
    n = g.vertex_count
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _encode_n(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if s[0] in ":;&":
        raise MalformedGraph6("sparse6/digraph6 input is not graph6")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6("character outside the graph6 range")
    if s[0] != "~":
        n, rest = ord(s[0]) - 63, s[1:]
    else:
        if len(s) < 4 or s[1] == "~":
            raise MalformedGraph6("unsupported or truncated vertex count")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        rest = s[4:]
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(rest)}")
    bits = []
    for c in rest:
        value = ord(c) - 63
        bits.extend((value >> s_) & 1 for s_ in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise MalformedEdgeList("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise MalformedEdgeList(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise MalformedEdgeList("first line must be 'n m'")
    n, m = header
    if len(pairs) != m or any(len(p) != 2 for p in pairs):
        raise MalformedEdgeList(f"header announces {m} edges, found {len(pairs)} rows")
    return from_edge_list(n, pairs)


def read_graph(text: str) -> Graph:
    """Parse edge-list text if it looks like one, graph6 otherwise."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) == 2:
        return parse_edge_list(text)
    return parse_graph6(first)
