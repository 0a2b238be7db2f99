"""graph6 and edge-list readers/writers."""
from __future__ import annotations

from pathlib import Path

from .graphs import Graph, GraphError

G6_MAX_N = 258047
G6_HEADER = b">>graph6<<"


class ParseError(ValueError):
    """Malformed graph input. ``offset`` is the byte offset (graph6) or line number (edge list)."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


def _as_bytes(text) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii", errors="strict")
    return bytes(text)


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= G6_MAX_N:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError(f"graph6 supports n <= {G6_MAX_N}, got {n}")


def parse_graph6(text) -> Graph:
    """Decode a single graph6 line (optional ``>>graph6<<`` header, trailing newline ok)."""
    data = _as_bytes(text).rstrip(b"\r\n")
    base = 0
    if data.startswith(G6_HEADER):
        data = data[len(G6_HEADER):]
        base = len(G6_HEADER)
    if not data:
        raise ParseError("empty graph6 string", base)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c} outside graph6 range 63..126", base + i)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise ParseError("truncated extended length header", base + len(data))
        if data[1] == 126:
            raise ParseError("graph6 length header beyond 258047 vertices not supported", base + 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n < 63:
            raise ParseError(f"extended header used for small n={n}", base)
        pos = 4
    if n < 1:
        raise ParseError("graph6 graph must have at least one vertex", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise ParseError(f"expected {nbytes} adjacency bytes for n={n}, found {len(body)}",
                         base + pos + min(len(body), nbytes))

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    pad = nbytes * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", base + pos + nbytes - 1)
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> bytes:
    """Encode ``g`` as a graph6 line without header or newline."""
    out = bytearray(_encode_n(g.n))
    value = nb = 0
    for j in range(1, g.n):
        for i in range(j):
            value = (value << 1) | ((i, j) in g.edges)
            nb += 1
            if nb == 6:
                out.append(value + 63)
                value = nb = 0
    if nb:
        out.append((value << (6 - nb)) + 63)
    return bytes(out)


def parse_edge_list(text) -> Graph:
    """Parse ``n`` followed by one ``u v`` pair per line.

    Duplicate and reversed pairs collapse to one undirected edge. Blank
    lines and ``#`` comments are skipped.
    """
    if isinstance(text, bytes):
        text = text.decode()
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if not lines:
        raise ParseError("empty edge list")

    lineno, head = lines[0]
    if len(head) != 1:
        raise ParseError("first line must hold only the vertex count", lineno)
    n = _int_token(head[0], lineno)
    if n < 1:
        raise ParseError(f"vertex count must be >= 1, got {n}", lineno)

    edges = set()
    for lineno, tokens in lines[1:]:
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {' '.join(tokens)!r}", lineno)
        u, v = (_int_token(t, lineno) for t in tokens)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1} in ({u}, {v})", lineno)
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def _int_token(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"non-integer token {token!r}", lineno) from None


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"


def detect_format(text) -> str:
    """``'edgelist'`` if the first meaningful character is a digit, else ``'graph6'``.

    graph6 bytes start at 63, so digits never open a graph6 line.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return "edgelist" if line[0].isdigit() else "graph6"
    return "edgelist"


def parse_graphs(text, fmt: str | None = None) -> list[Graph]:
    """Parse one edge list, or one graph per non-empty graph6 line."""
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt != "graph6":
        raise ValueError(f"unknown format {fmt!r}")
    graphs = []
    for line in _as_bytes(text).splitlines():
        if line.strip():
            graphs.append(parse_graph6(line.strip()))
    if not graphs:
        raise ParseError("no graph6 lines found")
    return graphs


def read_graphs(path, fmt: str | None = None) -> list[Graph]:
    return parse_graphs(Path(path).read_bytes(), fmt)


__all__ = [
    "ParseError",
    "GraphError",
    "parse_graph6",
    "encode_graph6",
    "parse_edge_list",
    "format_edge_list",
    "detect_format",
    "parse_graphs",
    "read_graphs",
]
