"""graph6 and edge-list encodings.

Only the graph6 short form (n <= 62) is supported.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Literal

from .errors import ParseError
from .graph import Graph

Format = Literal["graph6", "edgelist"]

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_N = 62


def _as_bytes(text) -> bytes:
    if isinstance(text, str):
        return text.encode("ascii", errors="strict")
    return bytes(text)


def parse_graph6(data, base_offset: int = 0) -> Graph:
    data = _as_bytes(data)
    if data.endswith(b"\n"):
        data = data[:-1]
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base_offset += len(GRAPH6_HEADER)
    if not data:
        raise ParseError("empty graph6 token", base_offset)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c} outside the graph6 range 63..126", base_offset + i)
    if data[0] == 126:
        raise ParseError("graph6 long form (n > 62) is not supported", base_offset)
    n = data[0] - 63
    if n == 0:
        raise ParseError("graph6 token encodes the null graph", base_offset)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nchars:
        raise ParseError(f"truncated: expected {nchars} data bytes, got {len(body)}",
                         base_offset + len(data))
    if len(body) > nchars:
        raise ParseError("trailing bytes after graph6 token", base_offset + 1 + nchars)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            chunk = body[k // 6] - 63
            if chunk >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise ParseError("nonzero padding bits", base_offset + len(data) - 1)
    return Graph(n, tuple(adj))


def emit_graph6(G: Graph) -> bytes:
    if G.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {G.n}")
    out = bytearray([G.n + 63])
    acc = nacc = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out)


def graph6(G: Graph) -> str:
    return emit_graph6(G).decode("ascii")


def parse_edgelist(data, base_offset: int = 0) -> Graph:
    data = _as_bytes(data)
    lines = data.split(b"\n")
    offset = base_offset
    n = None
    adj: list[int] = []
    for line in lines:
        stripped = line.split(b"#", 1)[0].strip()
        if not stripped:
            offset += len(line) + 1
            continue
        fields = stripped.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"non-integer field in line {stripped!r}", offset) from None
        if n is None:
            if len(values) != 1 or not 1 <= values[0] <= 64:
                raise ParseError("first line must be a vertex count in 1..64", offset)
            n = values[0]
            adj = [0] * n
        else:
            if len(values) != 2:
                raise ParseError("edge lines need exactly two vertices", offset)
            u, v = values
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex out of range in edge ({u}, {v})", offset)
            if u == v:
                raise ParseError(f"self-loop ({u}, {v})", offset)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        offset += len(line) + 1
    if n is None:
        raise ParseError("missing vertex count", base_offset)
    return Graph(n, tuple(adj))


def emit_edgelist(G: Graph) -> bytes:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges()]
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_graph(text, format: Format = "graph6") -> Graph:
    if format == "graph6":
        return parse_graph6(text)
    if format == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown format {format!r}")


def emit_graph(G: Graph, format: Format = "graph6") -> bytes:
    if format == "graph6":
        return emit_graph6(G)
    if format == "edgelist":
        return emit_edgelist(G)
    raise ValueError(f"unknown format {format!r}")


def iter_graph6_file(path) -> Iterator[Graph]:
    """Yield graphs from a graph6 file, one per line.

    A leading ``>>graph6<<`` header is skipped; blank lines are ignored.
    Parse errors report the byte offset within the whole file.
    """
    data = Path(path).read_bytes()
    offset = 0
    for line in data.split(b"\n"):
        token = line.rstrip(b"\r")
        if token and token != GRAPH6_HEADER:
            yield parse_graph6(token, base_offset=offset)
        offset += len(line) + 1


def write_graph6_file(path, graphs) -> None:
    with open(path, "wb") as fh:
        for G in graphs:
            fh.write(emit_graph6(G) + b"\n")
