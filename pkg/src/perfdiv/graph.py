"""Immutable simple graphs on at most 64 vertices with bit-row adjacency.

Vertex sets are plain Python ints used as bitmasks: bit ``v`` is set iff
vertex ``v`` belongs to the set. Most functions also accept any iterable of
vertex indices wherever a set is expected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from .errors import GraphError

MAX_VERTICES = 64

VertexSet = int


def bit(v: int) -> int:
    return 1 << v


def to_mask(vertices) -> int:
    """Normalise an int mask or an iterable of vertices to an int mask."""
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Ascending list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key ordering vertex sets lexicographically by their sorted members."""
    return tuple(members(mask))


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``. ``labels`` is set on
    induced subgraphs and maps each new index back to the parent graph.
    """

    n: int
    adj: tuple[int, ...]
    name: str | None = field(default=None, compare=False)
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {self.n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in members(self.adj[v]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.num_edges}>"


def make_graph(n: int, edges: Iterable[tuple[int, int]] = (), name: str | None = None) -> Graph:
    """Build a graph from an edge list; duplicate and reversed pairs collapse."""
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n!r} outside 1..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), name)


def from_adjacency(adj: Iterable[int], name: str | None = None) -> Graph:
    adj = tuple(adj)
    return Graph(len(adj), adj, name)


def complement(G: Graph) -> Graph:
    full = G.full
    name = f"co-{G.name}" if G.name else None
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)), name)


def induced(G: Graph, S) -> Graph:
    """Subgraph induced by ``S``, relabelled densely in ascending original order."""
    S = to_mask(S)
    if S & ~G.full:
        raise GraphError("vertex set contains vertices outside the graph")
    if not S:
        raise GraphError("induced subgraph of the empty set")
    verts = members(S)
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in members(G.adj[v] & S):
            row |= 1 << index[u]
        adj.append(row)
    parent = G.labels
    labels = tuple(verts) if parent is None else tuple(parent[v] for v in verts)
    return Graph(len(verts), tuple(adj), None, labels)


def delete(G: Graph, S) -> Graph:
    """``G - S``. Raises if nothing would remain."""
    return induced(G, G.full & ~to_mask(S))


Kind = Literal["open", "closed", "non"]


def neighborhood(G: Graph, X, kind: Kind = "open") -> int:
    """N(X), N[X] or M(X) of a nonempty set ``X``.

    X, N(X) and M(X) always partition the vertex set.
    """
    X = to_mask(X)
    if not X:
        raise GraphError("neighbourhood of the empty set")
    if X & ~G.full:
        raise GraphError("vertex set contains vertices outside the graph")
    union = 0
    for v in members(X):
        union |= G.adj[v]
    open_ = union & ~X
    if kind == "open":
        return open_
    if kind == "closed":
        return open_ | X
    if kind == "non":
        return G.full & ~(open_ | X)
    raise GraphError(f"unknown neighbourhood kind {kind!r}")


def set_relation(G: Graph, X, Y) -> Literal["complete", "anticomplete", "mixed"]:
    X, Y = to_mask(X), to_mask(Y)
    if not X or not Y:
        raise GraphError("set_relation needs two nonempty sets")
    if X & Y:
        raise GraphError("set_relation needs disjoint sets")
    complete = anticomplete = True
    for x in members(X):
        hit = G.adj[x] & Y
        if hit != Y:
            complete = False
        if hit:
            anticomplete = False
    if complete:
        return "complete"
    if anticomplete:
        return "anticomplete"
    return "mixed"


def is_clique(G: Graph, X) -> bool:
    X = to_mask(X)
    for v in members(X):
        if (G.adj[v] | (1 << v)) & X != X:
            return False
    return True


def is_independent(G: Graph, X) -> bool:
    X = to_mask(X)
    return all(not G.adj[v] & X for v in members(X))


def component_masks(G: Graph, S: int | None = None) -> list[int]:
    """Connected components of ``G[S]`` as masks, sorted by least vertex."""
    remaining = G.full if S is None else S
    out = []
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in members(frontier):
                reach |= G.adj[v]
            frontier = reach & remaining & ~seen
            seen |= frontier
        out.append(seen)
        remaining &= ~seen
    return out


def components(G: Graph) -> list[int]:
    return component_masks(G)


def is_connected(G: Graph, S: int | None = None) -> bool:
    S = G.full if S is None else S
    return len(component_masks(G, S)) <= 1


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """``G`` on 0..n-1 followed by ``H`` shifted up by ``G.n``."""
    if G.n + H.n > MAX_VERTICES:
        raise GraphError(f"union would have {G.n + H.n} > {MAX_VERTICES} vertices")
    return Graph(G.n + H.n, G.adj + tuple(row << G.n for row in H.adj))
