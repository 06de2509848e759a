"""Homogeneous sets, clique cutsets, simplicial sets, basins, substitution."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal, Sequence

from .catalog import pattern as named_pattern
from .errors import CapabilityError, GraphError, PreconditionError
from .graph import (
    MAX_VERTICES,
    Graph,
    component_masks,
    is_clique,
    is_connected,
    lex_key,
    members,
    neighborhood,
    to_mask,
)
from .invariants import check_weights, clique_number
from .perfection import is_perfect

HOMOGENEOUS_CAP = 20


def is_homogeneous(G: Graph, X) -> bool:
    X = to_mask(X)
    if not 1 < X.bit_count() < G.n:
        return False
    for v in members(G.full & ~X):
        hit = G.adj[v] & X
        if hit and hit != X:
            return False
    return True


def homogeneous_sets(G: Graph, mode: Literal["all_minimal", "any", "two_clique"] = "all_minimal",
                     cap: int = HOMOGENEOUS_CAP) -> list[int]:
    """Homogeneous sets by brute force over subsets, smallest first.

    ``all_minimal`` returns every inclusion-minimal one, ``any`` the first one
    found (or nothing), ``two_clique`` every homogeneous edge.
    """
    if G.n > cap:
        raise CapabilityError("homogeneous-set", cap, G.n)
    if mode == "two_clique":
        return [(1 << u) | (1 << v) for u, v in sorted(G.edges())
                if is_homogeneous(G, (1 << u) | (1 << v))]
    if mode not in ("all_minimal", "any"):
        raise GraphError(f"unknown mode {mode!r}")
    found: list[int] = []
    for size in range(2, G.n):
        for combo in itertools.combinations(range(G.n), size):
            X = to_mask(combo)
            if any(Y & X == Y for Y in found):
                continue
            if is_homogeneous(G, X):
                if mode == "any":
                    return [X]
                found.append(X)
    return found


def cliques(G: Graph, S: int | None = None) -> list[int]:
    """All nonempty cliques of ``G[S]``, ordered by size then lexicographically."""
    S = G.full if S is None else S
    out = []

    def grow(clique, cand):
        for v in members(cand):
            c = clique | (1 << v)
            out.append(c)
            grow(c, cand & G.adj[v] & ~((2 << v) - 1))

    grow(0, S)
    out.sort(key=lambda c: (c.bit_count(), lex_key(c)))
    return out


def is_clique_cutset(G: Graph, X) -> bool:
    X = to_mask(X)
    return bool(X) and is_clique(G, X) and len(component_masks(G, G.full & ~X)) >= 2


def clique_cutsets(G: Graph, mode: Literal["any", "minimum", "all"] = "all") -> list[int]:
    """Clique cutsets of a connected graph, in nondecreasing size."""
    if not is_connected(G):
        raise PreconditionError("clique cutsets are defined for connected graphs")
    if mode not in ("any", "minimum", "all"):
        raise GraphError(f"unknown mode {mode!r}")
    out = []
    for X in cliques(G):
        if X != G.full and len(component_masks(G, G.full & ~X)) >= 2:
            if mode != "all":
                return [X]
            out.append(X)
    return out


def is_simplicial_set_of(G: Graph, X, Y) -> bool:
    """True iff every x in X has a clique neighbourhood inside X | Y."""
    X, Y = to_mask(X), to_mask(Y)
    if not X:
        raise GraphError("simplicial set must be nonempty")
    if X & Y:
        raise GraphError("X and Y must be disjoint")
    U = X | Y
    return all(is_clique(G, G.adj[x] & U) for x in members(X))


def simplicial_vertices(G: Graph, S: int | None = None) -> int:
    """Vertices of ``G[S]`` whose neighbourhood within S is a clique."""
    S = G.full if S is None else S
    out = 0
    for v in members(S):
        if is_clique(G, G.adj[v] & S):
            out |= 1 << v
    return out


@dataclass(frozen=True)
class SimplicialDecomposition:
    """Ordered parts (X_1, ..., X_k); each later part is simplicial in the union before it."""

    parts: tuple[int, ...]
    perfect: bool

    @property
    def base(self) -> int:
        return self.parts[0]

    def to_dict(self) -> dict:
        return {"parts": [members(p) for p in self.parts], "perfect": self.perfect}


def simplicial_peeling(G: Graph, X=None) -> SimplicialDecomposition:
    """Canonical peeling: strip all simplicial vertices per round.

    The residue with no simplicial vertex becomes X_1; if nothing remains,
    X_1 is the last layer stripped.
    """
    X = G.full if X is None else to_mask(X)
    if not X:
        raise GraphError("peeling needs a nonempty set")
    layers = []
    current = X
    while current:
        layer = simplicial_vertices(G, current)
        if not layer:
            break
        layers.append(layer)
        current &= ~layer
    if current:
        parts = (current, *reversed(layers))
    else:
        parts = tuple(reversed(layers))
    return SimplicialDecomposition(parts, is_perfect(G, parts[0]).perfect)


def is_simplicial_decomposition(G: Graph, parts: Sequence[int]) -> bool:
    union = 0
    for i, part in enumerate(parts):
        if not part or part & union:
            return False
        if i and not is_simplicial_set_of(G, part, union):
            return False
        union |= part
    return True


@dataclass(frozen=True)
class Basin:
    vertices: int
    minimal: bool


def is_basin(G: Graph, X, omega: int | None = None) -> bool:
    X = to_mask(X)
    if not X:
        return False
    omega = clique_number(G) if omega is None else omega
    return clique_number(G, S=neighborhood(G, X, "closed")) < omega


def basins(G: Graph, max_size: int | None = None) -> list[Basin]:
    """All nonempty X with |X| <= max_size and omega(N[X]) < omega(G)."""
    max_size = G.n if max_size is None else max_size
    if max_size > G.n:
        raise GraphError("max_size exceeds the vertex count")
    omega = clique_number(G)
    found = []
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(range(G.n), size):
            X = to_mask(combo)
            if is_basin(G, X, omega):
                found.append(X)
    return [Basin(X, not any(Y != X and Y & X == Y for Y in found)) for X in found]


def substitute(G: Graph, v: int, H: Graph) -> Graph:
    """Replace vertex ``v`` of G by H, joining all of H to N(v).

    G - v keeps its order on indices 0..n-2; H follows on the last |H| indices.
    """
    if H.n < 2 or G.n < 2:
        raise GraphError("substitution needs |V(G)| >= 2 and |V(H)| >= 2")
    total = G.n - 1 + H.n
    if total > MAX_VERTICES:
        raise GraphError(f"substitution result has {total} > {MAX_VERTICES} vertices")
    keep = [u for u in range(G.n) if u != v]
    index = {u: i for i, u in enumerate(keep)}
    offset = G.n - 1
    image = ((1 << H.n) - 1) << offset
    adj = []
    for u in keep:
        row = 0
        for w in members(G.adj[u]):
            if w != v:
                row |= 1 << index[w]
        if G.adj[u] >> v & 1:
            row |= image
        adj.append(row)
    nbrs = 0
    for w in members(G.adj[v]):
        nbrs |= 1 << index[w]
    for row in H.adj:
        adj.append(row << offset | nbrs)
    return Graph(total, tuple(adj))


def substitution_image(G: Graph, H: Graph) -> int:
    """Mask of the vertices occupied by H in ``substitute(G, v, H)``."""
    return ((1 << H.n) - 1) << (G.n - 1)


def weight_expand(G: Graph, h: Sequence[int], x: int | None = None) -> tuple[Graph, tuple[int, ...]]:
    """Blow a vertex of weight h(x) up into a clique of h(x) unit-weight vertices.

    ``x`` keeps its index and the h(x) - 1 new clique vertices are appended.
    Without ``x``, every vertex of weight >= 2 is expanded in ascending order,
    giving an unweighted graph.
    """
    h = check_weights(G, h)
    if x is None:
        for v in range(G.n):
            if h[v] >= 2:
                G, h = weight_expand(G, h, v)
        return G, h
    if h[x] < 2:
        raise GraphError("expansion needs h(x) >= 2")
    extra = h[x] - 1
    total = G.n + extra
    if total > MAX_VERTICES:
        raise GraphError(f"expansion has {total} > {MAX_VERTICES} vertices")
    new = ((1 << extra) - 1) << G.n
    blob = new | (1 << x)
    adj = list(G.adj)
    for u in members(G.adj[x]):
        adj[u] |= new
    adj[x] |= new
    for i in range(extra):
        adj.append(G.adj[x] | (blob & ~(1 << (G.n + i))))
    weights = tuple(1 if v == x else h[v] for v in range(G.n)) + (1,) * extra
    return Graph(total, tuple(adj)), weights


@dataclass(frozen=True)
class InducedMatch:
    free: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.free


def find_induced(G: Graph, P: Graph) -> tuple[int, ...] | None:
    """An injective map from P into G preserving adjacency and non-adjacency."""
    if P.n > G.n:
        return None
    order = sorted(range(P.n), key=lambda v: (-P.degree(v), v))
    placed: dict[int, int] = {}

    def go(i, used):
        if i == P.n:
            return True
        p = order[i]
        cand = G.full & ~used
        for q, g in placed.items():
            cand &= G.adj[g] if P.adj[p] >> q & 1 else ~G.adj[g]
        for g in members(cand):
            placed[p] = g
            if go(i + 1, used | (1 << g)):
                return True
            del placed[p]
        return False

    if go(0, 0):
        return tuple(placed[p] for p in range(P.n))
    return None


def induced_free(G: Graph, pattern) -> InducedMatch:
    """Whether G has no induced copy of ``pattern`` (a Graph or a catalog name)."""
    P = named_pattern(pattern) if isinstance(pattern, str) else pattern
    if P.n > 8:
        raise GraphError("patterns are limited to 8 vertices")
    witness = find_induced(G, P)
    return InducedMatch(witness is None, witness)
