"""Exact clique, independence and chromatic numbers, plus subset tables."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapabilityError, GraphError
from .graph import Graph, complement, induced, lowest, members, to_mask

WeightFunction = tuple[int, ...]

CHROMATIC_CAP = 32
TABLE_CAP = 20


def check_weights(G: Graph, h: Sequence[int] | None) -> WeightFunction:
    if h is None:
        return (1,) * G.n
    h = tuple(int(w) for w in h)
    if len(h) != G.n:
        raise GraphError(f"weight function has {len(h)} entries for {G.n} vertices")
    if any(w < 1 for w in h):
        raise GraphError("weights must be positive integers")
    return h


def unit_weight(n: int, x: int, value: int = 2) -> WeightFunction:
    return tuple(value if v == x else 1 for v in range(n))


def h2_family(G: Graph) -> Iterator[WeightFunction]:
    """Weight functions doubling a single vertex, in ascending vertex order."""
    for x in range(G.n):
        yield unit_weight(G.n, x)


def bounded_weights(n: int, W: int) -> Iterator[WeightFunction]:
    """All weight functions with values in 1..W, lexicographic."""
    return itertools.product(range(1, W + 1), repeat=n)


def _max_weight_clique(adj: Sequence[int], cand: int, w: Sequence[int] | None) -> int:
    best = 0

    def weight(mask):
        if w is None:
            return mask.bit_count()
        return sum(w[v] for v in members(mask))

    def expand(cand, cur):
        nonlocal best
        if not cand:
            if cur > best:
                best = cur
            return
        if cur + weight(cand) <= best:
            return
        while cand:
            v = lowest(cand)
            expand(cand & adj[v], cur + (1 if w is None else w[v]))
            cand &= ~(1 << v)
            if cur + weight(cand) <= best:
                return

    expand(cand, 0)
    return best


def clique_number(G: Graph, h: Sequence[int] | None = None, S=None) -> int:
    """Maximum weight of a clique inside ``S`` (all of V by default); 0 for the empty set."""
    S = G.full if S is None else to_mask(S)
    w = None if h is None else check_weights(G, h)
    return _max_weight_clique(G.adj, S, w)


def independence_number(G: Graph, S=None) -> int:
    return clique_number(complement(G), S=S)


def _greedy_coloring(G: Graph, order: list[int]) -> int:
    color = {}
    for v in order:
        used = {color[u] for u in members(G.adj[v]) if u in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return max(color.values(), default=-1) + 1


def _colorable(G: Graph, order: list[int], k: int) -> bool:
    color = [-1] * G.n
    # class_masks[c] holds the vertices currently coloured c
    class_masks = [0] * k

    def assign(i, used):
        if i == len(order):
            return True
        v = order[i]
        row = G.adj[v]
        # a new colour may only be opened right after the highest one in use
        for c in range(min(used + 1, k)):
            if class_masks[c] & row:
                continue
            color[v] = c
            class_masks[c] |= 1 << v
            if assign(i + 1, max(used, c + 1)):
                return True
            class_masks[c] &= ~(1 << v)
            color[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(G: Graph, S=None) -> int:
    """Exact chromatic number of ``G[S]`` by branch and bound; 0 for the empty set."""
    S = G.full if S is None else to_mask(S)
    k = S.bit_count()
    if k > CHROMATIC_CAP:
        raise CapabilityError("chromatic", CHROMATIC_CAP, k)
    if k == 0:
        return 0
    H = induced(G, S) if S != G.full else G
    order = sorted(range(H.n), key=lambda v: (-H.degree(v), v))
    upper = _greedy_coloring(H, order)
    lower = clique_number(H)
    for c in range(lower, upper):
        if _colorable(H, order, c):
            return c
    return upper


def is_k_critical(G: Graph, k: int) -> bool:
    """Vertex-criticality: chi(G) = k and every vertex deletion drops chi below k."""
    if k < 1:
        raise GraphError("k must be positive")
    if chromatic_number(G) != k:
        return False
    return all(chromatic_number(G, G.full & ~(1 << v)) <= k - 1 for v in range(G.n))


def _check_table_cap(G: Graph, cap: int) -> None:
    if G.n > cap:
        raise CapabilityError("subset-table", cap, G.n)


def subset_clique_table(G: Graph, h: Sequence[int] | None = None, cap: int = TABLE_CAP) -> np.ndarray:
    """``table[S]`` = weighted clique number of ``G[S]`` for every subset mask ``S``."""
    _check_table_cap(G, cap)
    w = check_weights(G, h)
    size = 1 << G.n
    table = [0] * size
    adj = G.adj
    for S in range(1, size):
        v = (S & -S).bit_length() - 1
        rest = S & (S - 1)
        with_v = w[v] + table[S & adj[v]]
        table[S] = with_v if with_v > table[rest] else table[rest]
    return np.array(table, dtype=np.int64)


def subset_clique_tables(G: Graph, weights: Iterable[Sequence[int]], cap: int = TABLE_CAP) -> np.ndarray:
    """Vectorised clique tables: shape ``(2**n, m)`` for ``m`` weight functions."""
    _check_table_cap(G, cap)
    H = np.asarray(list(weights), dtype=np.int64)
    if H.ndim != 2 or H.shape[1] != G.n:
        raise GraphError("weights must be an (m, n) array")
    if (H < 1).any():
        raise GraphError("weights must be positive integers")
    size = 1 << G.n
    table = np.zeros((size, H.shape[0]), dtype=np.int64)
    adj = G.adj
    for S in range(1, size):
        v = (S & -S).bit_length() - 1
        np.maximum(table[S & (S - 1)], H[:, v] + table[S & adj[v]], out=table[S])
    return table
