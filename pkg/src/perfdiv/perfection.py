"""Perfect-graph recognition through odd holes and odd antiholes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

import numpy as np

from .errors import CapabilityError, GraphError
from .graph import Graph, complement, lex_key, members, to_mask

CycleKind = Literal["none", "odd_hole", "odd_antihole"]

DIRECT_CAP = 32
TABLE_CAP = 20


@dataclass(frozen=True)
class PerfectionVerdict:
    perfect: bool
    witness: int | None = None
    kind: CycleKind | None = None

    def __bool__(self):
        return self.perfect

    def to_dict(self) -> dict:
        return {
            "perfect": self.perfect,
            "witness": None if self.witness is None else members(self.witness),
            "kind": self.kind,
        }


def _is_cycle(adj: Sequence[int], S: int) -> bool:
    # G[S] is a single cycle iff it is 2-regular and connected.
    for v in members(S):
        if (adj[v] & S).bit_count() != 2:
            return False
    start = S & -S
    seen = frontier = start
    while frontier:
        reach = 0
        for v in members(frontier):
            reach |= adj[v]
        frontier = reach & S & ~seen
        seen |= frontier
    return seen == S


def _is_anticycle(adj: Sequence[int], S: int) -> bool:
    k = S.bit_count()
    for v in members(S):
        if (adj[v] & S).bit_count() != k - 3:
            return False
    co = [0] * len(adj)
    for v in members(S):
        co[v] = S & ~adj[v] & ~(1 << v)
    return _is_cycle(co, S)


def classify_cycle_set(G: Graph, S) -> CycleKind:
    """Whether ``G[S]`` is an odd hole, an odd antihole, or neither.

    A 5-vertex set that is both (an induced C5) reports ``odd_hole``.
    """
    S = to_mask(S)
    k = S.bit_count()
    if k < 5:
        raise GraphError("cycle classification needs at least 5 vertices")
    if k % 2 == 0:
        return "none"
    if _is_cycle(G.adj, S):
        return "odd_hole"
    if _is_anticycle(G.adj, S):
        return "odd_antihole"
    return "none"


def iter_holes(adj: Sequence[int], allowed: int, length: int) -> Iterator[list[int]]:
    """Chordless cycles of exactly ``length`` (>= 4) vertices inside ``allowed``.

    Each cycle is yielded once, as a vertex sequence starting at its least
    vertex and oriented so that the second vertex is smaller than the last.
    """
    for s in members(allowed):
        above = allowed & ~((2 << s) - 1)
        path = [s]

        def extend(blocked):
            last = path[-1]
            depth = len(path)
            cand = adj[last] & above & ~blocked
            if depth == length - 1:
                cand &= adj[s]
                for v in members(cand):
                    if path[1] < v:
                        yield path + [v]
                return
            cand &= ~adj[s]
            for v in members(cand):
                path.append(v)
                # interior vertices may not touch later path vertices
                yield from extend(blocked | (adj[last] if depth > 1 else 0) | (1 << last))
                path.pop()

        for p1 in members(adj[s] & above):
            path.append(p1)
            yield from extend(1 << s)
            path.pop()


def _complement_rows(G: Graph) -> tuple[int, ...]:
    return complement(G).adj


def odd_holes(G: Graph, S=None, length: int = 5) -> list[int]:
    S = G.full if S is None else to_mask(S)
    return sorted({to_mask(c) for c in iter_holes(G.adj, S, length)}, key=lex_key)


def odd_antiholes(G: Graph, S=None, length: int = 5) -> list[int]:
    S = G.full if S is None else to_mask(S)
    co = _complement_rows(G)
    return sorted({to_mask(c) for c in iter_holes(co, S, length)}, key=lex_key)


def has_odd_antihole(G: Graph, S=None, min_length: int = 5) -> int | None:
    """Lexicographically least odd antihole of the least length >= ``min_length``, if any."""
    S = G.full if S is None else to_mask(S)
    co = _complement_rows(G)
    start = min_length if min_length % 2 else min_length + 1
    for k in range(max(start, 5), S.bit_count() + 1, 2):
        found = [to_mask(c) for c in iter_holes(co, S, k)]
        if found:
            return min(found, key=lex_key)
    return None


def is_perfect(G: Graph, S=None) -> PerfectionVerdict:
    """Decide whether ``G[S]`` is perfect.

    On failure the witness is a minimum-size odd hole or odd antihole, the
    lexicographically least among those of that size.
    """
    S = G.full if S is None else to_mask(S)
    k = S.bit_count()
    if k > DIRECT_CAP:
        raise CapabilityError("perfection", DIRECT_CAP, k)
    co = _complement_rows(G)
    for length in range(5, k + 1, 2):
        holes = {to_mask(c) for c in iter_holes(G.adj, S, length)}
        antiholes = {to_mask(c) for c in iter_holes(co, S, length)}
        if holes or antiholes:
            witness = min(holes | antiholes, key=lex_key)
            kind = "odd_hole" if witness in holes else "odd_antihole"
            return PerfectionVerdict(False, witness, kind)
    return PerfectionVerdict(True)


def subset_perfection_table(G: Graph, cap: int = TABLE_CAP) -> np.ndarray:
    """Boolean array with ``table[S]`` true iff ``G[S]`` is perfect."""
    if G.n > cap:
        raise CapabilityError("subset-table", cap, G.n)
    size = 1 << G.n
    table = bytearray(b"\x01") * size
    adj = G.adj
    for S in range(size):
        k = S.bit_count()
        if k < 5:
            continue
        rest = S
        ok = True
        while rest:
            low = rest & -rest
            if not table[S ^ low]:
                ok = False
                break
            rest ^= low
        if ok and k % 2 and (_is_cycle(adj, S) or _is_anticycle(adj, S)):
            ok = False
        table[S] = ok
    return np.frombuffer(bytes(table), dtype=np.bool_).copy()


def is_perfect_graph(G: Graph) -> bool:
    return is_perfect(G).perfect

