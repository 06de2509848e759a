"""Canonical forms and enumeration of small non-isomorphic graphs.

The canonical code of a graph is the lexicographically least graph6 string
over the labellings reached by an individualisation/refinement search. The
search only explores labellings compatible with an isomorphism-invariant
ordered partition, so the minimum is an isomorphism invariant, and it is
exact: two graphs are isomorphic iff their codes agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .errors import CapabilityError
from .formats import emit_graph6, iter_graph6_file, parse_graph6
from .graph import Graph, is_connected, members

INTERNAL_MAX_N = 8
# Triangle-freeness is hereditary, so filtered generation stays cheap further out.
INTERNAL_MAX_N_TRIANGLE_FREE = 10


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _code(adj: tuple[int, ...], order: list[int]) -> bytes:
    n = len(order)
    out = bytearray([n + 63])
    acc = nacc = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            acc = acc << 1 | (row >> order[i] & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out)


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    # Twins u, v in one cell are swapped by an automorphism fixing the partition,
    # so individualising either yields the same set of leaves.
    reps: list[int] = []
    for v in cell:
        for u in reps:
            bu, bv = 1 << u, 1 << v
            if adj[u] & ~bv == adj[v] & ~bu:
                break
        else:
            reps.append(v)
    return reps


def canonical_labeling(G: Graph) -> tuple[bytes, list[int]]:
    """Return (code, order) where ``order[i]`` is the vertex placed at position i."""
    adj = G.adj
    best: list = [None, None]

    def search(cells):
        cells = _refine(adj, cells)
        if len(cells) == G.n:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[idx]
        for v in _twin_representatives(adj, cell):
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    search([list(range(G.n))])
    return best[0], best[1]


def canonical_code(G: Graph) -> str:
    return canonical_labeling(G)[0].decode("ascii")


def canonical_form(G: Graph) -> Graph:
    return parse_graph6(canonical_labeling(G)[0])


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.num_edges == H.num_edges and canonical_code(G) == canonical_code(H)


def is_triangle_free(G: Graph) -> bool:
    for v in range(G.n):
        row = G.adj[v]
        for u in members(row):
            if u > v and G.adj[u] & row:
                return False
    return True


def _extensions(G: Graph, triangle_free: bool) -> Iterator[Graph]:
    n = G.n
    for S in range(1 << n):
        if triangle_free and any(G.adj[v] & S for v in members(S)):
            continue
        adj = [row | ((S >> v & 1) << n) for v, row in enumerate(G.adj)]
        adj.append(S)
        yield Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _codes(n: int, triangle_free: bool) -> tuple[str, ...]:
    if n == 1:
        return ("@",)
    seen = set()
    for code in _codes(n - 1, triangle_free):
        for H in _extensions(parse_graph6(code), triangle_free):
            seen.add(canonical_labeling(H)[0].decode("ascii"))
    return tuple(sorted(seen))


@dataclass
class Corpus:
    """A single-consumer stream of graphs with a human-readable description.

    ``source`` is either a callable producing graphs or a path to a graph6
    file. Filters are applied lazily while iterating.
    """

    description: str
    source: Callable[[], Iterable[Graph]] | Path
    connected: bool = False
    triangle_free: bool = False
    max_n: int | None = None
    predicate: Callable[[Graph], bool] | None = None
    position: int = field(default=0, init=False)

    def _raw(self) -> Iterable[Graph]:
        if isinstance(self.source, Path):
            return iter_graph6_file(self.source)
        return self.source()

    def accepts(self, G: Graph) -> bool:
        if self.max_n is not None and G.n > self.max_n:
            return False
        if self.connected and not is_connected(G):
            return False
        if self.triangle_free and not is_triangle_free(G):
            return False
        return self.predicate is None or self.predicate(G)

    def __iter__(self) -> Iterator[Graph]:
        self.position = 0
        for G in self._raw():
            if self.accepts(G):
                self.position += 1
                yield G


def _check_internal(n: int, triangle_free: bool) -> None:
    limit = INTERNAL_MAX_N_TRIANGLE_FREE if triangle_free else INTERNAL_MAX_N
    if n > limit:
        cap = "triangle-free enumeration" if triangle_free else "enumeration"
        raise CapabilityError(cap, limit, n)


def enumerate_graphs(n: int, *, triangle_free: bool = False) -> list[Graph]:
    """All non-isomorphic graphs on ``n`` vertices in canonical-code order."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_internal(n, triangle_free)
    return [parse_graph6(code) for code in _codes(n, triangle_free)]


def enumerate_corpus(n: int, *, connected: bool = False, triangle_free: bool = False,
                     predicate: Callable[[Graph], bool] | None = None) -> Corpus:
    _check_internal(n, triangle_free)
    tags = [t for t, on in (("connected", connected), ("triangle-free", triangle_free)) if on]
    desc = f"all graphs on {n} vertices" + (f" ({', '.join(tags)})" if tags else "")
    return Corpus(desc, lambda: enumerate_graphs(n, triangle_free=triangle_free),
                  connected=connected, triangle_free=triangle_free, predicate=predicate)


def corpus_upto(max_n: int, *, min_n: int = 1, connected: bool = False,
                triangle_free: bool = False,
                predicate: Callable[[Graph], bool] | None = None) -> Corpus:
    _check_internal(max_n, triangle_free)

    def gen():
        for k in range(min_n, max_n + 1):
            yield from enumerate_graphs(k, triangle_free=triangle_free)

    tags = [t for t, on in (("connected", connected), ("triangle-free", triangle_free)) if on]
    desc = f"all graphs on {min_n}..{max_n} vertices" + (f" ({', '.join(tags)})" if tags else "")
    return Corpus(desc, gen, connected=connected, triangle_free=triangle_free,
                  predicate=predicate)


def graph6_corpus(path, **filters) -> Corpus:
    path = Path(path)
    return Corpus(f"graph6 file {path.name}", path, **filters)


def corpus_of(graphs: Iterable[Graph], description: str = "explicit graphs") -> Corpus:
    graphs = list(graphs)
    return Corpus(description, lambda: graphs)


def dedupe(graphs: Iterable[Graph]) -> list[Graph]:
    """Drop isomorphic duplicates, keeping first occurrences."""
    seen, out = set(), []
    for G in graphs:
        code = canonical_code(G)
        if code not in seen:
            seen.add(code)
            out.append(G)
    return out


def graph6_codes(graphs: Iterable[Graph]) -> list[str]:
    return [emit_graph6(G).decode("ascii") for G in graphs]
