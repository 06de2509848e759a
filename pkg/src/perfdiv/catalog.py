"""Named small graphs and graph constructions."""

from __future__ import annotations

from .errors import GraphError
from .graph import Graph, MAX_VERTICES, disjoint_union, make_graph, members


def path(k: int) -> Graph:
    if k < 1:
        raise GraphError("P_k needs k >= 1")
    return make_graph(k, [(i, i + 1) for i in range(k - 1)], name=f"P{k}")


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("C_k needs k >= 3")
    return make_graph(k, [(i, (i + 1) % k) for i in range(k)], name=f"C{k}")


def complete(k: int) -> Graph:
    if k < 1:
        raise GraphError("K_k needs k >= 1")
    return make_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)], name=f"K{k}")


def empty(k: int) -> Graph:
    return make_graph(k, [], name=f"{k}K1")


def mycielski(G: Graph) -> Graph:
    """Mycielskian: vertices 0..n-1 keep G, n+i shadows i, 2n is the apex."""
    n = G.n
    if 2 * n + 1 > MAX_VERTICES:
        raise GraphError(f"Mycielskian of a {n}-vertex graph exceeds {MAX_VERTICES} vertices")
    edges = list(G.edges())
    for i in range(n):
        edges += [(n + i, u) for u in members(G.adj[i])]
        edges.append((n + i, 2 * n))
    name = f"M({G.name})" if G.name else None
    return make_graph(2 * n + 1, edges, name=name)


def groetzsch() -> Graph:
    G = mycielski(cycle(5))
    return Graph(G.n, G.adj, "Groetzsch")


_FIXED = {
    "p2": lambda: path(2),
    "p3": lambda: path(3),
    "p4": lambda: path(4),
    "p5": lambda: path(5),
    "c5": lambda: cycle(5),
    "c7": lambda: cycle(7),
    "k3": lambda: complete(3),
    "triangle": lambda: complete(3),
    "k4": lambda: complete(4),
    "claw": lambda: make_graph(4, [(0, 1), (0, 2), (0, 3)], name="claw"),
    "diamond": lambda: make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], name="diamond"),
    "2p3": lambda: _named(disjoint_union(path(3), path(3)), "2P3"),
    "p2+p4": lambda: _named(disjoint_union(path(2), path(4)), "P2+P4"),
    "4k1": lambda: empty(4),
    "groetzsch": groetzsch,
}
_ALIASES = {"grotzsch": "groetzsch", "grötzsch": "groetzsch", "p2up4": "p2+p4",
            "p2_p4": "p2+p4", "k13": "claw", "k1,3": "claw"}
_PARAMETRIC = {"kn": complete, "cn": cycle, "pn": path}

PATTERN_NAMES = tuple(_FIXED) + tuple(_PARAMETRIC)


def _named(G: Graph, name: str) -> Graph:
    return Graph(G.n, G.adj, name)


def pattern(name: str, k: int | None = None) -> Graph:
    """Look up a named graph; ``kn``, ``cn`` and ``pn`` take a size ``k``.

    Sized shorthands like ``k2`` or ``c9`` are accepted too.
    """
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key in _PARAMETRIC:
        if k is None:
            raise GraphError(f"pattern {name!r} needs a size")
        return _PARAMETRIC[key](k)
    if key in _FIXED:
        return _FIXED[key]()
    # sized shorthand such as k2, c9, p6
    if len(key) > 1 and key[0] in "kcp" and key[1:].isdigit():
        return _PARAMETRIC[key[0] + "n"](int(key[1:]))
    raise GraphError(f"unknown pattern {name!r}; known: {', '.join(PATTERN_NAMES)}")
