"""Perfect divisions, 2-divisions, divisibility certificates and clique-cutset moves.

A perfect division of ``G[T]`` splits T into (A, B) with ``G[A]`` perfect and
``omega_h(B) < omega_h(T)``; a 2-division instead asks both sides to have
smaller clique number. All deciders here are exhaustive over vertex subsets
and share two per-graph tables: subset perfection and subset clique number.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .errors import CapabilityError, GraphError, PreconditionError
from .formats import graph6
from .graph import (
    Graph,
    component_masks,
    induced,
    is_clique,
    lex_key,
    lowest,
    members,
    to_mask,
)
from .invariants import (
    bounded_weights,
    check_weights,
    clique_number,
    h2_family,
    subset_clique_table,
    subset_clique_tables,
)
from .perfection import is_perfect, subset_perfection_table

DivisionKind = Literal["perfect", "h_perfect", "two"]

PD_CAP = 16
WEIGHTED_CAP = 12
PWD_CAP = 8


@dataclass(frozen=True)
class Division:
    A: int
    B: int
    kind: DivisionKind
    h: tuple[int, ...] | None = None

    @property
    def target(self) -> int:
        return self.A | self.B

    def to_dict(self) -> dict:
        d = {"A": members(self.A), "B": members(self.B), "kind": self.kind}
        if self.h is not None:
            d["h"] = list(self.h)
        return d


@dataclass
class Certificate:
    subject: str
    claim: str
    verdict: bool
    evidence: dict = field(default_factory=dict)
    assumptions: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "claim": self.claim,
            "verdict": self.verdict,
            "evidence": self.evidence,
            "assumptions": list(self.assumptions),
            "stats": self.stats,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kwargs)


def _check_cap(G: Graph, cap: int, name: str) -> None:
    if G.n > cap:
        raise CapabilityError(name, cap, G.n)


def _submasks(S: int) -> np.ndarray:
    subs = np.zeros(1, dtype=np.int64)
    for v in members(S):
        subs = np.concatenate((subs, subs | (1 << v)))
    return subs


def perfect_division_table(perf: np.ndarray, omega: np.ndarray) -> np.ndarray:
    """``has[S]`` true iff ``G[S]`` has a perfect division under the given clique table.

    ``omega`` may be 1-D (one weight function) or 2-D with one column per
    weight function, in which case the result has the same shape.
    """
    size = perf.shape[0]
    if omega.ndim == 1:
        has = perf.copy()
    else:
        has = np.repeat(perf[:, None], omega.shape[1], axis=1)
    for S in range(1, size):
        if perf[S]:
            continue
        subs = _submasks(S)
        cands = subs[perf[S ^ subs]]
        has[S] = (omega[cands] < omega[S]).any(axis=0)
    return has


def two_division_table(omega: np.ndarray) -> np.ndarray:
    """``has[S]`` true iff ``G[S]`` has a 2-division or has no edge (exempt)."""
    size = omega.shape[0]
    has = np.ones(size, dtype=np.bool_)
    for S in range(1, size):
        t = omega[S]
        if t <= 1:
            continue
        subs = _submasks(S)
        has[S] = bool(((omega[subs] < t) & (omega[S ^ subs] < t)).any())
    return has


def _has_perfect_division(perf: np.ndarray, omega: np.ndarray, S: int) -> bool:
    if perf[S]:
        return True
    subs = _submasks(S)
    return bool((omega[subs[perf[S ^ subs]]] < omega[S]).any())


def _least_failing(has: np.ndarray, exclude: int | None = None) -> int | None:
    failing = np.flatnonzero(~has)
    failing = [int(S) for S in failing if S and S != exclude]
    return min(failing, key=lex_key) if failing else None


def _subject(G: Graph) -> str:
    return graph6(G) if G.n <= 62 else f"<{G.n}-vertex graph>"


def division_tables(G: Graph, kind: Literal["perfect", "two"] = "perfect",
                    h: Sequence[int] | None = None, cap: int = PD_CAP) -> np.ndarray:
    """Per-subset existence of a division of ``G[S]``, for every subset mask S."""
    _check_cap(G, cap, "exhaustive")
    omega = subset_clique_table(G, h, cap=cap)
    if kind == "two":
        return two_division_table(omega)
    return perfect_division_table(subset_perfection_table(G, cap=cap), omega)


def is_perfectly_divisible(G: Graph, h: Sequence[int] | None = None, cap: int = PD_CAP) -> bool:
    return bool(division_tables(G, "perfect", h, cap).all())


def is_two_divisible(G: Graph, cap: int = PD_CAP) -> bool:
    return bool(division_tables(G, "two", cap=cap).all())


Scheme = Literal["pd", "h", "h2", "pwd", "2div"]


def is_divisible(G: Graph, scheme: Scheme = "pd", *, h: Sequence[int] | None = None,
                 weight_bound: int = 3, pd_cap: int = PD_CAP,
                 weighted_cap: int = WEIGHTED_CAP, pwd_cap: int = PWD_CAP) -> Certificate:
    """Certify perfect (weight) divisibility or 2-divisibility of ``G``.

    Schemes: ``pd`` unit weights; ``h`` a given weight function; ``h2`` every
    weight function doubling one vertex; ``pwd`` every weight function with
    values in 1..weight_bound; ``2div`` 2-divisibility. A negative verdict
    names the lexicographically least failing subset (and weight function).
    """
    start = time.perf_counter()
    assumptions = ["empty and single-vertex subsets are divisible (A = S, B = empty)"]
    evidence: dict = {}
    if scheme in ("pd", "2div"):
        _check_cap(G, pd_cap, "exhaustive")
        has = division_tables(G, "two" if scheme == "2div" else "perfect", cap=pd_cap)
        failing = _least_failing(has)
        claim = "2DIV" if scheme == "2div" else "PD"
        if scheme == "2div":
            assumptions.append("edgeless subsets are exempt from needing a 2-division")
        evidence["subsets_checked"] = (1 << G.n) - 1
        if failing is not None:
            evidence["failing_subset"] = members(failing)
    elif scheme in ("h", "h2", "pwd"):
        if scheme == "h":
            if h is None:
                raise GraphError("scheme 'h' needs a weight function")
            weights = [check_weights(G, h)]
            claim = "PD_h"
            _check_cap(G, weighted_cap, "weighted")
        elif scheme == "h2":
            weights = list(h2_family(G))
            claim = "H2PD"
            _check_cap(G, weighted_cap, "weighted")
        else:
            if weight_bound < 1:
                raise GraphError("weight bound must be >= 1")
            if weight_bound >= 2:
                _check_cap(G, pwd_cap, "bounded-weight")
            else:
                _check_cap(G, pd_cap, "exhaustive")
            weights = list(bounded_weights(G.n, weight_bound))
            claim = f"PWD_bounded({weight_bound})"
            assumptions.append(
                f"weights restricted to 1..{weight_bound}; not a proof of perfect weight divisibility")
        cap = max(weighted_cap, pwd_cap, pd_cap)
        omega = subset_clique_tables(G, weights, cap=cap)
        perf = subset_perfection_table(G, cap=cap)
        has = perfect_division_table(perf, omega)
        bad_rows = np.flatnonzero(~has.all(axis=1))
        evidence["subsets_checked"] = (1 << G.n) - 1
        evidence["weight_functions_checked"] = len(weights)
        failing = None
        if len(bad_rows):
            failing = min((int(S) for S in bad_rows), key=lex_key)
            j = int(np.flatnonzero(~has[failing])[0])
            evidence["failing_subset"] = members(failing)
            evidence["failing_weights"] = list(weights[j])
        if scheme == "h":
            evidence["weights"] = list(weights[0])
    else:
        raise GraphError(f"unknown scheme {scheme!r}")
    stats = {"wall_time_ms": round((time.perf_counter() - start) * 1000, 3)}
    return Certificate(_subject(G), claim, failing is None, evidence, assumptions, stats)


def certify_minimal(G: Graph, scheme: Literal["mnpd", "mn2d"] = "mnpd", cap: int = PD_CAP) -> Certificate:
    """Decide minimal non-(perfect / 2-) divisibility exhaustively.

    True iff the whole vertex set has no division while every proper nonempty
    subset has one (for 2-divisions, subsets without edges are exempt).
    """
    start = time.perf_counter()
    _check_cap(G, cap, "exhaustive")
    kind = "two" if scheme == "mn2d" else "perfect"
    if scheme not in ("mnpd", "mn2d"):
        raise GraphError(f"unknown scheme {scheme!r}")
    has = division_tables(G, kind, cap=cap)
    V = G.full
    whole = bool(has[V])
    proper_failing = _least_failing(has, exclude=V)
    verdict = not whole and proper_failing is None
    evidence = {
        "whole_graph_has_division": whole,
        "proper_subsets_checked": (1 << G.n) - 2,
        "search": f"exhaustive over all {1 << G.n} vertex subsets",
    }
    if proper_failing is not None:
        evidence["failing_proper_subset"] = members(proper_failing)
    assumptions = ["empty and single-vertex subsets are divisible (A = S, B = empty)"]
    if scheme == "mn2d":
        assumptions.append("edgeless subsets are exempt from needing a 2-division")
    stats = {"wall_time_ms": round((time.perf_counter() - start) * 1000, 3)}
    return Certificate(_subject(G), scheme.upper(), verdict, evidence, assumptions, stats)


def find_division(G: Graph, target=None, kind: Literal["perfect", "two"] = "perfect",
                  h: Sequence[int] | None = None, cap: int = PD_CAP) -> Division | None:
    """A division of ``G[target]``, or None if there is none.

    Candidate A sides are tried largest first, then in lexicographic order.
    """
    T = G.full if target is None else to_mask(target)
    if not T:
        raise GraphError("division target must be nonempty")
    if kind not in ("perfect", "two"):
        raise GraphError(f"unknown division kind {kind!r}")
    _check_cap(G, cap, "exhaustive")
    w = None if h is None else check_weights(G, h)
    omega = subset_clique_table(G, w, cap=cap)
    perf = subset_perfection_table(G, cap=cap) if kind == "perfect" else None
    label = "two" if kind == "two" else ("h_perfect" if w is not None and set(w) != {1} else "perfect")
    t = omega[T]
    verts = members(T)
    for k in range(len(verts), -1, -1):
        for combo in itertools.combinations(verts, k):
            A = to_mask(combo)
            B = T ^ A
            if kind == "perfect":
                ok = perf[A] and omega[B] < t
            else:
                ok = omega[A] < t and omega[B] < t
            if ok:
                return Division(A, B, label, w if label == "h_perfect" else None)
    return None


def validate_division(G: Graph, d: Division, target=None) -> bool:
    """Recheck a division from scratch, without the subset tables."""
    T = d.target if target is None else to_mask(target)
    if d.A & d.B or d.A | d.B != T:
        return False
    w = d.h
    t = clique_number(G, w, S=T)
    if d.kind == "two":
        return clique_number(G, w, S=d.A) < t and clique_number(G, w, S=d.B) < t
    return is_perfect(G, d.A).perfect and clique_number(G, w, S=d.B) < t


def division_through_vertex(G: Graph, v: int, cap: int = PD_CAP) -> Division | None:
    """A perfect division of G whose perfect side contains ``v``, if one exists."""
    _check_cap(G, cap, "exhaustive")
    omega = subset_clique_table(G, cap=cap)
    perf = subset_perfection_table(G, cap=cap)
    V = G.full
    if not _has_perfect_division(perf, omega, V):
        raise PreconditionError("graph has no perfect division")
    t = omega[V]
    others = [u for u in range(G.n) if u != v]
    for k in range(len(others), -1, -1):
        for combo in itertools.combinations(others, k):
            A = to_mask(combo) | (1 << v)
            if perf[A] and omega[V ^ A] < t:
                return Division(A, V ^ A, "perfect")
    return None


@dataclass(frozen=True)
class CutsetSplit:
    X: int
    V1: int
    V2: int
    G1: Graph
    G2: Graph

    @property
    def side1(self) -> int:
        return self.X | self.V1

    @property
    def side2(self) -> int:
        return self.X | self.V2


def cutset_split(G: Graph, X) -> CutsetSplit:
    """Split G along clique cutset X; V1 is the component holding the least vertex of G - X."""
    X = to_mask(X)
    if not X or not is_clique(G, X):
        raise PreconditionError("X is not a nonempty clique")
    comps = component_masks(G, G.full & ~X)
    if len(comps) < 2:
        raise PreconditionError("G - X is connected")
    V1 = comps[0]
    V2 = (G.full & ~X) & ~V1
    return CutsetSplit(X, V1, V2, induced(G, X | V1), induced(G, X | V2))


@dataclass
class RefineOutcome:
    merged: bool
    d1: Division
    d2: Division
    iterations: int
    measures: list[int]
    division: Division | None = None
    stuck: list[int] = field(default_factory=list)


def _mismatch(X, d1, d2):
    return X & ~((d1.A & d2.A) | (d1.B & d2.B))


def refine_cutset_divisions(G: Graph, split: CutsetSplit, d1: Division, d2: Division) -> RefineOutcome:
    """Move clique-cutset vertices between division sides until they agree.

    ``d1`` and ``d2`` are perfect divisions of G[X | V1] and G[X | V2] given
    in G's vertex indices. Each move puts one disagreeing x in X on the same
    side in both divisions, so at most |X| moves happen. The result is either
    a merged perfect division of G or the stuck pair with its witnesses.
    """
    X = split.X
    s1, s2 = split.side1, split.side2
    if not (validate_division(G, d1, s1) and validate_division(G, d2, s2)):
        raise PreconditionError("input divisions are not perfect divisions of G1 and G2")
    om1 = clique_number(G, S=s1)
    om2 = clique_number(G, S=s2)
    A1, B1, A2, B2 = d1.A, d1.B, d2.A, d2.B
    measures = [_mismatch(X, d1, d2).bit_count()]
    iterations = 0
    while True:
        mism = X & ~((A1 & A2) | (B1 & B2))
        if not mism:
            break
        moved = False
        for x in members(mism):
            b = 1 << x
            if A1 & b:  # x in A1 and B2
                if clique_number(G, S=B1 | b) < om1:
                    A1, B1 = A1 & ~b, B1 | b
                    moved = True
                elif is_perfect(G, A2 | b).perfect:
                    A2, B2 = A2 | b, B2 & ~b
                    moved = True
            else:  # x in A2 and B1
                if clique_number(G, S=B2 | b) < om2:
                    A2, B2 = A2 & ~b, B2 | b
                    moved = True
                elif is_perfect(G, A1 | b).perfect:
                    A1, B1 = A1 | b, B1 & ~b
                    moved = True
            if moved:
                break
        if not moved:
            break
        iterations += 1
        measures.append((X & ~((A1 & A2) | (B1 & B2))).bit_count())
    n1 = Division(A1, B1, "perfect")
    n2 = Division(A2, B2, "perfect")
    mism = X & ~((A1 & A2) | (B1 & B2))
    if not mism:
        return RefineOutcome(True, n1, n2, iterations, measures,
                             division=Division(A1 | A2, B1 | B2, "perfect"))
    return RefineOutcome(False, n1, n2, iterations, measures, stuck=members(mism))


def find_p4_witness(G: Graph, A2, X, x: int) -> tuple[int, tuple[int, int, int, int]]:
    """Locate z and an induced P4 z-a-b-c with a, b, c in A2 - X.

    Requires G[A2] perfect, G[A2 + x] not perfect, X a clique containing x.
    The odd hole or antihole through x picked by the perfection search
    determines the path.
    """
    A2, X = to_mask(A2), to_mask(X)
    bx = 1 << x
    if not X & bx:
        raise PreconditionError("x must lie in X")
    if A2 & bx:
        raise PreconditionError("x must lie outside A2")
    if not is_clique(G, X):
        raise PreconditionError("X must be a clique")
    if not is_perfect(G, A2).perfect:
        raise PreconditionError("G[A2] must be perfect")
    verdict = is_perfect(G, A2 | bx)
    if verdict.perfect:
        raise PreconditionError("G[A2 + x] must be imperfect")
    C = verdict.witness
    if verdict.kind == "odd_hole":
        cyc = _cycle_order(G.adj, C, x)
        # X meets the hole in x and at most one neighbour of x
        if X >> cyc[1] & 1:
            path = (x, cyc[-1], cyc[-2], cyc[-3])
        else:
            path = (x, cyc[1], cyc[2], cyc[3])
        return x, path
    co = [C & ~G.adj[v] & ~(1 << v) if C >> v & 1 else 0 for v in range(G.n)]
    u = _cycle_order(co, C, x)
    m = len(u)
    for j in range(m):
        if not X >> u[j] & 1:
            continue
        plus2, minus2 = u[(j + 2) % m], u[(j - 2) % m]
        if (X >> plus2 & 1) + (X >> minus2 & 1) > 1:
            continue
        if not X >> plus2 & 1:
            return u[j], (u[j], plus2, u[(j - 1) % m], u[(j + 1) % m])
        return u[j], (u[j], minus2, u[(j + 1) % m], u[(j - 1) % m])
    raise AssertionError("no admissible antihole vertex; X is not a clique")


def _cycle_order(adj, C: int, start: int) -> list[int]:
    """Vertices of the cycle ``adj[C]`` from ``start``, heading to its smaller neighbour."""
    order = [start]
    cur = lowest(adj[start] & C)
    while cur != start:
        order.append(cur)
        cur = lowest(adj[cur] & C & ~(1 << order[-2]))
    return order


def is_induced_p4(G: Graph, path: Sequence[int]) -> bool:
    a, b, c, d = path
    if len({a, b, c, d}) != 4:
        return False
    edges = {(a, b), (b, c), (c, d)}
    for p, q in itertools.combinations(path, 2):
        want = (p, q) in edges or (q, p) in edges
        if G.has_edge(p, q) != want:
            return False
    return True
