import random
from collections import Counter
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import brute_canonical
from perfdiv.catalog import cycle, groetzsch
from perfdiv.corpus import (
    canonical_code,
    canonical_form,
    corpus_of,
    corpus_upto,
    dedupe,
    enumerate_corpus,
    enumerate_graphs,
    graph6_corpus,
    is_isomorphic,
    is_triangle_free,
)
from perfdiv.errors import CapabilityError
from perfdiv.formats import write_graph6_file
from perfdiv.graph import make_graph

ATLAS = nx.graph_atlas_g()


def atlas(n):
    return [g for g in ATLAS if g.number_of_nodes() == n]


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_match_the_atlas(n):
    assert len(enumerate_graphs(n)) == len(atlas(n))


def test_known_counts():
    assert [len(enumerate_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_hits_every_atlas_class(n):
    codes = {canonical_code(G) for G in enumerate_graphs(n)}
    for g in atlas(n):
        G = make_graph(n, g.edges())
        assert canonical_code(G) in codes


def test_connected_counts():
    # connected graphs on 1..7 vertices
    got = [sum(1 for _ in enumerate_corpus(n, connected=True)) for n in range(1, 8)]
    assert got == [sum(nx.is_connected(g) for g in atlas(n)) for n in range(1, 8)]


def test_triangle_free_counts_upto_7():
    for n in range(1, 8):
        want = sum(1 for g in atlas(n) if sum(nx.triangles(g).values()) == 0)
        assert len(enumerate_graphs(n, triangle_free=True)) == want


def _triangle_free_8_by_networkx():
    # extend each triangle-free 7-vertex graph by a vertex joined to an independent set
    seen: dict[str, list] = {}
    for g in atlas(7):
        if sum(nx.triangles(g).values()):
            continue
        for k in range(8):
            for S in combinations(range(7), k):
                if any(g.has_edge(a, b) for a, b in combinations(S, 2)):
                    continue
                h = g.copy()
                h.add_node(7)
                h.add_edges_from((7, s) for s in S)
                key = nx.weisfeiler_lehman_graph_hash(h)
                bucket = seen.setdefault(key, [])
                if not any(nx.is_isomorphic(h, o) for o in bucket):
                    bucket.append(h)
    return sum(len(b) for b in seen.values())


def test_triangle_free_count_8_against_networkx():
    assert len(enumerate_graphs(8, triangle_free=True)) == _triangle_free_8_by_networkx() == 410


def test_triangle_free_count_9():
    # the published count of triangle-free graphs on 9 vertices
    assert len(enumerate_graphs(9, triangle_free=True)) == 1897


def test_caps():
    with pytest.raises(CapabilityError):
        enumerate_graphs(9)
    with pytest.raises(CapabilityError):
        enumerate_graphs(11, triangle_free=True)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_canonical_code_is_invariant_under_relabelling(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = make_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])
    assert canonical_code(G) == canonical_code(H)
    assert canonical_form(G) == canonical_form(H)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_agrees_with_brute_force(G, H):
    same = G.n == H.n and G.num_edges == H.num_edges and brute_canonical(G) == brute_canonical(H)
    assert is_isomorphic(G, H) == same


def test_isomorphism_on_regular_graphs():
    # regular graphs are where refinement alone is useless
    rng = random.Random(3)
    for _ in range(20):
        g = nx.random_regular_graph(3, 10, seed=rng.randrange(10**6))
        perm = list(range(10))
        rng.shuffle(perm)
        G = make_graph(10, g.edges())
        H = make_graph(10, [(perm[u], perm[v]) for u, v in g.edges()])
        assert is_isomorphic(G, H)
    prism = make_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    k33 = make_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert not is_isomorphic(prism, k33)


def test_corpus_filters_and_order():
    c = corpus_upto(5, min_n=4, connected=True)
    gs = list(c)
    assert [G.n for G in gs] == sorted(G.n for G in gs)
    assert len(gs) == 6 + 21
    assert "4..5" in c.description


def test_graph6_corpus_filters(tmp_path):
    p = tmp_path / "x.g6"
    write_graph6_file(p, [cycle(5), make_graph(3, [(0, 1), (1, 2), (0, 2)]), groetzsch()])
    assert len(list(graph6_corpus(p, triangle_free=True))) == 2
    assert len(list(graph6_corpus(p, max_n=5))) == 2


def test_dedupe_and_triangle_free():
    G = cycle(5)
    H = make_graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert len(dedupe([G, H, G])) == 1
    assert is_triangle_free(groetzsch())
    assert list(corpus_of([G], "one")) == [G]
    assert Counter(G.n for G in corpus_upto(3)) == {1: 1, 2: 2, 3: 4}
