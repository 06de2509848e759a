import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import brute_omega
from perfdiv.catalog import complete, cycle, empty, groetzsch, path, pattern
from perfdiv.corpus import canonical_code, corpus_upto
from perfdiv.errors import CapabilityError, GraphError, PreconditionError
from perfdiv.graph import component_masks, disjoint_union, is_clique, make_graph, members
from perfdiv.invariants import clique_number
from perfdiv.perfection import is_perfect
from perfdiv.structure import (
    basins,
    clique_cutsets,
    cliques,
    find_induced,
    homogeneous_sets,
    induced_free,
    is_basin,
    is_clique_cutset,
    is_homogeneous,
    is_simplicial_decomposition,
    is_simplicial_set_of,
    simplicial_peeling,
    simplicial_vertices,
    substitute,
    substitution_image,
    weight_expand,
)


def test_homogeneous_examples():
    assert homogeneous_sets(path(4)) == []
    assert homogeneous_sets(cycle(5)) == []
    G = substitute(path(4), 0, complete(2))
    assert substitution_image(path(4), complete(2)) in homogeneous_sets(G)
    assert homogeneous_sets(G, "two_clique") == [substitution_image(path(4), complete(2))]
    assert homogeneous_sets(empty(3), "any") == [0b011]
    assert not is_homogeneous(path(4), {0, 1, 2, 3})


def test_homogeneous_minimality():
    found = homogeneous_sets(complete(4))
    assert len(found) == 6 and all(X.bit_count() == 2 for X in found)
    with pytest.raises(CapabilityError):
        homogeneous_sets(empty(21))


def test_clique_cutsets():
    bowtie = make_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert clique_cutsets(bowtie, "minimum") == [0b00100]
    assert is_clique_cutset(bowtie, {2})
    assert clique_cutsets(cycle(5)) == []
    assert clique_cutsets(groetzsch(), "any") == []
    with pytest.raises(PreconditionError):
        clique_cutsets(disjoint_union(path(2), path(2)))


def test_clique_listing_order():
    cs = cliques(complete(3))
    assert [members(c) for c in cs] == [[0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]]


def test_simplicial_set_examples():
    P = path(4)
    assert is_simplicial_set_of(P, {0}, {1, 2, 3})
    assert not is_simplicial_set_of(P, {1}, {0, 2, 3})
    claw = pattern("claw")
    assert not is_simplicial_set_of(claw, {0}, {1, 2, 3})
    with pytest.raises(GraphError):
        is_simplicial_set_of(P, {0}, {0, 1})
    with pytest.raises(GraphError):
        is_simplicial_set_of(P, set(), {0})


def test_peeling_examples():
    d = simplicial_peeling(path(4))
    assert [members(p) for p in d.parts] == [[1, 2], [0, 3]] and d.perfect
    d = simplicial_peeling(cycle(5))
    assert d.parts == (0b11111,) and not d.perfect
    d = simplicial_peeling(complete(3))
    assert d.parts == (0b111,) and d.perfect
    assert d.to_dict() == {"parts": [[0, 1, 2]], "perfect": True}


def test_basins():
    G = disjoint_union(complete(3), complete(1))
    assert is_basin(G, {3})
    assert [b.vertices for b in basins(G) if b.minimal] == [0b1000]
    assert basins(cycle(5)) == []
    with pytest.raises(GraphError):
        basins(cycle(5), 6)


def test_groetzsch_has_no_basin():
    assert basins(groetzsch()) == []
    assert simplicial_vertices(groetzsch()) == 0


def test_substitute_examples():
    W = substitute(complete(2), 0, cycle(5))
    assert W.n == 6 and W.num_edges == 10
    with pytest.raises(GraphError):
        substitute(complete(2), 0, complete(1))
    with pytest.raises(GraphError):
        substitute(empty(40), 0, empty(30))


def test_weight_expand_examples():
    G, h = weight_expand(complete(1), (3,))
    assert G == complete(3) and h == (1, 1, 1)
    G, h = weight_expand(complete(2), (2, 1), 0)
    assert G == complete(3) and h == (1, 1, 1)
    with pytest.raises(GraphError):
        weight_expand(complete(2), (1, 1), 0)


def test_induced_free_examples():
    assert induced_free(cycle(5), "claw").free
    m = induced_free(pattern("claw"), "claw")
    assert not m.free and m.witness == (0, 1, 2, 3)
    assert induced_free(groetzsch(), "k3")
    assert not induced_free(path(5), "p4")
    assert find_induced(cycle(5), path(4)) is not None
    assert find_induced(cycle(4), path(4)) is None


# -- properties ---------------------------------------------------------------

def test_simplicial_sets_are_anticomplete_cliques():
    for G in corpus_upto(5):
        V = G.full
        for X in range(1, V + 1):
            rest = V & ~X
            Y = rest
            while True:
                if is_simplicial_set_of(G, X, Y):
                    for comp in component_masks(G, X):
                        assert is_clique(G, comp)
                if Y == 0:
                    break
                Y = (Y - 1) & rest


def test_perfection_transfer_exhaustive_n7():
    for G in corpus_upto(7):
        perfect = is_perfect(G).perfect
        for X in range(1, G.full + 1):
            if X != G.full and is_simplicial_set_of(G, X, G.full & ~X):
                assert perfect == is_perfect(G, G.full & ~X).perfect


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), st.data())
def test_peeling_is_a_valid_decomposition(G, data):
    X = data.draw(st.integers(1, G.full))
    d = simplicial_peeling(G, X)
    assert is_simplicial_decomposition(G, d.parts)
    union = 0
    for p in d.parts:
        union |= p
    assert union == X
    assert d.perfect == is_perfect(G, X).perfect


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=5), graphs(min_n=2, max_n=4), st.data())
def test_substitution_image_is_homogeneous(G, H, data):
    v = data.draw(st.integers(0, G.n - 1))
    R = substitute(G, v, H)
    assert R.n == G.n - 1 + H.n
    image = substitution_image(G, H)
    assert is_homogeneous(R, image)
    assert any(X & image == X for X in homogeneous_sets(R))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), st.data())
def test_weight_expand_preserves_weighted_clique(G, data):
    h = tuple(data.draw(st.lists(st.integers(1, 3), min_size=G.n, max_size=G.n)))
    heavy = [v for v in range(G.n) if h[v] >= 2]
    if heavy:
        x = data.draw(st.sampled_from(heavy))
        Gx, hx = weight_expand(G, h, x)
        assert brute_omega(Gx, h=hx) == brute_omega(G, h=h)
    F, ones = weight_expand(G, h)
    assert set(ones) <= {1} and F.n == sum(h)
    assert clique_number(F) == clique_number(G, h)


def test_full_expansion_order_does_not_matter():
    # expanding in any vertex order gives isomorphic graphs (n <= 4, weights <= 3)
    from itertools import permutations, product
    for G in corpus_upto(4):
        for h in product(range(1, 4), repeat=G.n):
            base = canonical_code(weight_expand(G, h)[0])
            heavy = [v for v in range(G.n) if h[v] >= 2]
            for order in permutations(heavy):
                F, w = G, h
                for x in order:
                    F, w = weight_expand(F, w, x)
                assert canonical_code(F) == base
