import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import omega_table, pd_by_definition, perfect_by_definition
from perfdiv.catalog import complete, cycle, groetzsch, path
from perfdiv.corpus import corpus_upto
from perfdiv.divisibility import (
    Division,
    certify_minimal,
    cutset_split,
    division_tables,
    division_through_vertex,
    find_division,
    find_p4_witness,
    is_divisible,
    is_induced_p4,
    is_perfectly_divisible,
    is_two_divisible,
    refine_cutset_divisions,
    validate_division,
)
from perfdiv.errors import CapabilityError, GraphError, PreconditionError
from perfdiv.graph import complement, make_graph, members
from perfdiv.perfection import is_perfect
from perfdiv.structure import clique_cutsets


def test_c5():
    assert is_divisible(cycle(5)).verdict
    cert = is_divisible(cycle(5), "2div")
    assert not cert.verdict and cert.evidence["failing_subset"] == [0, 1, 2, 3, 4]
    d = find_division(cycle(5))
    assert d == Division(0b01111, 0b10000, "perfect")
    assert find_division(cycle(5), kind="two") is None


def test_perfect_graph_divides_trivially():
    d = find_division(path(5))
    assert d.A == path(5).full and d.B == 0


def test_minimal_certificates():
    cert = certify_minimal(groetzsch(), "mnpd")
    assert cert.verdict and cert.claim == "MNPD"
    assert cert.evidence["whole_graph_has_division"] is False
    assert cert.evidence["proper_subsets_checked"] == 2 ** 11 - 2
    assert certify_minimal(cycle(5), "mn2d").verdict
    assert certify_minimal(cycle(7), "mn2d").verdict
    assert not certify_minimal(cycle(5), "mnpd").verdict
    assert not certify_minimal(complete(3), "mn2d").verdict
    with pytest.raises(GraphError):
        certify_minimal(cycle(5), "bogus")


def test_certificate_json():
    cert = is_divisible(cycle(5), "2div")
    data = json.loads(cert.to_json())
    assert data["claim"] == "2DIV" and data["verdict"] is False and data["subject"] == "Dhc"
    assert any("edgeless" in a for a in data["assumptions"])


def test_weighted_schemes():
    assert is_divisible(cycle(7), "pwd", weight_bound=3).verdict
    assert is_divisible(cycle(5), "h2").verdict
    cert = is_divisible(cycle(5), "h", h=(2, 1, 1, 1, 1))
    assert cert.claim == "PD_h" and cert.verdict
    assert is_divisible(cycle(5), "pwd", weight_bound=2).claim == "PWD_bounded(2)"
    with pytest.raises(GraphError):
        is_divisible(cycle(5), "h")


def test_caps():
    with pytest.raises(CapabilityError):
        is_divisible(make_graph(17))
    with pytest.raises(CapabilityError):
        is_divisible(make_graph(9), "pwd", weight_bound=2)
    with pytest.raises(CapabilityError):
        is_divisible(make_graph(13), "h2")


def test_grotzsch_minus_a_vertex_divides():
    G = groetzsch()
    for v in range(G.n):
        assert find_division(G, G.full & ~(1 << v)) is not None
    assert find_division(G) is None


def test_division_through_vertex():
    for v in range(5):
        d = division_through_vertex(cycle(5), v)
        assert d.A >> v & 1 and validate_division(cycle(5), d)
    with pytest.raises(PreconditionError):
        division_through_vertex(groetzsch(), 0)


def test_validate_rejects_bad_divisions():
    G = cycle(5)
    assert not validate_division(G, Division(0b11111, 0, "perfect"))
    assert not validate_division(G, Division(0b00111, 0b11100, "perfect"))
    assert not validate_division(G, Division(0b10101, 0b01010, "two"))
    assert validate_division(path(4), Division(0b0101, 0b1010, "two"))


def test_tables_agree_with_definition_n5():
    for G in corpus_upto(5):
        assert is_perfectly_divisible(G) == pd_by_definition(G)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_division_table_against_oracles(G):
    perf = perfect_by_definition(G)
    om = omega_table(G)
    has = division_tables(G)
    two = division_tables(G, "two")
    for S in range(1, 1 << G.n):
        subs = [A for A in range(S + 1) if A & S == A]
        assert has[S] == any(perf[A] and om[S ^ A] < om[S] for A in subs)
        want_two = om[S] <= 1 or any(om[A] < om[S] and om[S ^ A] < om[S] for A in subs)
        assert two[S] == want_two


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.sampled_from(["perfect", "two"]))
def test_found_divisions_validate(G, kind):
    d = find_division(G, kind=kind)
    if d is not None:
        assert validate_division(G, d)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_two_divisible_implies_perfectly_divisible(G):
    # a 2-division is a perfect division one level down; both hold on every graph <= 6
    if is_two_divisible(G):
        assert is_perfectly_divisible(G)


# -- clique-cutset refinement --------------------------------------------------

def test_cutset_split():
    G = make_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    s = cutset_split(G, {2})
    assert (members(s.V1), members(s.V2)) == ([0, 1], [3, 4])
    assert s.G1.n == s.G2.n == 3
    with pytest.raises(PreconditionError):
        cutset_split(G, {0, 3})
    with pytest.raises(PreconditionError):
        cutset_split(G, {0})


def test_refine_merges_on_perfect_graph():
    G = make_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    s = cutset_split(G, {2})
    d1 = Division(0b00011, 0b00100, "perfect")
    d2 = Division(0b00100, 0b11000, "perfect")
    out = refine_cutset_divisions(G, s, d1, d2)
    assert out.merged and out.iterations <= 1
    assert validate_division(G, out.division)
    assert out.measures == sorted(out.measures, reverse=True)


def test_refine_rejects_invalid_input():
    G = make_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    s = cutset_split(G, {2})
    with pytest.raises(PreconditionError):
        refine_cutset_divisions(G, s, Division(0b011, 0, "perfect"), Division(0b11100, 0, "perfect"))


def test_p4_witness_hole():
    # C5 on 0..4 with x = 0; A2 = the path 1..4
    G = cycle(5)
    z, p = find_p4_witness(G, {1, 2, 3, 4}, {0}, 0)
    assert z == 0 and is_induced_p4(G, p) and p[0] == 0


def test_p4_witness_hole_with_neighbour_in_x():
    G = cycle(7)
    # x = 1 whose smaller hole neighbour 0 is also in X: walk the other way
    z, p = find_p4_witness(G, {0, 2, 3, 4, 5, 6}, {0, 1}, 1)
    assert p == (1, 2, 3, 4) and is_induced_p4(G, p)


def test_p4_witness_antihole():
    G = complement(cycle(7))
    # in the complement, X = {0, 2} is a clique (0 and 2 are non-adjacent in C7)
    z, p = find_p4_witness(G, {1, 2, 3, 4, 5, 6}, {0, 2}, 0)
    assert z in (0, 2) and is_induced_p4(G, p)
    assert all(v not in (0, 2) for v in p[1:])


def test_p4_witness_preconditions():
    with pytest.raises(PreconditionError):
        find_p4_witness(cycle(5), {1, 2, 3}, {0}, 0)
    with pytest.raises(PreconditionError):
        find_p4_witness(cycle(5), {1, 2, 3, 4}, {1}, 0)


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=5, max_n=9), st.data())
def test_p4_witness_property(G, data):
    from perfdiv.structure import cliques
    x = data.draw(st.integers(0, G.n - 1))
    X = data.draw(st.sampled_from([K for K in cliques(G) if K >> x & 1]))
    A2 = data.draw(st.integers(0, G.full)) & ~(1 << x)
    if not is_perfect(G, A2).perfect or is_perfect(G, A2 | 1 << x).perfect:
        return
    z, p = find_p4_witness(G, A2, X, x)
    assert z == p[0] and (z == x or (A2 & X) >> z & 1)
    assert all(A2 >> v & 1 and not X >> v & 1 for v in p[1:])
    assert is_induced_p4(G, p)


def _random_chordal(rng, n):
    # perfect elimination ordering built backwards: each new vertex joins a clique
    edges = set()
    adj = {0: set()}
    for v in range(1, n):
        base = rng.choice(range(v))
        clique = [base] + [u for u in adj[base] if rng.random() < 0.6]
        clique = [u for u in clique if all(w == u or w in adj[u] for w in clique)]
        adj[v] = set(clique)
        for u in clique:
            adj[u].add(v)
            edges.add((u, v))
    return make_graph(n, edges)


def test_refine_random_chordal(rng):
    done = 0
    while done < 60:
        G = _random_chordal(rng, rng.randint(4, 9))
        cuts = clique_cutsets(G)
        if not cuts:
            continue
        s = cutset_split(G, rng.choice(cuts))
        d1 = _random_division(rng, G, s.side1)
        d2 = _random_division(rng, G, s.side2)
        out = refine_cutset_divisions(G, s, d1, d2)
        assert out.merged and out.iterations <= s.X.bit_count()
        assert validate_division(G, out.division)
        done += 1


def _random_division(rng, G, T):
    from perfdiv.invariants import clique_number
    t = clique_number(G, S=T)
    verts = members(T)
    while True:
        A = sum(1 << v for v in verts if rng.random() < 0.6)
        if clique_number(G, S=T & ~A) < t:
            return Division(A, T & ~A, "perfect")
