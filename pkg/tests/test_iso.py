import math
from collections import defaultdict
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bridgelab.errors import InvalidArgument
from bridgelab.graphcore import Graph, disjoint_union
from bridgelab.iso import (
    CanonicalCode,
    automorphism_count,
    canonical_form,
    canonical_graph,
    canonical_rooted_form,
    is_isomorphic,
    rooted_automorphism_count,
)

from oracles import brute_aut, brute_canon, brute_isomorphic, brute_rooted_canon, is_acyclic, labelled_graphs
from test_graphcore import graphs


def test_relabelled_triangle_same_code():
    tri = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert canonical_form(tri) == canonical_form(tri.relabel([2, 0, 1]))


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_distinct_codes_match_brute_dedup(n, expected):
    codes = set()
    brute = set()
    pairs = set()
    for g in labelled_graphs(n):
        codes.add(canonical_form(g))
        brute.add(brute_canon(g))
        pairs.add((canonical_form(g), brute_canon(g)))
    # a bijection between the two dedup keys
    assert len(codes) == len(brute) == len(pairs) == expected


def test_code_classes_are_exactly_orbits_n6():
    n = 6
    by_code = defaultdict(set)
    for g in labelled_graphs(n):
        by_code[canonical_form(g)].add(frozenset(g.edges()))
    assert len(by_code) == 156
    for code, members in by_code.items():
        g = code.to_graph()
        orbit = {frozenset(tuple(sorted((p[u], p[v]))) for u, v in g.edges()) for p in permutations(range(n))}
        assert orbit == members
        assert math.factorial(n) // automorphism_count(g) == len(members)


@pytest.mark.parametrize("n", range(1, 6))
def test_automorphism_count_matches_brute_force(n):
    for g in labelled_graphs(n):
        assert automorphism_count(g) == brute_aut(g)


def test_automorphism_examples():
    assert automorphism_count(Graph.cycle(3)) == 6
    assert automorphism_count(Graph.path(3)) == 2
    forests4 = {canonical_form(g): g for g in labelled_graphs(4) if is_acyclic(g)}
    assert len(forests4) == 6
    assert sum(24 // automorphism_count(g) for g in forests4.values()) == 38


def test_large_symmetry_is_cheap():
    assert automorphism_count(Graph.empty(10)) == math.factorial(10)
    assert automorphism_count(Graph.star(10)) == math.factorial(9)
    assert automorphism_count(disjoint_union([Graph.path(2)] * 5)) == 2**5 * math.factorial(5)
    assert automorphism_count(disjoint_union([Graph.cycle(3)] * 3)) == 6**3 * 6
    assert automorphism_count(Graph.cycle(10)) == 20
    assert automorphism_count(Graph.complete(7)) == math.factorial(7)


def test_rooted_examples():
    p3 = Graph.path(3)
    assert canonical_rooted_form(p3, 0) == canonical_rooted_form(p3, 2)
    assert canonical_rooted_form(p3, 1) != canonical_rooted_form(p3, 0)
    with pytest.raises(InvalidArgument):
        canonical_rooted_form(p3, 3)


def test_rooted_trees_on_four_vertices():
    rooted = set()
    brute = set()
    for g in labelled_graphs(4):
        if g.is_connected() and is_acyclic(g):
            for r in range(4):
                rooted.add(canonical_rooted_form(g, r))
                brute.add(brute_rooted_canon(g, r))
    assert len(rooted) == len(brute) == 4


@pytest.mark.parametrize("n", range(1, 6))
def test_rooted_codes_match_brute_force(n):
    pairs = set()
    codes = set()
    for g in labelled_graphs(n):
        for r in range(n):
            c = canonical_rooted_form(g, r)
            codes.add(c)
            pairs.add((c, brute_rooted_canon(g, r)))
    assert len(pairs) == len(codes)
    assert len({b for _, b in pairs}) == len(codes)


def test_rooted_code_puts_root_first():
    g = Graph.star(5)
    code = canonical_rooted_form(g, 0)
    h, root = code.to_graph()
    assert root == 0 and h.degree(0) == 4
    assert rooted_automorphism_count(g, 0) == 24
    assert rooted_automorphism_count(g, 1) == 6


def test_is_isomorphic_examples():
    assert is_isomorphic(Graph.cycle(3), Graph.cycle(3).relabel([1, 2, 0]))
    assert not is_isomorphic(Graph.path(4), Graph.star(4))


@st.composite
def permuted_pairs(draw):
    g = draw(graphs(max_n=7))
    perm = draw(st.permutations(range(g.n)))
    if draw(st.booleans()):
        other = draw(graphs(max_n=7).filter(lambda h: h.n == g.n)) if g.n > 1 else g
        return g, other.relabel(perm)
    return g, g.relabel(perm)


@settings(max_examples=150, deadline=None)
@given(permuted_pairs())
def test_is_isomorphic_agrees_with_brute_force(pair):
    g1, g2 = pair
    assert is_isomorphic(g1, g2) == brute_isomorphic(g1, g2)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9), st.data())
def test_canonical_form_is_permutation_invariant(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = g.relabel(perm)
    assert canonical_form(h) == canonical_form(g)
    assert automorphism_count(h) == automorphism_count(g)
    root = data.draw(st.integers(0, g.n - 1))
    assert canonical_rooted_form(h, perm[root]) == canonical_rooted_form(g, root)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_serialisation_roundtrip(g):
    code = canonical_form(g)
    parsed = CanonicalCode.parse(code.key)
    assert parsed == code
    assert is_isomorphic(parsed.to_graph(), g)
    assert canonical_graph(g) == code.to_graph()


def test_key_format():
    assert canonical_form(Graph.empty(1)).key == "1:"
    assert canonical_form(Graph.path(2)).key == "2:8"
    assert canonical_form(Graph.complete(4)).key == "4:fc"
    assert canonical_rooted_form(Graph.path(2), 0).key == "2:8:r0"
