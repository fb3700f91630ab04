import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bridgelab.classes import all_graphs, builtin_classes, connected_contains, cycles_at_least, cycles_exactly, forests
from bridgelab.codec import (
    EncodedGraph,
    codewords,
    codewords_jsonl,
    decode,
    encode,
    side_size,
    verify_injectivity_bound,
)
from bridgelab.enumeration import enumerate_all
from bridgelab.errors import InvalidArgument, InvalidCodeword
from bridgelab.graphcore import Graph, add_edge, bridge_count_at, bridges, components, disjoint_union
from bridgelab.iso import is_isomorphic

from test_graphcore import graphs

CLASSES = builtin_classes(3) + [cycles_at_least(4), cycles_exactly(4)]
TRIANGLE = Graph.cycle(3)
K2 = Graph.path(2)


def test_connected_input_unchanged():
    tree = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    enc = encode(forests(), tree)
    assert enc.h == tree
    assert enc.b == bridge_count_at(tree, enc.root) <= 1


def test_two_triangles():
    g = disjoint_union([TRIANGLE, TRIANGLE])
    enc = encode(cycles_exactly(3), g)
    assert enc.b == 0
    assert enc.h.m == 7 and enc.h.is_connected()
    assert bridges(enc.h) == {next(iter(bridges(enc.h)))}
    assert enc.root in next(iter(bridges(enc.h)))
    assert decode(cycles_exactly(3), enc) == g


def test_two_edges_hand_executed():
    g = disjoint_union([K2, K2])
    enc = encode(forests(), g)
    # smallest component is one K2, v is an endpoint with its single bridge
    assert enc.b == 1
    assert enc.h.m == 3 and enc.h.is_connected()
    root_bridges = sorted((side_size(enc.h, enc.root, e), e) for e in bridges(enc.h) if enc.root in e)
    assert [s for s, _ in root_bridges] == [1, 2]
    assert root_bridges[0][1] in g.edges()
    assert root_bridges[1][1] not in g.edges()
    assert decode(forests(), enc) == g


def test_decode_b0_connected():
    g = Graph.cycle(5)
    assert decode(cycles_at_least(3), EncodedGraph(g, 2, 0)) == g


def test_encode_rejects_non_member():
    with pytest.raises(InvalidArgument):
        encode(forests(), TRIANGLE)


def test_invalid_codewords():
    with pytest.raises(InvalidCodeword):
        EncodedGraph(TRIANGLE, 0, 2)
    with pytest.raises(InvalidCodeword):
        EncodedGraph(disjoint_union([K2, K2]), 0, 0)
    with pytest.raises(InvalidCodeword):
        decode(all_graphs(), EncodedGraph(TRIANGLE, 0, 1))
    # star centre: three root bridges of equal side size 1
    with pytest.raises(InvalidCodeword):
        decode(forests(), EncodedGraph(Graph.star(4), 0, 1))


@pytest.mark.parametrize("c", CLASSES, ids=str)
def test_roundtrip_and_closure_on_all_members(c):
    cap = 7 if c == all_graphs() else 8
    for n in range(1, cap + 1):
        for _, entry in enumerate_all(c, n):
            g = entry.graph
            enc = encode(c, g)
            assert connected_contains(c, enc.h)
            assert enc.h.n == g.n
            smallest = components(g).sizes[-1]
            if enc.b == 1:
                original = [e for e in bridges(g) if enc.root in e]
                added = set(enc.h.edges()) - set(g.edges())
                assert side_size(enc.h, enc.root, original[0]) <= smallest - 1
                assert all(side_size(enc.h, enc.root, e) >= smallest for e in added)
            assert decode(c, enc) == g


@pytest.mark.parametrize("c", CLASSES, ids=str)
def test_codewords_injective(c):
    cap = 7 if c == all_graphs() else 8
    for n in range(1, cap + 1):
        words = codewords(c, n)
        assert len({(rooted, b) for _, rooted, b in words}) == len(words) == len(enumerate_all(c, n))


def test_verify_injectivity_examples():
    row = verify_injectivity_bound(forests(), 5)
    assert (row.unlabelled_total, row.rooted_connected) == (10, 9)
    assert row.passed
    row = verify_injectivity_bound(cycles_exactly(3), 6)
    assert row.unlabelled_total == 2 and row.unlabelled_total <= 2 * row.rooted_connected
    row = verify_injectivity_bound(forests(), 1)
    assert (row.unlabelled_total, row.rooted_connected, row.unlabelled_connected) == (1, 1, 1)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9), st.data())
def test_roundtrip_on_random_labelled_members(g, data):
    # all graphs are members of the universal class; labels are not canonical here
    perm = data.draw(st.permutations(range(g.n)))
    g = g.relabel(perm)
    enc = encode(all_graphs(), g)
    assert enc.h.is_connected()
    assert decode(all_graphs(), enc) == g


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.data())
def test_roundtrip_on_random_forests(sizes, data):
    parts = []
    for s in sizes:
        edges = [(v, data.draw(st.integers(0, v - 1))) for v in range(1, s)]
        parts.append(Graph.from_edges(s, edges))
    g = disjoint_union(parts)
    perm = data.draw(st.permutations(range(g.n)))
    g = g.relabel(perm)
    enc = encode(forests(), g)
    assert connected_contains(forests(), enc.h)
    assert decode(forests(), enc) == g


def test_codewords_jsonl():
    lines = codewords_jsonl(forests(), 4).splitlines()
    assert len(lines) == 6
    assert all(line.startswith('{"code":"4:') for line in lines)


def test_decoded_graph_isomorphic_after_relabelling():
    g = add_edge(disjoint_union([TRIANGLE, TRIANGLE, Graph.cycle(4)]), 0, 3)
    enc = encode(cycles_at_least(3), g)
    assert is_isomorphic(decode(cycles_at_least(3), enc), g)
