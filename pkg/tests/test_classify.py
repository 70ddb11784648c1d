from itertools import combinations

import pytest

from netdeg.classify import (
    forbidden_triples,
    incomparable_pairs,
    is_connected_width2_poset,
    is_matching_width2_poset,
    is_threshold,
    is_unique_bigraph,
    is_unique_bigraph_sequence,
    is_unique_digraph,
    is_unique_digraph_structural,
    is_unique_undirected,
    is_weakly_split_digraph,
    is_weakly_split_graph,
    rank_partition,
    vertex_certificate_undirected,
)
from netdeg.errors import NotRealizable, NotWidth2Poset
from netdeg.graphs import BIDIRECTED, DIRECTED, UNDIRECTED, Digraph, Graph, complete_graph, path_graph
from netdeg.oracle import enum_digraphs, fibers, tight_sequences, weakly_split_brute_force
from netdeg.realize import canonical_tournament

STAR = Graph(4, [(1, 2), (1, 3), (1, 4)])


def test_threshold_examples():
    assert is_threshold(STAR)
    assert not is_threshold(path_graph([1, 2, 3, 4], 4))
    assert is_threshold(Graph(1, ()))


def test_unique_undirected_examples():
    assert is_unique_undirected((3, 1, 1, 1))
    assert not is_unique_undirected((2, 2, 2, 2))
    assert is_unique_undirected((0, 0, 0, 0))
    with pytest.raises(NotRealizable):
        is_unique_undirected((1, 1, 1))


def _check_certificate(g, c):
    for i, j in combinations(range(1, g.n + 1), 2):
        assert g.has_edge(i, j) == (c[i - 1] + c[j - 1] > 0)


def test_vertex_certificate():
    assert vertex_certificate_undirected(complete_graph(3)) == (1, 1, 1)
    assert vertex_certificate_undirected(Graph(4, ())) == (-1, -1, -1, -1)
    assert vertex_certificate_undirected(STAR) == (3, -1, -1, -1)
    assert vertex_certificate_undirected(path_graph([1, 2, 3, 4], 4)) is None
    for n in range(1, 6):
        for f in fibers(n, UNDIRECTED).values():
            for g in f.members:
                c = vertex_certificate_undirected(g)
                if c is not None:
                    _check_certificate(g, c)


def test_weakly_split_examples():
    split = Graph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
    w = is_weakly_split_graph(split)
    assert w is not None
    assert is_weakly_split_graph(Graph(3, ())).V_i or is_weakly_split_graph(Graph(3, ())).V_o
    c5 = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert is_weakly_split_graph(c5) is None
    assert weakly_split_brute_force(c5) is False


def test_weakly_split_matches_brute_force():
    for n in range(1, 6):
        for f in fibers(n, UNDIRECTED).values():
            for g in f.members:
                w = is_weakly_split_graph(g)
                assert (w is not None) == weakly_split_brute_force(g)
                if w is not None:
                    assert w.V_c | w.V_i | w.V_o == set(range(1, n + 1))


def test_tight_iff_weakly_split_realization():
    for n in range(1, 6):
        boundary = tight_sequences(n, UNDIRECTED)
        for d, f in fibers(n, UNDIRECTED).items():
            has_ws = any(is_weakly_split_graph(g) is not None for g in f.members)
            if n >= 2:
                assert has_ws == (d in boundary), d
    for n in range(2, 5):
        boundary = tight_sequences(n, DIRECTED)
        for d, f in fibers(n, DIRECTED).items():
            has_ws = any(is_weakly_split_digraph(g) is not None for g in f.members)
            assert has_ws == (d in boundary), d


def test_weakly_split_digraph_examples():
    w = is_weakly_split_digraph(Digraph(2, [(1, 2)]))
    assert w.V_s == {1} and w.V_t == {2}
    assert is_weakly_split_digraph(Digraph(3, ())) is None
    w = is_weakly_split_digraph(canonical_tournament((1, 2, 3)))
    assert all((s, t) in canonical_tournament((1, 2, 3)).arcs for s in w.V_s for t in w.V_t)


def test_unique_digraph_examples():
    assert is_unique_digraph(canonical_tournament((2, 4, 1, 3)))
    cyc = Digraph(3, [(1, 2), (2, 3), (3, 1)])
    assert not is_unique_digraph(cyc)
    assert [lab for lab, _ in forbidden_triples(cyc)] == ["D3"]
    p = Digraph(3, [(1, 2), (2, 3)])
    assert not is_unique_digraph(p)
    assert [lab for lab, _ in forbidden_triples(p)] == ["D4"]
    assert [lab for lab, _ in forbidden_triples(Digraph(3, ()))] == ["D1"]
    assert [lab for lab, _ in forbidden_triples(Digraph(3, [(1, 2)]))] == ["D2"]
    assert is_unique_digraph(Digraph(2, ()))


def test_unique_digraph_two_implementations_agree():
    for n in range(6):
        for dg in enum_digraphs(n):
            assert is_unique_digraph(dg) == is_unique_digraph_structural(dg)


def test_literal_width2_class_is_too_large():
    # connected width-2 poset 1<2<4, 1<3, 1<4 has an induced D2 on {2,3,4}
    dg = Digraph(4, [(1, 2), (1, 3), (1, 4), (2, 4)])
    assert is_connected_width2_poset(dg)
    assert not is_matching_width2_poset(dg)
    assert not is_unique_digraph(dg)
    assert fibers(4, DIRECTED)[(-3, 0, 1, 2)].size == 2


def test_rank_partition_examples():
    t = canonical_tournament((1, 2, 3))
    assert incomparable_pairs(t) == 0
    assert rank_partition(t).blocks == (frozenset({3}), frozenset({2}), frozenset({1}))
    v = Digraph(3, [(1, 2), (1, 3)])
    assert incomparable_pairs(v) == 1
    assert rank_partition(v).blocks == (frozenset({2, 3}), frozenset({1}))
    assert len(rank_partition(Digraph(1, ()))) == 1
    with pytest.raises(NotWidth2Poset):
        rank_partition(Digraph(3, [(1, 2), (2, 3)]))
    with pytest.raises(NotWidth2Poset):
        incomparable_pairs(Digraph(3, ()))


def test_rank_partition_injective():
    for n in range(1, 6):
        seen = {}
        for dg in enum_digraphs(n):
            if is_unique_digraph_structural(dg):
                parts = rank_partition(dg)
                assert len(parts) == n - incomparable_pairs(dg)
                assert parts.blocks not in seen
                seen[parts.blocks] = dg


def test_unique_bigraph_examples():
    assert is_unique_bigraph_sequence((2, 2, 2))
    assert is_unique_bigraph_sequence((2, 1, 1))
    assert not is_unique_bigraph_sequence((0, 0, 0))
    with pytest.raises(NotRealizable):
        is_unique_bigraph_sequence((3, 0, 0))


@pytest.mark.parametrize("n", range(1, 7))
def test_unique_undirected_matches_fiber_size(n):
    for d, f in fibers(n, UNDIRECTED).items():
        assert is_unique_undirected(d) == (f.size == 1), d


@pytest.mark.parametrize("n", range(1, 5))
def test_unique_matches_fiber_size(n):
    for d, f in fibers(n, DIRECTED).items():
        for dg in f.members:
            assert is_unique_digraph(dg) == (f.size == 1)
    for d, f in fibers(n, BIDIRECTED).items():
        assert is_unique_bigraph_sequence(d) == (f.size == 1), d
        for b in f.members:
            assert is_unique_bigraph(b) == (f.size == 1)
