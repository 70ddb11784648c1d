from itertools import product

import pytest

from netdeg.characterize import (
    bigraphical_violation,
    digraphical_violation,
    graphical_violation,
    is_bigraphical,
    is_digraphical,
    is_graphical,
    is_tight_bidirected,
    is_tight_directed,
    is_tight_undirected,
    satisfies_digraph_exhaustive,
    satisfies_erdos_gallai_exhaustive,
)
from netdeg.errors import NotRealizable
from netdeg.graphs import BIDIRECTED, DIRECTED, UNDIRECTED
from netdeg.oracle import distinct_sequences, tight_sequences


def test_graphical_examples():
    assert is_graphical((3, 3, 3, 3))
    v = graphical_violation((1, 1, 1))
    assert v.reason == "odd sum"
    v = graphical_violation((5, 1, 1, 1))
    assert (v.S, v.T, v.lhs, v.rhs) == ({1}, frozenset(), 5, 3)
    assert is_graphical(())
    assert not is_graphical((-1, 1))


def test_digraphical_examples():
    assert is_digraphical((2, 0, -2))
    v = digraphical_violation((2, 2, -4))
    assert v.I == {1, 2} and (v.lhs, v.rhs) == (4, 2)
    assert v.describe().startswith("I={1,2}")
    assert is_digraphical((0, 0, 0, 0))
    assert digraphical_violation((1, 0)).reason == "nonzero sum"


def test_bigraphical_examples():
    assert is_bigraphical((2, -2, 3, 1))
    v = bigraphical_violation((3, 0, 0))
    assert v.reason == "out of range" and v.index == 1
    assert bigraphical_violation((1, 0, 0)).reason == "odd sum"


def test_tight_undirected_examples():
    assert is_tight_undirected((2, 2, 2)) is not None
    w = is_tight_undirected((0, 0, 0, 0))
    assert w.S == frozenset() and w.T == {1}
    interior = sorted(distinct_sequences(4, UNDIRECTED) - tight_sequences(4, UNDIRECTED))
    assert interior
    for d in interior:
        assert is_tight_undirected(d) is None
    with pytest.raises(NotRealizable):
        is_tight_undirected((1, 1, 1))


def test_tight_directed_examples():
    assert is_tight_directed((2, 0, -2)).I == {1}
    assert is_tight_directed((0, 0, 0)) is None
    assert is_tight_directed((1, 1, -2)).I == {1, 2}
    with pytest.raises(NotRealizable):
        is_tight_directed((1, 1))


def test_tight_bidirected():
    assert is_tight_bidirected((2, -2, 3, 1)).index == 3
    assert is_tight_bidirected((0, 0, 0)) is None


@pytest.mark.parametrize("n", range(0, 6))
def test_predicates_match_oracle(n):
    box = list(product(range(-n + 1, n), repeat=n)) if n else [()]
    for kind, pred in ((UNDIRECTED, is_graphical), (DIRECTED, is_digraphical), (BIDIRECTED, is_bigraphical)):
        real = distinct_sequences(n, kind, "sumset")
        for d in box:
            assert pred(d) == (d in real), (kind, d)


@pytest.mark.parametrize("n", range(1, 5))
def test_sorted_scan_matches_exhaustive_form(n):
    for d in product(range(-3, 4), repeat=n):
        if min(d) >= 0:
            assert is_graphical(d) == satisfies_erdos_gallai_exhaustive(d), d
        assert is_digraphical(d) == satisfies_digraph_exhaustive(d), d


@pytest.mark.parametrize("n", range(2, 6))
def test_tightness_is_relative_boundary(n):
    for kind, tight in ((UNDIRECTED, is_tight_undirected), (DIRECTED, is_tight_directed),
                        (BIDIRECTED, is_tight_bidirected)):
        if kind == BIDIRECTED and n > 4:
            continue
        boundary = tight_sequences(n, kind)
        for d in distinct_sequences(n, kind):
            assert (tight(d) is not None) == (d in boundary), (kind, d)


def test_witnesses_attain_equality():
    for d in distinct_sequences(5, UNDIRECTED):
        w = is_tight_undirected(d)
        if w is None:
            continue
        n, s, t = len(d), len(w.S), len(w.T)
        assert not w.S & w.T and (s, t) != (0, 0)
        assert sum(d[i - 1] for i in w.S) - sum(d[i - 1] for i in w.T) == s * (n - t - 1)
    for d in distinct_sequences(5, DIRECTED):
        w = is_tight_directed(d)
        if w is not None:
            k = len(w.I)
            assert sum(d[i - 1] for i in w.I) == k * (len(d) - k)
