import json

import pytest

from netdeg.formats import (
    dumps_json,
    dumps_text,
    format_sequence,
    from_json_obj,
    loads,
    loads_text,
    parse_sequence,
    read_graph,
    write_graph,
)
from netdeg.graphs import Bigraph, Digraph, Graph

from conftest import random_bigraph, random_digraph, random_graph


def test_sequence_round_trip():
    assert parse_sequence("2,-2,3,1") == (2, -2, 3, 1)
    assert parse_sequence(" 1 , 2 ") == (1, 2)
    assert format_sequence((2, -2, 3, 1)) == "2,-2,3,1"
    with pytest.raises(ValueError):
        parse_sequence("1,x")


def test_text_formats():
    g = loads_text("graph 3\n# a comment\n1 2\n2 3  # trailing\n")
    assert g == Graph(3, [(1, 2), (2, 3)])
    dg = loads_text("digraph 2\n2 1\n")
    assert dg == Digraph(2, [(2, 1)])
    b = loads_text("bigraph 3\n1 3 + -\n")
    assert b == Bigraph(3, {(1, 3): (1, -1)})
    with pytest.raises(ValueError):
        loads_text("hypergraph 3\n")


def test_round_trips(rng, tmp_path):
    objs = [random_graph(5, rng), random_digraph(5, rng), random_bigraph(5, rng), Graph(0, ())]
    for g in objs:
        assert loads(dumps_text(g)) == g
        assert loads(dumps_json(g)) == g
        assert from_json_obj(json.loads(dumps_json(g))) == g
        for as_json in (False, True):
            path = tmp_path / "g.txt"
            write_graph(g, path, as_json=as_json)
            assert read_graph(path) == g


def test_json_schema_fields():
    obj = json.loads(dumps_json(Bigraph(2, {(1, 2): (1, -1)})))
    assert obj == {"kind": "bigraph", "n": 2, "edges": [[1, 2]], "signs": [["+", "-"]]}
    obj = json.loads(dumps_json(Digraph(2, [(2, 1)])))
    assert obj == {"kind": "digraph", "n": 2, "arcs": [[2, 1]]}
