"""Text and JSON encodings of graphs and sequences.

Text files are line oriented, 1-indexed, and ignore ``#`` comments::

    graph 4          digraph 3        bigraph 2
    1 2              1 2              1 2 + -
    2 3              2 3

JSON mirrors carry ``kind``, ``n`` and either ``edges`` or ``arcs``; bigraphs
add a ``signs`` list parallel to ``edges`` with entries such as ``["+", "-"]``.
"""

from __future__ import annotations

import json

from .graphs import Bigraph, Digraph, Graph

HEADERS = {"graph": Graph, "digraph": Digraph, "bigraph": Bigraph}
_SIGN = {"+": 1, "-": -1}
_SIGN_CHAR = {1: "+", -1: "-"}


def parse_sequence(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed sequence {text!r}") from None


def format_sequence(d) -> str:
    return ",".join(str(x) for x in d)


def header_of(g) -> str:
    if isinstance(g, Graph):
        return "graph"
    if isinstance(g, Digraph):
        return "digraph"
    if isinstance(g, Bigraph):
        return "bigraph"
    raise TypeError(f"not a graph: {g!r}")


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def loads_text(text: str):
    lines = _lines(text)
    try:
        header = next(lines).split()
    except StopIteration:
        raise ValueError("empty graph file") from None
    if len(header) != 2 or header[0] not in HEADERS:
        raise ValueError(f"bad header {' '.join(header)!r}")
    kind, n = header[0], int(header[1])
    rows = [line.split() for line in lines]
    if kind == "graph":
        return Graph(n, frozenset(_pair(r, 2) for r in rows))
    if kind == "digraph":
        return Digraph(n, frozenset(_pair(r, 2) for r in rows))
    signs = {}
    for r in rows:
        if len(r) != 4 or r[2] not in _SIGN or r[3] not in _SIGN:
            raise ValueError(f"bad bigraph line {' '.join(r)!r}")
        u, v = int(r[0]), int(r[1])
        if (u, v) in signs or (v, u) in signs:
            raise ValueError(f"duplicate edge {u} {v}")
        signs[(u, v)] = (_SIGN[r[2]], _SIGN[r[3]])
    return Bigraph(n, signs)


def _pair(row, width):
    if len(row) != width:
        raise ValueError(f"bad line {' '.join(row)!r}")
    return int(row[0]), int(row[1])


def dumps_text(g) -> str:
    out = [f"{header_of(g)} {g.n}"]
    if isinstance(g, Graph):
        out += [f"{u} {v}" for u, v in sorted(g.edges)]
    elif isinstance(g, Digraph):
        out += [f"{u} {v}" for u, v in sorted(g.arcs)]
    else:
        out += [
            f"{u} {v} {_SIGN_CHAR[su]} {_SIGN_CHAR[sv]}"
            for (u, v), (su, sv) in sorted(g.signs.items())
        ]
    return "\n".join(out) + "\n"


def to_json_obj(g) -> dict:
    obj = {"kind": header_of(g), "n": g.n}
    if isinstance(g, Graph):
        obj["edges"] = [list(e) for e in sorted(g.edges)]
    elif isinstance(g, Digraph):
        obj["arcs"] = [list(a) for a in sorted(g.arcs)]
    else:
        items = sorted(g.signs.items())
        obj["edges"] = [list(e) for e, _ in items]
        obj["signs"] = [[_SIGN_CHAR[su], _SIGN_CHAR[sv]] for _, (su, sv) in items]
    return obj


def from_json_obj(obj: dict):
    kind = obj.get("kind")
    if kind not in HEADERS:
        raise ValueError(f"unknown kind {kind!r}")
    n = obj["n"]
    if kind == "graph":
        return Graph(n, frozenset(tuple(e) for e in obj.get("edges", [])))
    if kind == "digraph":
        return Digraph(n, frozenset(tuple(a) for a in obj.get("arcs", [])))
    edges = obj.get("edges", [])
    signs = obj.get("signs", [])
    if len(edges) != len(signs):
        raise ValueError("edges and signs differ in length")
    return Bigraph(n, {tuple(e): (_SIGN[s[0]], _SIGN[s[1]]) for e, s in zip(edges, signs)})


def dumps_json(g) -> str:
    return json.dumps(to_json_obj(g), sort_keys=True)


def loads(text: str):
    """Parse either encoding, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return from_json_obj(json.loads(text))
    return loads_text(text)


def read_graph(path):
    with open(path) as fh:
        return loads(fh.read())


def write_graph(g, path, as_json=False):
    with open(path, "w") as fh:
        fh.write(dumps_json(g) + "\n" if as_json else dumps_text(g))
