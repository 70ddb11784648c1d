"""Degree-preserving operations as immutable, invertible records.

Each record validates its own precondition when applied and raises
PreconditionFailed instead of silently doing nothing.  Apart from the bare
Sigma move, applying a record never changes the (net-)degree sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import ClassVar, Iterator, Optional

from ..errors import PreconditionFailed
from ..graphs import BIDIRECTED, DIRECTED, UNDIRECTED, Bigraph, Digraph, Graph, edge

_SIGN_CHAR = {1: "+", -1: "-"}


def _distinct(*nodes):
    if len(set(nodes)) != len(nodes):
        raise PreconditionFailed(f"nodes {nodes} must be pairwise distinct")


def _need(cond, msg):
    if not cond:
        raise PreconditionFailed(msg)


def _cycle_dir(cycle):
    """Sorted node triple plus ``"123"`` if ``cycle`` is a rotation of it, else ``"132"``."""
    a, b, c = sorted(cycle)
    rotations = {(a, b, c), (b, c, a), (c, a, b)}
    return (a, b, c), ("123" if tuple(cycle) in rotations else "132")


def _dir_to_cycle(nodes, direction):
    a, b, c = sorted(nodes)
    if direction == "123":
        return (a, b, c)
    if direction == "132":
        return (a, c, b)
    raise ValueError(f"bad triangle direction {direction!r}")


class OpRecord:
    """Common interface of all operation records."""

    kind: ClassVar[str]
    tag: ClassVar[str]

    def apply(self, g):
        raise NotImplementedError

    def inverse(self) -> "OpRecord":
        raise NotImplementedError

    def to_text(self) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


# --- undirected -------------------------------------------------------------


def apply_two_switch(g: Graph, u: int, v: int, w: int, x: int) -> Graph:
    """Replace edges uv, wx by uw, vx."""
    _distinct(u, v, w, x)
    _need(g.has_edge(u, v), f"edge {u}-{v} absent")
    _need(g.has_edge(w, x), f"edge {w}-{x} absent")
    _need(not g.has_edge(u, w), f"edge {u}-{w} present")
    _need(not g.has_edge(v, x), f"edge {v}-{x} present")
    edges = set(g.edges)
    edges -= {edge(u, v), edge(w, x)}
    edges |= {edge(u, w), edge(v, x)}
    return Graph(g.n, frozenset(edges))


@dataclass(frozen=True)
class TwoSwitch(OpRecord):
    u: int
    v: int
    w: int
    x: int
    kind: ClassVar[str] = UNDIRECTED
    tag: ClassVar[str] = "TWOSWITCH"

    def apply(self, g):
        return apply_two_switch(g, self.u, self.v, self.w, self.x)

    def inverse(self):
        return TwoSwitch(self.u, self.w, self.v, self.x)

    def to_text(self):
        return f"TWOSWITCH {self.u} {self.v} {self.w} {self.x}"

    def to_json(self):
        return {"op": "TWOSWITCH", "nodes": [self.u, self.v, self.w, self.x]}


# --- directed ---------------------------------------------------------------


def apply_delta_digraph(dg: Digraph, add: bool, cycle) -> Digraph:
    """Add or remove the directed triangle u1 -> u2 -> u3 -> u1."""
    u1, u2, u3 = cycle
    _distinct(u1, u2, u3)
    arcs = {(u1, u2), (u2, u3), (u3, u1)}
    if add:
        for a, b in combinations(cycle, 2):
            _need(not dg.adjacent(a, b), f"nodes {a} and {b} adjacent")
        return Digraph(dg.n, dg.arcs | arcs)
    for a in sorted(arcs):
        _need(a in dg.arcs, f"arc {a[0]}->{a[1]} absent")
    return Digraph(dg.n, dg.arcs - arcs)


def apply_lambda_digraph(dg: Digraph, expand: bool, u: int, v: int, w: int) -> Digraph:
    """Exchange the arc u->w with the path u->v->w (expand) or back (contract)."""
    _distinct(u, v, w)
    if expand:
        _need(dg.has_arc(u, w), f"arc {u}->{w} absent")
        _need(not dg.adjacent(u, v), f"nodes {u} and {v} adjacent")
        _need(not dg.adjacent(v, w), f"nodes {v} and {w} adjacent")
        return Digraph(dg.n, (dg.arcs - {(u, w)}) | {(u, v), (v, w)})
    _need(dg.has_arc(u, v), f"arc {u}->{v} absent")
    _need(dg.has_arc(v, w), f"arc {v}->{w} absent")
    _need(not dg.adjacent(u, w), f"nodes {u} and {w} adjacent")
    return Digraph(dg.n, (dg.arcs - {(u, v), (v, w)}) | {(u, w)})


@dataclass(frozen=True)
class DeltaDigraph(OpRecord):
    add: bool
    cycle: tuple
    kind: ClassVar[str] = DIRECTED
    tag: ClassVar[str] = "DELTA"

    def apply(self, g):
        return apply_delta_digraph(g, self.add, self.cycle)

    def inverse(self):
        return DeltaDigraph(not self.add, self.cycle)

    def to_text(self):
        nodes, direction = _cycle_dir(self.cycle)
        sign = "+" if self.add else "-"
        return f"DELTA{sign} {nodes[0]} {nodes[1]} {nodes[2]} dir={direction}"

    def to_json(self):
        return {"op": "DELTA", "add": self.add, "cycle": list(self.cycle)}


@dataclass(frozen=True)
class LambdaDigraph(OpRecord):
    expand: bool
    u: int
    v: int
    w: int
    kind: ClassVar[str] = DIRECTED
    tag: ClassVar[str] = "LAMBDA"

    def apply(self, g):
        return apply_lambda_digraph(g, self.expand, self.u, self.v, self.w)

    def inverse(self):
        return LambdaDigraph(not self.expand, self.u, self.v, self.w)

    def to_text(self):
        sign = "+" if self.expand else "-"
        return f"LAMBDA{sign} u={self.u} v={self.v} w={self.w}"

    def to_json(self):
        return {"op": "LAMBDA", "expand": self.expand, "u": self.u, "v": self.v, "w": self.w}


# --- bidirected -------------------------------------------------------------


def _set(signs, v, e, s):
    a, b = e
    cur = signs[e]
    signs[e] = (s, cur[1]) if v == a else (cur[0], s)


def apply_gamma(b: Bigraph, v: int, e1, e2) -> Bigraph:
    """Swap the local signs at ``v`` of two incident edges with different signs."""
    e1, e2 = edge(*e1), edge(*e2)
    _need(e1 != e2, "gamma needs two different edges")
    for e in (e1, e2):
        _need(v in e and b.has_edge(*e), f"edge {e[0]}-{e[1]} is not an edge at node {v}")
    s1, s2 = b.tau(v, e1), b.tau(v, e2)
    _need(s1 != s2, f"edges {e1} and {e2} have equal signs at node {v}")
    signs = b.signs
    _set(signs, v, e1, s2)
    _set(signs, v, e2, s1)
    return Bigraph(b.n, signs)


def apply_sigma(b: Bigraph, v: int, u: int, w: int, sign_at_w: int, was: Optional[int] = None) -> Bigraph:
    """Slide the far end of edge vu to w, keeping the sign at the pivot v.

    This alone changes the net-degree at u and w.  ``was``, when given, must
    equal the sign being dropped at u; it is what makes the move invertible.
    """
    _distinct(v, u, w)
    _need(b.has_edge(v, u), f"edge {v}-{u} absent")
    _need(not b.has_edge(v, w), f"edge {v}-{w} present")
    _need(sign_at_w in (1, -1), "sign must be +1 or -1")
    old = edge(v, u)
    if was is not None:
        _need(b.tau(u, old) == was, f"sign at {u} on edge {v}-{u} is not {_SIGN_CHAR[was]}")
    signs = b.signs
    sv = b.tau(v, old)
    del signs[old]
    signs[(v, w)] = (sv, sign_at_w)
    return Bigraph(b.n, signs)


def apply_bidirected_two_switch(b: Bigraph, u: int, v: int, w: int, x: int) -> Bigraph:
    """2-switch uv, wx -> uw, vx in which every node keeps its own sign."""
    _distinct(u, v, w, x)
    _need(b.has_edge(u, v), f"edge {u}-{v} absent")
    _need(b.has_edge(w, x), f"edge {w}-{x} absent")
    _need(not b.has_edge(u, w), f"edge {u}-{w} present")
    _need(not b.has_edge(v, x), f"edge {v}-{x} present")
    tu, tv = b.tau(u, (u, v)), b.tau(v, (u, v))
    tw, tx = b.tau(w, (w, x)), b.tau(x, (w, x))
    signs = b.signs
    del signs[edge(u, v)]
    del signs[edge(w, x)]
    signs[(u, w)] = (tu, tw)
    signs[(v, x)] = (tv, tx)
    return Bigraph(b.n, signs)


def apply_lambda_bigraph(b: Bigraph, expand: bool, u: int, v: int, w: int, sign: int = 1) -> Bigraph:
    """Exchange edge uw with the path u-v-w.

    The path carries ``sign`` at v on uv and ``-sign`` at v on vw; the signs at
    u and w travel with the edge ends.
    """
    _distinct(u, v, w)
    _need(sign in (1, -1), "sign must be +1 or -1")
    signs = b.signs
    if expand:
        _need(b.has_edge(u, w), f"edge {u}-{w} absent")
        _need(not b.has_edge(u, v), f"nodes {u} and {v} adjacent")
        _need(not b.has_edge(v, w), f"nodes {v} and {w} adjacent")
        su, sw = b.tau(u, (u, w)), b.tau(w, (u, w))
        del signs[edge(u, w)]
        signs[(u, v)] = (su, sign)
        signs[(v, w)] = (-sign, sw)
        return Bigraph(b.n, signs)
    _need(b.has_edge(u, v), f"edge {u}-{v} absent")
    _need(b.has_edge(v, w), f"edge {v}-{w} absent")
    _need(not b.has_edge(u, w), f"nodes {u} and {w} adjacent")
    _need(b.tau(v, (u, v)) == sign and b.tau(v, (v, w)) == -sign,
          f"signs at {v} do not match path orientation {_SIGN_CHAR[sign]}")
    su, sw = b.tau(u, (u, v)), b.tau(w, (v, w))
    del signs[edge(u, v)]
    del signs[edge(v, w)]
    signs[(u, w)] = (su, sw)
    return Bigraph(b.n, signs)


def _triangle_signs(cycle):
    """Sign pattern of the directed triangle u1 -> u2 -> u3 -> u1."""
    u1, u2, u3 = cycle
    return {(u1, u2): (-1, 1), (u2, u3): (-1, 1), (u3, u1): (-1, 1)}


def apply_delta_bigraph(b: Bigraph, add: bool, cycle) -> Bigraph:
    """Add or remove a triangle signed like the directed cycle u1 -> u2 -> u3."""
    _distinct(*cycle)
    pattern = _triangle_signs(cycle)
    signs = b.signs
    if add:
        for a, c in combinations(cycle, 2):
            _need(not b.has_edge(a, c), f"nodes {a} and {c} adjacent")
        for (a, c), (sa, sc) in pattern.items():
            signs[(a, c) if a < c else (c, a)] = (sa, sc) if a < c else (sc, sa)
        return Bigraph(b.n, signs)
    for (a, c), (sa, sc) in pattern.items():
        _need(b.has_edge(a, c), f"edge {a}-{c} absent")
        _need(b.tau(a, (a, c)) == sa and b.tau(c, (a, c)) == sc,
              f"edge {a}-{c} is not oriented {a}->{c}")
        del signs[edge(a, c)]
    return Bigraph(b.n, signs)


@dataclass(frozen=True)
class Gamma(OpRecord):
    v: int
    e1: tuple
    e2: tuple
    kind: ClassVar[str] = BIDIRECTED
    tag: ClassVar[str] = "GAMMA"

    def __post_init__(self):
        object.__setattr__(self, "e1", edge(*self.e1))
        object.__setattr__(self, "e2", edge(*self.e2))

    def apply(self, g):
        return apply_gamma(g, self.v, self.e1, self.e2)

    def inverse(self):
        return self

    def to_text(self):
        return f"GAMMA v={self.v} e1={self.e1[0]}-{self.e1[1]} e2={self.e2[0]}-{self.e2[1]}"

    def to_json(self):
        return {"op": "GAMMA", "v": self.v, "e1": list(self.e1), "e2": list(self.e2)}


@dataclass(frozen=True)
class Sigma(OpRecord):
    v: int
    old: int
    new: int
    sign: int
    was: Optional[int] = None
    kind: ClassVar[str] = BIDIRECTED
    tag: ClassVar[str] = "SIGMA"

    def apply(self, g):
        return apply_sigma(g, self.v, self.old, self.new, self.sign, self.was)

    def inverse(self):
        if self.was is None:
            raise PreconditionFailed("sigma without a recorded old sign cannot be inverted")
        return Sigma(self.v, self.new, self.old, self.was, self.sign)

    def to_text(self):
        text = f"SIGMA v={self.v} old={self.old} new={self.new} sign={_SIGN_CHAR[self.sign]}"
        if self.was is not None:
            text += f" was={_SIGN_CHAR[self.was]}"
        return text

    def to_json(self):
        return {"op": "SIGMA", "v": self.v, "old": self.old, "new": self.new,
                "sign": self.sign, "was": self.was}


@dataclass(frozen=True)
class BidirTwoSwitch(OpRecord):
    u: int
    v: int
    w: int
    x: int
    kind: ClassVar[str] = BIDIRECTED
    tag: ClassVar[str] = "TWOSWITCH"

    def apply(self, g):
        return apply_bidirected_two_switch(g, self.u, self.v, self.w, self.x)

    def inverse(self):
        return BidirTwoSwitch(self.u, self.w, self.v, self.x)

    def as_sigmas(self, b: Bigraph) -> list:
        """The two Sigma moves this switch is made of, with signs read off ``b``."""
        uv, wx = (self.u, self.v), (self.w, self.x)
        return [
            Sigma(self.u, self.v, self.w, b.tau(self.w, wx), b.tau(self.v, uv)),
            Sigma(self.x, self.w, self.v, b.tau(self.v, uv), b.tau(self.w, wx)),
        ]

    def to_text(self):
        return f"TWOSWITCH {self.u} {self.v} {self.w} {self.x}"

    def to_json(self):
        return {"op": "TWOSWITCH", "nodes": [self.u, self.v, self.w, self.x]}


@dataclass(frozen=True)
class LambdaBigraph(OpRecord):
    expand: bool
    u: int
    v: int
    w: int
    sign: int = 1
    kind: ClassVar[str] = BIDIRECTED
    tag: ClassVar[str] = "LAMBDA"

    def apply(self, g):
        return apply_lambda_bigraph(g, self.expand, self.u, self.v, self.w, self.sign)

    def inverse(self):
        return LambdaBigraph(not self.expand, self.u, self.v, self.w, self.sign)

    def to_text(self):
        mode = "+" if self.expand else "-"
        text = f"LAMBDA{mode} u={self.u} v={self.v} w={self.w}"
        if self.sign != 1:
            text += " sign=-"
        return text

    def to_json(self):
        return {"op": "LAMBDA", "expand": self.expand, "u": self.u, "v": self.v,
                "w": self.w, "sign": self.sign}


@dataclass(frozen=True)
class DeltaBigraph(OpRecord):
    add: bool
    cycle: tuple
    kind: ClassVar[str] = BIDIRECTED
    tag: ClassVar[str] = "DELTA"

    def apply(self, g):
        return apply_delta_bigraph(g, self.add, self.cycle)

    def inverse(self):
        return DeltaBigraph(not self.add, self.cycle)

    def to_text(self):
        nodes, direction = _cycle_dir(self.cycle)
        mode = "+" if self.add else "-"
        return f"DELTA{mode} {nodes[0]} {nodes[1]} {nodes[2]} dir={direction}"

    def to_json(self):
        return {"op": "DELTA", "add": self.add, "cycle": list(self.cycle)}


# --- enumeration of applicable moves ---------------------------------------

BIGRAPH_OPS = frozenset({"gamma", "twoswitch", "lambda", "delta"})
DIGRAPH_OPS = frozenset({"lambda", "delta"})
GRAPH_OPS = frozenset({"twoswitch"})


def default_opset(kind: str) -> frozenset:
    return {UNDIRECTED: GRAPH_OPS, DIRECTED: DIGRAPH_OPS, BIDIRECTED: BIGRAPH_OPS}[kind]


def _two_switches(g, cls):
    es = sorted(g.edges)
    for i, (a, b) in enumerate(es):
        for c, d in es[i + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            for u, v, w, x in ((a, b, c, d), (a, b, d, c)):
                if not g.has_edge(u, w) and not g.has_edge(v, x):
                    yield cls(u, v, w, x)


def applicable_ops(g, opset=None) -> Iterator[OpRecord]:
    """Every single move applicable to ``g`` from ``opset``, in a fixed order."""
    if isinstance(g, Graph):
        opset = GRAPH_OPS if opset is None else opset
        if "twoswitch" in opset:
            yield from _two_switches(g, TwoSwitch)
        return
    n = g.n
    nodes = range(1, n + 1)
    if isinstance(g, Digraph):
        opset = DIGRAPH_OPS if opset is None else opset
        if "delta" in opset:
            for a, b, c in combinations(nodes, 3):
                if not (g.adjacent(a, b) or g.adjacent(b, c) or g.adjacent(a, c)):
                    yield DeltaDigraph(True, (a, b, c))
                    yield DeltaDigraph(True, (a, c, b))
                for cyc in ((a, b, c), (a, c, b)):
                    if {(cyc[0], cyc[1]), (cyc[1], cyc[2]), (cyc[2], cyc[0])} <= g.arcs:
                        yield DeltaDigraph(False, cyc)
        if "lambda" in opset:
            for u, w in sorted(g.arcs):
                for v in nodes:
                    if v not in (u, w) and not g.adjacent(u, v) and not g.adjacent(v, w):
                        yield LambdaDigraph(True, u, v, w)
            for v in nodes:
                for u in sorted(g.predecessors[v]):
                    for w in sorted(g.successors[v]):
                        if u != w and not g.adjacent(u, w):
                            yield LambdaDigraph(False, u, v, w)
        return
    if not isinstance(g, Bigraph):
        raise TypeError(f"not a graph: {g!r}")
    opset = BIGRAPH_OPS if opset is None else opset
    if "gamma" in opset:
        for v in nodes:
            inc = list(g.incidences(v))
            for (a, sa), (c, sc) in combinations(inc, 2):
                if sa != sc:
                    yield Gamma(v, (v, a), (v, c))
    if "twoswitch" in opset:
        yield from _two_switches(g, BidirTwoSwitch)
    if "lambda" in opset:
        for u, w in sorted(g.edges):
            for v in nodes:
                if v not in (u, w) and not g.has_edge(u, v) and not g.has_edge(v, w):
                    yield LambdaBigraph(True, u, v, w, 1)
                    yield LambdaBigraph(True, u, v, w, -1)
        for v in nodes:
            inc = list(g.incidences(v))
            for (a, sa), (c, sc) in combinations(inc, 2):
                if sa != sc and not g.has_edge(a, c):
                    yield LambdaBigraph(False, a, v, c, sa)
    if "delta" in opset:
        for a, b, c in combinations(nodes, 3):
            if not (g.has_edge(a, b) or g.has_edge(b, c) or g.has_edge(a, c)):
                yield DeltaBigraph(True, (a, b, c))
                yield DeltaBigraph(True, (a, c, b))
            elif g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
                for cyc in ((a, b, c), (a, c, b)):
                    pattern = _triangle_signs(cyc)
                    if all(g.tau(x, (x, y)) == sx and g.tau(y, (x, y)) == sy
                           for (x, y), (sx, sy) in pattern.items()):
                        yield DeltaBigraph(False, cyc)
