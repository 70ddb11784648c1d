"""Labelled simple graphs, digraphs and bigraphs on nodes 1..n.

All three types are immutable.  Edges are stored as canonical ``(u, v)``
pairs with ``u < v``; arcs keep their orientation.  A bigraph maps every
canonical edge ``(u, v)`` to the pair of local signs ``(tau(u, e), tau(v, e))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence, Tuple

Edge = Tuple[int, int]

UNDIRECTED = "undirected"
DIRECTED = "directed"
BIDIRECTED = "bidirected"
KINDS = (UNDIRECTED, DIRECTED, BIDIRECTED)


def edge(u: int, v: int) -> Edge:
    """Canonical form of the unordered pair {u, v}."""
    return (u, v) if u < v else (v, u)


def all_pairs(n: int) -> list[Edge]:
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def _check_node(n: int, v: int) -> None:
    if not isinstance(v, int) or not 1 <= v <= n:
        raise ValueError(f"node {v!r} outside 1..{n}")


def _check_n(n) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"node count must be a nonnegative integer, got {n!r}")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        _check_n(self.n)
        canon = set()
        for u, v in self.edges:
            _check_node(self.n, u)
            _check_node(self.n, v)
            if u == v:
                raise ValueError(f"loop at node {u}")
            e = edge(u, v)
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "edges", frozenset(canon))

    @cached_property
    def adjacency(self) -> dict[int, frozenset]:
        adj: dict[int, set] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def complement(self) -> "Graph":
        return Graph(self.n, frozenset(all_pairs(self.n)) - self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def key(self) -> tuple:
        return (self.n, tuple(sorted(self.edges)))


@dataclass(frozen=True)
class Digraph:
    """Oriented simple graph: at most one arc per unordered pair."""

    n: int
    arcs: frozenset = frozenset()

    def __post_init__(self):
        _check_n(self.n)
        arcs = set()
        seen_pairs = set()
        for u, v in self.arcs:
            _check_node(self.n, u)
            _check_node(self.n, v)
            if u == v:
                raise ValueError(f"loop at node {u}")
            p = edge(u, v)
            if p in seen_pairs:
                if (u, v) in arcs:
                    raise ValueError(f"duplicate arc {(u, v)}")
                raise ValueError(f"antiparallel arcs between {u} and {v}")
            seen_pairs.add(p)
            arcs.add((u, v))
        object.__setattr__(self, "arcs", frozenset(arcs))

    @cached_property
    def successors(self) -> dict[int, frozenset]:
        out: dict[int, set] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.arcs:
            out[u].add(v)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def predecessors(self) -> dict[int, frozenset]:
        inn: dict[int, set] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.arcs:
            inn[v].add(u)
        return {v: frozenset(s) for v, s in inn.items()}

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def underlying(self) -> Graph:
        return Graph(self.n, frozenset(edge(u, v) for u, v in self.arcs))

    def to_bigraph(self) -> "Bigraph":
        """Arc u->v becomes an edge with sign -1 at u and +1 at v."""
        signs = {}
        for u, v in self.arcs:
            signs[(u, v)] = (-1, 1)
        return Bigraph(self.n, signs)

    def key(self) -> tuple:
        return (self.n, tuple(sorted(self.arcs)))


class Bigraph:
    """Bidirected graph: a simple graph with a sign at each edge end.

    ``signs`` maps a pair ``(u, v)`` to ``(tau(u, e), tau(v, e))``; pairs
    given with ``u > v`` are flipped into canonical order.
    """

    __slots__ = ("n", "_signs", "_key", "_adj")

    def __init__(self, n: int, signs: Mapping[Edge, Tuple[int, int]] | None = None):
        _check_n(n)
        canon: dict[Edge, Tuple[int, int]] = {}
        for (u, v), (su, sv) in (signs or {}).items():
            _check_node(n, u)
            _check_node(n, v)
            if u == v:
                raise ValueError(f"loop at node {u}")
            if su not in (1, -1) or sv not in (1, -1):
                raise ValueError(f"signs on edge {(u, v)} must be +1 or -1")
            if u > v:
                u, v, su, sv = v, u, sv, su
            if (u, v) in canon:
                raise ValueError(f"duplicate edge {(u, v)}")
            canon[(u, v)] = (su, sv)
        self.n = n
        self._signs = canon
        self._key = None
        self._adj = None

    @property
    def signs(self) -> dict[Edge, Tuple[int, int]]:
        return dict(self._signs)

    @property
    def edges(self) -> frozenset:
        return frozenset(self._signs)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._signs

    def tau(self, v: int, e: Edge) -> int:
        """Local sign of edge ``e`` at its endpoint ``v``; 0 if not incident."""
        e = edge(*e)
        s = self._signs.get(e)
        if s is None or v not in e:
            return 0
        return s[0] if v == e[0] else s[1]

    def neighbors(self, v: int) -> frozenset:
        if self._adj is None:
            adj: dict[int, set] = {w: set() for w in range(1, self.n + 1)}
            for a, b in self._signs:
                adj[a].add(b)
                adj[b].add(a)
            self._adj = {w: frozenset(s) for w, s in adj.items()}
        return self._adj[v]

    def incidences(self, v: int) -> Iterator[Tuple[int, int]]:
        """Yield ``(neighbor, tau(v, v-neighbor))`` in increasing neighbor order."""
        for w in sorted(self.neighbors(v)):
            yield w, self.tau(v, (v, w))

    def underlying(self) -> Graph:
        return Graph(self.n, frozenset(self._signs))

    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.n, tuple(sorted((e, s) for e, s in self._signs.items())))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Bigraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Bigraph(n={self.n}, signs={dict(sorted(self._signs.items()))})"


@dataclass(frozen=True)
class DegreeSequence:
    """Integer vector tagged with the graph kind it refers to.

    Equality is positional, so (1, 0) and (0, 1) are different sequences.
    """

    kind: str
    d: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if self.kind == UNDIRECTED and any(x < 0 for x in self.d):
            raise ValueError("undirected degrees must be nonnegative")

    def __iter__(self):
        return iter(self.d)

    def __len__(self):
        return len(self.d)

    def __getitem__(self, i):
        return self.d[i]

    @property
    def n(self) -> int:
        return len(self.d)


@dataclass(frozen=True)
class ExtendedSequence:
    d: tuple
    s: Fraction


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(UNDIRECTED, tuple(g.degree(v) for v in range(1, g.n + 1)))


def net_degree_digraph(dg: Digraph) -> DegreeSequence:
    """Indegree minus outdegree at every node."""
    d = [0] * (dg.n + 1)
    for u, v in dg.arcs:
        d[u] -= 1
        d[v] += 1
    return DegreeSequence(DIRECTED, tuple(d[1:]))


def signed_degrees(b: Bigraph) -> tuple[tuple, tuple]:
    """Return ``(plus, minus)``: per node, the number of incidences signed +1 / -1."""
    plus = [0] * (b.n + 1)
    minus = [0] * (b.n + 1)
    for (u, v), (su, sv) in b._signs.items():
        for node, s in ((u, su), (v, sv)):
            if s > 0:
                plus[node] += 1
            else:
                minus[node] += 1
    return tuple(plus[1:]), tuple(minus[1:])


def net_degree_bigraph(b: Bigraph) -> DegreeSequence:
    plus, minus = signed_degrees(b)
    return DegreeSequence(BIDIRECTED, tuple(p - m for p, m in zip(plus, minus)))


def net_degree(g) -> DegreeSequence:
    """Degree sequence of any of the three graph kinds."""
    if isinstance(g, Graph):
        return degree_sequence(g)
    if isinstance(g, Digraph):
        return net_degree_digraph(g)
    if isinstance(g, Bigraph):
        return net_degree_bigraph(g)
    raise TypeError(f"not a graph: {g!r}")


def underlying_graph(b: Bigraph) -> Graph:
    return b.underlying()


def extend(d: DegreeSequence | Sequence[int]) -> ExtendedSequence:
    """Append half the coordinate sum, kept as an exact fraction."""
    vec = tuple(int(x) for x in d)
    return ExtendedSequence(vec, Fraction(sum(vec), 2))


def kind_of(g) -> str:
    if isinstance(g, Graph):
        return UNDIRECTED
    if isinstance(g, Digraph):
        return DIRECTED
    if isinstance(g, Bigraph):
        return BIDIRECTED
    raise TypeError(f"not a graph: {g!r}")


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(all_pairs(n)))


def path_graph(nodes: Iterable[int], n: int) -> Graph:
    nodes = list(nodes)
    return Graph(n, frozenset(edge(a, b) for a, b in zip(nodes, nodes[1:])))
