"""Brute-force ground truth for small n.

Everything here is deliberately naive: graphs are enumerated pair by pair,
degree sequences are read off the enumerated objects, and nothing from the
characterization or realization modules is consulted.
"""

from __future__ import annotations

import json
import os
import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Optional, Sequence

from .errors import BoundExceeded
from .graphs import (
    BIDIRECTED,
    DIRECTED,
    UNDIRECTED,
    Bigraph,
    Digraph,
    Graph,
    all_pairs,
    net_degree,
)
from .ops.records import applicable_ops, default_opset

ENUM_MAX_N = {UNDIRECTED: 6, DIRECTED: 5, BIDIRECTED: 4}
SUMSET_MAX_N = 7
_BIGRAPH_STATES = (None, (1, 1), (1, -1), (-1, 1), (-1, -1))


def _bound(kind: str, default: int) -> int:
    env = os.environ.get("NETDEG_MAX_N")
    return int(env) if env else default


def _check(n: int, kind: str, default: Optional[int] = None):
    limit = _bound(kind, ENUM_MAX_N[kind] if default is None else default)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise BoundExceeded(f"{kind} enumeration is limited to n <= {limit}")


def enum_graphs(n: int) -> Iterator[Graph]:
    _check(n, UNDIRECTED)
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def enum_digraphs(n: int) -> Iterator[Digraph]:
    _check(n, DIRECTED)
    pairs = all_pairs(n)
    for states in product((0, 1, 2), repeat=len(pairs)):
        arcs = set()
        for (u, v), s in zip(pairs, states):
            if s == 1:
                arcs.add((u, v))
            elif s == 2:
                arcs.add((v, u))
        yield Digraph(n, frozenset(arcs))


def enum_bigraphs(n: int) -> Iterator[Bigraph]:
    _check(n, BIDIRECTED)
    pairs = all_pairs(n)
    for states in product(_BIGRAPH_STATES, repeat=len(pairs)):
        yield Bigraph(n, {p: s for p, s in zip(pairs, states) if s is not None})


def enumerate_kind(n: int, kind: str):
    return {UNDIRECTED: enum_graphs, DIRECTED: enum_digraphs, BIDIRECTED: enum_bigraphs}[kind](n)


# --- degree sequences ---------------------------------------------------------

# Contribution of one pair (u, v) to (d_u, d_v), per local state.
_PAIR_DELTAS = {
    UNDIRECTED: ((0, 0), (1, 1)),
    DIRECTED: ((0, 0), (-1, 1), (1, -1)),
    BIDIRECTED: ((0, 0),) + _BIGRAPH_STATES[1:],
}


def _sumset_sequences(n: int, kind: str) -> frozenset:
    current = {(0,) * n}
    for u, v in all_pairs(n):
        nxt = set()
        for d in current:
            for du, dv in _PAIR_DELTAS[kind]:
                e = list(d)
                e[u - 1] += du
                e[v - 1] += dv
                nxt.add(tuple(e))
        current = nxt
    return frozenset(current)


@lru_cache(maxsize=None)
def _distinct(n: int, kind: str, method: str) -> frozenset:
    if method == "enumerate":
        return frozenset(net_degree(g).d for g in enumerate_kind(n, kind))
    if method == "sumset":
        _check(n, kind, SUMSET_MAX_N)
        return _sumset_sequences(n, kind)
    raise ValueError(f"unknown method {method!r}")


def distinct_sequences(n: int, kind: str, method: str = "enumerate") -> frozenset:
    """All degree sequences (as tuples) realized by some graph of ``kind`` on n nodes.

    ``method="sumset"`` builds the same set pair by pair without materializing
    graphs, which reaches one node further.
    """
    return _distinct(n, kind, method)


def tight_sequences(n: int, kind: str, method: str = "enumerate") -> frozenset:
    """Realized sequences lying on the relative boundary of their convex hull.

    d counts as boundary when some direction c in {-1,0,1}^n that is not
    constant on the realized set attains its maximum there at d.  Facet
    normals of all three polytopes are of this shape, so this is exact.
    """
    seqs = distinct_sequences(n, kind, method)
    tight = set()
    for c in product((-1, 0, 1), repeat=n):
        vals = {d: sum(ci * di for ci, di in zip(c, d)) for d in seqs}
        top, bottom = max(vals.values(), default=0), min(vals.values(), default=0)
        if top == bottom:
            continue
        tight.update(d for d, v in vals.items() if v == top)
    return frozenset(tight)


# --- fibers -------------------------------------------------------------------


@dataclass(frozen=True)
class Fiber:
    d: tuple
    kind: str
    members: tuple  # sorted by key()

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)


@lru_cache(maxsize=None)
def fibers(n: int, kind: str) -> dict:
    """Every fiber on n nodes, keyed by the degree-sequence tuple."""
    groups: dict = {}
    for g in enumerate_kind(n, kind):
        groups.setdefault(net_degree(g).d, []).append(g)
    return {d: Fiber(d, kind, tuple(sorted(ms, key=lambda g: g.key()))) for d, ms in sorted(groups.items())}


def fiber(d: Sequence[int], kind: str) -> Fiber:
    d = tuple(d)
    return fibers(len(d), kind).get(d, Fiber(d, kind, ()))


# --- operation graph ----------------------------------------------------------


@dataclass(frozen=True)
class OpGraphReport:
    connected: bool
    diameter: Optional[int]  # None when disconnected or empty
    size: int

    def __bool__(self):
        return self.connected


def _bfs(start, opset):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for op in applicable_ops(g, opset):
            h = op.apply(g)
            if h not in dist:
                dist[h] = dist[g] + 1
                queue.append(h)
    return dist


def op_graph_connected(d: Sequence[int], kind: str, opset=None) -> OpGraphReport:
    """Whether single moves from ``opset`` connect the whole fiber of d."""
    opset = default_opset(kind) if opset is None else frozenset(opset)
    members = fiber(d, kind).members
    if not members:
        return OpGraphReport(True, None, 0)
    dist = _bfs(members[0], opset)
    if set(dist) != set(members):
        stray = set(dist) - set(members)
        if stray:
            raise AssertionError(f"a move left the fiber of {tuple(d)}")
        return OpGraphReport(False, None, len(members))
    diameter = max(dist.values())
    for g in members[1:]:
        diameter = max(diameter, max(_bfs(g, opset).values()))
    return OpGraphReport(True, diameter, len(members))


# --- samplers and independent predicates --------------------------------------


def _random_bigraph(n: int, rng: random.Random) -> Bigraph:
    signs = {}
    for p in all_pairs(n):
        s = rng.choice(_BIGRAPH_STATES)
        if s is not None:
            signs[p] = s
    return Bigraph(n, signs)


def random_fiber_member(d: Sequence[int], rng: random.Random, tries: int = 100000) -> Bigraph:
    """A random bigraph with net-degree d, by rejection on the underlying graph.

    An underlying graph works iff every degree has the parity of d_i and is at
    least |d_i|; the signs are then a random choice of (deg + d_i)/2 plus ends.
    Not uniform over the fiber, which is fine for test sampling.
    """
    d = tuple(d)
    n = len(d)
    pairs = all_pairs(n)
    for _ in range(tries):
        es = [p for p in pairs if rng.random() < 0.5]
        deg = [0] * (n + 1)
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        if any(deg[i + 1] < abs(x) or (deg[i + 1] - x) % 2 for i, x in enumerate(d)):
            continue
        plus = {}
        for v in range(1, n + 1):
            inc = [e for e in es if v in e]
            plus[v] = set(rng.sample(inc, (deg[v] + d[v - 1]) // 2))
        signs = {(u, v): (1 if (u, v) in plus[u] else -1, 1 if (u, v) in plus[v] else -1) for u, v in es}
        return Bigraph(n, signs)
    raise RuntimeError(f"no realization of {d} found by rejection")


def random_bigraph_pair(n: int, rng: random.Random) -> tuple:
    a = _random_bigraph(n, rng)
    b = random_fiber_member(net_degree(a).d, rng)
    return a, b


def weakly_split_brute_force(g: Graph) -> bool:
    """Exhaustive search over all 3^n labelings, no shortcuts."""
    nodes = range(1, g.n + 1)
    for labels in product("cio", repeat=g.n):
        part = {c: [v for v, lab in zip(nodes, labels) if lab == c] for c in "cio"}
        if not part["c"] and not part["i"]:
            continue
        if any(not g.has_edge(a, b) for a, b in combinations(part["c"], 2)):
            continue
        if any(g.has_edge(a, b) for a, b in combinations(part["i"], 2)):
            continue
        if all(g.has_edge(o, c) for o in part["o"] for c in part["c"]) and \
                not any(g.has_edge(o, i) for o in part["o"] for i in part["i"]):
            return True
    return False


# --- reports ------------------------------------------------------------------


def _fmt(d) -> str:
    return ",".join(str(x) for x in d)


def sequences_report(n: int, kind: str) -> dict:
    seqs = sorted(distinct_sequences(n, kind))
    return {"kind": kind, "n": n, "count": len(seqs), "sequences": [list(d) for d in seqs]}


def fibers_report(n: int, kind: str) -> dict:
    fs = fibers(n, kind)
    return {"kind": kind, "n": n, "count": len(fs),
            "fibers": [{"d": list(d), "size": f.size} for d, f in fs.items()]}


def connectivity_report(n: int, kind: str, opset=None) -> dict:
    rows = []
    for d in fibers(n, kind):
        r = op_graph_connected(d, kind, opset)
        rows.append({"d": list(d), "size": r.size, "connected": r.connected, "diameter": r.diameter})
    return {"kind": kind, "n": n, "all_connected": all(r["connected"] for r in rows), "fibers": rows}


def report_to_text(report: dict) -> str:
    lines = [f"# {report['kind']} n={report['n']}"]
    if "sequences" in report:
        lines += [_fmt(d) for d in report["sequences"]]
        lines.append(f"count {report['count']}")
    elif "all_connected" in report:
        for r in report["fibers"]:
            diam = "-" if r["diameter"] is None else r["diameter"]
            lines.append(f"{_fmt(r['d'])}\tsize={r['size']}\tconnected={'yes' if r['connected'] else 'no'}\tdiameter={diam}")
        lines.append(f"all_connected {'yes' if report['all_connected'] else 'no'}")
    else:
        lines += [f"{_fmt(r['d'])}\tsize={r['size']}" for r in report["fibers"]]
        lines.append(f"count {report['count']}")
    return "\n".join(lines) + "\n"


def report_to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True)
