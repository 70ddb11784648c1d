"""Constructive realizations, one per graph kind.

Every constructor is deterministic: ties are always broken by the smallest
node index.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .characterize import bigraphical_violation, digraphical_violation, graphical_violation
from .errors import NotRealizable
from .graphs import Bigraph, Digraph, Graph, edge


def _fail(d, kind, v):
    raise NotRealizable(f"{tuple(d)} is not {kind} realizable: {v.describe()}", v)


def havel_hakimi_order(residual: dict[int, int]):
    """Pick the pivot and its targets for one Havel-Hakimi step.

    The pivot is the node of largest residual degree; its targets are the
    ``residual[pivot]`` other nodes with largest residual degree.  Ties go to the
    smaller index in both choices.
    """
    ranked = sorted(residual, key=lambda v: (-residual[v], v))
    pivot = ranked[0]
    targets = ranked[1:1 + residual[pivot]]
    return pivot, targets


def realize_graph(d: Sequence[int]) -> Graph:
    """Havel-Hakimi realization of a graphical sequence."""
    d = tuple(d)
    v = graphical_violation(d)
    if v is not None:
        _fail(d, "undirected", v)
    n = len(d)
    residual = {i: d[i - 1] for i in range(1, n + 1)}
    edges = set()
    while residual:
        pivot, targets = havel_hakimi_order(residual)
        if len(targets) < residual[pivot]:
            raise AssertionError("Havel-Hakimi ran out of targets on a graphical input")
        for t in targets:
            edges.add(edge(pivot, t))
            residual[t] -= 1
            if residual[t] < 0:
                raise AssertionError("negative residual degree on a graphical input")
        del residual[pivot]
    return Graph(n, frozenset(edges))


def realize_digraph(d: Sequence[int]) -> Digraph:
    """Unit-capacity flow from nodes with surplus outdegree to those with surplus indegree.

    Each ordered pair carries at most one unit.  Pushing against an existing
    unit on the reverse arc cancels it, so the result never has both (u, v)
    and (v, u).
    """
    d = tuple(d)
    v = digraphical_violation(d)
    if v is not None:
        _fail(d, "directed", v)
    n = len(d)
    nodes = range(1, n + 1)
    flow = set()  # arcs carrying one unit
    supply = {i: -d[i - 1] for i in nodes if d[i - 1] < 0}
    demand = {i: d[i - 1] for i in nodes if d[i - 1] > 0}

    def residual(u, w):
        return (u, w) not in flow

    while demand:
        # BFS from all remaining supplies at once
        parent = {s: None for s in sorted(supply)}
        queue = deque(sorted(supply))
        sink = None
        while queue:
            u = queue.popleft()
            if u in demand:
                sink = u
                break
            for w in nodes:
                if w != u and w not in parent and residual(u, w):
                    parent[w] = u
                    queue.append(w)
        if sink is None:
            raise AssertionError("no augmenting path on a digraphical input")
        w = sink
        while parent[w] is not None:
            u = parent[w]
            if (w, u) in flow:
                flow.discard((w, u))
            else:
                flow.add((u, w))
            w = u
        source = w
        supply[source] -= 1
        if not supply[source]:
            del supply[source]
        demand[sink] -= 1
        if not demand[sink]:
            del demand[sink]
    return Digraph(n, frozenset(flow))


def realize_bigraph(d: Sequence[int]) -> Bigraph:
    """Bidirect the complete graph minus a matching on the parity-defect nodes.

    T collects the nodes whose entry has the wrong parity for degree n-1; it is
    matched in increasing order (t1 t2, t3 t4, ...).  At each node the first
    ``|d_i|`` incidences (by neighbor) get sign ``sign(d_i)`` and the rest
    alternate +, - so that they cancel.
    """
    d = tuple(d)
    v = bigraphical_violation(d)
    if v is not None:
        _fail(d, "bidirected", v)
    n = len(d)
    T = [i for i in range(1, n + 1) if (d[i - 1] - (n - 1)) % 2]
    removed = {edge(T[k], T[k + 1]) for k in range(0, len(T), 2)}
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if (a, b) not in removed]
    neighbors = {i: [] for i in range(1, n + 1)}
    for a, b in pairs:
        neighbors[a].append(b)
        neighbors[b].append(a)
    local = {}
    for i in range(1, n + 1):
        di = d[i - 1]
        sgn = 1 if di > 0 else -1
        for k, w in enumerate(sorted(neighbors[i])):
            if k < abs(di):
                local[(i, w)] = sgn
            else:
                local[(i, w)] = 1 if (k - abs(di)) % 2 == 0 else -1
    return Bigraph(n, {(a, b): (local[(a, b)], local[(b, a)]) for a, b in pairs})


def canonical_tournament(perm: Sequence[int]) -> Digraph:
    """Transitive tournament in which node ``i`` has rank ``perm[i-1]``.

    Ranks run 1..n and arcs go from lower to higher rank, so node i gets
    net-degree ``2*perm[i-1] - n - 1``: a rearrangement of (-n+1, -n+3, ..., n-1).
    """
    perm = tuple(perm)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    arcs = set()
    for u in range(1, n + 1):
        for w in range(1, n + 1):
            if perm[u - 1] < perm[w - 1]:
                arcs.add((u, w))
    return Digraph(n, frozenset(arcs))


def realize(d: Sequence[int], kind: str):
    if kind == "undirected":
        return realize_graph(d)
    if kind == "directed":
        return realize_digraph(d)
    if kind == "bidirected":
        return realize_bigraph(d)
    raise ValueError(f"unknown kind {kind!r}")
