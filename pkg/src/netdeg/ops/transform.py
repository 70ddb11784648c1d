"""Constructive transformations between realizations of one sequence.

Every function returns a script (list of records) that replays on its first
argument with every precondition satisfied.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

from ..errors import BoundExceeded, PreconditionFailed
from ..graphs import Bigraph, Digraph, Graph, edge, net_degree
from ..realize import havel_hakimi_order
from .records import (
    BidirTwoSwitch,
    DeltaBigraph,
    LambdaBigraph,
    Gamma,
    TwoSwitch,
    applicable_ops,
)
from .script import invert, replay

DIGRAPH_SEARCH_MAX_N = 6


# --- bigraph building blocks ------------------------------------------------


def gamma_transform(b: Bigraph, target: Bigraph) -> list:
    """Gamma moves carrying ``b`` to ``target`` when only the signs differ.

    At each node the incidences that must flip + to - are paired, in
    neighbor order, with those that must flip - to +.
    """
    if b.edges != target.edges:
        raise PreconditionFailed("gamma_transform needs identical underlying graphs")
    if net_degree(b) != net_degree(target):
        raise PreconditionFailed("gamma_transform needs equal net-degree sequences")
    ops = []
    for v in range(1, b.n + 1):
        down, up = [], []
        for w, s in b.incidences(v):
            t = target.tau(v, (v, w))
            if s > t:
                down.append(edge(v, w))
            elif s < t:
                up.append(edge(v, w))
        if len(down) != len(up):
            raise AssertionError(f"unbalanced sign changes at node {v}")
        ops.extend(Gamma(v, e1, e2) for e1, e2 in zip(down, up))
    return ops


def decompose_complement(g: Graph) -> tuple[list, list]:
    """Split the edges of the complement of ``g`` into cycles and paths.

    Odd-degree nodes of the complement end up as path endpoints, paired off.
    Two odd nodes adjacent in the complement are first paired by that single
    edge; afterwards any longer path joins two nodes that are adjacent in
    ``g``, which lets the caller replace that edge of ``g`` by the path.
    """
    n = g.n
    adj = {v: set(g.complement().neighbors(v)) for v in range(1, n + 1)}

    def drop(a, b):
        adj[a].discard(b)
        adj[b].discard(a)

    cycles, paths = [], []
    odd = [v for v in range(1, n + 1) if len(adj[v]) % 2]
    matched = set()
    for a in odd:
        if a in matched:
            continue
        for b in odd:
            if b > a and b not in matched and b in adj[a]:
                paths.append([a, b])
                drop(a, b)
                matched |= {a, b}
                break

    def walk(start):
        stack = [start]
        pos = {start: 0}
        cur = start
        while adj[cur]:
            nxt = min(adj[cur])
            drop(cur, nxt)
            if nxt in pos:
                i = pos[nxt]
                cycles.append(stack[i:])
                for node in stack[i + 1:]:
                    del pos[node]
                del stack[i + 1:]
            else:
                pos[nxt] = len(stack)
                stack.append(nxt)
            cur = stack[-1]
        return stack

    while True:
        odd = [v for v in range(1, n + 1) if len(adj[v]) % 2]
        if not odd:
            break
        path = walk(odd[0])
        if len(path) < 2:
            raise AssertionError("walk from an odd node ended where it started")
        paths.append(path)
    while True:
        busy = [v for v in range(1, n + 1) if adj[v]]
        if not busy:
            break
        rest = walk(busy[0])
        if len(rest) != 1:
            raise AssertionError("walk in an even graph did not close")
    return cycles, paths


def _directed_signs(nodes, closed):
    """Signs of the path/cycle oriented along ``nodes``: -1 at the tail, +1 at the head."""
    pairs = list(zip(nodes, nodes[1:]))
    if closed:
        pairs.append((nodes[-1], nodes[0]))
    return {(a, c): (-1, 1) for a, c in pairs}


def _with(b: Bigraph, add=None, remove=()) -> Bigraph:
    signs = b.signs
    for e in remove:
        del signs[edge(*e)]
    for (a, c), (sa, sc) in (add or {}).items():
        signs[(a, c)] = (sa, sc)
    return Bigraph(b.n, signs)


def _grow_cycle(cur: Bigraph, cyc: list):
    """Add the edges of ``cyc`` using Delta and Lambda moves; signs are left unfixed."""
    m = len(cyc)
    if m == 3:
        op = DeltaBigraph(True, tuple(cyc))
        return [op], op.apply(cur)
    for i in range(m - 1):
        a, mid, c = cyc[i], cyc[(i + 1) % m], cyc[(i + 2) % m]
        if not cur.has_edge(a, c):
            ops, cur = _grow_cycle(cur, [x for x in cyc if x != mid])
            op = LambdaBigraph(True, a, mid, c)
            return ops + [op], op.apply(cur)
    # every chord i, i+2 is present
    if m == 4:
        op = LambdaBigraph(True, cyc[0], cyc[1], cyc[2])
        sub, cur = _grow_cycle(op.apply(cur), [cyc[0], cyc[2], cyc[3]])
        return [op] + sub, cur
    ops = []
    for j in range(1, m // 2 + 1):
        op = LambdaBigraph(True, cyc[2 * j - 2], cyc[2 * j - 1], cyc[(2 * j) % m])
        cur = op.apply(cur)
        ops.append(op)
    sub, cur = _grow_cycle(cur, cyc[0::2])
    return ops + sub, cur


def add_bidirected_cycle(b: Bigraph, cycle: Sequence[int], signs: Optional[dict] = None) -> list:
    """Script that adds a bidirected cycle on ``cycle`` to ``b``.

    ``signs`` maps consecutive cycle pairs to their end signs and must
    alternate at every node; by default the cycle is oriented along the
    given node order.  Every other edge of ``b`` ends with its original signs.
    """
    cyc = list(cycle)
    m = len(cyc)
    if m < 3 or len(set(cyc)) != m:
        raise PreconditionFailed("a cycle needs at least three distinct nodes")
    pairs = [(cyc[i], cyc[(i + 1) % m]) for i in range(m)]
    for a, c in pairs:
        if b.has_edge(a, c):
            raise PreconditionFailed(f"cycle edge {a}-{c} already present")
    signs = _directed_signs(cyc, closed=True) if signs is None else dict(signs)
    target = _with(b, add=signs)
    if net_degree(target) != net_degree(b):
        raise PreconditionFailed("cycle signs do not alternate at every node")
    ops, cur = _grow_cycle(b, cyc)
    return ops + gamma_transform(cur, target)


def _grow_path(cur: Bigraph, p: list):
    """Replace edge p[0]-p[-1] by the path ``p`` using Lambda moves only."""
    k = len(p)
    if k == 2:
        return [], cur
    if k == 3:
        op = LambdaBigraph(True, p[0], p[1], p[2])
        return [op], op.apply(cur)
    for i in range(k - 2):
        a, mid, c = p[i], p[i + 1], p[i + 2]
        if not cur.has_edge(a, c):
            ops, cur = _grow_path(cur, p[:i + 1] + p[i + 2:])
            op = LambdaBigraph(True, a, mid, c)
            return ops + [op], op.apply(cur)
    ops = []
    for i in range(1, k - 1, 2):
        op = LambdaBigraph(True, p[i - 1], p[i], p[i + 1])
        cur = op.apply(cur)
        ops.append(op)
    sub = p[0::2] if k % 2 else p[0::2] + [p[-1]]
    more, cur = _grow_path(cur, sub)
    return ops + more, cur


def add_bidirected_path(b: Bigraph, path: Sequence[int]) -> list:
    """Script replacing the edge between the ends of ``path`` by a bidirected path.

    The end signs of the replaced edge are kept at the path ends; inner nodes
    get +1 towards the start and -1 towards the end.
    """
    p = list(path)
    k = len(p)
    if k < 2 or len(set(p)) != k:
        raise PreconditionFailed("a path needs at least two distinct nodes")
    if not b.has_edge(p[0], p[-1]):
        raise PreconditionFailed(f"edge {p[0]}-{p[-1]} to be replaced is absent")
    if k == 2:
        return []
    for a, c in zip(p, p[1:]):
        if b.has_edge(a, c):
            raise PreconditionFailed(f"path edge {a}-{c} already present")
    end = edge(p[0], p[-1])
    first, last = b.tau(p[0], end), b.tau(p[-1], end)
    add = _directed_signs(p, closed=False)
    add[(p[0], p[1])] = (first, 1)
    add[(p[-2], p[-1])] = (-1, last)
    target = _with(b, add=add, remove=[end])
    ops, cur = _grow_path(b, p)
    return ops + gamma_transform(cur, target)


def densify(b: Bigraph) -> tuple[list, Bigraph]:
    """Script filling in the complement of ``b`` up to a matching.

    Afterwards node i has degree n-2 if its net-degree has the wrong parity
    for n-1 and degree n-1 otherwise.
    """
    cycles, paths = decompose_complement(b.underlying())
    ops = []
    cur = b
    for cyc in cycles:
        step = add_bidirected_cycle(cur, cyc)
        cur = replay(cur, step)
        ops += step
    for p in paths:
        if len(p) > 2:
            step = add_bidirected_path(cur, p)
            cur = replay(cur, step)
            ops += step
    return ops, cur


def transform_bigraph(b: Bigraph, target: Bigraph) -> list:
    """Gamma / two-switch / Lambda / Delta script from ``b`` to ``target``.

    Both sides are densified, the dense underlying graphs are aligned by
    sign-inheriting two-switches, the signs are fixed by Gamma moves, and the
    target side's densification is appended in reverse.
    """
    if b.n != target.n or net_degree(b) != net_degree(target):
        raise PreconditionFailed("bigraphs must have the same net-degree sequence")
    if b == target:
        return []
    if b.edges == target.edges:
        return gamma_transform(b, target)
    up, dense = densify(b)
    down, dense_target = densify(target)
    align = [BidirTwoSwitch(op.u, op.v, op.w, op.x)
             for op in transform_graph(dense.underlying(), dense_target.underlying())]
    aligned = replay(dense, align)
    return up + align + gamma_transform(aligned, dense_target) + invert(down)


# --- undirected ---------------------------------------------------------------


def reduce_to_havel_hakimi(g: Graph) -> list:
    """Two-switches carrying ``g`` to the Havel-Hakimi realization of its degrees.

    Mirrors realize.realize_graph step by step: once the pivot's neighborhood
    among unprocessed nodes matches the greedy choice, the pivot is retired.
    """
    ops = []
    cur = g
    remaining = set(range(1, g.n + 1))
    while remaining:
        residual = {v: len(cur.neighbors(v) & remaining) for v in remaining}
        pivot, targets = havel_hakimi_order(residual)
        targets = set(targets)
        while True:
            nbrs = cur.neighbors(pivot) & remaining
            if nbrs == targets:
                break
            a = min(targets - nbrs)
            b = min(nbrs - targets)
            candidates = (cur.neighbors(a) & remaining) - cur.neighbors(b) - {b, pivot}
            if not candidates:
                raise AssertionError("no switch partner; degree bookkeeping is off")
            op = TwoSwitch(pivot, b, a, min(candidates))
            cur = op.apply(cur)
            ops.append(op)
        remaining.discard(pivot)
    return ops


def transform_graph(g: Graph, target: Graph) -> list:
    if g.n != target.n or net_degree(g) != net_degree(target):
        raise PreconditionFailed("graphs must have the same degree sequence")
    if g == target:
        return []
    return reduce_to_havel_hakimi(g) + invert(reduce_to_havel_hakimi(target))


# --- directed -----------------------------------------------------------------


def _digraph_bound():
    env = os.environ.get("NETDEG_MAX_N")
    return int(env) if env else DIGRAPH_SEARCH_MAX_N


def transform_digraph(dg: Digraph, target: Digraph, max_n: Optional[int] = None) -> list:
    """Shortest Delta/Lambda script, found by bidirectional breadth-first search."""
    if dg.n != target.n or net_degree(dg) != net_degree(target):
        raise PreconditionFailed("digraphs must have the same net-degree sequence")
    bound = _digraph_bound() if max_n is None else max_n
    if dg.n > bound:
        raise BoundExceeded(f"digraph search is limited to n <= {bound}")
    if dg == target:
        return []
    # parent[state] = (previous state, record leading from previous to state)
    fwd = {dg: None}
    bwd = {target: None}
    depth = {True: {dg: 0}, False: {target: 0}}
    fwd_frontier, bwd_frontier = [dg], [target]
    while fwd_frontier and bwd_frontier:
        expand_fwd = len(fwd_frontier) <= len(bwd_frontier)
        frontier = fwd_frontier if expand_fwd else bwd_frontier
        seen, other = (fwd, bwd) if expand_fwd else (bwd, fwd)
        mine, theirs = depth[expand_fwd], depth[not expand_fwd]
        nxt = []
        meet = None
        for state in frontier:
            for op in applicable_ops(state):
                new = op.apply(state)
                if new in seen:
                    continue
                seen[new] = (state, op)
                mine[new] = mine[state] + 1
                nxt.append(new)
                if new in other and (meet is None or theirs[new] < theirs[meet]):
                    meet = new
        if meet is not None:
            return _digraph_path(fwd, meet) + invert(_digraph_path(bwd, meet))
        if expand_fwd:
            fwd_frontier = nxt
        else:
            bwd_frontier = nxt
    raise AssertionError("net-degree fiber is disconnected under Delta/Lambda moves")


def _digraph_path(parent, state):
    ops = []
    while parent[state] is not None:
        state, op = parent[state]
        ops.append(op)
    ops.reverse()
    return ops


def transform(g, target) -> list:
    """Dispatch on graph kind."""
    if isinstance(g, Graph):
        return transform_graph(g, target)
    if isinstance(g, Digraph):
        return transform_digraph(g, target)
    if isinstance(g, Bigraph):
        return transform_bigraph(g, target)
    raise TypeError(f"not a graph: {g!r}")
