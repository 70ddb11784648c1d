"""Recognizers for extremal classes: threshold, weakly split, width-2 posets, uniqueness."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

from .characterize import bigraphical_violation, graphical_violation
from .errors import NotRealizable, NotWidth2Poset
from .graphs import Bigraph, Digraph, Graph, net_degree_digraph
from .realize import realize_graph

WEAKLY_SPLIT_EXHAUSTIVE_MAX_N = 12


@dataclass(frozen=True)
class WeaklySplitPartition:
    """``(V_c, V_i, V_o)`` for graphs; ``V_s``/``V_t`` for digraphs (others empty)."""

    V_c: frozenset = frozenset()
    V_i: frozenset = frozenset()
    V_o: frozenset = frozenset()
    V_s: frozenset = frozenset()
    V_t: frozenset = frozenset()


@dataclass(frozen=True)
class OrderedPartition:
    blocks: tuple

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


# --- undirected ---------------------------------------------------------------


def threshold_blocks(g: Graph):
    """Peel isolated or dominating nodes in blocks; None if g gets stuck.

    Returns a list of ``(is_dominating, nodes)``.  All isolated nodes of the
    current graph are removed together, else all dominating ones.
    """
    remaining = set(range(1, g.n + 1))
    blocks = []
    while remaining:
        deg = {v: len(g.neighbors(v) & remaining) for v in remaining}
        isolated = frozenset(v for v in remaining if deg[v] == 0)
        if isolated:
            blocks.append((False, isolated))
            remaining -= isolated
            continue
        dominating = frozenset(v for v in remaining if deg[v] == len(remaining) - 1)
        if not dominating:
            return None
        blocks.append((True, dominating))
        remaining -= dominating
    return blocks


def is_threshold(g: Graph) -> bool:
    return threshold_blocks(g) is not None


def vertex_certificate_undirected(g: Graph) -> Optional[tuple]:
    """Integer weights c with ij an edge iff c_i + c_j > 0, when g is threshold.

    Blocks peeled later get smaller magnitudes (1, 3, 5, ... counted from the
    last block), so a pair is decided by whichever node was peeled first.
    """
    blocks = threshold_blocks(g)
    if blocks is None:
        return None
    c = [0] * (g.n + 1)
    for rank, (dominating, nodes) in enumerate(reversed(blocks)):
        mag = 2 * rank + 1
        for v in nodes:
            c[v] = mag if dominating else -mag
    return tuple(c[1:])


def is_unique_undirected(d: Sequence[int]) -> bool:
    v = graphical_violation(d)
    if v is not None:
        raise NotRealizable(f"{tuple(d)} is not graphical: {v.describe()}", v)
    return is_threshold(realize_graph(d))


def _check_weakly_split(g: Graph, Vc, Vi) -> Optional[WeaklySplitPartition]:
    if not Vc and not Vi:
        return None
    nodes = frozenset(range(1, g.n + 1))
    Vo = nodes - Vc - Vi
    for a, b in combinations(sorted(Vc), 2):
        if not g.has_edge(a, b):
            return None
    for a, b in combinations(sorted(Vi), 2):
        if g.has_edge(a, b):
            return None
    for o in Vo:
        nb = g.neighbors(o)
        if not Vc <= nb or nb & Vi:
            return None
    return WeaklySplitPartition(V_c=frozenset(Vc), V_i=frozenset(Vi), V_o=Vo)


def is_weakly_split_graph(g: Graph) -> Optional[WeaklySplitPartition]:
    """A (V_c, V_i, V_o) partition of g if one exists.

    Degree-sorted candidates (V_c = s highest, V_i = t lowest) are tried first;
    the full 3^n search is the fallback up to n = 12 and skipped beyond.
    """
    n = g.n
    order = sorted(range(1, n + 1), key=lambda v: (-g.degree(v), v))
    for s in range(n + 1):
        for t in range(n - s + 1):
            if (s, t) == (0, 0):
                continue
            found = _check_weakly_split(g, frozenset(order[:s]), frozenset(order[n - t:]))
            if found:
                return found
    if n > WEAKLY_SPLIT_EXHAUSTIVE_MAX_N:
        return None
    for labels in product((0, 1, 2), repeat=n):
        Vc = frozenset(v for v, lab in zip(range(1, n + 1), labels) if lab == 1)
        Vi = frozenset(v for v, lab in zip(range(1, n + 1), labels) if lab == 2)
        found = _check_weakly_split(g, Vc, Vi)
        if found:
            return found
    return None


# --- directed -----------------------------------------------------------------


def is_weakly_split_digraph(dg: Digraph) -> Optional[WeaklySplitPartition]:
    """``(V_s, V_t)``, both nonempty, with every arc V_s -> V_t present.

    Only the sets V_t = k largest net-degrees need checking: any valid V_t
    attains the bound k(n-k) on its degree sum, hence so do the top k.
    """
    n = dg.n
    d = net_degree_digraph(dg).d
    order = sorted(range(1, n + 1), key=lambda v: (-d[v - 1], v))
    for k in range(1, n):
        Vt = frozenset(order[:k])
        Vs = frozenset(range(1, n + 1)) - Vt
        if all(dg.has_arc(s, t) for s in Vs for t in Vt):
            return WeaklySplitPartition(V_s=Vs, V_t=Vt)
    return None


def forbidden_triples(dg: Digraph):
    """Yield ``(label, triple)`` for induced copies of the four forbidden patterns.

    D1: three pairwise non-adjacent nodes; D2: a single arc plus a third node
    adjacent to neither end; D3: a directed triangle; D4: a directed 2-path
    whose ends are non-adjacent.
    """
    for tri in combinations(range(1, dg.n + 1), 3):
        inside = [(a, b) for a, b in dg.arcs if a in tri and b in tri]
        if not inside:
            yield "D1", tri
        elif len(inside) == 1:
            yield "D2", tri
        elif len(inside) == 3:
            heads = {b for _, b in inside}
            if len(heads) == 3:
                yield "D3", tri
        else:
            (a, b), (c, e) = inside
            if b == c or e == a:
                yield "D4", tri


def is_unique_digraph(dg: Digraph) -> bool:
    """True iff no forbidden induced pattern occurs (always true for n <= 2)."""
    if dg.n <= 2:
        return True
    return next(forbidden_triples(dg), None) is None


def _reachability(dg: Digraph):
    reach = {v: set(dg.successors[v]) for v in range(1, dg.n + 1)}
    changed = True
    while changed:
        changed = False
        for v in reach:
            extra = set()
            for w in reach[v]:
                extra |= reach[w]
            if not extra <= reach[v]:
                reach[v] |= extra
                changed = True
    return reach


def is_poset(dg: Digraph) -> bool:
    """Transitive and acyclic."""
    reach = _reachability(dg)
    if any(v in reach[v] for v in reach):
        return False
    return all(reach[v] == set(dg.successors[v]) for v in reach)


def is_connected(dg: Digraph) -> bool:
    if dg.n == 0:
        return True
    ug = dg.underlying()
    seen = {1}
    stack = [1]
    while stack:
        for w in ug.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == dg.n


def width(dg: Digraph) -> int:
    """Size of the largest set of pairwise non-adjacent nodes (brute force)."""
    nodes = list(range(1, dg.n + 1))
    for size in range(len(nodes), 0, -1):
        for sub in combinations(nodes, size):
            if all(not dg.adjacent(a, b) for a, b in combinations(sub, 2)):
                return size
    return 0


def is_connected_width2_poset(dg: Digraph) -> bool:
    """The literal class: a connected poset with no antichain of size 3.

    This is strictly larger than the uniquely realizable digraphs from n = 4
    on; 1<2<4, 1<3 is connected of width 2 but 3 is incomparable to both 2
    and 4, giving an induced D2.
    """
    return is_poset(dg) and is_connected(dg) and width(dg) <= 2


def _incomparable_to(dg: Digraph, v: int) -> list:
    return [w for w in range(1, dg.n + 1) if w != v and not dg.adjacent(v, w)]


def is_matching_width2_poset(dg: Digraph) -> bool:
    """A poset where every element is incomparable to at most one other.

    Equivalently an ordered partition of the nodes into blocks of size at
    most 2, with every arc pointing from an earlier block to a later one.
    """
    return is_poset(dg) and all(len(_incomparable_to(dg, v)) <= 1 for v in range(1, dg.n + 1))


def is_unique_digraph_structural(dg: Digraph) -> bool:
    """Same predicate as is_unique_digraph, checked through poset structure."""
    return dg.n <= 2 or is_matching_width2_poset(dg)


def _require_width2(dg):
    if not is_unique_digraph_structural(dg):
        raise NotWidth2Poset("expected a poset with disjoint incomparable pairs (or at most two nodes)")


def incomparable_pairs(dg: Digraph) -> int:
    _require_width2(dg)
    n = dg.n
    return n * (n - 1) // 2 - len(dg.arcs)


def rank_partition(dg: Digraph) -> OrderedPartition:
    """Layers obtained by repeatedly stripping the maximal elements, top layer first."""
    _require_width2(dg)
    remaining = set(range(1, dg.n + 1))
    blocks = []
    while remaining:
        top = frozenset(v for v in remaining if not dg.successors[v] & remaining)
        blocks.append(top)
        remaining -= top
    return OrderedPartition(tuple(blocks))


# --- bidirected ---------------------------------------------------------------


def is_unique_bigraph(b: Bigraph) -> bool:
    """Every node a sink or a source, and at most one pair of nodes not joined."""
    for v in range(1, b.n + 1):
        if len({s for _, s in b.incidences(v)}) > 1:
            return False
    missing = b.n * (b.n - 1) // 2 - len(b.edges)
    return missing <= 1


def is_unique_bigraph_sequence(d: Sequence[int]) -> bool:
    d = tuple(d)
    v = bigraphical_violation(d)
    if v is not None:
        raise NotRealizable(f"{d} is not bigraphical: {v.describe()}", v)
    n = len(d)
    if any(not n - 2 <= abs(x) <= n - 1 for x in d):
        return False
    return sum(1 for x in d if abs(x) == n - 2) <= 2
