"""Realizability and tightness tests for degree sequences.

The undirected and directed tests only look at sorted prefixes and suffixes:
for fixed sizes ``|S| = s`` and ``|T| = t`` the left-hand side of the subset
inequality is largest when S holds the s largest entries and T the t
smallest, while the right-hand side depends on the sizes alone.  The
``*_exhaustive`` variants quantify over every subset and exist to check that
reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .errors import NotRealizable
from .graphs import BIDIRECTED, DIRECTED, UNDIRECTED


@dataclass(frozen=True)
class Violation:
    """A constraint that a candidate sequence fails.

    ``reason`` is one of ``"odd sum"``, ``"nonzero sum"``, ``"out of range"``
    or ``"inequality"``.  Index sets are 1-based.
    """

    reason: str
    S: frozenset = frozenset()
    T: frozenset = frozenset()
    I: Optional[frozenset] = None
    index: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    def describe(self) -> str:
        if self.reason == "inequality" and self.I is not None:
            return f"I={_fmt(self.I)}: {self.lhs} > {self.rhs}"
        if self.reason == "inequality":
            return f"S={_fmt(self.S)} T={_fmt(self.T)}: {self.lhs} > {self.rhs}"
        if self.reason == "out of range":
            return f"out of range: |d_{self.index}| > n-1"
        return self.reason


@dataclass(frozen=True)
class TightnessWitness:
    """Index sets attaining equality in a realizability inequality.

    undirected: ``S`` and ``T`` with sizes ``(s, t)``;
    directed: ``I`` (stored in ``S``) with ``s = |I|``;
    bidirected: ``index`` of an entry with ``|d_i| = n - 1``.
    """

    kind: str
    S: frozenset = frozenset()
    T: frozenset = frozenset()
    index: Optional[int] = None

    @property
    def I(self) -> frozenset:
        return self.S


def _fmt(s) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _descending(d: Sequence[int]) -> list[int]:
    """1-based indices sorted by decreasing value, ties by index."""
    return sorted(range(1, len(d) + 1), key=lambda i: (-d[i - 1], i))


def _prefix(vals):
    out = [0]
    for x in vals:
        out.append(out[-1] + x)
    return out


def _eg_scan(d):
    """Yield ``(s, t, lhs, rhs)`` over all s + t <= n in lexicographic order."""
    n = len(d)
    order = _descending(d)
    P = _prefix(d[i - 1] for i in order)
    total = P[n]
    for s in range(n + 1):
        for t in range(n - s + 1):
            yield s, t, P[s] - (total - P[n - t]), s * (n - t - 1), order


def _split(d, order, s, t):
    """S = the s largest entries; T = the t smallest of the rest, ties to smaller index."""
    rest = sorted(order[s:], key=lambda i: (d[i - 1], i))
    return frozenset(order[:s]), frozenset(rest[:t])


def graphical_violation(d: Sequence[int]) -> Optional[Violation]:
    """Why ``d`` is not the degree sequence of a simple graph, or None."""
    d = tuple(d)
    if sum(d) % 2:
        return Violation("odd sum")
    for s, t, lhs, rhs, order in _eg_scan(d):
        if lhs > rhs:
            S, T = _split(d, order, s, t)
            return Violation("inequality", S=S, T=T, lhs=lhs, rhs=rhs)
    return None


def is_graphical(d: Sequence[int]) -> bool:
    return graphical_violation(d) is None


def digraphical_violation(d: Sequence[int]) -> Optional[Violation]:
    """Why ``d`` is not a digraph net-degree sequence, or None."""
    d = tuple(d)
    n = len(d)
    if sum(d) != 0:
        return Violation("nonzero sum")
    order = _descending(d)
    P = _prefix(d[i - 1] for i in order)
    for k in range(1, n):
        if P[k] > k * (n - k):
            return Violation("inequality", I=frozenset(order[:k]), lhs=P[k], rhs=k * (n - k))
    return None


def is_digraphical(d: Sequence[int]) -> bool:
    return digraphical_violation(d) is None


def bigraphical_violation(d: Sequence[int]) -> Optional[Violation]:
    d = tuple(d)
    n = len(d)
    for i, x in enumerate(d, 1):
        if abs(x) > n - 1:
            return Violation("out of range", index=i)
    if sum(d) % 2:
        return Violation("odd sum")
    return None


def is_bigraphical(d: Sequence[int]) -> bool:
    return bigraphical_violation(d) is None


def violation(d: Sequence[int], kind: str) -> Optional[Violation]:
    if kind == UNDIRECTED:
        return graphical_violation(d)
    if kind == DIRECTED:
        return digraphical_violation(d)
    if kind == BIDIRECTED:
        return bigraphical_violation(d)
    raise ValueError(f"unknown kind {kind!r}")


def is_realizable(d: Sequence[int], kind: str) -> bool:
    return violation(d, kind) is None


def _require(d, kind):
    v = violation(d, kind)
    if v is not None:
        raise NotRealizable(f"{tuple(d)} is not {kind} realizable: {v.describe()}", v)


def is_tight_undirected(d: Sequence[int]) -> Optional[TightnessWitness]:
    """Equality witness (S, T) != (empty, empty), or None for interior sequences.

    Raises NotRealizable if ``d`` is not graphical.
    """
    d = tuple(d)
    _require(d, UNDIRECTED)
    for s, t, lhs, rhs, order in _eg_scan(d):
        if (s, t) != (0, 0) and lhs == rhs:
            S, T = _split(d, order, s, t)
            return TightnessWitness(UNDIRECTED, S=S, T=T)
    return None


def is_tight_directed(d: Sequence[int]) -> Optional[TightnessWitness]:
    """Smallest k in 1..n-1 whose k largest entries sum to k(n-k), as a set I."""
    d = tuple(d)
    _require(d, DIRECTED)
    n = len(d)
    order = _descending(d)
    P = _prefix(d[i - 1] for i in order)
    for k in range(1, n):
        if P[k] == k * (n - k):
            return TightnessWitness(DIRECTED, S=frozenset(order[:k]))
    return None


def is_tight_bidirected(d: Sequence[int]) -> Optional[TightnessWitness]:
    """First coordinate sitting on the cube face |d_i| = n - 1."""
    d = tuple(d)
    _require(d, BIDIRECTED)
    n = len(d)
    for i, x in enumerate(d, 1):
        if abs(x) == n - 1:
            return TightnessWitness(BIDIRECTED, index=i)
    return None


@lru_cache(maxsize=None)
def _subset_patterns(n: int):
    # (coefficients, |S|, |T|) ordered by |S| + |T| so failures surface early
    pats = []
    for coeffs in product((0, 1, -1), repeat=n):
        s = coeffs.count(1)
        t = coeffs.count(-1)
        pats.append((coeffs, s, t))
    pats.sort(key=lambda p: (p[1] + p[2], p[1]))
    return tuple(pats)


def satisfies_erdos_gallai_exhaustive(d: Sequence[int]) -> bool:
    """Parity plus the inequality for every disjoint pair S, T of index sets."""
    d = tuple(d)
    n = len(d)
    if sum(d) % 2:
        return False
    for coeffs, s, t in _subset_patterns(n):
        if sum(c * x for c, x in zip(coeffs, d)) > s * (n - t - 1):
            return False
    return True


def satisfies_digraph_exhaustive(d: Sequence[int]) -> bool:
    """Zero sum plus the bound for every nonempty proper index set I."""
    d = tuple(d)
    n = len(d)
    if sum(d) != 0:
        return False
    for mask in range(1, (1 << n) - 1):
        members = [d[i] for i in range(n) if mask >> i & 1]
        k = len(members)
        if sum(members) > k * (n - k):
            return False
    return True
