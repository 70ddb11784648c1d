"""Exact counts of degree-sequence families.

All arithmetic is on Python integers and Fractions; nothing in here touches
floating point.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import BoundExceeded, DomainRestricted

ENUMERATION_MAX_N = 8


def _bound() -> int:
    env = os.environ.get("NETDEG_MAX_N")
    return int(env) if env else ENUMERATION_MAX_N


def _check(n: int):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > _bound():
        raise BoundExceeded(f"edge-subset enumeration is limited to n <= {_bound()}")


@lru_cache(maxsize=None)
def quasi_forest_table(n: int) -> dict:
    """Map ``(edges, cycles)`` to the number of quasi-forests on [n] of that shape.

    Quasi-forests are enumerated as edge subsets by depth-first search over
    the pairs of K_n, tracking components with a parity union-find.  A
    subset is abandoned as soon as it closes an even cycle or a second cycle
    inside one component, so every leaf of the search is a quasi-forest.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    parent = list(range(n))
    parity = [0] * n  # colour relative to parent
    size = [1] * n
    has_cycle = [False] * n
    table: dict = {}

    def find(x):
        p = 0
        while parent[x] != x:
            p ^= parity[x]
            x = parent[x]
        return x, p

    def rec(idx, edges, cycles):
        key = (edges, cycles)
        table[key] = table.get(key, 0) + 1
        for j in range(idx, len(pairs)):
            a, b = pairs[j]
            ra, pa = find(a)
            rb, pb = find(b)
            if ra == rb:
                if has_cycle[ra] or pa != pb:
                    continue  # second cycle, or an even one
                has_cycle[ra] = True
                rec(j + 1, edges + 1, cycles + 1)
                has_cycle[ra] = False
                continue
            if has_cycle[ra] and has_cycle[rb]:
                continue
            if size[ra] < size[rb]:
                ra, rb, pa, pb = rb, ra, pb, pa
            parent[rb] = ra
            parity[rb] = pa ^ pb ^ 1
            size[ra] += size[rb]
            old = has_cycle[ra]
            has_cycle[ra] = old or has_cycle[rb]
            rec(j + 1, edges + 1, cycles)
            has_cycle[ra] = old
            size[ra] -= size[rb]
            parent[rb] = rb
            parity[rb] = 0

    rec(0, 0, 0)
    return table


def quasi_forest_weight(n: int, i: int) -> int:
    """Sum over quasi-forests H on [n] with i edges of max(1, 2^(c(H)-1))."""
    _check(n)
    if i < 0:
        raise ValueError("edge count must be nonnegative")
    total = 0
    for (edges, cycles), count in quasi_forest_table(n).items():
        if edges == i:
            total += count * (1 if cycles == 0 else 2 ** (cycles - 1))
    return total


def forest_count(n: int, i: int) -> int:
    """Number of forests on n labelled nodes with i edges."""
    _check(n)
    return quasi_forest_table(n).get((i, 0), 0)


def count_undirected(n: int) -> int:
    _check(n)
    return sum(quasi_forest_weight(n, i) for i in range(n + 1))


def count_tight_undirected(n: int) -> int:
    """Twice the sum of h(n, i) over i with n - i odd (degenerate at n = 1)."""
    _check(n)
    return 2 * sum(quasi_forest_weight(n, i) for i in range(n + 1) if (n - i) % 2)


def count_interior_undirected(n: int) -> int:
    """Alternating sum h(n,n) - h(n,n-1) + ... + (-1)^n h(n,0)."""
    _check(n)
    return sum((-1) ** (n - i) * quasi_forest_weight(n, i) for i in range(n + 1))


def ehrhart_permutohedron(n: int, m: int) -> int:
    """Lattice points of the m-th dilate of the permutohedron on n coordinates.

    Evaluates sum_i f(n, i) m^i, so negative m gives the reciprocity values.
    """
    _check(n)
    if n == 0:
        return 1
    return sum(forest_count(n, i) * m ** i for i in range(n))


def count_directed(n: int) -> int:
    _check(n)
    if n == 0:
        return 1
    return sum(2 ** i * forest_count(n, i) for i in range(n))


def count_tight_directed(n: int) -> int:
    """Parity-split forest sums; cross-checked against Ehrhart reciprocity."""
    _check(n)
    if n == 0:
        return 0
    if n % 2 == 0:
        value = sum(2 ** (2 * i + 1) * forest_count(n, 2 * i) for i in range((n - 2) // 2 + 1))
    else:
        value = sum(2 ** (2 * i) * forest_count(n, 2 * i - 1) for i in range(1, (n - 1) // 2 + 1))
    reciprocity = ehrhart_permutohedron(n, 2) - (-1) ** (n - 1) * ehrhart_permutohedron(n, -2)
    if value != reciprocity:
        raise AssertionError(f"tight digraph count formulas disagree at n={n}")
    return value


@dataclass(frozen=True)
class QuadraticIntegerValue:
    """Exact number a + b*sqrt(3) with rational a, b."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __add__(self, other):
        other = _q(other)
        return QuadraticIntegerValue(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        other = _q(other)
        return QuadraticIntegerValue(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        other = _q(other)
        return QuadraticIntegerValue(self.a * other.a + 3 * self.b * other.b,
                                     self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadraticIntegerValue(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 3 * self.b * self.b

    def inverse(self):
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("zero has no inverse")
        c = self.conjugate()
        return QuadraticIntegerValue(c.a / nrm, c.b / nrm)

    def __truediv__(self, other):
        return self * _q(other).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadraticIntegerValue(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def _q(x):
    return x if isinstance(x, QuadraticIntegerValue) else QuadraticIntegerValue(Fraction(x))


SQRT3 = QuadraticIntegerValue(0, 1)


def unique_digraph_recurrence(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev2, prev = 1, 1  # U(0), U(1)
    if n <= 1:
        return 1
    for k in range(2, n + 1):
        prev2, prev = prev, k * prev + comb(k, 2) * prev2
    return prev


def unique_digraph_closed_form(n: int) -> int:
    """n!/sqrt3 * ((sqrt3 - 1)^(-n-1) - (-sqrt3 - 1)^(-n-1)), evaluated exactly."""
    one = QuadraticIntegerValue(1)
    x = (SQRT3 - one) ** (-n - 1)
    y = (QuadraticIntegerValue(-1, -1)) ** (-n - 1)
    value = (x - y) / SQRT3 * factorial(n)
    if value.b != 0 or value.a.denominator != 1:
        raise AssertionError(f"closed form is not an integer at n={n}: {value}")
    return int(value.a)


def unique_digraph_egf(n: int) -> int:
    """Coefficients of 1/(1 - x - x^2/2), scaled by n!."""
    coeffs = [Fraction(1), Fraction(1)]
    for k in range(2, n + 1):
        coeffs.append(coeffs[k - 1] + coeffs[k - 2] / 2)
    value = coeffs[n] * factorial(n)
    if value.denominator != 1:
        raise AssertionError(f"EGF coefficient not integral at n={n}")
    return int(value)


def count_unique_digraph(n: int) -> int:
    """Uniquely realizable digraph net-degree sequences on n nodes.

    The recurrence, the closed form and the EGF recurrence are all evaluated
    and must agree.
    """
    rec = unique_digraph_recurrence(n)
    closed = unique_digraph_closed_form(n)
    egf = unique_digraph_egf(n)
    if not rec == closed == egf:
        raise AssertionError(f"U({n}) disagrees: {rec}, {closed}, {egf}")
    return rec


def count_bidirected(n: int) -> int:
    if n < 1:
        raise DomainRestricted("count_bidirected needs n >= 1")
    return ((2 * n - 1) ** n + 1) // 2


def unique_bigraph_formula(n: int) -> int:
    """The raw formula 2^n C(n,2) + 2^n, valid only for n >= 3."""
    return 2 ** n * comb(n, 2) + 2 ** n


def count_unique_bigraph(n: int) -> int:
    if n < 3:
        raise DomainRestricted(
            "for n < 3 the formula counts +0 and -0 twice; use the oracle instead"
        )
    return unique_bigraph_formula(n)


def count_tight_bidirected(n: int) -> int:
    """Sequences with some |d_i| = n-1: the even-sum box minus its even-sum interior."""
    if n < 1:
        raise DomainRestricted("count_tight_bidirected needs n >= 1")
    if n == 1:
        return 1  # (0) meets |d_1| = n - 1 = 0
    return count_bidirected(n) - ((2 * n - 3) ** n + (-1) ** n) // 2
