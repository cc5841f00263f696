"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

import itertools

from interlace.algebra import ONE, ZERO, QSqrt2
from interlace.graph import Graph


def span_rank(rows: list[int]) -> int:
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


def naive_rank(g: Graph, subset) -> int:
    subset = list(subset)
    mask = sum(1 << v for v in subset)
    return span_rank([g.adjacency[v] & mask for v in subset])


def naive_P(g: Graph, u, x) -> QSqrt2:
    u, x = QSqrt2.coerce(u), QSqrt2.coerce(x)
    total = ZERO
    for k in range(g.n + 1):
        for a in itertools.combinations(range(g.n), k):
            total = total + x ** k * u ** naive_rank(g, a)
    return total


def naive_q(g: Graph, x, y) -> QSqrt2:
    xm, ym = QSqrt2.coerce(x) - 1, QSqrt2.coerce(y) - 1
    total = ZERO
    for k in range(g.n + 1):
        for a in itertools.combinations(range(g.n), k):
            r = naive_rank(g, a)
            total = total + xm ** r * ym ** (k - r)
    return total


def naive_independent_counts(g: Graph) -> list[int]:
    counts = [0] * (g.n + 1)
    for k in range(g.n + 1):
        for a in itertools.combinations(range(g.n), k):
            if all(not g.has_edge(s, t) for s in a for t in a if s <= t):
                counts[k] += 1
    return counts


def product(values) -> QSqrt2:
    out = ONE
    for v in values:
        out = out * v
    return out
