"""Simple undirected graphs with self-loops, and GF(2) rank on int bitsets."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

__all__ = [
    "Graph",
    "F2Matrix",
    "GraphError",
    "EdgeListParseError",
    "parse_edgelist",
    "format_edgelist",
    "induced_subgraph",
    "f2_rank",
    "subset_rank",
    "random_graph",
    "disjoint_union",
    "iter_bits",
]

Edge = Tuple[int, int]


class GraphError(ValueError):
    pass


class EdgeListParseError(GraphError):
    def __init__(self, lineno: int, msg: str) -> None:
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Vertices are ``0..n-1``; an edge ``(u, u)`` is a self-loop.

    ``labels`` optionally records where each vertex came from after a
    transformation (e.g. ``"3'1"`` for the first clone of vertex 3).
    """

    n: int
    edges: Tuple[Edge, ...] = ()
    labels: Tuple[str, ...] | None = field(default=None, compare=False)
    adjacency: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative vertex count")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge endpoint out of range: {u} {v}")
            e = _norm_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge: {e[0]} {e[1]}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count does not match vertex count")
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adjacency", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        return cls(n, tuple(_norm_edge(int(u), int(v)) for u, v in edges), labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def has_loop(self, v: int) -> bool:
        return self.has_edge(v, v)

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` excluding ``v`` itself."""
        return [w for w in iter_bits(self.adjacency[v]) if w != v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def adjacency_matrix(self) -> "F2Matrix":
        return F2Matrix(self.adjacency)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabel_identity(self) -> "Graph":
        return Graph(self.n, self.edges)


@dataclass(frozen=True)
class F2Matrix:
    """Square symmetric 0/1 matrix; row ``i`` is an int whose bit ``j`` is m[i][j]."""

    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        dim = len(self.rows)
        for i, r in enumerate(self.rows):
            if r >> dim:
                raise ValueError("row has bits outside the matrix")
            for j in iter_bits(r):
                if not (self.rows[j] >> i) & 1:
                    raise ValueError("matrix is not symmetric")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def from_lists(cls, m: Sequence[Sequence[int]]) -> "F2Matrix":
        return cls(tuple(sum((b & 1) << j for j, b in enumerate(row)) for row in m))


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _rank_rows(rows: Iterable[int]) -> int:
    # basis keyed by lowest set bit; each stored vector has that bit as its minimum
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            b = basis.get(low)
            if b is None:
                basis[low] = r
                break
            r ^= b
    return len(basis)


def f2_rank(m: F2Matrix | Sequence[int]) -> int:
    """Rank over GF(2) by elimination on int bitsets."""
    rows = m.rows if isinstance(m, F2Matrix) else m
    return _rank_rows(rows)


def subset_rank(adjacency: Sequence[int], mask: int) -> int:
    """rk(G[A]) for the vertex set encoded by ``mask``."""
    return _rank_rows(adjacency[v] & mask for v in iter_bits(mask))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """G[A], relabelled by ascending original id."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex out of range: {v}")
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = tuple(g.label(v) for v in vs) if g.labels is not None else None
    return Graph.from_edges(len(vs), edges, labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph.from_edges(g.n + h.n, edges)


def parse_edgelist(text: str) -> Graph:
    """Parse the ``"n m"`` header plus ``m`` lines of ``"u v"``."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise EdgeListParseError(1, "missing header")

    def ints(lineno: int, line: str) -> Tuple[int, int]:
        parts = line.split(" ")
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"not an integer pair: {line!r}") from None
        if a < 0 or b < 0:
            raise EdgeListParseError(lineno, "negative value")
        return a, b

    n, m = ints(1, lines[0])
    if len(lines) - 1 != m:
        raise EdgeListParseError(len(lines), f"header announces {m} edges, found {len(lines) - 1}")
    seen = set()
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = ints(lineno, line)
        if u >= n or v >= n:
            raise EdgeListParseError(lineno, f"endpoint out of range: {line!r}")
        e = _norm_edge(u, v)
        if e in seen:
            raise EdgeListParseError(lineno, f"duplicate edge: {line!r}")
        seen.add(e)
        edges.append(e)
    return Graph.from_edges(n, edges)


def format_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def random_graph(
    n: int,
    edge_probability: Fraction | float | str,
    loop_probability: Fraction | float | str = 0,
    seed: int = 0,
) -> Graph:
    """Seeded G(n, p) with independent self-loops; deterministic per seed."""
    p = Fraction(edge_probability)
    q = Fraction(loop_probability)
    if not (0 <= p <= 1 and 0 <= q <= 1):
        raise ValueError("probabilities must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        if Fraction(rng.random()) < q:
            edges.append((u, u))
        for v in range(u + 1, n):
            if Fraction(rng.random()) < p:
                edges.append((u, v))
    return Graph.from_edges(n, edges)
