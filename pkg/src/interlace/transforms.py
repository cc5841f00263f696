"""Vertex cloning, k-combs and k-cycles.

New vertices are appended after the existing ids: per original vertex in
ascending order, then per copy in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .graph import Graph, GraphError, iter_bits

__all__ = [
    "DEFAULT_TRANSFORM_CAP",
    "TwinGraph",
    "clone_vertex",
    "clone_all",
    "clone_all_iterated",
    "comb_vertex",
    "comb_all",
    "cycle_vertex",
    "cycle_all",
    "twin_quotient",
    "transform",
]

# transformed graphs are only ever materialised for testing and the CLI
DEFAULT_TRANSFORM_CAP = 4096


def _check_vertex(g: Graph, a: int) -> None:
    if not 0 <= a < g.n:
        raise GraphError(f"vertex out of range: {a}")


def _check_size(size: int, cap: int | None) -> None:
    cap = DEFAULT_TRANSFORM_CAP if cap is None else cap
    if size > cap:
        raise GraphError(f"transformed graph would have {size} vertices, cap is {cap}")


def _labels(g: Graph) -> list[str]:
    return [g.label(v) for v in g.vertices]


def clone_vertex(g: Graph, a: int) -> Graph:
    """G_aa: a new vertex a' joined to N(a); if a is looped, also a-a' and a loop at a'."""
    _check_vertex(g, a)
    new = g.n
    edges = list(g.edges) + [(w, new) for w in g.neighbors(a)]
    if g.has_loop(a):
        edges += [(a, new), (new, new)]
    return Graph.from_edges(g.n + 1, edges, tuple(_labels(g) + [f"{g.label(a)}'"]))


@dataclass(frozen=True)
class TwinGraph:
    """A graph whose vertex v stands for ``multiplicity[v]`` mutual clones.

    ``expand()`` materialises it; an exact evaluator can work on the small
    ``base`` graph with per-class weights instead.
    """

    base: Graph
    multiplicity: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "multiplicity", tuple(int(m) for m in self.multiplicity))
        if len(self.multiplicity) != self.base.n:
            raise ValueError("one multiplicity per base vertex required")
        if any(m < 1 for m in self.multiplicity):
            raise ValueError("multiplicities must be positive")

    @property
    def n(self) -> int:
        return sum(self.multiplicity)

    @classmethod
    def trivial(cls, g: Graph) -> "TwinGraph":
        return cls(g, (1,) * g.n)

    def expand(self, cap: int | None = None) -> Graph:
        """Clone vertex v ``multiplicity[v] - 1`` times, built from the base adjacency."""
        g = self.base
        _check_size(self.n, cap)
        members: list[list[int]] = [[v] for v in g.vertices]
        labels = _labels(g)
        nxt = g.n
        for v in g.vertices:
            for j in range(1, self.multiplicity[v]):
                members[v].append(nxt)
                labels.append(f"{g.label(v)}'{j}")
                nxt += 1
        edges = []
        for u, v in g.edges:
            if u == v:
                cls = members[u]
                edges.extend((w, w) for w in cls)
                edges.extend((cls[i], cls[j]) for i in range(len(cls)) for j in range(i + 1, len(cls)))
            else:
                edges.extend((x, y) for x in members[u] for y in members[v])
        return Graph.from_edges(nxt, edges, tuple(labels))


def clone_all(g: Graph, k: int, cap: int | None = None) -> Graph:
    """G_k: every vertex cloned k-1 times (kn vertices)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return TwinGraph(g, (k,) * g.n).expand(cap)


def clone_all_iterated(g: Graph, k: int) -> Graph:
    """G_k via repeated :func:`clone_vertex`; used to cross-check :func:`clone_all`."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = g
    for a in g.vertices:
        for _ in range(k - 1):
            out = clone_vertex(out, a)
    return out


def comb_vertex(g: Graph, a: int, k: int) -> Graph:
    """Attach k pendant leaves to a."""
    _check_vertex(g, a)
    if k < 1:
        raise ValueError("k must be at least 1")
    edges = list(g.edges) + [(a, g.n + j) for j in range(k)]
    labels = _labels(g) + [f"{g.label(a)}~{j + 1}" for j in range(k)]
    return Graph.from_edges(g.n + k, edges, tuple(labels))


def comb_all(g: Graph, k: int, cap: int | None = None) -> Graph:
    if k < 1:
        raise ValueError("k must be at least 1")
    _check_size(g.n * (k + 1), cap)
    edges = list(g.edges)
    labels = _labels(g)
    nxt = g.n
    for a in g.vertices:
        for j in range(k):
            edges.append((a, nxt))
            labels.append(f"{g.label(a)}~{j + 1}")
            nxt += 1
    return Graph.from_edges(nxt, edges, tuple(labels))


def _cycle_edges(a: int, first: int, k: int) -> list[tuple[int, int]]:
    path = list(range(first, first + k - 1))
    edges = [(a, path[0]), (a, path[-1])]
    edges.extend((path[i - 1], path[i]) for i in range(1, len(path)))
    return edges


def cycle_vertex(g: Graph, a: int, k: int) -> Graph:
    """Close a k-cycle through a using k-1 new path vertices."""
    _check_vertex(g, a)
    if k < 3:
        raise ValueError("k must be at least 3")
    edges = list(g.edges) + _cycle_edges(a, g.n, k)
    labels = _labels(g) + [f"{g.label(a)}@{i}" for i in range(1, k)]
    return Graph.from_edges(g.n + k - 1, edges, tuple(labels))


def cycle_all(g: Graph, k: int, cap: int | None = None) -> Graph:
    if k < 3:
        raise ValueError("k must be at least 3")
    _check_size(g.n * k, cap)
    edges = list(g.edges)
    labels = _labels(g)
    nxt = g.n
    for a in g.vertices:
        edges.extend(_cycle_edges(a, nxt, k))
        labels.extend(f"{g.label(a)}@{i}" for i in range(1, k))
        nxt += k - 1
    return Graph.from_edges(nxt, edges, tuple(labels))


def twin_quotient(g: Graph) -> TwinGraph:
    """Collapse vertices with identical adjacency rows (loop bit included).

    Two such vertices are exactly a vertex and its clone, so
    ``twin_quotient(g).expand()`` is ``g`` up to relabelling.
    """
    classes: dict[int, list[int]] = {}
    for v in g.vertices:
        classes.setdefault(g.adjacency[v], []).append(v)
    reps = sorted(members[0] for members in classes.values())
    index = {r: i for i, r in enumerate(reps)}
    size = {members[0]: len(members) for members in classes.values()}
    edges = []
    for r in reps:
        for w in iter_bits(g.adjacency[r]):
            # w's class representative
            rw = classes[g.adjacency[w]][0]
            if index[r] <= index[rw]:
                edges.append((index[r], index[rw]))
    base = Graph.from_edges(len(reps), set(edges), tuple(g.label(r) for r in reps))
    return TwinGraph(base, tuple(size[r] for r in reps))


def transform(g: Graph, op: str, k: int, cap: int | None = None) -> Graph:
    if op == "clone":
        return clone_all(g, k, cap)
    if op == "comb":
        return comb_all(g, k, cap)
    if op == "cycle":
        return cycle_all(g, k, cap)
    raise ValueError(f"unknown transform {op!r}")

