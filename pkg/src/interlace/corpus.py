"""Named test graphs and planar embeddings used by the self-test and the suite."""

from __future__ import annotations

import math
from typing import Dict, Sequence, Tuple

from .graph import Graph, random_graph
from .medial import PlanarEmbedding

__all__ = [
    "empty_graph",
    "path",
    "cycle",
    "complete",
    "star",
    "with_loops",
    "named_graphs",
    "graph_corpus",
    "embedding_from_coordinates",
    "named_embeddings",
]


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def with_loops(g: Graph, looped: Sequence[int]) -> Graph:
    return Graph.from_edges(g.n, list(g.edges) + [(v, v) for v in looped])


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def named_graphs() -> Dict[str, Graph]:
    """Hand-picked small graphs, loopless and looped."""
    g = {
        "K1": Graph(1),
        "E2": empty_graph(2),
        "E3": empty_graph(3),
        "K2": complete(2),
        "P3": path(3),
        "P4": path(4),
        "C3": cycle(3),
        "C4": cycle(4),
        "C5": cycle(5),
        "K4": complete(4),
        "star3": star(3),
        "K5": complete(5),
        "P6": path(6),
        "C6": cycle(6),
        "K33": Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)]),
        "C7": cycle(7),
        "P8": path(8),
        "petersen": _petersen(),
        "loop1": with_loops(Graph(1), [0]),
        "K2_loop": with_loops(complete(2), [0]),
        "K2_loops": with_loops(complete(2), [0, 1]),
        "P3_loop_mid": with_loops(path(3), [1]),
        "C4_loops": with_loops(cycle(4), [0, 2]),
        "K3_loops": with_loops(complete(3), [0, 1, 2]),
    }
    return g


def graph_corpus(
    max_n: int,
    loops: bool = True,
    random_per_size: int = 2,
    seed: int = 0,
) -> Dict[str, Graph]:
    """Named graphs with at most ``max_n`` vertices plus seeded random ones."""
    out = {
        name: g
        for name, g in named_graphs().items()
        if g.n <= max_n and (loops or not g.has_loops())
    }
    for n in range(1, max_n + 1):
        for i in range(random_per_size):
            s = seed * 1000 + n * 10 + i
            loop_p = "1/4" if loops else 0
            out[f"rand{n}_{i}"] = random_graph(n, "1/2", loop_p, s)
    return out


def embedding_from_coordinates(
    n: int, edges: Sequence[Tuple[int, int]], coords: Sequence[Tuple[float, float]]
) -> PlanarEmbedding:
    """Rotation system of a straight-line drawing: incident edges by angle."""
    rotation = []
    for v in range(n):
        incident = []
        for e, (a, b) in enumerate(edges):
            if v in (a, b):
                w = b if a == v else a
                dx = coords[w][0] - coords[v][0]
                dy = coords[w][1] - coords[v][1]
                incident.append((math.atan2(dy, dx), e))
        rotation.append(tuple(e for _, e in sorted(incident)))
    return PlanarEmbedding(n, tuple(edges), tuple(rotation))


def _polygon(n: int) -> list[Tuple[float, float]]:
    return [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)]


def named_embeddings() -> Dict[str, PlanarEmbedding]:
    emb = {}
    for k in range(3, 7):
        emb[f"C{k}"] = embedding_from_coordinates(k, cycle(k).edges, _polygon(k))
    for k in (2, 3, 4):
        emb[f"P{k}"] = embedding_from_coordinates(
            k, [(i, i + 1) for i in range(k - 1)], [(float(i), 0.0) for i in range(k)]
        )
    emb["K4"] = embedding_from_coordinates(
        4,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        [(0.0, 0.0), (4.0, 0.0), (2.0, 4.0), (2.0, 1.5)],
    )
    emb["W4"] = embedding_from_coordinates(
        5,
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)],
        [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)],
    )
    emb["theta"] = embedding_from_coordinates(
        5,
        [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        [(0.0, 2.0), (0.0, -2.0), (-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)],
    )
    emb["star3"] = embedding_from_coordinates(
        4, [(0, 1), (0, 2), (0, 3)], [(0.0, 0.0), (1.0, 0.0), (-0.5, 0.8), (-0.5, -0.8)]
    )
    return emb
