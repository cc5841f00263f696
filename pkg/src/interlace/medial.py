"""Rotation systems, oriented medial graphs, Euler circuits, circle graphs and
the Tutte polynomial by state expansion.

Darts: edge ``e = (u, v)`` (endpoints in file order) has dart ``2e`` from u
to v and dart ``2e + 1`` from v to u.  Rotations list incident edge ids in
counterclockwise order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Sequence, Tuple

from .algebra import BiPoly, UniPoly
from .graph import Graph, GraphError
from .interlace import Specialization, specialize

__all__ = [
    "EmbeddingError",
    "PlanarEmbedding",
    "OrientedMedial",
    "MedialReport",
    "parse_rotation_system",
    "format_rotation_system",
    "trace_faces",
    "medial_graph",
    "euler_circuit",
    "circle_graph",
    "tutte_poly",
    "tutte_diagonal",
    "cycle_rank",
    "medial_identity_check",
    "circuit_robustness",
    "DEFAULT_EDGE_CAP",
]

DEFAULT_EDGE_CAP = 20


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class PlanarEmbedding:
    n: int
    edge_list: Tuple[Tuple[int, int], ...]
    rotation: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edge_list", tuple(tuple(e) for e in self.edge_list))
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        if len(self.rotation) != self.n:
            raise EmbeddingError("one rotation per vertex required")
        incident: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edge_list):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise EmbeddingError(f"edge {e} has an endpoint out of range")
            if u == v:
                raise EmbeddingError(f"edge {e} is a loop; loops are not supported here")
            incident[u].append(e)
            incident[v].append(e)
        for v in range(self.n):
            if sorted(self.rotation[v]) != sorted(incident[v]):
                raise EmbeddingError(f"rotation at vertex {v} must list each incident edge exactly once")
        # also rejects parallel edges
        self.graph

    @property
    def m(self) -> int:
        return len(self.edge_list)

    @property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edge_list)

    def tail(self, dart: int) -> int:
        u, v = self.edge_list[dart >> 1]
        return v if dart & 1 else u

    def head(self, dart: int) -> int:
        u, v = self.edge_list[dart >> 1]
        return u if dart & 1 else v

    def out_dart(self, v: int, e: int) -> int:
        return 2 * e if self.edge_list[e][0] == v else 2 * e + 1

    def successor(self, v: int, e: int) -> int:
        rot = self.rotation[v]
        return rot[(rot.index(e) + 1) % len(rot)]

    def next_dart(self, dart: int) -> int:
        """Face permutation: reverse the dart, then turn to the next edge in the rotation."""
        v = self.head(dart)
        return self.out_dart(v, self.successor(v, dart >> 1))


def parse_rotation_system(text: str) -> PlanarEmbedding:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise EmbeddingError("line 1: missing header")
    try:
        n, m = (int(t) for t in lines[0].split(" "))
    except ValueError:
        raise EmbeddingError(f"line 1: bad header {lines[0]!r}") from None
    if len(lines) != 1 + m + n:
        raise EmbeddingError(f"expected {1 + m + n} lines, found {len(lines)}")
    edges = []
    for lineno in range(2, m + 2):
        parts = lines[lineno - 1].split(" ")
        try:
            u, v = int(parts[0]), int(parts[1])
            if len(parts) != 2:
                raise ValueError
        except (ValueError, IndexError):
            raise EmbeddingError(f"line {lineno}: expected 'u v'") from None
        edges.append((u, v))
    rotation: list[tuple[int, ...] | None] = [None] * n
    for lineno in range(m + 2, m + n + 2):
        line = lines[lineno - 1]
        head, _, rest = line.partition(":")
        tokens = head.split(" ")
        if len(tokens) != 2 or tokens[0] != "rot":
            raise EmbeddingError(f"line {lineno}: expected 'rot v: ...'")
        try:
            v = int(tokens[1])
            order = tuple(int(t) for t in rest.split())
        except ValueError:
            raise EmbeddingError(f"line {lineno}: non-integer token") from None
        if not 0 <= v < n or rotation[v] is not None:
            raise EmbeddingError(f"line {lineno}: bad or repeated vertex {v}")
        rotation[v] = order
    try:
        return PlanarEmbedding(n, tuple(edges), tuple(rotation))
    except GraphError as exc:
        raise EmbeddingError(str(exc)) from None


def format_rotation_system(emb: PlanarEmbedding) -> str:
    out = [f"{emb.n} {emb.m}"]
    out.extend(f"{u} {v}" for u, v in emb.edge_list)
    for v, rot in enumerate(emb.rotation):
        out.append(f"rot {v}:" + "".join(f" {e}" for e in rot))
    return "\n".join(out) + "\n"


def _connected(n: int, edges: Sequence[Tuple[int, int]]) -> bool:
    if n == 0:
        return True
    return n - cycle_rank(n, edges) == 1


def trace_faces(emb: PlanarEmbedding) -> list[list[int]]:
    """Faces as dart cycles; raises unless Euler's formula certifies planarity."""
    if not _connected(emb.n, emb.edge_list):
        raise EmbeddingError("graph is disconnected")
    if emb.m == 0:
        return [[]]
    seen = set()
    faces = []
    for start in range(2 * emb.m):
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = emb.next_dart(d)
        faces.append(face)
    if emb.n - emb.m + len(faces) != 2:
        raise EmbeddingError(
            f"rotation system is not planar: n - m + f = {emb.n - emb.m + len(faces)}"
        )
    return faces


@dataclass(frozen=True)
class OrientedMedial:
    """Directed 4-regular multigraph on the edges of G.

    Dart ``i`` runs ``tails[i] -> heads[i]``; it sits at a corner of G at
    vertex ``black[i]`` inside face ``white[i]``.
    """

    n: int
    tails: Tuple[int, ...]
    heads: Tuple[int, ...]
    black: Tuple[int, ...]
    white: Tuple[int, ...]

    @property
    def darts(self) -> range:
        return range(len(self.tails))

    def out_darts(self, v: int) -> list[int]:
        return [d for d in self.darts if self.tails[d] == v]

    def in_darts(self, v: int) -> list[int]:
        return [d for d in self.darts if self.heads[d] == v]


def medial_graph(emb: PlanarEmbedding) -> OrientedMedial:
    """One dart per corner, running counterclockwise around the corner's
    vertex so that vertex-faces (black) lie on the left."""
    faces = trace_faces(emb)
    face_of = {}
    for i, face in enumerate(faces):
        for d in face:
            face_of[d] = i
    tails, heads, black, white = [], [], [], []
    for v in range(emb.n):
        rot = emb.rotation[v]
        for i, e in enumerate(rot):
            nxt = rot[(i + 1) % len(rot)]
            tails.append(e)
            heads.append(nxt)
            black.append(v)
            # the face entering v along e leaves along nxt
            white.append(face_of[emb.out_dart(v, nxt)])
    med = OrientedMedial(emb.m, tuple(tails), tuple(heads), tuple(black), tuple(white))
    for v in range(med.n):
        if len(med.out_darts(v)) != 2 or len(med.in_darts(v)) != 2:
            raise EmbeddingError("medial graph is not 2-in 2-out")
    return med


def euler_circuit(med: OrientedMedial, seed: int | None = None) -> Tuple[int, ...]:
    """Hierholzer's algorithm; the double occurrence word of visited vertices.

    Without a seed the walk always leaves on the smallest unused dart; with a
    seed the tie-break order is shuffled deterministically.
    """
    if med.n == 0:
        return ()
    out: list[list[int]] = [[] for _ in range(med.n)]
    for d in med.darts:
        out[med.tails[d]].append(d)
    rng = random.Random(seed) if seed is not None else None
    for lst in out:
        lst.sort()
        if rng is not None:
            rng.shuffle(lst)
        # pop() takes from the end
        lst.reverse()
    start = med.tails[0] if rng is None else rng.randrange(med.n)
    stack: list[int] = []
    circuit: list[int] = []
    v = start
    while True:
        if out[v]:
            d = out[v].pop()
            stack.append(d)
            v = med.heads[d]
        elif stack:
            d = stack.pop()
            circuit.append(d)
            v = med.tails[d]
        else:
            break
    if len(circuit) != len(med.tails):
        raise EmbeddingError("medial graph is disconnected")
    circuit.reverse()
    return tuple(med.tails[d] for d in circuit)


def circle_graph(word: Sequence[int]) -> Graph:
    """Interlacement graph: letters u, v adjacent iff the word reads u..v..u..v cyclically."""
    positions: dict[int, list[int]] = {}
    for i, letter in enumerate(word):
        positions.setdefault(letter, []).append(i)
    letters = sorted(positions)
    for letter in letters:
        if len(positions[letter]) != 2:
            raise ValueError(f"letter {letter!r} occurs {len(positions[letter])} times, expected 2")
    index = {letter: i for i, letter in enumerate(letters)}
    edges = []
    for a in letters:
        a0, a1 = positions[a]
        for b in letters:
            if index[b] <= index[a]:
                continue
            inside = sum(a0 < p < a1 for p in positions[b])
            if inside == 1:
                edges.append((index[a], index[b]))
    return Graph.from_edges(len(letters), edges)


class _DisjointSet:
    __slots__ = ("parent",)

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def cycle_rank(n: int, edges: Sequence[Tuple[int, int]]) -> int:
    """r(B) = |V| - number of components of (V, B)."""
    ds = _DisjointSet(n)
    return sum(ds.union(u, v) for u, v in edges)


def tutte_poly(g: Graph, cap: int | None = None) -> BiPoly:
    """t(G;x,y) = sum over B of (x-1)^(r(E)-r(B)) (y-1)^(|B|-r(B))."""
    cap = DEFAULT_EDGE_CAP if cap is None else cap
    if g.m > cap:
        raise GraphError(f"graph has {g.m} edges, cap is {cap}")
    if g.has_loops():
        raise GraphError("state expansion here expects a loopless graph")
    edges = g.edges
    full = cycle_rank(g.n, edges)
    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << g.m):
        chosen = [edges[i] for i in range(g.m) if mask >> i & 1]
        r = cycle_rank(g.n, chosen)
        key = (full - r, len(chosen) - r)
        counts[key] = counts.get(key, 0) + 1
    coeffs: dict[tuple[int, int], int] = {}
    for (a, b), c in counts.items():
        for i in range(a + 1):
            ci = c * comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                coeffs[(i, j)] = coeffs.get((i, j), 0) + ci * comb(b, j) * (-1) ** (b - j)
    return BiPoly(coeffs, ("x", "y"))


def tutte_diagonal(g: Graph, cap: int | None = None) -> UniPoly:
    """t(G;y,y) as a polynomial in y."""
    t = tutte_poly(g, cap)
    out: dict[int, object] = {}
    for (i, j), c in t.terms.items():
        out[i + j] = out.get(i + j, 0) + c
    return UniPoly(out, "y")


@dataclass(frozen=True)
class MedialReport:
    word: Tuple[int, ...]
    circle: Graph
    nullity: UniPoly
    tutte: UniPoly

    @property
    def equal(self) -> bool:
        return self.nullity == self.tutte

    def render(self) -> str:
        lines = [
            "word: " + " ".join(str(c) for c in self.word),
            f"circle graph: n={self.circle.n} m={self.circle.m}",
            f"q(H;2,y) = {self.nullity}",
            f"t(G;y,y) = {self.tutte}",
            "verdict: " + ("EQUAL" if self.equal else "DIFFERENT"),
        ]
        return "\n".join(lines) + "\n"


def medial_identity_check(
    emb: PlanarEmbedding, seed: int | None = None, cap: int | None = None
) -> MedialReport:
    """Run embedding -> medial -> Euler circuit -> circle graph H and compare
    q(H;2,y) with t(G;y,y)."""
    word = euler_circuit(medial_graph(emb), seed)
    h = circle_graph(word)
    return MedialReport(
        word,
        h,
        specialize(h, Specialization.VERTEX_NULLITY, cap),
        tutte_diagonal(emb.graph, cap),
    )


def circuit_robustness(emb: PlanarEmbedding, seeds: Sequence[int]) -> list[MedialReport]:
    """Reports for several randomly tie-broken Euler circuits.

    Callers inspect ``report.equal`` for each one; a disagreement is data,
    not an exception.
    """
    return [medial_identity_check(emb, seed) for seed in seeds]
