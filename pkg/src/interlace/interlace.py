"""The interlace polynomials q(G;x,y) and P(G;u,x) and their specialisations.

The full polynomials come from a histogram of (|A|, rk(G[A])) over all
vertex subsets A.  The histogram is filled by a numpy kernel that runs
GF(2) elimination on a whole block of subsets at once; the point
evaluators instead walk the subsets one by one with the scalar bitset
rank, so the two routes check each other.
"""

from __future__ import annotations

from enum import Enum
from math import comb
from typing import Mapping, Sequence

import numpy as np

from .algebra import ONE, ZERO, BiPoly, QSqrt2, Scalar, UniPoly
from .graph import Graph, iter_bits, subset_rank

__all__ = [
    "DEFAULT_CAP",
    "SizeCapError",
    "LoopsPresentError",
    "NotAGraphPolynomialError",
    "Specialization",
    "rank_histogram",
    "rank_histogram_scalar",
    "interlace_P_poly",
    "interlace_q_poly",
    "eval_P",
    "eval_q",
    "eval_P_multivariate",
    "independent_set_poly",
    "count_independent_sets_by_size",
    "q_from_P",
    "P_from_q",
    "specialize",
    "eval_weighted",
    "eval_P_twins",
    "eval_q_twins",
]

DEFAULT_CAP = 20

# subsets per numpy block; bounds the (block, n) uint32 working array
_BLOCK = 1 << 15


class SizeCapError(ValueError):
    pass


class LoopsPresentError(ValueError):
    pass


class NotAGraphPolynomialError(ValueError):
    pass


class Specialization(str, Enum):
    VERTEX_NULLITY = "vertex_nullity"
    VERTEX_RANK = "vertex_rank"


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if g.n > cap:
        raise SizeCapError(f"graph has {g.n} vertices, cap is {cap}")


def _block_ranks(adj: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """GF(2) rank of G[A] for every mask in ``masks`` simultaneously."""
    n = adj.shape[0]
    b = masks.shape[0]
    idx = np.arange(n, dtype=np.uint32)
    member = ((masks[:, None] >> idx[None, :]) & 1).astype(bool)
    rows = np.where(member, adj[None, :] & masks[:, None], np.uint32(0))
    used = np.zeros((b, n), dtype=bool)
    rank = np.zeros(b, dtype=np.int64)
    ar = np.arange(b)
    for c in range(n):
        bit = ((rows >> np.uint32(c)) & 1).astype(bool)
        cand = bit & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = cand.argmax(axis=1)
        pivrow = rows[ar, piv]
        bit[ar, piv] = False
        bit &= has[:, None]
        rows ^= np.where(bit, pivrow[:, None], np.uint32(0))
        used[ar, piv] |= has
        rank += has
    return rank


def rank_histogram(g: Graph, cap: int | None = None) -> np.ndarray:
    """``h[k, r]`` = number of subsets A with |A| = k and rk(G[A]) = r."""
    _check_cap(g, cap)
    n = g.n
    if n > 31:
        raise SizeCapError("block kernel supports at most 31 vertices")
    hist = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    adj = np.array(g.adjacency, dtype=np.uint32)
    total = 1 << n
    for start in range(0, total, _BLOCK):
        masks = np.arange(start, min(start + _BLOCK, total), dtype=np.uint32)
        sizes = np.bitwise_count(masks).astype(np.int64)
        if n:
            ranks = _block_ranks(adj, masks)
        else:
            ranks = np.zeros_like(sizes)
        hist += np.bincount(sizes * (n + 1) + ranks, minlength=hist.size)
    return hist.reshape(n + 1, n + 1)


def rank_histogram_scalar(g: Graph, cap: int | None = None) -> np.ndarray:
    """Same as :func:`rank_histogram`, one subset at a time."""
    _check_cap(g, cap)
    n = g.n
    hist = np.zeros((n + 1, n + 1), dtype=np.int64)
    adj = g.adjacency
    for mask in range(1 << n):
        hist[mask.bit_count(), subset_rank(adj, mask)] += 1
    return hist


def interlace_P_poly(g: Graph, cap: int | None = None) -> BiPoly:
    """P(G;u,x) = sum over A of x^|A| u^rk(G[A]), as a BiPoly in (u, x)."""
    hist = rank_histogram(g, cap)
    terms = {
        (r, k): int(hist[k, r])
        for k in range(g.n + 1)
        for r in range(k + 1)
        if hist[k, r]
    }
    return BiPoly(terms, ("u", "x"))


def interlace_q_poly(g: Graph, cap: int | None = None) -> BiPoly:
    """q(G;x,y) = sum over A of (x-1)^rk (y-1)^(|A|-rk), as a BiPoly in (x, y)."""
    hist = rank_histogram(g, cap)
    coeffs: dict[tuple[int, int], int] = {}
    for k in range(g.n + 1):
        for r in range(k + 1):
            cnt = int(hist[k, r])
            if not cnt:
                continue
            s = k - r
            # (x-1)^r (y-1)^s expanded binomially
            for i in range(r + 1):
                ci = cnt * comb(r, i) * (-1) ** (r - i)
                for j in range(s + 1):
                    key = (i, j)
                    coeffs[key] = coeffs.get(key, 0) + ci * comb(s, j) * (-1) ** (s - j)
    return BiPoly(coeffs, ("x", "y"))


def _power_table(v: QSqrt2, top: int) -> list[QSqrt2]:
    out = [ONE]
    for _ in range(top):
        out.append(out[-1] * v)
    return out


def eval_P(g: Graph, u: Scalar, xi: Scalar, cap: int | None = None) -> QSqrt2:
    """P(G;u,xi) by a direct subset sum (scalar rank per subset)."""
    _check_cap(g, cap)
    u = QSqrt2.coerce(u)
    xi = QSqrt2.coerce(xi)
    # tally exponent pairs first: exact sums don't depend on order
    counts: dict[tuple[int, int], int] = {}
    adj = g.adjacency
    for mask in range(1 << g.n):
        key = (mask.bit_count(), subset_rank(adj, mask))
        counts[key] = counts.get(key, 0) + 1
    xp = _power_table(xi, g.n)
    up = _power_table(u, g.n)
    acc = ZERO
    for (k, r), c in sorted(counts.items()):
        acc = acc + xp[k] * up[r] * c
    return acc


def eval_q(g: Graph, x: Scalar, y: Scalar, cap: int | None = None) -> QSqrt2:
    """q(G;x,y) by a direct subset sum; fine on the line y = 1."""
    _check_cap(g, cap)
    xm = QSqrt2.coerce(x) - 1
    ym = QSqrt2.coerce(y) - 1
    counts: dict[tuple[int, int], int] = {}
    adj = g.adjacency
    for mask in range(1 << g.n):
        r = subset_rank(adj, mask)
        key = (r, mask.bit_count() - r)
        counts[key] = counts.get(key, 0) + 1
    xp = _power_table(xm, g.n)
    yp = _power_table(ym, g.n)
    acc = ZERO
    for (r, s), c in sorted(counts.items()):
        acc = acc + xp[r] * yp[s] * c
    return acc


def eval_P_multivariate(
    g: Graph,
    u: Scalar,
    assignment: Mapping[int, Scalar] | Sequence[Scalar],
    cap: int | None = None,
) -> QSqrt2:
    """Sum over A of (prod of x_v over A) * u^rk(G[A])."""
    _check_cap(g, cap)
    if isinstance(assignment, Mapping):
        missing = [v for v in g.vertices if v not in assignment]
        if missing:
            raise KeyError(f"no value assigned to vertices {missing}")
        xs = [QSqrt2.coerce(assignment[v]) for v in g.vertices]
    else:
        if len(assignment) != g.n:
            raise KeyError(f"expected {g.n} vertex values, got {len(assignment)}")
        xs = [QSqrt2.coerce(a) for a in assignment]
    up = _power_table(QSqrt2.coerce(u), g.n)
    adj = g.adjacency
    prod = [ONE] * (1 << g.n)
    acc = ONE  # A = empty
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        prod[mask] = prod[mask ^ low] * xs[low.bit_length() - 1]
        if prod[mask]:
            acc = acc + prod[mask] * up[subset_rank(adj, mask)]
    return acc


def count_independent_sets_by_size(g: Graph) -> list[int]:
    """Brute-force i(G;j) for j = 0..n by backtracking over bitsets."""
    if g.has_loops():
        raise LoopsPresentError("independent sets are only defined here for loopless graphs")
    n = g.n
    counts = [0] * (n + 1)
    adj = g.adjacency

    def grow(candidates: int, size: int) -> None:
        counts[size] += 1
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            grow(candidates & ~adj[v], size + 1)

    grow((1 << n) - 1, 0)
    return counts


def independent_set_poly(g: Graph, cap: int | None = None) -> UniPoly:
    """I(G;x) = sum_j i(G;j) x^j, cross-checked against P(G;0,x)."""
    if g.has_loops():
        raise LoopsPresentError("independent sets are only defined here for loopless graphs")
    _check_cap(g, cap)
    hist = rank_histogram(g, cap)
    from_rank = [int(hist[k, 0]) for k in range(g.n + 1)]
    direct = count_independent_sets_by_size(g)
    if from_rank != direct:
        raise RuntimeError(f"rank-0 subset counts {from_rank} disagree with enumeration {direct}")
    return UniPoly.from_coeffs(direct, "x")


def q_from_P(p: BiPoly) -> BiPoly:
    """q(x,y) = P((x-1)/(y-1), y-1), formally.

    Each term u^r x^k becomes (x-1)^r (y-1)^(k-r); a term with r > k has no
    polynomial image and means ``p`` did not come from a graph.
    """
    names = ("x", "y")
    xm1 = BiPoly({(1, 0): 1, (0, 0): -1}, names)
    ym1 = BiPoly({(0, 1): 1, (0, 0): -1}, names)
    acc = BiPoly({}, names)
    for (r, k), c in p.terms.items():
        if r > k:
            raise NotAGraphPolynomialError(f"term u^{r}*x^{k} has rank exponent above size exponent")
        acc = acc + (xm1 ** r) * (ym1 ** (k - r)) * c
    return acc


def P_from_q(q: BiPoly) -> BiPoly:
    """P(u,x) = q(ux+1, x+1), formally."""
    names = ("u", "x")
    first = BiPoly({(1, 1): 1, (0, 0): 1}, names)
    second = BiPoly({(0, 1): 1, (0, 0): 1}, names)
    return q.substitute(first, second)


def specialize(g: Graph, kind: Specialization | str, cap: int | None = None) -> UniPoly:
    """q_N(G;y) = q(G;2,y) or q_R(G;x) = q(G;x,2)."""
    kind = Specialization(kind)
    q = interlace_q_poly(g, cap)
    if kind is Specialization.VERTEX_NULLITY:
        return q.restrict(0, 2, "y")
    return q.restrict(1, 2, "x")


# ---------------------------------------------------------------------------
# twin-collapsed evaluation
#
# With per-vertex weights w, R(G; a, b; w) = sum_A w_A a^rk(G[A]) b^(|A|-rk(G[A])).
# P(G;u,x) is R(u, 1; x) and q(G;x,y) is R(x-1, y-1; 1).  A class of m mutual
# clones of weight w behaves like its representative carrying weight
# sum_{j>=1} C(m,j) w^j b^(j-1), because every nonempty subset of the class
# has the rank of the representative alone.


def _twin_weight(m: int, w: QSqrt2, b: QSqrt2) -> QSqrt2:
    """Sum over j >= 1 of C(m, j) w^j b^(j-1), i.e. ((1 + w b)^m - 1) / b."""
    if b == 0:
        return m * w
    return ((1 + w * b) ** m - 1) / b


def _twin_weight_sum(m: int, w: QSqrt2, b: QSqrt2) -> QSqrt2:
    # term-by-term version of _twin_weight, kept as a test oracle
    acc = ZERO
    wp = ONE
    bp = ONE
    for j in range(1, m + 1):
        wp = wp * w
        acc = acc + wp * bp * comb(m, j)
        bp = bp * b
    return acc


def _as_twin_graph(g):
    from .transforms import TwinGraph, twin_quotient

    if isinstance(g, TwinGraph):
        return g
    return twin_quotient(g)


def _independent_sum(adj: Sequence[int], ws: Sequence[QSqrt2], vertices: int) -> QSqrt2:
    """Sum over independent sets S inside ``vertices`` of the product of ws over S."""
    memo: dict[int, QSqrt2] = {}

    def solve(s: int) -> QSqrt2:
        if not s:
            return ONE
        if s in memo:
            return memo[s]
        # isolated vertices factor out; otherwise branch on a vertex of top degree
        factor = ONE
        rest = s
        best, best_deg = -1, -1
        for v in iter_bits(s):
            deg = (adj[v] & s & ~(1 << v)).bit_count()
            if deg == 0:
                factor = factor * (1 + ws[v])
                rest &= ~(1 << v)
            elif deg > best_deg:
                best, best_deg = v, deg
        if best < 0:
            out = factor
        else:
            bit = 1 << best
            out = factor * (solve(rest & ~bit) + ws[best] * solve(rest & ~bit & ~adj[best]))
        memo[s] = out
        return out

    return solve(vertices)


def eval_weighted(
    g: Graph, a: Scalar, b: Scalar, weights: Sequence[Scalar], cap: int | None = None
) -> QSqrt2:
    """R(G; a, b; w) by a direct subset sum over ``g``."""
    _check_cap(g, cap)
    a = QSqrt2.coerce(a)
    b = QSqrt2.coerce(b)
    ws = [QSqrt2.coerce(w) for w in weights]
    if len(ws) != g.n:
        raise ValueError("one weight per vertex required")
    adj = g.adjacency
    if a == 0:
        # only rank-0 subsets survive: loop-free independent sets, weighted by w_v b
        free = sum(1 << v for v in g.vertices if not g.has_loop(v))
        return _independent_sum(adj, [w * b for w in ws], free)
    ap = _power_table(a, g.n)
    bp = _power_table(b, g.n)
    prod = [ONE] * (1 << g.n)
    acc = ONE
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        prod[mask] = prod[mask ^ low] * ws[low.bit_length() - 1]
        if prod[mask]:
            r = subset_rank(adj, mask)
            acc = acc + prod[mask] * ap[r] * bp[mask.bit_count() - r]
    return acc


def eval_P_twins(g, u: Scalar, xi: Scalar, cap: int | None = None) -> QSqrt2:
    """P(G;u,xi) exactly, after collapsing clone classes.

    ``g`` may be a :class:`Graph` or an unexpanded ``TwinGraph``; the cap
    applies to the number of classes.
    """
    tg = _as_twin_graph(g)
    xi = QSqrt2.coerce(xi)
    weights = [_twin_weight(m, xi, ONE) for m in tg.multiplicity]
    return eval_weighted(tg.base, u, 1, weights, cap)


def eval_q_twins(g, x: Scalar, y: Scalar, cap: int | None = None) -> QSqrt2:
    """q(G;x,y) exactly, after collapsing clone classes; valid at y = 1."""
    tg = _as_twin_graph(g)
    b = QSqrt2.coerce(y) - 1
    weights = [_twin_weight(m, ONE, b) for m in tg.multiplicity]
    return eval_weighted(tg.base, QSqrt2.coerce(x) - 1, b, weights, cap)
