"""Point-to-point reductions, interpolation pipelines and the complexity map.

Oracles are plain callables taking a graph (a :class:`Graph` or an
unexpanded :class:`TwinGraph`) and returning one field element; exact,
capped and noisy oracles all plug in the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Tuple, Union

from .algebra import BETA, ONE, SQRT2, ZERO, QSqrt2, Scalar, UniPoly, lagrange_interpolate
from .graph import Graph
from .interlace import eval_P_twins, eval_q_twins
from .transforms import TwinGraph, clone_all, comb_all, cycle_all

__all__ = [
    "Oracle",
    "ForbiddenPointError",
    "ZeroDenominatorError",
    "PointMap",
    "Status",
    "Reason",
    "Classification",
    "exact_P_oracle",
    "exact_q_oracle",
    "recover_P_by_cloning",
    "recover_q_on_y1_line",
    "comb_polynomial",
    "cycle_polynomials",
    "clone_point_map",
    "comb_point_map",
    "cycle_point_map",
    "clone_point_map_q",
    "classify_q_point",
    "classify_P_point",
    "classification_grid",
    "B1",
    "B2",
]

AnyGraph = Union[Graph, TwinGraph]
Oracle = Callable[[AnyGraph], QSqrt2]
Point = Tuple[QSqrt2, QSqrt2]

B1 = frozenset({ONE, -ONE, BETA, -BETA, ZERO})
B2 = frozenset({ZERO, -ONE, QSqrt2(-2)})


class ForbiddenPointError(ValueError):
    pass


class ZeroDenominatorError(ZeroDivisionError):
    pass


def exact_P_oracle(u: Scalar, xi: Scalar) -> Oracle:
    u, xi = QSqrt2.coerce(u), QSqrt2.coerce(xi)
    return lambda g: eval_P_twins(g, u, xi)


def exact_q_oracle(x: Scalar, y: Scalar) -> Oracle:
    x, y = QSqrt2.coerce(x), QSqrt2.coerce(y)
    return lambda g: eval_q_twins(g, x, y)


# ---------------------------------------------------------------------------
# interpolation pipelines


def recover_P_by_cloning(
    g: Graph, u: Scalar, xi: Scalar, oracle: Oracle | None = None
) -> UniPoly:
    """P(G;u,x) as a polynomial in x from n+1 oracle calls at (u, xi).

    The call on G_i (each vertex cloned i-1 times) yields P(G;u,(1+xi)^i - 1).
    """
    u, xi = QSqrt2.coerce(u), QSqrt2.coerce(xi)
    if xi in B2:
        raise ForbiddenPointError(f"xi = {xi} lies in {{0, -1, -2}}; cloning nodes would collide")
    if oracle is None:
        oracle = exact_P_oracle(u, xi)
    base = 1 + xi
    points = []
    for i in range(1, g.n + 2):
        node = base ** i - 1
        points.append((node, oracle(clone_all(g, i))))
    nodes = [p[0] for p in points]
    assert len(set(nodes)) == len(nodes), "interpolation nodes collided"
    return lagrange_interpolate(points, "x")


def recover_q_on_y1_line(g: Graph, xi: Scalar, oracle: Oracle | None = None) -> UniPoly:
    """q(G;x,1) from n+1 oracle calls at (xi, 1), using q(G_k;xi,1) = q(G;k(xi-1)+1,1)."""
    xi = QSqrt2.coerce(xi)
    if xi == 1:
        raise ForbiddenPointError("xi = 1 makes every interpolation node equal")
    if oracle is None:
        oracle = exact_q_oracle(xi, 1)
    points = [(k * (xi - 1) + 1, oracle(clone_all(g, k))) for k in range(1, g.n + 2)]
    return lagrange_interpolate(points, "x")


# ---------------------------------------------------------------------------
# point maps


def comb_polynomial(k: int, u: Scalar, x: Scalar) -> QSqrt2:
    """(1+x)^k (x u^2 + 1) - x u^2."""
    u, x = QSqrt2.coerce(u), QSqrt2.coerce(x)
    xu2 = x * u * u
    return (1 + x) ** k * (xu2 + 1) - xu2


def cycle_polynomials(k: int, u: Scalar, x: Scalar) -> Tuple[QSqrt2, QSqrt2]:
    """The pair (p_k, q_k) for attached 3- and 4-cycles."""
    u, x = QSqrt2.coerce(u), QSqrt2.coerce(x)
    u2 = u * u
    if k == 3:
        return 1 + 2 * x + 3 * x ** 2 * u2, x + x ** 3 * u2
    if k == 4:
        # from the rank case split on the new path 1-2-3; p_4 + q_4 = (1+x)^4 at u = 1
        p = 1 + 3 * x + x ** 2 + 4 * x ** 2 * u2 + 2 * x ** 3 * u2
        q = x + x ** 2 + 2 * x ** 3 * u2 + x ** 4 * u2
        return p, q
    raise ValueError("cycle point maps are only known for k = 3 and k = 4")


@dataclass(frozen=True)
class PointMap:
    """Evaluating the transformed graph at ``source`` gives ``scale^n`` times
    the original graph at ``target`` (n = vertex count of the original).

    For clone maps ``scale`` is 1.  ``family`` selects the polynomial the
    points refer to: ``"P"`` for (u, x), ``"q"`` for (x, y).
    """

    source: Point
    target: Point
    scale: QSqrt2
    op: str
    k: int
    family: str = "P"

    def transform(self, g: Graph, cap: int | None = None) -> Graph:
        if self.op == "clone":
            return clone_all(g, self.k, cap)
        if self.op == "comb":
            return comb_all(g, self.k, cap)
        if self.op == "cycle":
            return cycle_all(g, self.k, cap)
        raise ValueError(f"unknown transform {self.op!r}")

    def factor(self, n: int) -> QSqrt2:
        return self.scale ** n


def clone_point_map(k: int, u: Scalar, xi: Scalar) -> PointMap:
    """(u, xi) on G_k is (u, (1+xi)^k - 1) on G."""
    if k < 1:
        raise ValueError("k must be at least 1")
    u, xi = QSqrt2.coerce(u), QSqrt2.coerce(xi)
    return PointMap((u, xi), (u, (1 + xi) ** k - 1), ONE, "clone", k)


def comb_point_map(k: int, u: Scalar, xi: Scalar) -> PointMap:
    if k < 1:
        raise ValueError("k must be at least 1")
    u, xi = QSqrt2.coerce(u), QSqrt2.coerce(xi)
    p = comb_polynomial(k, u, xi)
    if p == 0:
        raise ZeroDenominatorError(f"p({k}, {u}, {xi}) = 0")
    return PointMap((u, xi), (u, xi / p), p, "comb", k)


def cycle_point_map(k: int, u: Scalar, xi: Scalar) -> PointMap:
    u, xi = QSqrt2.coerce(u), QSqrt2.coerce(xi)
    p, q = cycle_polynomials(k, u, xi)
    if p == 0:
        raise ZeroDenominatorError(f"p_{k}({u}, {xi}) = 0")
    return PointMap((u, xi), (u, q / p), p, "cycle", k)


def clone_point_map_q(k: int, xi: Scalar, upsilon: Scalar) -> PointMap:
    """(xi, ups) on G_k is ((xi-1)(1 + ups + ... + ups^(k-1)) + 1, ups^k) on G.

    The geometric sum is the closed form (ups^k - 1)/(ups - 1) and equals k
    at ups = 1, so no special case is needed there.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    xi, ups = QSqrt2.coerce(xi), QSqrt2.coerce(upsilon)
    geo = ZERO
    power = ONE
    for _ in range(k):
        geo = geo + power
        power = power * ups
    return PointMap((xi, ups), ((xi - 1) * geo + 1, power), ONE, "clone", k, family="q")


# ---------------------------------------------------------------------------
# complexity map


class Status(str, Enum):
    POLY = "POLY"
    SHARP_P_HARD = "SHARP_P_HARD"
    OPEN = "OPEN"


class Reason(str, Enum):
    Q_LINE_X_EQ_Y = "q_summary.line_x_eq_y"
    Q_Y1_LINE = "q_summary.y1_line_equivalence"
    Q_OPEN_ANTIDIAGONAL = "q_summary.open_line_y_eq_2_minus_x"
    Q_OPEN_SQRT2 = "q_summary.open_line_y_eq_pm_sqrt2_x_minus_1_plus_1"
    Q_HARD = "q_summary.hard_region"
    P_LINE_U1 = "p_summary.line_u_eq_1"
    P_LINE_X0 = "p_summary.line_x_eq_0"
    P_OPEN_U = "p_summary.open_u_in_minus1_pm_beta"
    P_HARD = "p_summary.hard_region"
    P_HARD_U0 = "p_summary.hard_region_u0_via_independent_sets"


@dataclass(frozen=True)
class Classification:
    status: Status
    reason: Reason

    def line(self) -> str:
        return f"{self.status.value} {self.reason.value}"

    def __str__(self) -> str:
        return self.line()


def classify_q_point(xi: Scalar, upsilon: Scalar) -> Classification:
    xi, ups = QSqrt2.coerce(xi), QSqrt2.coerce(upsilon)
    if ups == xi:
        return Classification(Status.POLY, Reason.Q_LINE_X_EQ_Y)
    if ups == 1:
        return Classification(Status.OPEN, Reason.Q_Y1_LINE)
    d = xi - 1
    if ups == 1 - d:
        return Classification(Status.OPEN, Reason.Q_OPEN_ANTIDIAGONAL)
    if ups == SQRT2 * d + 1 or ups == 1 - SQRT2 * d:
        return Classification(Status.OPEN, Reason.Q_OPEN_SQRT2)
    return Classification(Status.SHARP_P_HARD, Reason.Q_HARD)


def classify_P_point(u: Scalar, xi: Scalar) -> Classification:
    u, xi = QSqrt2.coerce(u), QSqrt2.coerce(xi)
    if u == 1:
        return Classification(Status.POLY, Reason.P_LINE_U1)
    if xi == 0:
        return Classification(Status.POLY, Reason.P_LINE_X0)
    if u in (-ONE, BETA, -BETA):
        return Classification(Status.OPEN, Reason.P_OPEN_U)
    if u == 0:
        return Classification(Status.SHARP_P_HARD, Reason.P_HARD_U0)
    return Classification(Status.SHARP_P_HARD, Reason.P_HARD)


_GRID_SYMBOL = {Status.POLY: "P", Status.SHARP_P_HARD: "#", Status.OPEN: "?"}


def classification_grid(
    kind: str, lo: Fraction = Fraction(-2), hi: Fraction = Fraction(3), step: Fraction = Fraction(1, 2)
) -> str:
    """Text rendering of the complexity map on a rational grid.

    ``P`` polynomial time, ``#`` #P-hard, ``?`` open.  Rows run from the top
    value of the second coordinate down.
    """
    classify = classify_q_point if kind == "q" else classify_P_point
    names = ("x", "y") if kind == "q" else ("u", "x")
    values = []
    v = Fraction(lo)
    while v <= hi:
        values.append(v)
        v += step
    width = max(len(str(v)) for v in values)
    lines = [f"{names[1]} \\ {names[0]}: " + " ".join(f"{str(v):>{width}}" for v in values)]
    for second in reversed(values):
        cells = [_GRID_SYMBOL[classify(first, second).status] for first in values]
        lines.append(f"{str(second):>{width + 5}}: " + " ".join(f"{c:>{width}}" for c in cells))
    return "\n".join(lines) + "\n"
