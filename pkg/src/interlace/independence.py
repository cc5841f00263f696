"""Independent-set oracles and degree recovery from approximate evaluations.

An approximation of I(G_l; lambda), where G_l is G with every vertex cloned
l-1 times (or with l pendant leaves per vertex when |1+lambda| < 1), is an
approximation of I(G; xi) at a huge point xi.  At such a point the leading
term N xi^c dominates, so the approximation still pins down c, the size of a
maximum independent set.

Amplified graphs have n*l vertices with l in the thousands, so they are
passed around as unexpanded :class:`TwinGraph` objects; every clone class
(or leaf class) is one vertex with a multiplicity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Tuple

from .algebra import ONE, QSqrt2, Scalar
from .graph import Graph, GraphError
from .interlace import LoopsPresentError, count_independent_sets_by_size, eval_P_twins
from .transforms import TwinGraph, comb_all

__all__ = [
    "AlphaResult",
    "NoisyOracleConfig",
    "Amplified",
    "Recovery",
    "InvalidLambdaError",
    "NoUniqueCandidateError",
    "alpha_bruteforce",
    "ceil_power",
    "choose_amplification",
    "amplify",
    "exact_independence_oracle",
    "noisy_oracle",
    "recover_alpha",
]

ALPHA_CAP = 24


class InvalidLambdaError(ValueError):
    pass


class NoUniqueCandidateError(RuntimeError):
    pass


@dataclass(frozen=True)
class AlphaResult:
    c: int
    N: int


def alpha_bruteforce(g: Graph, cap: int = ALPHA_CAP) -> AlphaResult:
    """Independence number and the number of maximum independent sets."""
    if g.n > cap:
        raise GraphError(f"graph has {g.n} vertices, cap is {cap}")
    counts = count_independent_sets_by_size(g)
    c = max(j for j, cnt in enumerate(counts) if cnt)
    return AlphaResult(c, counts[c])


def _iroot_ceil(value: int, k: int) -> int:
    """Smallest integer r >= 0 with r**k >= value."""
    if value <= 0:
        return 0
    r = int(round(value ** (1.0 / k))) if value.bit_length() < 1000 else 1 << (value.bit_length() // k + 1)
    # Newton downwards from an overestimate, then fix up by one
    r = max(r, 1)
    while r ** k < value:
        r *= 2
    while True:
        nxt = ((k - 1) * r + value // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r ** k < value:
        r += 1
    while r > 0 and (r - 1) ** k >= value:
        r -= 1
    return r


def ceil_power(base: int, exponent: Fraction) -> int:
    """ceil(base ** exponent) for a positive integer base and rational exponent in [0, 1]."""
    exponent = Fraction(exponent)
    return _iroot_ceil(base ** exponent.numerator, exponent.denominator)


@dataclass(frozen=True)
class NoisyOracleConfig:
    """``lam`` is the evaluation point, ``epsilon`` sets the allowed factor
    2^((n l)^(1 - epsilon)).  ``adversarial`` puts every perturbation at the
    full factor instead of drawing it from inside the band."""

    lam: QSqrt2
    epsilon: Fraction
    seed: int = 0
    adversarial: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", QSqrt2.coerce(self.lam))
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie strictly between 0 and 1")

    def noise_exponent(self, n: int, l: int) -> int:
        """ceil((n l)^(1 - epsilon))."""
        return ceil_power(n * l, 1 - self.epsilon)


@dataclass(frozen=True)
class Amplified:
    """G_l in unexpanded form, plus how it was built."""

    base: Graph
    kind: str  # "clone" or "comb"
    l: int
    graph: TwinGraph = field(repr=False)

    @property
    def n(self) -> int:
        return self.graph.n


def amplify(g: Graph, kind: str, l: int) -> Amplified:
    if kind == "clone":
        tg = TwinGraph(g, (l,) * g.n)
    elif kind == "comb":
        # one leaf per vertex standing for a class of l twin leaves
        tg = TwinGraph(comb_all(g, 1), (1,) * g.n + (l,) * g.n)
    else:
        raise ValueError(f"unknown amplification {kind!r}")
    return Amplified(g, kind, l, tg)


def _abs_exceeds_power_of_two(value: QSqrt2, exponent: int) -> bool:
    return abs(value) > QSqrt2(Fraction(2) ** exponent)


def choose_amplification(n: int, lam: Scalar, epsilon: Fraction) -> Tuple[int, QSqrt2, str]:
    """Smallest l with (n l)^(1-eps) >= n^2 and |xi| > 2^(2b + n + 2), b = ceil((n l)^(1-eps)).

    Returns ``(l, xi, kind)`` where kind is ``"clone"`` (xi = (1+lam)^l - 1)
    or ``"comb"`` (xi = lam / (1+lam)^l).
    """
    return _choose_amplification(n, QSqrt2.coerce(lam), Fraction(epsilon))


@lru_cache(maxsize=64)
def _choose_amplification(n: int, lam: QSqrt2, epsilon: Fraction) -> Tuple[int, QSqrt2, str]:
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    if n < 1:
        raise ValueError("need at least one vertex")
    base = 1 + lam
    size = abs(base)
    if size == 0 or size == 1:
        raise InvalidLambdaError(f"|1 + lambda| = {size} gives no amplification")
    kind = "clone" if size > 1 else "comb"
    a, q = (1 - epsilon).numerator, (1 - epsilon).denominator
    # (n l)^(a/q) >= n^2  <=>  (n l)^a >= n^(2q)
    l = 1
    while (n * l) ** a < n ** (2 * q):
        l += 1
    power = base ** l
    inv_base = base.inverse()
    inv_power = inv_base ** l
    while True:
        b = ceil_power(n * l, 1 - epsilon)
        xi = power - 1 if kind == "clone" else lam * inv_power
        if _abs_exceeds_power_of_two(xi, 2 * b + n + 2):
            return l, xi, kind
        l += 1
        if kind == "clone":
            power = power * base
        else:
            inv_power = inv_power * inv_base


def exact_independence_oracle(lam: Scalar) -> Callable[[Graph | TwinGraph | Amplified], QSqrt2]:
    """I(H; lam) = P(H; 0, lam), evaluated on the collapsed clone classes."""
    lam = QSqrt2.coerce(lam)

    def oracle(h):
        if isinstance(h, Amplified):
            h = h.graph
        return eval_P_twins(h, 0, lam)

    return oracle


def _noise_factor(rng: random.Random, b: int, adversarial: bool) -> Fraction:
    if b == 0:
        return Fraction(1)
    if adversarial:
        return Fraction(2) ** (b if rng.random() < 0.5 else -b)
    # 2^e (1 + k/D) stays inside [2^-b, 2^b]
    e = rng.randrange(-b, b)
    denom = 1 << 16
    return Fraction(2) ** e * Fraction(denom + rng.randrange(denom + 1), denom)


def noisy_oracle(h: Amplified | Graph, cfg: NoisyOracleConfig) -> QSqrt2:
    """Exact I(h; lam) times a seeded factor in [2^-b, 2^b], b = ceil((n l)^(1-eps)).

    For a plain graph, l is 1 and n its vertex count.
    """
    if isinstance(h, Amplified):
        n, l = h.base.n, h.l
        tag = f"{h.kind}:{h.l}:{h.base.n}:{h.base.edges}"
    else:
        n, l = h.n, 1
        tag = f"plain:{h.n}:{h.edges}"
    b = cfg.noise_exponent(n, l)
    exact = exact_independence_oracle(cfg.lam)(h)
    rng = random.Random(f"{cfg.seed}|{tag}")
    return exact * _noise_factor(rng, b, cfg.adversarial)


@dataclass(frozen=True)
class Recovery:
    """Outcome of :func:`recover_alpha`.

    ``placement[c - 1]`` is ``"above"``, ``"inside"`` or ``"below"`` the
    acceptance band for candidate degree c.
    """

    c: int
    n_estimate: QSqrt2
    l: int
    xi: QSqrt2
    kind: str
    noise_exponent: int
    placement: Tuple[str, ...]

    def line(self) -> str:
        return f"alpha={self.c} N_estimate={self.n_estimate} l={self.l}"


def recover_alpha(
    g: Graph,
    cfg: NoisyOracleConfig,
    oracle: Callable[[Amplified], QSqrt2] | None = None,
) -> Recovery:
    """Recover the independence number of ``g`` from one (approximate)
    evaluation of I(G_l; lambda)."""
    if g.has_loops():
        raise LoopsPresentError("degree recovery needs a loopless graph")
    n = g.n
    if n < 1:
        raise ValueError("need at least one vertex")
    lam = cfg.lam
    l, xi, kind = choose_amplification(n, lam, cfg.epsilon)
    b = cfg.noise_exponent(n, l)
    if oracle is None:
        oracle = exact_independence_oracle(lam)
    approx = oracle(amplify(g, kind, l))
    if kind == "comb":
        approx = approx / (1 + lam) ** (l * n)
    low = QSqrt2(Fraction(1, 2 ** (b + 1)))
    high = QSqrt2(Fraction(2) ** (b + n + 1))
    placement = []
    inside = []
    xi_power = ONE
    for c in range(1, n + 1):
        xi_power = xi_power * xi
        estimate = approx / xi_power
        size = abs(estimate)
        if size > high:
            placement.append("above")
        elif size < low:
            placement.append("below")
        else:
            placement.append("inside")
            inside.append((c, estimate))
    if len(inside) != 1:
        raise NoUniqueCandidateError(
            f"{len(inside)} candidate degrees satisfy the bounds; the oracle broke its accuracy contract"
        )
    c, estimate = inside[0]
    return Recovery(c, estimate, l, xi, kind, b, tuple(placement))
