"""Quick seeded property checks, one group per module, for ``interlace selftest``."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, List, Tuple

from .algebra import BETA, SQRT2, QSqrt2, UniPoly, lagrange_interpolate
from .corpus import cycle, graph_corpus, named_embeddings, path
from .graph import f2_rank, format_edgelist, parse_edgelist, random_graph, subset_rank
from .independence import NoisyOracleConfig, alpha_bruteforce, noisy_oracle, recover_alpha
from .interlace import (
    P_from_q,
    count_independent_sets_by_size,
    eval_P,
    eval_P_twins,
    eval_q,
    interlace_P_poly,
    interlace_q_poly,
    q_from_P,
    rank_histogram,
    rank_histogram_scalar,
)
from .medial import circle_graph, medial_identity_check, tutte_diagonal
from .reductions import (
    Status,
    classify_P_point,
    classify_q_point,
    clone_point_map,
    comb_point_map,
    cycle_point_map,
    recover_P_by_cloning,
)
from .transforms import clone_all, clone_all_iterated, twin_quotient

Check = Callable[[random.Random], None]


def _rand_q(rng: random.Random) -> QSqrt2:
    return QSqrt2(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-4, 4), rng.randint(1, 3)))


def _check_algebra(rng: random.Random) -> None:
    for _ in range(200):
        a, b, c = _rand_q(rng), _rand_q(rng), _rand_q(rng)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        if a != 0:
            assert a * a.inverse() == 1
        gap = float(b.rat - a.rat) + float(b.irr - a.irr) * 2 ** 0.5
        if abs(gap) > 1e-9:
            assert (a < b) == (gap > 0)
    assert SQRT2 * SQRT2 == 2 and BETA * SQRT2 == 1
    for deg in range(8):
        p = UniPoly.from_coeffs([_rand_q(rng) for _ in range(deg + 1)], "x")
        pts = [(QSqrt2(i), p(QSqrt2(i))) for i in range(deg + 1)]
        assert lagrange_interpolate(pts, "x") == p


def _check_graph(rng: random.Random) -> None:
    for _ in range(40):
        g = random_graph(rng.randint(0, 8), "1/2", "1/4", rng.randrange(10 ** 6))
        assert parse_edgelist(format_edgelist(g)) == g
        assert f2_rank(list(g.adjacency)) == subset_rank(g.adjacency, (1 << g.n) - 1)
        # a loopless graph has even rank: its adjacency matrix is alternating
        if not g.has_loops():
            assert f2_rank(list(g.adjacency)) % 2 == 0


def _check_interlace(rng: random.Random) -> None:
    for _ in range(10):
        g = random_graph(rng.randint(1, 7), "1/2", "1/4", rng.randrange(10 ** 6))
        assert (rank_histogram(g) == rank_histogram_scalar(g)).all()
        P = interlace_P_poly(g)
        q = interlace_q_poly(g)
        assert q_from_P(P) == q and P_from_q(q) == P
        u, x = _rand_q(rng), _rand_q(rng)
        assert P.evaluate(u, x) == eval_P(g, u, x)
        assert q.evaluate(u, x) == eval_q(g, u, x)
        assert eval_P_twins(g, u, x) == eval_P(g, u, x)
        if not g.has_loops():
            assert eval_q(g, 1, 2) == sum(count_independent_sets_by_size(g))


def _check_transforms(rng: random.Random) -> None:
    for _ in range(8):
        g = random_graph(rng.randint(1, 4), "1/2", "1/3", rng.randrange(10 ** 6))
        k = rng.randint(1, 3)
        assert clone_all(g, k) == clone_all_iterated(g, k)
        tg = twin_quotient(clone_all(g, k))
        assert tg.n == g.n * k
        u, x = _rand_q(rng), _rand_q(rng)
        assert eval_P_twins(tg, u, x) == eval_P(clone_all(g, k), u, x)


def _check_reductions(rng: random.Random) -> None:
    for _ in range(4):
        g = random_graph(rng.randint(1, 4), "1/2", "1/4", rng.randrange(10 ** 6))
        u, xi = _rand_q(rng), QSqrt2(rng.randint(1, 4))
        for pm in (clone_point_map(2, u, xi), comb_point_map(1, u, xi), cycle_point_map(3, u, xi)):
            lhs = eval_P(pm.transform(g), *pm.source)
            assert lhs == pm.factor(g.n) * eval_P(g, *pm.target)
        expected = interlace_P_poly(g).restrict(0, u, "x")
        assert recover_P_by_cloning(g, u, xi) == expected
    assert classify_q_point(2, 2).status is Status.POLY
    assert classify_q_point(2, 1).status is Status.OPEN
    assert classify_P_point(1, 5).status is Status.POLY
    assert classify_P_point(3, 5).status is Status.SHARP_P_HARD


def _check_medial(rng: random.Random) -> None:
    for name, emb in named_embeddings().items():
        report = medial_identity_check(emb, rng.randrange(10 ** 6))
        assert report.equal, name
    for n in range(3, 8):
        # t(C_n;x,y) = y + x + ... + x^(n-1)
        expected = UniPoly({1: 2, **{i: 1 for i in range(2, n)}}, "y")
        assert tutte_diagonal(cycle(n)) == expected
    assert circle_graph((0, 1, 0, 1)).has_edge(0, 1)


def _check_independence(rng: random.Random) -> None:
    graphs = list(graph_corpus(5, loops=False, random_per_size=1, seed=rng.randrange(100)).values())
    for g in graphs:
        cfg = NoisyOracleConfig(1, Fraction(1, 2), rng.randrange(10 ** 6), adversarial=True)
        got = recover_alpha(g, cfg, lambda h, cfg=cfg: noisy_oracle(h, cfg))
        assert got.c == alpha_bruteforce(g).c
    assert recover_alpha(path(3), NoisyOracleConfig(1, Fraction(1, 2))).c == 2


GROUPS: List[Tuple[str, Check]] = [
    ("algebra", _check_algebra),
    ("graph-core", _check_graph),
    ("interlace-eval", _check_interlace),
    ("transforms", _check_transforms),
    ("reductions", _check_reductions),
    ("tutte-medial", _check_medial),
    ("independence", _check_independence),
]


def run_selftest(seed: int = 0) -> Tuple[List[str], bool]:
    """Run every group; returns the report lines and whether all passed."""
    lines = []
    ok = True
    for i, (name, check) in enumerate(GROUPS):
        rng = random.Random(seed * 7919 + i)
        try:
            check(rng)
        except Exception as exc:  # any failure is reported, not raised
            ok = False
            lines.append(f"FAIL {name}: {type(exc).__name__}: {exc}")
        else:
            lines.append(f"PASS {name}")
    return lines, ok
