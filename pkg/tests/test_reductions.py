from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from interlace.algebra import BETA, SQRT2, QSqrt2, UniPoly
from interlace.corpus import complete, empty_graph
from interlace.graph import random_graph
from interlace.interlace import eval_P, interlace_P_poly
from interlace.reductions import (
    B2,
    ForbiddenPointError,
    Reason,
    Status,
    ZeroDenominatorError,
    classification_grid,
    classify_P_point,
    classify_q_point,
    clone_point_map,
    clone_point_map_q,
    comb_point_map,
    cycle_point_map,
    exact_P_oracle,
    recover_P_by_cloning,
    recover_q_on_y1_line,
)

small = st.fractions(min_value=-4, max_value=4, max_denominator=4)
points = st.builds(QSqrt2, small, small)
graphs = st.builds(
    random_graph, st.integers(1, 4), st.sampled_from(["1/3", "1/2", "2/3"]),
    st.sampled_from(["0", "1/4"]), st.integers(0, 10 ** 6),
)
K2 = complete(2)


def test_recover_P_examples():
    assert recover_P_by_cloning(K2, 1, 1) == UniPoly({0: 1, 1: 2, 2: 1})
    u = QSqrt2(Fraction(2, 3), -1)
    assert recover_P_by_cloning(K2, u, 1) == UniPoly({0: 1, 1: 2, 2: u * u})
    with pytest.raises(ForbiddenPointError):
        recover_P_by_cloning(K2, 1, -2)
    assert B2 == {QSqrt2(0), QSqrt2(-1), QSqrt2(-2)}


def test_recover_P_uses_the_given_oracle():
    calls = []

    def oracle(g):
        calls.append(g.n)
        return exact_P_oracle(2, 1)(g)

    recover_P_by_cloning(K2, 2, 1, oracle)
    assert calls == [2, 4, 6]


def test_recover_q_examples():
    assert recover_q_on_y1_line(empty_graph(2), 3) == UniPoly.constant(1)
    assert recover_q_on_y1_line(K2, 5) == UniPoly({2: 1, 1: -2, 0: 2})
    with pytest.raises(ForbiddenPointError):
        recover_q_on_y1_line(K2, 1)


def test_comb_point_map_examples():
    u, xi = QSqrt2(3), QSqrt2(Fraction(1, 2))
    assert comb_point_map(1, u, xi).target == (u, xi / (1 + xi + xi * xi * u * u))
    for k in (1, 2, 5):
        pm = comb_point_map(k, 1, -1)
        assert pm.target == (1, -1) and pm.scale == 1
    assert comb_point_map(1, BETA, -1).target == (BETA, -2)


def test_comb_point_map_zero_denominator():
    # p(1, 0, x) = 1 + x vanishes at x = -1
    with pytest.raises(ZeroDenominatorError):
        comb_point_map(1, 0, -1)


def test_cycle_point_map_examples():
    assert cycle_point_map(3, 0, -1).target == (0, 1)
    for u in (QSqrt2(0), QSqrt2(2), SQRT2, QSqrt2(Fraction(-1, 3))):
        # the derived 4-cycle pair sends (u, -2) to itself
        assert cycle_point_map(4, u, -2).target == (u, -2)
    pm = cycle_point_map(3, 5, 0)
    assert pm.target == (5, 0) and pm.scale == 1
    with pytest.raises(ValueError):
        cycle_point_map(5, 1, 1)


def test_clone_point_map_q_examples():
    pm = clone_point_map_q(1, QSqrt2(3, 1), 7)
    assert pm.target == pm.source
    assert clone_point_map_q(2, 2, -1).target == (1, 1)
    assert clone_point_map_q(3, 2, 1).target == (4, 1)


@given(graphs, points, points, st.integers(1, 3))
def test_point_map_soundness(g, u, xi, k):
    maps = [clone_point_map(k, u, xi)]
    for make, kk in ((comb_point_map, k), (cycle_point_map, 3), (cycle_point_map, 4)):
        try:
            maps.append(make(kk, u, xi))
        except ZeroDenominatorError:
            pass
    for pm in maps:
        lhs = eval_P(pm.transform(g), *pm.source)
        assert lhs == pm.factor(g.n) * eval_P(g, *pm.target)


@given(graphs, points, points)
def test_recovery_pipeline(g, u, xi):
    if xi in B2:
        return
    assert recover_P_by_cloning(g, u, xi) == interlace_P_poly(g).restrict(0, u, "x")


@given(graphs, points)
def test_recovery_on_y1_line(g, xi):
    if xi == 1:
        return
    from interlace.interlace import interlace_q_poly

    assert recover_q_on_y1_line(g, xi) == interlace_q_poly(g).restrict(1, 1, "x")


def test_classify_q_examples():
    assert classify_q_point(2, 2).status is Status.POLY
    assert classify_q_point(2, 3).status is Status.SHARP_P_HARD
    assert classify_q_point(2, 1 + SQRT2).status is Status.OPEN
    assert classify_q_point(1 - BETA, 2).status is Status.OPEN
    assert classify_q_point(5, 2).status is Status.SHARP_P_HARD
    assert classify_q_point(2, 2).line() == "POLY q_summary.line_x_eq_y"
    assert classify_q_point(4, 1).reason is Reason.Q_Y1_LINE


def test_classify_P_examples():
    assert classify_P_point(1, 7).status is Status.POLY
    assert classify_P_point(0, -1).status is Status.SHARP_P_HARD
    assert classify_P_point(BETA, 5).status is Status.OPEN
    assert classify_P_point(-BETA, 5).status is Status.OPEN
    assert classify_P_point(3, 0).reason is Reason.P_LINE_X0


@given(points, points)
def test_classifiers_agree(xi, ups):
    if ups == 1:
        return
    q_status = classify_q_point(xi, ups).status
    p_status = classify_P_point((xi - 1) / (ups - 1), ups - 1).status
    if Status.OPEN not in (q_status, p_status):
        assert q_status == p_status


def test_classifiers_agree_on_a_grid():
    values = [QSqrt2(Fraction(i, 2)) for i in range(-6, 7)] + [1 + SQRT2, 1 - SQRT2, 1 + BETA]
    for xi in values:
        for ups in values:
            if ups == 1:
                continue
            q_status = classify_q_point(xi, ups).status
            p_status = classify_P_point((xi - 1) / (ups - 1), ups - 1).status
            if Status.OPEN not in (q_status, p_status):
                assert q_status == p_status, (xi, ups)


def test_line_x2_exceptions():
    specials = {QSqrt2(0), QSqrt2(1), QSqrt2(2), 1 + SQRT2, 1 - SQRT2}
    candidates = specials | {QSqrt2(Fraction(i, 3)) for i in range(-9, 10)} | {SQRT2, 2 + SQRT2}
    not_hard = {y for y in candidates if classify_q_point(2, y).status is not Status.SHARP_P_HARD}
    assert not_hard == specials


def test_grid_renders():
    text = classification_grid("q")
    assert text.endswith("\n")
    assert "P" in text and "#" in text and "?" in text
    assert len(classification_grid("P").splitlines()) == 12
