from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from interlace.algebra import BiPoly, QSqrt2, UniPoly, poly_eval_bi
from interlace.corpus import complete, empty_graph, path, with_loops
from interlace.graph import Graph, disjoint_union, random_graph
from interlace.interlace import (
    NotAGraphPolynomialError,
    P_from_q,
    SizeCapError,
    Specialization,
    count_independent_sets_by_size,
    eval_P,
    eval_P_multivariate,
    eval_P_twins,
    eval_q,
    eval_q_twins,
    independent_set_poly,
    interlace_P_poly,
    interlace_q_poly,
    q_from_P,
    rank_histogram,
    rank_histogram_scalar,
    specialize,
)

from oracles import naive_independent_counts, naive_P, naive_q

small = st.fractions(min_value=-6, max_value=6, max_denominator=5)
points = st.builds(QSqrt2, small, small)
graphs = st.builds(
    random_graph, st.integers(0, 7), st.sampled_from(["1/3", "1/2", "2/3"]),
    st.sampled_from(["0", "1/4", "1/2"]), st.integers(0, 10 ** 6),
)
loopless = st.builds(random_graph, st.integers(0, 9), st.sampled_from(["1/4", "1/2"]), st.just(0),
                     st.integers(0, 10 ** 6))

K2 = complete(2)
LOOP = with_loops(Graph(1), [0])
UX = ("u", "x")


def test_P_examples():
    x = BiPoly.var(1, UX)
    assert interlace_P_poly(empty_graph(4)) == (x + 1) ** 4
    assert interlace_P_poly(K2) == BiPoly({(0, 0): 1, (0, 1): 2, (2, 2): 1}, UX)
    assert interlace_P_poly(LOOP) == BiPoly({(0, 0): 1, (1, 1): 1}, UX)


def test_q_examples():
    assert interlace_q_poly(empty_graph(3)) == BiPoly({(0, 3): 1}, ("x", "y"))
    assert interlace_q_poly(K2) == BiPoly({(2, 0): 1, (1, 0): -2, (0, 1): 2}, ("x", "y"))
    assert interlace_q_poly(LOOP) == BiPoly({(1, 0): 1}, ("x", "y"))


def test_eval_examples():
    g = random_graph(6, "1/2", "1/4", 3)
    assert eval_P(g, QSqrt2(2, 1), 0) == 1
    xi = QSqrt2(Fraction(1, 3), 1)
    assert eval_P(g, 1, xi) == (1 + xi) ** 6
    assert eval_P(K2, 1, 1) == 4


def test_multivariate_examples():
    g = random_graph(5, "1/2", "1/4", 8)
    assert eval_P_multivariate(g, 3, [0] * 5) == 1
    assert eval_P_multivariate(g, 3, [2] * 5) == eval_P(g, 3, 2)
    assert eval_P_multivariate(K2, 1, {0: 1, 1: 2}) == 6
    with pytest.raises(KeyError):
        eval_P_multivariate(K2, 1, {0: 1})


def test_independent_set_examples():
    assert independent_set_poly(empty_graph(3)) == UniPoly({0: 1, 1: 3, 2: 3, 3: 1})
    assert independent_set_poly(path(3)) == UniPoly({0: 1, 1: 3, 2: 1})
    with pytest.raises(ValueError):
        independent_set_poly(LOOP)


def test_conversion_examples():
    P = interlace_P_poly(K2)
    assert q_from_P(P) == interlace_q_poly(K2)
    assert q_from_P(BiPoly.constant(1, UX)) == BiPoly.constant(1)
    with pytest.raises(NotAGraphPolynomialError):
        q_from_P(BiPoly({(2, 1): 1}, UX))


def test_specialize_examples():
    assert specialize(K2, Specialization.VERTEX_NULLITY) == UniPoly({1: 2}, "y")
    assert specialize(K2, "vertex_rank") == UniPoly({2: 1, 1: -2, 0: 4}, "x")
    assert specialize(path(3), "vertex_nullity") == UniPoly({2: 1, 1: 2}, "y")


def test_size_cap_is_an_error():
    with pytest.raises(SizeCapError):
        interlace_P_poly(empty_graph(21))
    with pytest.raises(SizeCapError):
        eval_q(empty_graph(12), 2, 2, cap=10)


@given(graphs)
def test_histogram_kernels_agree(g):
    assert (rank_histogram(g) == rank_histogram_scalar(g)).all()


@given(graphs, points, points)
def test_evaluators_agree(g, a, b):
    expected_P = naive_P(g, a, b)
    assert eval_P(g, a, b) == expected_P
    assert poly_eval_bi(interlace_P_poly(g), a, b) == expected_P
    assert eval_P_twins(g, a, b) == expected_P
    expected_q = naive_q(g, a, b)
    assert eval_q(g, a, b) == expected_q
    assert interlace_q_poly(g).evaluate(a, b) == expected_q
    assert eval_q_twins(g, a, b) == expected_q


@given(graphs, points, points)
def test_p_q_relation_at_values(g, x, y):
    if y == 1:
        return
    assert eval_q(g, x, y) == eval_P(g, (x - 1) / (y - 1), y - 1)


@given(graphs, points)
def test_q_on_the_y1_line(g, x):
    assert eval_q(g, x, 1) == naive_q(g, x, 1)


@given(graphs)
def test_formal_round_trip(g):
    P, q = interlace_P_poly(g), interlace_q_poly(g)
    assert q_from_P(P) == q
    assert P_from_q(q) == P


@given(graphs, graphs)
def test_disjoint_union_multiplicative(g, h):
    if g.n + h.n > 12:
        return
    assert interlace_q_poly(disjoint_union(g, h)) == interlace_q_poly(g) * interlace_q_poly(h)


@given(graphs)
def test_degree_bounds(g):
    P = interlace_P_poly(g)
    assert P.degree(1) <= g.n and P.degree(0) <= g.n


@given(loopless)
def test_independent_counts(g):
    counts = naive_independent_counts(g)
    assert count_independent_sets_by_size(g) == counts
    I = independent_set_poly(g)
    alpha = max(j for j, c in enumerate(counts) if c)
    assert I.coeffs() == [QSqrt2(c) for c in counts[: alpha + 1]]
    assert I.degree == alpha
    assert I(1) == eval_q(g, 1, 2) == sum(counts)
    assert I == interlace_P_poly(g).restrict(0, 0, "x")
