import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import matchings_brute
from ucenergy.charpoly import charpoly, charpoly_reference, matching_count
from ucenergy.graphs import (
    Graph,
    make_cycle,
    make_lollipop,
    make_path,
)
from ucenergy.polynomials import IntPolynomial, X


def P(*ascending):
    return IntPolynomial.from_coeffs(ascending)


def test_known_polynomials():
    assert charpoly(make_cycle(3)) == P(-2, -3, 0, 1)
    assert charpoly(make_cycle(4)) == P(0, 0, -4, 0, 1)
    assert charpoly_reference(make_cycle(4)) == P(0, 0, -4, 0, 1)
    assert charpoly(make_lollipop(8, 6)) == P(4, 0, -16, 0, 19, 0, -8, 0, 1)
    assert charpoly(make_lollipop(7, 6)) == P(0, -7, 0, 13, 0, -7, 0, 1)
    assert charpoly(make_lollipop(4, 3)) == P(1, -2, -4, 0, 1)


def test_empty_and_trivial_graphs():
    assert charpoly(Graph.from_edges(0, [])) == P(1)
    assert charpoly(Graph.from_edges(1, [])) == P(0, 1)
    assert charpoly(Graph.from_edges(3, [])) == P(0, 0, 0, 1)


def test_disconnected_is_component_product():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (5, 6)])
    expected = charpoly(make_cycle(3)) * charpoly(make_path(2)) ** 2
    assert charpoly(g) == expected


def test_moment_coefficients():
    for n, l in [(7, 3), (12, 6), (20, 13), (30, 8)]:
        g = make_lollipop(n, l)
        p = charpoly(g)
        assert p.degree == n and p.leading == 1
        assert p.coeff(n - 1) == 0
        assert p.coeff(n - 2) == -g.edge_count


def test_three_term_recurrence_identity_exact():
    # phi(L(n,t)) = x*phi(L(n-1,t)) - phi(L(n-2,t)) for 3 <= t <= n-2, n <= 30
    cache = {}

    def lp(n, t):
        if (n, t) not in cache:
            cache[(n, t)] = charpoly(make_lollipop(n, t))
        return cache[(n, t)]

    for n in range(5, 31):
        for t in range(3, n - 1):
            assert lp(n, t) == X * lp(n - 1, t) - lp(n - 2, t), (n, t)


def test_initial_segment_identity():
    # phi(L(t+2,t)) = phi(P_{t+2}) - phi(P_{t-2}) * phi(P_2) - 2 phi(P_2)
    two = IntPolynomial((2,))
    for t in range(3, 21):
        lhs = charpoly(make_lollipop(t + 2, t))
        p2 = charpoly(make_path(2))
        rhs = charpoly(make_path(t + 2)) - charpoly(make_path(t - 2)) * p2 - two * p2
        assert lhs == rhs, t


def test_bipartite_sign_structure():
    cases = [make_path(n) for n in range(1, 12)]
    cases += [make_cycle(n) for n in range(4, 13, 2)]
    cases += [make_lollipop(n, l) for l in (4, 6, 8) for n in range(l, l + 5)]
    for g in cases:
        bs = charpoly(g).bipartite_b_coeffs()
        assert all(b >= 0 for b in bs)


def test_reference_agreement_on_cycles():
    for n in range(3, 13):
        assert charpoly(make_cycle(n)) == charpoly_reference(make_cycle(n))


def test_reference_agreement_exhaustive(unicyclic_by_order):
    for n, items in unicyclic_by_order.items():
        for _, g in items:
            assert charpoly(g) == charpoly_reference(g)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(small_graphs())
@settings(max_examples=80)
def test_reference_agreement_random(g):
    assert charpoly(g) == charpoly_reference(g)


def test_reference_rejects_oversized():
    with pytest.raises(ValueError):
        charpoly_reference(Graph.from_edges(65, []))


# -- matchings ----------------------------------------------------------------


def test_matching_counts_trivial():
    assert matching_count(make_path(4), 1) == 3
    assert matching_count(make_path(4), 2) == 1
    assert matching_count(make_path(5), 2) == 3
    assert matching_count(make_path(5), 0) == 1
    assert matching_count(make_path(5), 3) == 0


def test_matching_count_rejects_non_forest():
    with pytest.raises(ValueError):
        matching_count(make_cycle(4), 1)


@st.composite
def forests(draw):
    n = draw(st.integers(1, 9))
    edges = []
    for v in range(1, n):
        if draw(st.booleans()):
            edges.append((draw(st.integers(0, v - 1)), v))
    return Graph.from_edges(n, edges)


@given(forests())
def test_matchings_against_brute_force(g):
    for k in range(0, g.n // 2 + 1):
        assert matching_count(g, k) == matchings_brute(g.n, g.edges, k)


@given(forests())
def test_tree_coefficients_count_matchings(g):
    p = charpoly(g)
    n = g.n
    for k in range(0, n // 2 + 1):
        assert matching_count(g, k) == (-1) ** k * p.coeff(n - 2 * k)
