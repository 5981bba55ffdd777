from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ucenergy.polynomials import (
    IntPolynomial,
    cauchy_bound,
    count_real_roots,
    poly_div_exact,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=9)


def P(*ascending):
    return IntPolynomial.from_coeffs(ascending)


def test_normalisation_and_degree():
    assert P(1, 2, 0).coeffs == (1, 2)
    assert P(0).is_zero
    assert P(0).degree == -1
    assert P(3).degree == 0
    with pytest.raises(ValueError):
        IntPolynomial((1, 0))


@given(coeff_lists, coeff_lists, st.integers(-100, 100))
def test_ring_ops_match_big_integer_evaluation(a, b, x0):
    p, q = P(*a), P(*b)
    assert (p + q)(x0) == p(x0) + q(x0)
    assert (p - q)(x0) == p(x0) - q(x0)
    assert (p * q)(x0) == p(x0) * q(x0)


@given(coeff_lists, st.fractions(max_denominator=40))
def test_sign_at_matches_exact_evaluation(a, x0):
    p = P(*a)
    value = p(Fraction(x0))
    assert p.sign_at(x0) == (value > 0) - (value < 0)


def test_derivative_and_shift():
    p = P(4, 0, -3, 1)  # x^3 - 3x^2 + 4
    assert p.derivative() == P(0, -6, 3)
    assert P(0, 0, 5, 1).shift_down(2) == P(5, 1)
    with pytest.raises(ValueError):
        P(1, 2).shift_down(1)


def test_division_and_gcd():
    a = P(-1, 0, 1)  # x^2 - 1
    b = P(1, 1)      # x + 1
    assert poly_div_exact(a, b) == P(-1, 1)
    with pytest.raises(ValueError):
        poly_div_exact(P(1, 1, 1), b)
    g = poly_gcd(P(-1, 0, 1) * P(2, 1), P(1, 1) * P(2, 1))
    assert g == P(2, 3, 1)  # (x+1)(x+2)


def test_squarefree_decomposition_recovers_multiplicities():
    p = P(-1, 1) ** 3 * P(1, 1) * P(0, 1) ** 2
    factors = {m: f for f, m in squarefree_decomposition(p)}
    assert factors[3] == P(-1, 1)
    assert factors[1] == P(1, 1)
    assert factors[2] == P(0, 1)
    assert squarefree_part(p) == P(0, 1) * P(-1, 1) * P(1, 1)


def test_sturm_counts_known_roots():
    p = P(-2, 0, 1)  # x^2 - 2
    assert count_real_roots(p) == 2
    assert count_real_roots(p, 0, 2) == 1
    assert count_real_roots(p, -2, 0) == 1
    assert count_real_roots(P(1, 0, 1)) == 0  # x^2 + 1
    # repeated roots are counted once
    assert count_real_roots(P(-1, 1) ** 4) == 1


@given(coeff_lists)
def test_count_on_cauchy_interval_equals_count_on_reals(a):
    p = P(*a)
    if p.degree < 1:
        return
    bound = cauchy_bound(p)
    assert count_real_roots(p) == count_real_roots(p, -bound, bound)
    assert count_real_roots(p) == count_real_roots(p, -2 * bound, 2 * bound)


def test_sturm_chain_head_is_squarefree_part():
    p = P(-1, 1) ** 2 * P(1, 1)
    chain = sturm_chain(squarefree_part(p))
    assert chain[0] == squarefree_part(p)
    assert all(
        chain[i].degree > chain[i + 1].degree for i in range(len(chain) - 1)
    )


def test_bipartite_coefficient_accessor():
    # x^6 - 6x^4 + 9x^2 - 4 has b-coefficients 1, 6, 9, 4
    p = P(-4, 0, 9, 0, -6, 0, 1)
    assert p.bipartite_b_coeffs() == (1, 6, 9, 4)
    with pytest.raises(ValueError):
        P(1, 1, 1).bipartite_b_coeffs()
    with pytest.raises(ValueError):
        P(-4, 0, -9, 0, -6, 0, 1).bipartite_b_coeffs()


def test_decimal_string_round_trip():
    p = P(10**40, -3, 0, 7)
    strings = p.to_decimal_strings()
    assert strings[0] == str(10**40)
    assert IntPolynomial.from_decimal_strings(strings) == p


@given(coeff_lists)
def test_isolation_intervals_partition_roots(a):
    from ucenergy.roots import isolate_real_roots

    p = P(*a)
    if p.is_zero or p.degree < 1:
        return
    enclosures = isolate_real_roots(p)
    total = sum(1 for _ in enclosures)
    assert total == count_real_roots(p)
    for first, second in zip(enclosures, enclosures[1:]):
        assert first.hi <= second.lo
