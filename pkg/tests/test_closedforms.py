import math

import pytest

from ucenergy.closedforms import (
    P_POLYS,
    Q_POLYS,
    STANDARD_GRID,
    alpha_beta_gamma_terms,
    check_modulus_forms,
    closed_form_sample,
    dbar_coeffs,
    df_dt_sign_term,
    dtilde_coeffs,
    f_factored,
    f_via_d,
    k_value_exact,
    modulus_sq_exact,
    modulus_sq_p6,
    modulus_sq_pt,
    pq_pair,
    symmetric_grid,
    t3_bound_value,
    zpair,
)

GRID = symmetric_grid(50)
assert 0.0 not in GRID


def test_sample_values_at_origin():
    s = closed_form_sample(0.0, 3, 8)
    assert (s.z1, s.z2) == (1.0, -1.0)
    assert (s.a1, s.a2) == (2.0, 2.0)
    assert (s.b11, s.b12, s.b21, s.b22) == (0.5, 1.0, 0.5, -1.0)


def test_sample_rejects_even_t():
    with pytest.raises(ValueError):
        closed_form_sample(1.0, 4, 8)


def test_z_value_at_two():
    s = closed_form_sample(2.0, 3, 8)
    assert s.z1 == pytest.approx(1.0 + math.sqrt(2.0), rel=1e-15)


def test_z_identities_on_grid():
    for x in GRID:
        z1, z2 = zpair(x)
        assert z1 + z2 == pytest.approx(x, abs=1e-12 * max(1, abs(x)))
        assert z1 * z2 == pytest.approx(-1.0, rel=1e-13)
        assert (z1 * z1 + 1) * (z2 * z2 + 1) == pytest.approx(x * x + 4, rel=1e-12)
        h = 1.0 / (x * x + 4.0)
        assert z1 * z1 / (z1 * z1 + 1) ** 2 == pytest.approx(h, rel=1e-12)
        assert z2 * z2 / (z2 * z2 + 1) ** 2 == pytest.approx(h, rel=1e-12)
        if x > 0:
            assert z1 > 1 and -1 < z2 < 0
        else:
            assert 0 < z1 < 1 and z2 < -1


def test_growth_coefficients_positive_everywhere():
    for x in GRID:
        s = closed_form_sample(x, 5, 9)
        assert s.a1 > 0 and s.a2 > 0, x


def test_modulus_closed_form_examples():
    assert modulus_sq_p6(8, 1.0) == pytest.approx(2304.0, rel=1e-12)
    assert modulus_sq_p6(8, 0.0) == pytest.approx(16.0, rel=1e-12)
    assert modulus_sq_pt(5, 3, 0.0) == pytest.approx(4.0, rel=1e-12)
    with pytest.raises(ValueError):
        modulus_sq_p6(6, 1.0)
    with pytest.raises(ValueError):
        modulus_sq_pt(5, 7, 1.0)
    with pytest.raises(ValueError):
        modulus_sq_pt(5, 4, 1.0)


def test_modulus_forms_match_exact_charpoly():
    rep = check_modulus_forms(8, STANDARD_GRID)
    assert rep.max_rel_dev <= 1e-9
    rep17 = check_modulus_forms(17, STANDARD_GRID)
    assert rep17.max_rel_dev <= 1e-9


def test_odd_order_vanishing_at_origin():
    # odd-order bipartite lollipop has a zero eigenvalue: both routes give 0
    assert modulus_sq_exact(7, 6, 0) == 0
    assert modulus_sq_p6(7, 0.0) == pytest.approx(0.0, abs=1e-12)


def test_pq_pairs():
    assert pq_pair(1, 0.0) == (0.0, 8.0)
    assert pq_pair(3, 0.0) == (0.0, 96.0)
    assert float(P_POLYS[4](1)) == 2328.0
    with pytest.raises(ValueError):
        pq_pair(5, 1.0)


def test_f_factored_values():
    assert f_factored(5, 1.0) == -50320.0
    assert f_factored(3, 1.0) == -41280.0
    assert f_factored(5, 0.0) == 0.0
    with pytest.raises(ValueError):
        f_factored(7, 1.0)


def test_f_assembly_routes_agree():
    for x in GRID:
        for t in (3, 5, 7, 9):
            via_abc = closed_form_sample(x, t, 9).f_val
            via_d = f_via_d(t, x)
            assert via_abc == pytest.approx(via_d, rel=1e-9, abs=1e-9), (x, t)


def test_f5_matches_factored_form():
    for x in GRID:
        assembled = closed_form_sample(x, 5, 9).f_val
        assert assembled == pytest.approx(f_factored(5, x), rel=1e-9, abs=1e-9), x


def test_t3_bound_matches_factored_form():
    for x in GRID:
        assert t3_bound_value(x) == pytest.approx(f_factored(3, x), rel=1e-9, abs=1e-9)


def test_d_sign_pattern():
    for x in GRID:
        d = closed_form_sample(x, 3, 8).d
        if x > 0:
            assert d[1] < 0 and d[3] < 0 and d[2] > 0 and d[4] > 0, x
        else:
            assert d[1] > 0 and d[3] > 0 and d[2] < 0 and d[4] < 0, x


def test_f_decreases_in_t():
    for x in GRID:
        for t in (3, 5, 7, 9):
            assert df_dt_sign_term(t, x) < 0.0, (x, t)


def test_beta_negative_gamma_positive():
    for x in GRID:
        for t in (3, 5, 7, 9, 11):
            s = closed_form_sample(x, t, 9)
            assert s.beta < 0.0, (x, t)
            assert s.gamma > 0.0, (x, t)


def test_subcase_tail_coefficients_negative():
    for x in GRID:
        if x > 0:
            assert all(c < 0 for c in dbar_coeffs(x)), x
        else:
            assert all(c < 0 for c in dtilde_coeffs(x)), x


def test_k_definition_matches_expansion():
    xs = [-10.0, -5.5, -2.0, -0.5, 0.5, 2.0, 5.5, 10.0]
    for n, t in [(17, 3), (17, 5), (19, 7), (21, 9)]:
        for x in xs:
            exact = k_value_exact(n, t, x)
            expanded = closed_form_sample(x, t, n).k_val
            assert expanded == pytest.approx(exact, rel=1e-8), (n, t, x)


def test_k_bounded_by_f_for_odd_n():
    # for odd n >= t the expansion is bounded by its t-anchored value
    for x in (0.5, 1.5, -0.75, -2.0):
        for t in (3, 5, 7):
            f_anchor = closed_form_sample(x, t, 9).f_val
            for n in (t + 2, t + 4, 17, 21):
                if n % 2 == 1 and n >= t:
                    k = closed_form_sample(x, t, n).k_val
                    assert k <= f_anchor + 1e-9 * abs(f_anchor), (x, t, n)


def test_even_order_limit_behaviour():
    # x is kept small enough that the geometric tail z2**(2n) stays above
    # machine epsilon at n = 40, so the strict comparisons are resolvable
    for t in (3, 5):
        for x in (0.25, 0.5, 1.0):
            s = closed_form_sample(x, t, 8)
            limit = (s.b11 ** 2 + s.b12 ** 2) / (s.a1 ** 2)
            ratios = {
                n: modulus_sq_pt(n, t, x) / modulus_sq_p6(n, x)
                for n in range(8, 41, 2)
            }
            assert abs(ratios[40] - limit) < abs(ratios[20] - limit)
            for n, ratio in ratios.items():
                assert math.log(ratio) < math.log(limit), (t, x, n)


# -- radical closed forms of the tail coefficients ---------------------------


def _a12(x):
    s = closed_form_sample(x, 3, 8)
    return s.a1, s.a2


def test_beta2_gamma1_radical_forms():
    odd = lambda x: x**9 + 11 * x**7 + 47 * x**5 + 93 * x**3 + 74 * x
    even = lambda x: 3 * x**8 + 27 * x**6 + 85 * x**4 + 111 * x**2 + 52
    for x in GRID:
        a1, a2 = _a12(x)
        rad = math.sqrt(x * x + 4.0)
        al, be, ga = alpha_beta_gamma_terms(x)
        beta2_closed = (
            -a1 * (x * x + 1) / (x * x + 4) ** 2.5 * (odd(x) + rad * even(x))
        )
        gamma1_closed = (
            a2 * (x * x + 1) / (x * x + 4) ** 2.5 * (-odd(x) + rad * even(x))
        )
        assert be[2] == pytest.approx(beta2_closed, rel=1e-8, abs=1e-10), x
        assert ga[1] == pytest.approx(gamma1_closed, rel=1e-8, abs=1e-10), x
        assert be[2] < 0 and ga[1] > 0


def test_alpha_radical_forms():
    for x in GRID:
        z1, z2 = zpair(x)
        rad = math.sqrt(x * x + 4.0)
        al, _, _ = alpha_beta_gamma_terms(x)
        poly_a = x**8 + 11 * x**6 + 43 * x**4 + 73 * x**2 + 50
        poly_b = x**8 + 9 * x**6 + 27 * x**4 + 33 * x**2 + 12
        alpha0_closed = (
            x * (x * x + 1) ** 2 * poly_a * poly_b / (x * x + 4) ** 2.5
        )
        assert al[0] == pytest.approx(alpha0_closed, rel=1e-8, abs=1e-10), x

        p2, q2 = pq_pair(2, x)
        denom = (
            4096.0
            * (x * x - x * rad + 4.0) ** 2
            * (x * x + x * rad + 4.0) ** 2
            * (x * x + 4.0)
        )
        # (x -+ sqrt(x^2+4))**14 written through the z-pair for accuracy
        alpha1_closed = (
            -((p2 + q2) ** 2)
            * (3 * x * x + 10 + x * rad)
            * (2.0 * z2) ** 14
            * (x * x + 1) ** 2
            / denom
        )
        alpha2_closed = (
            (p2 - q2) ** 2
            * (3 * x * x + 10 - x * rad)
            * (2.0 * z1) ** 14
            * (x * x + 1) ** 2
            / denom
        )
        assert al[1] == pytest.approx(alpha1_closed, rel=1e-7, abs=1e-10), x
        assert al[2] == pytest.approx(alpha2_closed, rel=1e-7, abs=1e-10), x


def test_dbar_dtilde_radical_forms():
    for x in GRID:
        z1, z2 = zpair(x)
        a1, a2 = _a12(x)
        h = 1.0 / (x * x + 4.0)
        p0, q0 = pq_pair(0, x)
        dbar = dbar_coeffs(x)
        dtilde = dtilde_coeffs(x)
        dbar0_closed = (
            -a1 * (x * x + 1)
            / ((z1 * z1 + 1) ** 4 * (z2 * z2 + 1) ** 2)
            * (p0 + q0)
        )
        dbar1_closed = -a1 * a1 * h * (2 * z1 * z1 - z2 * z2 + 4) / (x * x + 4)
        dtilde0_closed = (
            -a2 * (x * x + 1)
            / ((z2 * z2 + 1) ** 4 * (z1 * z1 + 1) ** 2)
            * (p0 - q0)
        )
        dtilde2_closed = -a2 * a2 * h * (2 * z2 * z2 - z1 * z1 + 4) / (x * x + 4)
        assert dbar[0] == pytest.approx(dbar0_closed, rel=1e-8, abs=1e-10), x
        assert dbar[1] == pytest.approx(dbar1_closed, rel=1e-8, abs=1e-10), x
        assert dtilde[0] == pytest.approx(dtilde0_closed, rel=1e-8, abs=1e-10), x
        assert dtilde[2] == pytest.approx(dtilde2_closed, rel=1e-8, abs=1e-10), x
