from fractions import Fraction

import pytest

from ucenergy.charpoly import charpoly
from ucenergy.graphs import make_cycle, make_lollipop
from ucenergy.polynomials import IntPolynomial
from ucenergy.roots import (
    energy_of_poly,
    isolate_real_roots,
    refine_enclosure,
)


def P(*ascending):
    return IntPolynomial.from_coeffs(ascending)


def test_isolates_pm_one():
    enclosures = isolate_real_roots(P(-1, 0, 1))
    assert len(enclosures) == 2
    assert enclosures[0].lo < -1 < enclosures[0].hi or enclosures[0].lo == enclosures[0].hi == -1
    assert all(e.multiplicity == 1 for e in enclosures)


def test_isolates_c4_spectrum_with_multiplicity():
    enclosures = isolate_real_roots(charpoly(make_cycle(4)))
    assert len(enclosures) == 3
    spots = []
    for e in enclosures:
        factor = P(-4, 0, 1) if e.multiplicity == 1 else P(0, 1)
        refined = refine_enclosure(factor, e, Fraction(1, 10**6))
        spots.append((round(float(refined.midpoint), 5), e.multiplicity))
    assert sorted(spots) == [(-2.0, 1), (0.0, 2), (2.0, 1)]


def test_bipartite_spectrum_symmetry():
    p = charpoly(make_lollipop(8, 6))
    enclosures = isolate_real_roots(p)
    assert len(enclosures) == 8
    tight = [
        refine_enclosure(p, e, Fraction(1, 10**9)) for e in enclosures
    ]
    values = sorted(float(e.midpoint) for e in tight)
    for lo_val, hi_val in zip(values, reversed(values)):
        assert abs(lo_val + hi_val) < 1e-8


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        isolate_real_roots(IntPolynomial(()))
    with pytest.raises(ValueError):
        energy_of_poly(IntPolynomial(()))


def test_energy_values_and_radius_guarantee():
    e = energy_of_poly(charpoly(make_cycle(4)), 1e-9)
    assert abs(e.value - 4.0) <= e.radius
    assert e.radius <= 1e-9
    e7 = energy_of_poly(charpoly(make_cycle(7)), 1e-7)
    assert round(e7.value, 5) == 8.98792
    e76 = energy_of_poly(charpoly(make_lollipop(7, 6)), 1e-7)
    assert round(e76.value, 5) == 8.72057


def test_energy_rejects_complex_spectra():
    # x^2 + 1 has no real roots
    with pytest.raises(ValueError):
        energy_of_poly(P(1, 0, 1))


def test_energy_handles_zero_roots_exactly():
    # x^3 (x^2 - 9): energy 6 with a triple zero root
    p = P(0, 0, 0, -9, 0, 1)
    e = energy_of_poly(p, 1e-10)
    assert abs(e.value - 6.0) <= e.radius <= 1e-10
