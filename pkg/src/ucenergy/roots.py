"""Real-root isolation and graph energy from exact root enclosures.

Roots are isolated by Sturm counting on the square-free factors (Yun
decomposition supplies multiplicities) and then refined by sign bisection.
All interval arithmetic is over exact rationals, so the reported energy
carries a rigorous error radius.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import (
    IntPolynomial,
    cauchy_bound,
    squarefree_decomposition,
    sturm_chain,
    variations_at,
)

_MAX_BISECTIONS = 4096


class ConvergenceError(RuntimeError):
    """A numeric routine failed to meet its tolerance within its budget."""


@dataclass(frozen=True)
class RootEnclosure:
    """Isolating interval [lo, hi] for one real root of a given multiplicity.

    Point enclosures (lo == hi) mark exact rational roots.  For open
    enclosures the associated square-free factor changes sign across the
    interval and has no root at either endpoint.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains_zero(self) -> bool:
        return self.lo < 0 < self.hi or self.lo == 0 == self.hi


@dataclass(frozen=True)
class EnergyValue:
    """Midpoint/radius pair; the true value lies within value +- radius."""

    value: float
    radius: float


def isolate_real_roots(p: IntPolynomial) -> list[RootEnclosure]:
    """Disjoint isolating intervals for every distinct real root of p."""
    if p.is_zero:
        raise ValueError("zero polynomial has no isolated roots")
    if p.degree == 0:
        return []
    enclosures: list[tuple[RootEnclosure, IntPolynomial]] = []
    for factor, mult in squarefree_decomposition(p):
        for enc in _isolate_squarefree(factor):
            enclosures.append(
                (RootEnclosure(enc.lo, enc.hi, mult), factor)
            )
    enclosures.sort(key=lambda pair: (pair[0].lo, pair[0].hi))
    _make_disjoint(enclosures)
    return [enc for enc, _ in enclosures]


def _isolate_squarefree(f: IntPolynomial) -> list[RootEnclosure]:
    if f.degree == 0:
        return []
    chain = sturm_chain(f)
    bound = cauchy_bound(f)
    out: list[RootEnclosure] = []
    total = variations_at(chain, -bound) - variations_at(chain, bound)
    stack = [(-bound, bound, total)]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            out.append(RootEnclosure(lo, hi, 1))
            continue
        mid = _nonroot_split(f, lo, hi)
        if mid is None:  # f has finitely many roots, so the grid search wins
            raise AssertionError("no root-free split point found")
        left = variations_at(chain, lo) - variations_at(chain, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, count - left))
    out.sort(key=lambda e: e.lo)
    return out


def _nonroot_split(f: IntPolynomial, lo: Fraction, hi: Fraction):
    """A point strictly inside (lo, hi) that is not a root of f."""
    span = hi - lo
    for denom_pow in range(1, 32):
        step = span / (1 << denom_pow)
        point = lo + step
        while point < hi:
            if f.sign_at(point) != 0:
                return point
            point += step
    return None


def _make_disjoint(pairs: list[tuple[RootEnclosure, IntPolynomial]]) -> None:
    """Shrink neighbouring enclosures from different factors until disjoint."""
    changed = True
    while changed:
        changed = False
        for i in range(len(pairs) - 1):
            a, fa = pairs[i]
            b, fb = pairs[i + 1]
            if a.hi > b.lo:
                pairs[i] = (_bisect_once(fa, a), fa)
                pairs[i + 1] = (_bisect_once(fb, b), fb)
                changed = True
        if changed:
            pairs.sort(key=lambda pair: (pair[0].lo, pair[0].hi))


def _bisect_once(f: IntPolynomial, enc: RootEnclosure) -> RootEnclosure:
    if enc.lo == enc.hi:
        return enc
    mid = enc.midpoint
    s = f.sign_at(mid)
    if s == 0:
        return RootEnclosure(mid, mid, enc.multiplicity)
    if s == f.sign_at(enc.lo):
        return RootEnclosure(mid, enc.hi, enc.multiplicity)
    return RootEnclosure(enc.lo, mid, enc.multiplicity)


def refine_enclosure(
    f: IntPolynomial, enc: RootEnclosure, width: Fraction
) -> RootEnclosure:
    """Bisect until the enclosure is narrower than ``width``."""
    steps = 0
    while enc.width > width:
        enc = _bisect_once(f, enc)
        steps += 1
        if steps > _MAX_BISECTIONS:
            raise ConvergenceError("bisection budget exhausted")
    return enc


def energy_of_poly(p: IntPolynomial, tol: float = 1e-7) -> EnergyValue:
    """Sum of multiplicity-weighted absolute root values, radius <= tol.

    Requires every root of p to be real, which holds for characteristic
    polynomials of symmetric matrices; a complex pair raises ValueError.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.is_zero:
        raise ValueError("zero polynomial")
    zero_mult = p.lowest_power()
    core = p.shift_down(zero_mult)
    budget = Fraction(tol) / (2 * (p.degree + 1))
    total_mult = zero_mult
    value = Fraction(0)
    radius = Fraction(0)
    if core.degree > 0:
        for factor, mult in squarefree_decomposition(core):
            for enc in _isolate_squarefree(factor):
                enc = refine_enclosure(factor, enc, budget)
                while enc.contains_zero() and enc.lo != enc.hi:
                    enc = _bisect_once(factor, enc)
                total_mult += mult
                value += mult * abs(enc.midpoint)
                radius += mult * enc.width / 2
    if total_mult != core.degree + zero_mult:
        raise ValueError(
            "polynomial has complex roots (%d real of degree %d)"
            % (total_mult, p.degree)
        )
    val = float(value)
    rad = float(radius) + abs(val) * 2.0 ** -50
    return EnergyValue(val, rad)
