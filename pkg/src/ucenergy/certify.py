"""Machine-checkable global-sign certificates for polynomial inequalities.

A certificate for "p keeps sign S on domain D" consists of an exact Sturm
root count of the square-free part of p over D (zero for strict signs)
together with one exactly evaluated sample sign.  Expressions of the shape
a(x) + b(x) * sqrt(x**2 + 4) are certified through one of two reduction
rules, each of which delegates to plain polynomial certificates:

* domination: if b > 0 and a**2 - (x**2+4) b**2 < 0 on D, the radical term
  decides the sign, so a + b*sqrt > 0 and a - b*sqrt < 0 on D;
* same sign: if a and b share a strict sign on D, the sum inherits it.

``run_claim_suite`` certifies the inequality backbone of the lollipop
comparison: positivity of the growth coefficients, the degree-18 inequality
behind the beta/gamma signs, the three radical-pair inequalities driving the
d-coefficient signs, the exact factorisation identity of the fourth pair,
positivity of the factored-bound cofactors for t in {3, 5}, the tail
positivity used in the even-order subcases, and an exact cross-check that
the assembled comparison bound f(5, x) collapses to its factored polynomial
form in the field Q(x)[sqrt(x**2+4)].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .closedforms import (
    F5_DEG12,
    F5_QUARTIC,
    F7,
    F8,
    P_POLYS,
    Q_POLYS,
    T3_DEG12,
    T3_QUADRATIC,
)
from .polynomials import (
    IntPolynomial,
    cauchy_bound,
    q_divmod,
    q_trim,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
    variations_at,
)
from .roots import RootEnclosure, _bisect_once, _isolate_squarefree

DOMAINS = ("R", "R\\{0}", "(0,inf)", "(-inf,0)")
SIGNS = ("positive", "negative", "nonnegative", "nonpositive")

# sqrt(x**2 + 4) squared, the only radical the reduction rules handle.
RADICAL_SQ = IntPolynomial((4, 0, 1))


@dataclass(frozen=True)
class SignCertificate:
    """Evidence that polynomial + radical_part * sqrt(x**2+4) keeps a sign.

    For ``rule == "sturm"`` the evidence is a root count of the square-free
    part on the domain plus one exact sample sign; the stored chain supports
    re-verification by evaluation (the chain's remainder structure itself is
    trusted, everything else is re-checked).  Radical rules carry their two
    sub-certificates instead.
    """

    claim_id: str
    asserted_sign: str
    domain: str
    polynomial: IntPolynomial
    radical_part: Optional[IntPolynomial]
    rule: str
    root_count: int
    bound: Fraction
    sample_point: Fraction
    sample_sign: int
    variation_counts: tuple[tuple[str, int], ...]
    chain: tuple[IntPolynomial, ...]
    sub_certificates: tuple["SignCertificate", ...] = ()


@dataclass(frozen=True)
class Refutation:
    """A witness against the asserted sign: an interval with a sign defect."""

    claim_id: str
    asserted_sign: str
    domain: str
    polynomial: IntPolynomial
    witness_lo: Fraction
    witness_hi: Fraction
    reason: str


def _strict(sign: str) -> bool:
    return sign in ("positive", "negative")


def _sign_target(sign: str) -> int:
    return 1 if sign in ("positive", "nonnegative") else -1


def _sample_candidates(domain: str):
    if domain == "R":
        base = [0, 1, -1, 2, -2, 3, -3]
    elif domain == "R\\{0}":
        base = [1, -1, 2, -2, 3, -3]
    elif domain == "(0,inf)":
        base = [1, 2, Fraction(1, 2), 3, Fraction(1, 3)]
    else:
        base = [-1, -2, Fraction(-1, 2), -3, Fraction(-1, 3)]
    k = 4
    yield from (Fraction(c) for c in base)
    while True:
        yield Fraction(k if domain in ("R", "R\\{0}", "(0,inf)") else -k)
        k += 1


def _in_domain(point: Fraction, domain: str) -> bool:
    if domain == "R":
        return True
    if domain == "R\\{0}":
        return point != 0
    if domain == "(0,inf)":
        return point > 0
    return point < 0


def _domain_count(sf: IntPolynomial, chain, bound: Fraction, domain: str):
    """Distinct roots of the square-free polynomial sf inside the domain."""
    v_lo = variations_at(chain, -bound)
    v_hi = variations_at(chain, bound)
    labels = [("-B", v_lo), ("+B", v_hi)]
    if domain == "R":
        return v_lo - v_hi, labels
    v0 = variations_at(chain, Fraction(0))
    labels.append(("0", v0))
    at_zero = 1 if sf.sign_at(0) == 0 else 0
    if domain == "R\\{0}":
        return v_lo - v_hi - at_zero, labels
    if domain == "(0,inf)":
        return v0 - v_hi, labels
    return v_lo - v0 - at_zero, labels


def _witness_interval(core: IntPolynomial, domain: str) -> tuple[Fraction, Fraction]:
    """An enclosure of some root of ``core`` lying inside the domain."""
    for enc in _isolate_squarefree(core):
        cand = enc
        for _ in range(256):
            mid = (cand.lo + cand.hi) / 2
            if _in_domain(cand.lo, domain) and _in_domain(cand.hi, domain):
                return cand.lo, cand.hi
            cand = _bisect_once(core, cand)
            if cand.lo == cand.hi:
                if _in_domain(cand.lo, domain):
                    return cand.lo, cand.hi
                break
    raise AssertionError("no witness found although the count was positive")


def certify_poly_sign(
    p: IntPolynomial, domain: str, asserted_sign: str, claim_id: str = ""
) -> SignCertificate | Refutation:
    """Certify (or refute) that p keeps ``asserted_sign`` on ``domain``."""
    if domain not in DOMAINS:
        raise ValueError("unknown domain %r" % domain)
    if asserted_sign not in SIGNS:
        raise ValueError("unknown sign %r" % asserted_sign)
    if p.is_zero:
        raise ValueError("zero polynomial has no sign certificate")

    if _strict(asserted_sign):
        core = squarefree_part(p)
    else:
        # weak signs tolerate even-multiplicity touch points
        core = IntPolynomial((1,))
        for f, mult in squarefree_decomposition(p):
            if mult % 2 == 1:
                core = core * f
    if core.degree > 0:
        chain = sturm_chain(core)
        bound = cauchy_bound(core)
        count, labels = _domain_count(core, chain, bound, domain)
    else:
        chain = (core,)
        bound = Fraction(1)
        count, labels = 0, (("-B", 0), ("+B", 0))

    sample = next(
        pt for pt in _sample_candidates(domain) if p.sign_at(pt) != 0
    )
    sample_sign = p.sign_at(sample)

    ok = count == 0 and sample_sign == _sign_target(asserted_sign)
    if ok:
        return SignCertificate(
            claim_id=claim_id,
            asserted_sign=asserted_sign,
            domain=domain,
            polynomial=p,
            radical_part=None,
            rule="sturm",
            root_count=count,
            bound=bound,
            sample_point=sample,
            sample_sign=sample_sign,
            variation_counts=tuple(labels),
            chain=chain,
        )
    if count > 0:
        lo, hi = _witness_interval(core, domain)
        reason = "sign-changing root inside the domain"
    else:
        lo = hi = sample
        reason = "sample sign %d contradicts %s" % (sample_sign, asserted_sign)
    return Refutation(claim_id, asserted_sign, domain, p, lo, hi, reason)


def certify_radical_sign(
    a: IntPolynomial,
    b: IntPolynomial,
    domain: str,
    asserted_sign: str,
    claim_id: str = "",
) -> SignCertificate | Refutation:
    """Certify the sign of a(x) + b(x) * sqrt(x**2 + 4) on a domain.

    Tries the domination rule first (the radical term outweighs a), then the
    same-sign composition rule.  Only strict signs are supported.
    """
    if b.is_zero:
        raise ValueError("radical part must be nonzero; use certify_poly_sign")
    if not _strict(asserted_sign):
        raise ValueError("radical certificates support strict signs only")
    want = _sign_target(asserted_sign)
    b_sign = "positive" if want > 0 else "negative"

    # Rule 1: |a| < sqrt(x^2+4) |b| everywhere on the domain, b decides.
    b_cert = certify_poly_sign(b, domain, b_sign, claim_id + "/radical-part")
    if isinstance(b_cert, SignCertificate):
        norm = a * a - RADICAL_SQ * b * b
        norm_cert = certify_poly_sign(
            norm, domain, "negative", claim_id + "/norm"
        )
        if isinstance(norm_cert, SignCertificate):
            return SignCertificate(
                claim_id=claim_id,
                asserted_sign=asserted_sign,
                domain=domain,
                polynomial=a,
                radical_part=b,
                rule="radical-domination",
                root_count=0,
                bound=max(b_cert.bound, norm_cert.bound),
                sample_point=b_cert.sample_point,
                sample_sign=want,
                variation_counts=(),
                chain=(),
                sub_certificates=(b_cert, norm_cert),
            )

    # Rule 2: a and b share the asserted strict sign.
    a_cert = certify_poly_sign(a, domain, b_sign, claim_id + "/poly-part")
    b_cert2 = certify_poly_sign(b, domain, b_sign, claim_id + "/radical-part")
    if isinstance(a_cert, SignCertificate) and isinstance(b_cert2, SignCertificate):
        return SignCertificate(
            claim_id=claim_id,
            asserted_sign=asserted_sign,
            domain=domain,
            polynomial=a,
            radical_part=b,
            rule="radical-same-sign",
            root_count=0,
            bound=max(a_cert.bound, b_cert2.bound),
            sample_point=a_cert.sample_point,
            sample_sign=want,
            variation_counts=(),
            chain=(),
            sub_certificates=(a_cert, b_cert2),
        )
    return Refutation(
        claim_id,
        asserted_sign,
        domain,
        a,
        Fraction(0),
        Fraction(0),
        "neither radical reduction rule applies",
    )


# ---------------------------------------------------------------------------
# Certificate re-verification and serialisation.
# ---------------------------------------------------------------------------


def verify_certificate(cert: SignCertificate) -> bool:
    """Re-derive the verdict from the stored evidence.

    Chains are only evaluated (variation counts, sample signs, bound versus
    the Cauchy bound); they are not rebuilt.
    """
    if cert.rule == "sturm":
        p = cert.polynomial
        if p.sign_at(cert.sample_point) != cert.sample_sign:
            return False
        if cert.sample_sign != _sign_target(cert.asserted_sign):
            return False
        if not _in_domain(cert.sample_point, cert.domain):
            return False
        if cert.root_count != 0:
            return False
        core = cert.chain[0] if cert.chain else IntPolynomial((1,))
        if core.degree > 0:
            if cert.bound < cauchy_bound(core):
                return False
            stored = dict(cert.variation_counts)
            points = {"-B": -cert.bound, "+B": cert.bound, "0": Fraction(0)}
            for label, stored_count in stored.items():
                if variations_at(cert.chain, points[label]) != stored_count:
                    return False
            count, _ = _domain_count(core, cert.chain, cert.bound, cert.domain)
            if count != cert.root_count:
                return False
        return True
    if cert.rule in ("radical-domination", "radical-same-sign"):
        if len(cert.sub_certificates) != 2 or cert.radical_part is None:
            return False
        first, second = cert.sub_certificates
        if not (verify_certificate(first) and verify_certificate(second)):
            return False
        want = _sign_target(cert.asserted_sign)
        b_sign = "positive" if want > 0 else "negative"
        if cert.rule == "radical-domination":
            norm = (
                cert.polynomial * cert.polynomial
                - RADICAL_SQ * cert.radical_part * cert.radical_part
            )
            return (
                first.polynomial == cert.radical_part
                and first.asserted_sign == b_sign
                and second.polynomial == norm
                and second.asserted_sign == "negative"
            )
        return (
            first.polynomial == cert.polynomial
            and second.polynomial == cert.radical_part
            and first.asserted_sign == b_sign
            and second.asserted_sign == b_sign
        )
    return False


def certificate_to_json(cert: SignCertificate) -> str:
    return json.dumps(_cert_dict(cert), indent=2)


def _cert_dict(cert: SignCertificate) -> dict:
    return {
        "claim_id": cert.claim_id,
        "asserted_sign": cert.asserted_sign,
        "domain": cert.domain,
        "polynomial": cert.polynomial.to_decimal_strings(),
        "radical_part": (
            cert.radical_part.to_decimal_strings() if cert.radical_part else None
        ),
        "rule": cert.rule,
        "root_count": cert.root_count,
        "bound": str(cert.bound),
        "sample_point": str(cert.sample_point),
        "sample_sign": cert.sample_sign,
        "variation_counts": list(list(item) for item in cert.variation_counts),
        "chain": [c.to_decimal_strings() for c in cert.chain],
        "sub_certificates": [_cert_dict(c) for c in cert.sub_certificates],
    }


def certificate_from_json(text: str) -> SignCertificate:
    return _cert_from_dict(json.loads(text))


def _cert_from_dict(data: dict) -> SignCertificate:
    return SignCertificate(
        claim_id=data["claim_id"],
        asserted_sign=data["asserted_sign"],
        domain=data["domain"],
        polynomial=IntPolynomial.from_decimal_strings(data["polynomial"]),
        radical_part=(
            IntPolynomial.from_decimal_strings(data["radical_part"])
            if data["radical_part"]
            else None
        ),
        rule=data["rule"],
        root_count=data["root_count"],
        bound=Fraction(data["bound"]),
        sample_point=Fraction(data["sample_point"]),
        sample_sign=data["sample_sign"],
        variation_counts=tuple(
            (label, count) for label, count in data["variation_counts"]
        ),
        chain=tuple(
            IntPolynomial.from_decimal_strings(c) for c in data["chain"]
        ),
        sub_certificates=tuple(
            _cert_from_dict(c) for c in data["sub_certificates"]
        ),
    )


# ---------------------------------------------------------------------------
# Exact arithmetic in Q(x)[sqrt(x**2+4)] for the cross-assembly identity.
# ---------------------------------------------------------------------------


def _qp_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return q_trim(out)


def _qp_add(a, b):
    out = list(a) if len(a) >= len(b) else list(b)
    small = b if len(a) >= len(b) else a
    for i, c in enumerate(small):
        out[i] += c
    return q_trim(out)


def _qp_neg(a):
    return [-c for c in a]


def _qp_gcd(a, b):
    a, b = q_trim(list(a)), q_trim(list(b))
    while b:
        a, b = b, q_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _qp_div(a, b):
    quo, rem = q_divmod(list(a), list(b))
    if q_trim(list(rem)):
        raise ValueError("inexact rational-polynomial division")
    return quo


class RationalFunc:
    """Reduced fraction of Fraction-coefficient polynomials, monic bottom."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce: bool = True):
        num = q_trim([Fraction(c) for c in num])
        den = q_trim([Fraction(c) for c in (den if den is not None else [1])])
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and num:
            g = _qp_gcd(num, den)
            if len(g) > 1:
                num = _qp_div(num, g)
                den = _qp_div(den, g)
        if not num:
            den = [Fraction(1)]
        else:
            lead = den[-1]
            if lead != 1:
                num = [c / lead for c in num]
                den = [c / lead for c in den]
        self.num = tuple(num)
        self.den = tuple(den)

    @classmethod
    def from_int_poly(cls, p: IntPolynomial) -> "RationalFunc":
        return cls([Fraction(c) for c in p.coeffs])

    @property
    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other):
        return RationalFunc(
            _qp_add(_qp_mul(self.num, other.den), _qp_mul(other.num, self.den)),
            _qp_mul(self.den, other.den),
        )

    def __sub__(self, other):
        return RationalFunc(
            _qp_add(_qp_mul(self.num, other.den), _qp_neg(_qp_mul(other.num, self.den))),
            _qp_mul(self.den, other.den),
        )

    def __mul__(self, other):
        return RationalFunc(_qp_mul(self.num, other.num), _qp_mul(self.den, other.den))

    def __truediv__(self, other):
        if other.is_zero:
            raise ZeroDivisionError
        return RationalFunc(_qp_mul(self.num, other.den), _qp_mul(self.den, other.num))

    def __neg__(self):
        return RationalFunc(_qp_neg(list(self.num)), list(self.den), reduce=False)

    def __eq__(self, other):
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))


def _rf_const(c) -> RationalFunc:
    return RationalFunc([Fraction(c)])


class SqrtExtension:
    """Element u + v * s of Q(x)[s] with s**2 = x**2 + 4."""

    __slots__ = ("u", "v")

    _D = RationalFunc([Fraction(4), Fraction(0), Fraction(1)])

    def __init__(self, u: RationalFunc, v: RationalFunc):
        self.u = u
        self.v = v

    @classmethod
    def from_poly(cls, p: IntPolynomial) -> "SqrtExtension":
        return cls(RationalFunc.from_int_poly(p), _rf_const(0))

    @classmethod
    def constant(cls, c) -> "SqrtExtension":
        return cls(_rf_const(c), _rf_const(0))

    def __add__(self, other):
        return SqrtExtension(self.u + other.u, self.v + other.v)

    def __sub__(self, other):
        return SqrtExtension(self.u - other.u, self.v - other.v)

    def __mul__(self, other):
        return SqrtExtension(
            self.u * other.u + self._D * self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    def __neg__(self):
        return SqrtExtension(-self.u, -self.v)

    def inverse(self) -> "SqrtExtension":
        norm = self.u * self.u - self._D * self.v * self.v
        if norm.is_zero:
            raise ZeroDivisionError("non-invertible extension element")
        return SqrtExtension(self.u / norm, -(self.v / norm))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k: int) -> "SqrtExtension":
        result = SqrtExtension.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def assembled_f5_exact() -> tuple[RationalFunc, RationalFunc]:
    """(rational part, radical part) of the assembled bound f(5, x)."""
    x = SqrtExtension(RationalFunc([0, 1]), _rf_const(0))
    s = SqrtExtension(_rf_const(0), _rf_const(1))
    half = SqrtExtension.constant(Fraction(1, 2))
    one = SqrtExtension.constant(1)
    two = SqrtExtension.constant(2)

    z1 = (x + s) * half
    z2 = (x - s) * half
    f8 = SqrtExtension.from_poly(F8)
    f7 = SqrtExtension.from_poly(F7)
    a1 = -((z1 * f8 + f7) / (z1 * z1 + one)) * z2 ** 7
    a2 = -((z2 * f8 + f7) / (z2 * z2 + one)) * z1 ** 7

    h = SqrtExtension.from_poly(RADICAL_SQ).inverse()
    t = 5
    z1sq, z2sq = z1 * z1, z2 * z2
    b11 = z1sq * (z1sq + two) / ((z1sq + one) ** 2) - z2 ** (2 * t - 2) * h
    b12 = -(two * z2 ** (t - 2)) / (z1sq + one)
    b21 = z2sq * (z2sq + two) / ((z2sq + one) ** 2) - z1 ** (2 * t - 2) * h
    b22 = -(two * z1 ** (t - 2)) / (z2sq + one)

    b1sq = b11 * b11 + b12 * b12
    b2sq = b21 * b21 + b22 * b22
    bcross = b11 * b21 + b12 * b22
    alpha = a2 * a2 * b1sq - a1 * a1 * b2sq
    beta = two * (a1 * a1 * bcross - a1 * a2 * b1sq)
    gamma = two * (a1 * a2 * b2sq - a2 * a2 * bcross)

    z1_4 = z1sq * z1sq
    z2_4 = z2sq * z2sq
    f5 = (
        alpha * (z1_4 - z2_4)
        + beta * z1 ** (2 * t) * (z1_4 - one)
        + gamma * z2 ** (2 * t) * (one - z2_4)
    )
    return f5.u, f5.v


def f5_factored_poly() -> IntPolynomial:
    """The factored polynomial form of f(5, x)."""
    x2p1 = IntPolynomial((1, 0, 1))
    return -1 * IntPolynomial((0, 0, 1)) * x2p1 * x2p1 * F5_QUARTIC * F5_DEG12


# ---------------------------------------------------------------------------
# The claim suite.
# ---------------------------------------------------------------------------

# degree-18 inequality deciding the beta_2 / gamma_1 signs
BETA2_ODD = IntPolynomial.from_coeffs([0, 74, 0, 93, 0, 47, 0, 11, 0, 1])
BETA2_EVEN = IntPolynomial.from_coeffs([52, 0, 111, 0, 85, 0, 27, 0, 3])
A_POSITIVITY = IntPolynomial.from_coeffs([16, 0, 51, 0, 62, 0, 36, 0, 10, 0, 1])
C4_COFACTOR = IntPolynomial.from_coeffs([121, 0, 248, 0, 225, 0, 104, 0, 24, 0, 2])


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    description: str
    ok: bool
    evidence: str
    root_counts: tuple[tuple[str, int], ...]
    grid_points: int
    grid_ok: bool
    detail: str = ""
    certificates: tuple[SignCertificate, ...] = ()
    refutations: tuple[Refutation, ...] = ()


@dataclass(frozen=True)
class ClaimSuiteReport:
    results: tuple[ClaimResult, ...]

    @property
    def all_ok(self) -> bool:
        return all(r.ok for r in self.results)

    def result(self, claim_id: str) -> ClaimResult:
        for r in self.results:
            if r.claim_id == claim_id:
                return r
        raise KeyError(claim_id)


def _grid_check(
    p: IntPolynomial, domain: str, sign: str, points: int = 1000
) -> tuple[int, bool]:
    """Dense rational grid on [-10, 10]; returns (checked, consistent)."""
    want = _sign_target(sign)
    denom = max(points // 20, 1)  # spreads the grid over [-10, 10]
    checked = 0
    for k in range(-(points // 2), points // 2 + 1):
        x = Fraction(k, denom)
        if not _in_domain(x, domain):
            continue
        s = p.sign_at(x)
        checked += 1
        if _strict(sign):
            if s != want:
                return checked, False
        elif s not in (0, want):
            return checked, False
    return checked, True


def _poly_claim(
    claim_id: str,
    description: str,
    p: IntPolynomial,
    domain: str,
    sign: str,
) -> ClaimResult:
    outcome = certify_poly_sign(p, domain, sign, claim_id)
    grid_points, grid_ok = _grid_check(p, domain, sign)
    if isinstance(outcome, SignCertificate):
        return ClaimResult(
            claim_id,
            description,
            ok=grid_ok,
            evidence="sturm-certificate",
            root_counts=((domain, outcome.root_count),),
            grid_points=grid_points,
            grid_ok=grid_ok,
            detail="sample p(%s) sign %+d" % (outcome.sample_point, outcome.sample_sign),
            certificates=(outcome,),
        )
    return ClaimResult(
        claim_id,
        description,
        ok=False,
        evidence="refuted",
        root_counts=(),
        grid_points=grid_points,
        grid_ok=grid_ok,
        detail=outcome.reason,
        refutations=(outcome,),
    )


def run_claim_suite(pq_polys=None) -> ClaimSuiteReport:
    """Certify every polynomial inequality the comparison argument rests on.

    ``pq_polys`` may override the (p_i, q_i) table (used by tamper tests);
    it maps index -> (p, q_polynomial_factor).
    """
    if pq_polys is None:
        pq_polys = {i: (P_POLYS[i], Q_POLYS[i]) for i in P_POLYS}
    results: list[ClaimResult] = []

    results.append(
        _poly_claim(
            "C1",
            "growth coefficients positive: x^10+10x^8+36x^6+62x^4+51x^2+16 > 0",
            A_POSITIVITY,
            "R",
            "positive",
        )
    )

    eq1 = BETA2_ODD * BETA2_ODD - RADICAL_SQ * BETA2_EVEN * BETA2_EVEN
    results.append(
        _poly_claim(
            "C2",
            "degree-18 radical norm negative (beta_2 < 0, gamma_1 > 0)",
            eq1,
            "R",
            "negative",
        )
    )

    for i in (1, 2, 3):
        p, q = pq_polys[i]
        results.append(
            _poly_claim(
                "C3/%d" % i,
                "pair %d radical norm negative: p_%d^2 - (x^2+4) q_%d^2 < 0" % (i, i, i),
                p * p - RADICAL_SQ * q * q,
                "R",
                "negative",
            )
        )

    # C4: exact factorisation identity plus positivity of the cofactor.
    p4, q4 = pq_polys[4]
    lhs = p4 * p4 - RADICAL_SQ * q4 * q4
    rhs = 4 * (IntPolynomial((1, 0, 1)) ** 2) * C4_COFACTOR
    identity_ok = lhs == rhs
    cof = _poly_claim(
        "C4",
        "fourth pair factors exactly and stays positive",
        C4_COFACTOR,
        "R",
        "positive",
    )
    results.append(
        ClaimResult(
            "C4",
            cof.description,
            ok=identity_ok and cof.ok,
            evidence="exact-identity+sturm" if identity_ok else "identity-failed",
            root_counts=cof.root_counts,
            grid_points=cof.grid_points,
            grid_ok=cof.grid_ok,
            detail="identity %s; lhs(1) = %d" % (identity_ok, lhs(1)),
            certificates=cof.certificates,
            refutations=cof.refutations,
        )
    )

    for claim_id, desc, poly in (
        ("C5/quartic", "f(5,x) quartic cofactor positive", F5_QUARTIC),
        ("C5/deg12", "f(5,x) degree-12 cofactor positive", F5_DEG12),
        ("C6/quadratic", "t=3 bound quadratic cofactor positive", T3_QUADRATIC),
        ("C6/deg12", "t=3 bound degree-12 cofactor positive", T3_DEG12),
    ):
        results.append(_poly_claim(claim_id, desc, poly, "R", "positive"))

    # C7: tail positivity for the even-order subcases through the radical rule.
    p0, q0 = pq_polys[0]
    for claim_id, desc, a, b, domain in (
        ("C7/pos", "p_0 + q_0 > 0 on (0,inf)", p0, q0, "(0,inf)"),
        ("C7/neg", "p_0 - q_0 > 0 on (-inf,0)", p0, -1 * q0, "(-inf,0)"),
    ):
        outcome = certify_radical_sign(a, b, domain, "positive", claim_id)
        grid_ok = True
        if isinstance(outcome, SignCertificate):
            results.append(
                ClaimResult(
                    claim_id,
                    desc,
                    ok=True,
                    evidence=outcome.rule,
                    root_counts=tuple(
                        (c.claim_id, c.root_count) for c in outcome.sub_certificates
                    ),
                    grid_points=0,
                    grid_ok=grid_ok,
                    certificates=(outcome,),
                )
            )
        else:
            results.append(
                ClaimResult(
                    claim_id,
                    desc,
                    ok=False,
                    evidence="refuted",
                    root_counts=(),
                    grid_points=0,
                    grid_ok=False,
                    detail=outcome.reason,
                    refutations=(outcome,),
                )
            )

    # C8: assembled f(5, x) equals its factored polynomial form, exactly.
    rational_part, radical_part = assembled_f5_exact()
    expected = RationalFunc.from_int_poly(f5_factored_poly())
    exact_ok = radical_part.is_zero and rational_part == expected
    grid_points, grid_ok = _c8_grid()
    results.append(
        ClaimResult(
            "C8",
            "assembled f(5,x) identical to the factored polynomial",
            ok=exact_ok and grid_ok,
            evidence="exact-identity+grid" if exact_ok else "grid-only",
            root_counts=(),
            grid_points=grid_points,
            grid_ok=grid_ok,
            detail="radical part zero: %s" % radical_part.is_zero,
        )
    )

    return ClaimSuiteReport(tuple(results))


def _c8_grid(points: int = 200, rel_tol: float = 1e-9) -> tuple[int, bool]:
    from .closedforms import closed_form_sample, f_factored

    checked = 0
    for k in range(-points // 2, points // 2 + 1):
        x = 10.0 * k / (points // 2)
        assembled = closed_form_sample(x, 5, 9).f_val
        factored = f_factored(5, x)
        checked += 1
        if abs(assembled - factored) > rel_tol * max(1.0, abs(factored)):
            return checked, False
    return checked, True
