"""Rational generating functions for second-order recurrences.

A generating function here is a pair of polynomials in the formal variable x
whose coefficients are ring elements (ints, or polynomials in k).  For the
recurrence x(n+1) = a x(n) + b x(n-1) the construction is

    den = 1 - a x - b x^2,      num = x0 + (x1 - a x0) x,

and the series falls out of the convolution recurrence coefficient by
coefficient -- no polynomial long division, no partial fractions.

GFs are kept unreduced; equality is decided by the cross-multiplied
polynomial identity num1*den2 == num2*den1, which is exact and needs no gcd
machinery.  :func:`published_gf` reproduces the printed generating functions
for the four transforms verbatim so the audit can compare them against the
derivation-built ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .ring import (
    KPoly,
    RingElem,
    add,
    const_like,
    elem_is_zero,
    ipow,
    mul,
    neg,
    one_like,
    require_same_mode,
    scale,
    sub,
    zero_like,
)
from .sequences import Order2Rec
from .transforms import TransformKind, transform_recurrence


@dataclass(frozen=True)
class XPoly:
    """Polynomial in the formal variable x with RingElem coefficients.

    Canonical: no trailing zero coefficient; all coefficients share a mode.
    Build through :func:`xpoly`, which normalises.
    """

    coeffs: Tuple[RingElem, ...]

    def __post_init__(self):
        if self.coeffs:
            require_same_mode(*self.coeffs)
            if elem_is_zero(self.coeffs[-1]):
                raise ValueError("XPoly must be canonical (no trailing zero); use xpoly()")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> RingElem:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return zero_like(self.coeffs[0]) if self.coeffs else 0

    def __add__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return xpoly(out)

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly(())
        zero = zero_like(self.coeffs[0])
        out: List[RingElem] = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = add(out[i + j], mul(a, b))
        return xpoly(out)


def xpoly(coeffs: Sequence[RingElem]) -> XPoly:
    """Canonicalise a coefficient sequence (ascending powers of x)."""
    cs = list(coeffs)
    while cs and elem_is_zero(cs[-1]):
        cs.pop()
    return XPoly(tuple(cs))


@dataclass(frozen=True)
class RationalGF:
    """num/den with den(0) = 1, so the power series is well-defined exactly."""

    num: XPoly
    den: XPoly

    def __post_init__(self):
        if not self.den.coeffs:
            raise ValueError("denominator must be nonzero")
        c0 = self.den.coeffs[0]
        if c0 != one_like(c0):
            raise ValueError("denominator constant term must be 1")
        require_same_mode(*(self.num.coeffs + self.den.coeffs))


def gf_from_rec(rec: Order2Rec) -> RationalGF:
    """Generating function of a recurrence: (x0 + (x1 - a x0) x) / (1 - a x - b x^2)."""
    num = xpoly([rec.x0, sub(rec.x1, mul(rec.a, rec.x0))])
    den = xpoly([one_like(rec.a), neg(rec.a), neg(rec.b)])
    return RationalGF(num=num, den=den)


def gf_expand(gf: RationalGF, count: int) -> List[RingElem]:
    """First ``count`` series coefficients via the convolution recurrence.

    c(n) = num(n) - sum_{j>=1} den(j) * c(n-j); streaming, O(deg den) ring
    products per coefficient.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    zero = zero_like(gf.den.coeffs[0])
    out: List[RingElem] = []
    dcs = gf.den.coeffs
    for n in range(count):
        c = gf.num.coefficient(n)
        if elem_is_zero(c):
            c = zero
        for j in range(1, len(dcs)):
            if n - j >= 0:
                c = sub(c, mul(dcs[j], out[n - j]))
        out.append(c)
    return out


def gf_equal(g1: RationalGF, g2: RationalGF) -> bool:
    """Equality of unreduced GFs by cross multiplication: n1*d2 == n2*d1."""
    return (g1.num * g2.den).coeffs == (g2.num * g1.den).coeffs


def published_gf(kind: TransformKind, k: RingElem) -> RationalGF:
    """The printed generating function for this transform, transcribed verbatim.

    The binomial one is printed with numerator 2(1-2kx); its own derivation
    gives 2-2kx, and the audit records the resulting series divergence rather
    than silently repairing it.  The other three match their derivations.
    """
    two = const_like(2, k)
    one = one_like(k)
    ksq = mul(k, k)
    if kind is TransformKind.BINOMIAL:
        num = xpoly([two, scale(k, -4)])
        den = xpoly([one, neg(add(k, two)), k])
    elif kind is TransformKind.K_BINOMIAL:
        num = xpoly([two, scale(ksq, -2)])
        den = xpoly([one, neg(mul(k, add(k, two))), ipow(k, 3)])
    elif kind is TransformKind.RISING_K:
        num = xpoly([two, sub(scale(k, 2), add(scale(ksq, 2), two))])
        den = xpoly([one, neg(add(ksq, two)), one])
    else:
        num = xpoly([two, sub(two, scale(k, 4))])
        den = xpoly([one, scale(k, -3), sub(scale(ksq, 2), one)])
    return RationalGF(num=num, den=den)


def derived_gf(kind: TransformKind, k: RingElem) -> RationalGF:
    """The GF constructed from the transform's recurrence (the trusted side)."""
    return gf_from_rec(transform_recurrence(kind, k))


# ---------------------------------------------------------------------------
# text rendering (shared by the CLI and the demo scripts)
# ---------------------------------------------------------------------------

def _coeff_text(c: RingElem, x_degree: int) -> Tuple[bool, str]:
    """(is_negative, body) for one term; body excludes sign and includes x part."""
    if isinstance(c, KPoly):
        lead = c.coeffs[-1]
        negative = lead < 0
        body_poly = -c if negative else c
        if len([v for v in body_poly.coeffs if v]) > 1:
            text = f"({body_poly})"
        else:
            text = str(body_poly)
    else:
        negative = c < 0
        text = str(-c if negative else c)
    if x_degree >= 1:
        if text == "1":
            text = ""
        xpart = "x" if x_degree == 1 else f"x^{x_degree}"
        text += xpart
    return negative, text


def xpoly_str(p: XPoly) -> str:
    """Ascending-power text like ``2 - (2k^2-2k+2)x`` or ``1 - 4x + 2x^2``."""
    if not p.coeffs:
        return "0"
    parts: List[str] = []
    for d, c in enumerate(p.coeffs):
        if elem_is_zero(c):
            continue
        negative, body = _coeff_text(c, d)
        if not parts:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts) if parts else "0"


def gf_str(gf: RationalGF) -> str:
    return f"({xpoly_str(gf.num)}) / ({xpoly_str(gf.den)})"
