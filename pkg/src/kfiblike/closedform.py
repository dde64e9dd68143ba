"""Closed (Binet-style) forms for second-order recurrences.

Three evaluators with very different trust levels:

* :func:`binet_closed` -- the exact closed form.  Root quotients of the
  characteristic polynomial x^2 - P x + Q are carried algebraically by the
  Lucas sequence U(P, Q), so x(n) = x1*U(n) - Q*x0*U(n-1) holds in exact
  arithmetic for every second-order recurrence, both carriers.  This is the
  library's ground-truth Binet.
* :func:`binet_float` -- the textbook double-precision root formula,
  C1*r1^n + C2*r2^n.  Useful as a sanity cross-check; accuracy is bounded
  (and tested) at 1e-9 relative for n <= 40, k <= 5.
* :func:`published_binet` -- the coefficients exactly as printed in the
  published Binet formulas for the four transforms (4 and -2k for the
  binomial and k-binomial families; 2k+2 and -2 for the rising and falling
  families).  Evaluated faithfully and *not* assumed correct: the audit
  compares it against ground truth and records where it breaks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .ring import (
    KPoly,
    RingElem,
    add,
    const_like,
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
class QuadChar:
    """Monic characteristic x^2 - P x + Q of a second-order recurrence."""

    P: RingElem
    Q: RingElem

    def __post_init__(self):
        require_same_mode(self.P, self.Q)

    @classmethod
    def from_rec(cls, rec: Order2Rec) -> "QuadChar":
        # x(n+1) = a x(n) + b x(n-1)  <->  x^2 - a x - b
        return cls(P=rec.a, Q=neg(rec.b))

    @property
    def discriminant(self) -> RingElem:
        return sub(mul(self.P, self.P), scale(self.Q, 4))


def lucas_u(P: RingElem, Q: RingElem, n: int) -> RingElem:
    """Lucas sequence of the first kind: U0=0, U1=1, U(n+1) = P*U(n) - Q*U(n-1).

    Equals (r1^n - r2^n)/(r1 - r2) over the roots of x^2 - P x + Q, but stays
    in the exact ring: no radicals, no division.
    """
    require_same_mode(P, Q)
    if n < 0:
        raise ValueError("index must be >= 0")
    u_prev, u_cur = zero_like(P), one_like(P)
    for _ in range(n):
        u_prev, u_cur = u_cur, sub(mul(P, u_cur), mul(Q, u_prev))
    return u_prev


def _lucas_pair(P: RingElem, Q: RingElem, n: int) -> Tuple[RingElem, RingElem]:
    """(U(n-1), U(n)) for n >= 1 in a single pass."""
    u_prev, u_cur = zero_like(P), one_like(P)
    for _ in range(n - 1):
        u_prev, u_cur = u_cur, sub(mul(P, u_cur), mul(Q, u_prev))
    return u_prev, u_cur


def binet_closed(rec: Order2Rec, n: int) -> RingElem:
    """Exact closed-form term: x(n) = x1*U(n) - Q*x0*U(n-1), x(0) = x0.

    n = 0 is special-cased so U(-1) = -1/Q never materialises; the carrier
    stays division free.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return rec.x0
    qc = QuadChar.from_rec(rec)
    u_prev, u_cur = _lucas_pair(qc.P, qc.Q, n)
    return sub(mul(rec.x1, u_cur), mul(qc.Q, mul(rec.x0, u_prev)))


def binet_float(rec: Order2Rec, n: int) -> float:
    """Double-precision Binet value C1*r1^n + C2*r2^n over the real roots.

    Numeric mode only, and only for recurrences with a positive discriminant
    (true of all four transform families for every k >= 1).  Relative error
    against :func:`binet_closed` is within 1e-9 for n <= 40, k <= 5.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if isinstance(rec.a, KPoly):
        raise ValueError("the floating-point Binet path needs a numeric recurrence")
    qc = QuadChar.from_rec(rec)
    disc = qc.discriminant
    if disc <= 0:
        raise ValueError(f"discriminant must be positive, got {disc}")
    sq = math.sqrt(disc)
    r1 = (qc.P + sq) / 2.0
    r2 = (qc.P - sq) / 2.0
    c1 = (rec.x1 - rec.x0 * r2) / (r1 - r2)
    c2 = (rec.x0 * r1 - rec.x1) / (r1 - r2)
    return c1 * r1**n + c2 * r2**n


def published_binet(kind: TransformKind, k: RingElem, n: int) -> RingElem:
    """The printed Binet formula for this transform, evaluated verbatim.

    Coefficient pairs as published: (4, -2k) for the binomial and k-binomial
    transforms, (2k+2, -2) for the rising and falling ones, each over that
    family's own characteristic roots.  Defined for n >= 1 (the formula
    involves U(n-1)).  Returned for comparison against ground truth; two of
    the four disagree with their own initial conditions, which is precisely
    what the audit demonstrates.
    """
    if n < 1:
        raise ValueError("the printed Binet formulas are evaluated for n >= 1 only")
    qc = QuadChar.from_rec(transform_recurrence(kind, k))
    if kind in (TransformKind.BINOMIAL, TransformKind.K_BINOMIAL):
        c1: RingElem = const_like(4, k)
        c2: RingElem = scale(k, -2)
    else:
        c1 = add(scale(k, 2), const_like(2, k))
        c2 = const_like(-2, k)
    u_prev, u_cur = _lucas_pair(qc.P, qc.Q, n)
    return add(mul(c1, u_cur), mul(c2, u_prev))
