"""Second-order linear recurrences and the two sequence families under study.

The modified k-Fibonacci-like sequence M and the k-Fibonacci sequence F share
the recurrence x(n+1) = k*x(n) + x(n-1); they differ only in initial values
(M starts 2, 2 while F starts 0, 1).  Everything downstream (transforms,
closed forms, generating functions) is expressed over :class:`Order2Rec`, so
the four transform recurrences reuse the same machinery.

``terms``/``iter_terms`` are the deliberately simple ground truth.  The
logarithmic companion-matrix path lives in :func:`term_fast` and is never used
implicitly, so cross-checks against it stay meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Iterator, List

from .ring import (
    RingElem,
    add,
    const_like,
    exact_div_int,
    mul,
    one_like,
    require_same_mode,
    scale,
    sub,
    zero_like,
)


@dataclass(frozen=True)
class Order2Rec:
    """The recurrence x(n+1) = a*x(n) + b*x(n-1) with initial values x0, x1.

    All four coefficients must live in one mode (all int or all KPoly).
    """

    a: RingElem
    b: RingElem
    x0: RingElem
    x1: RingElem
    label: str = field(default="", compare=False)

    def __post_init__(self):
        require_same_mode(self.a, self.b, self.x0, self.x1)


def _require_valid_k(k: RingElem) -> None:
    if isinstance(k, int) and k < 1:
        raise ValueError(f"numeric k must be >= 1, got {k}")


def modified_k_fib(k: RingElem) -> Order2Rec:
    """The modified k-Fibonacci-like sequence: x(n+1) = k*x(n) + x(n-1), 2, 2."""
    _require_valid_k(k)
    two = const_like(2, k)
    return Order2Rec(a=k, b=one_like(k), x0=two, x1=two, label=f"M(k={k})")


def k_fib(k: RingElem) -> Order2Rec:
    """The k-Fibonacci sequence: same recurrence with x0 = 0, x1 = 1."""
    _require_valid_k(k)
    return Order2Rec(a=k, b=one_like(k), x0=zero_like(k), x1=one_like(k), label=f"F(k={k})")


def iter_terms(rec: Order2Rec) -> Iterator[RingElem]:
    """Yield x0, x1, x2, ... forever with O(1) memory."""
    prev, cur = rec.x0, rec.x1
    yield prev
    yield cur
    while True:
        prev, cur = cur, add(mul(rec.a, cur), mul(rec.b, prev))
        yield cur


def terms(rec: Order2Rec, count: int) -> List[RingElem]:
    """First ``count`` terms x0 .. x(count-1); count 0 and 1 truncate the initials."""
    if count < 0:
        raise ValueError("count must be >= 0")
    return list(islice(iter_terms(rec), count))


def term_iterative(rec: Order2Rec, n: int) -> RingElem:
    """x(n) by plain iteration, keeping only a rolling pair of values."""
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return rec.x0
    prev, cur = rec.x0, rec.x1
    for _ in range(n - 1):
        prev, cur = cur, add(mul(rec.a, cur), mul(rec.b, prev))
    return cur


def _mat_mul(m, n):
    # 2x2 matrices as 4-tuples (m00, m01, m10, m11) over either carrier.
    return (
        add(mul(m[0], n[0]), mul(m[1], n[2])),
        add(mul(m[0], n[1]), mul(m[1], n[3])),
        add(mul(m[2], n[0]), mul(m[3], n[2])),
        add(mul(m[2], n[1]), mul(m[3], n[3])),
    )


def term_fast(rec: Order2Rec, n: int) -> RingElem:
    """x(n) via companion-matrix exponentiation in O(log n) ring products.

    Opt-in fast path: [[a, b], [1, 0]]^n maps (x1, x0) to (x(n+1), x(n)),
    so the bottom row of the power yields x(n) for every n >= 0.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    one, zero = one_like(rec.a), zero_like(rec.a)
    acc = (one, zero, zero, one)
    base = (rec.a, rec.b, one, zero)
    e = n
    while e:
        if e & 1:
            acc = _mat_mul(acc, base)
        base = _mat_mul(base, base)
        e >>= 1
    return add(mul(acc[2], rec.x1), mul(acc[3], rec.x0))


def m_from_f(k: RingElem, n: int) -> RingElem:
    """M(n) reconstructed as 2*(F(n) + F(n-1)); defined for n >= 1."""
    _require_valid_k(k)
    if n < 1:
        raise ValueError("the F-to-M identity needs n >= 1 (F(-1) is undefined)")
    fs = terms(k_fib(k), n + 1)
    return scale(add(fs[n], fs[n - 1]), 2)


def f_from_m(k: RingElem, n: int) -> RingElem:
    """F(n) as the halved alternating sum of M(n), M(n-1), ..., M(1).

    The sum is even for every valid input, so the exact halving cannot fail
    unless the implementation itself is broken.
    """
    _require_valid_k(k)
    if n < 1:
        raise ValueError("the alternating-sum identity needs n >= 1")
    ms = terms(modified_k_fib(k), n + 1)
    acc = zero_like(k)
    for i in range(n):
        term = ms[n - i]
        acc = add(acc, term) if i % 2 == 0 else sub(acc, term)
    return exact_div_int(acc, 2)
