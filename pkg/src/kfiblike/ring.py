"""Exact arithmetic substrate shared by every other module.

Two carriers, never mixed inside one computation:

* numeric mode -- plain Python ``int`` (already arbitrary precision), used
  when k is a concrete integer >= 1;
* symbolic mode -- :class:`KPoly`, a dense polynomial in the indeterminate k
  with integer coefficients, used to check identities for *every* k at once.

There is deliberately no rational carrier: every identity in scope stays
integral, and the single 1/2 factor that occurs is handled by
:func:`exact_div_int`, which fails loudly if divisibility is ever violated.
"""

from __future__ import annotations

from typing import Iterable, Union


class ModeMismatchError(TypeError):
    """Raised when numeric and symbolic values meet in one expression."""


class ExactDivisionError(ArithmeticError):
    """Raised when an exact integer division does not divide evenly."""


class KPoly:
    """Dense polynomial in k with integer coefficients, ascending degree.

    Canonical form: no trailing zero coefficient; the zero polynomial is the
    empty coefficient tuple.  Instances are immutable and hashable.
    Arithmetic operators accept KPoly operands only -- combining a KPoly with
    a plain int via ``+``, ``-`` or ``*`` is a mode violation and raises
    ``TypeError``.  Scalar integers enter only through the explicit
    :meth:`scale` (and :func:`exact_div_int`), which is how binomial weights
    are applied.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"KPoly coefficients must be int, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("KPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "KPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def evaluate(self, value: int) -> int:
        """Horner evaluation at an integer point, exact."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def scale(self, c: int) -> "KPoly":
        """Multiply by an integer scalar."""
        if not isinstance(c, int):
            raise TypeError("scale factor must be int")
        return KPoly(x * c for x in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, KPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return KPoly(out)

    def __sub__(self, other):
        if not isinstance(other, KPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return KPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, KPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return KPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return KPoly(out)

    def __eq__(self, other):
        if not isinstance(other, KPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"KPoly({self.coeffs!r})"

    def __str__(self):
        """Conventional descending-degree text, e.g. ``2k^4+2k^3+6k^2+4k+2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "k" if d == 1 else f"k^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)


#: The indeterminate itself: pass this as k to run any computation symbolically.
K = KPoly((0, 1))

RingElem = Union[int, KPoly]


def is_symbolic(x: RingElem) -> bool:
    return isinstance(x, KPoly)


def same_mode(x: RingElem, y: RingElem) -> bool:
    return isinstance(x, KPoly) == isinstance(y, KPoly)


def require_same_mode(*elems: RingElem) -> None:
    """Reject mixed numeric/symbolic operands before any arithmetic runs."""
    symbolic = [isinstance(e, KPoly) for e in elems]
    if any(symbolic) and not all(symbolic):
        raise ModeMismatchError(
            "cannot mix numeric (int) and symbolic (KPoly) values in one computation"
        )


def add(x: RingElem, y: RingElem) -> RingElem:
    require_same_mode(x, y)
    return x + y


def sub(x: RingElem, y: RingElem) -> RingElem:
    require_same_mode(x, y)
    return x - y


def mul(x: RingElem, y: RingElem) -> RingElem:
    require_same_mode(x, y)
    return x * y


def neg(x: RingElem) -> RingElem:
    return -x


def scale(x: RingElem, c: int) -> RingElem:
    """Multiply a ring element by an integer scalar (mode preserving)."""
    if isinstance(x, KPoly):
        return x.scale(c)
    return x * c


def const_like(c: int, template: RingElem) -> RingElem:
    """The integer constant c carried in the same mode as ``template``."""
    return KPoly.constant(c) if isinstance(template, KPoly) else c


def zero_like(template: RingElem) -> RingElem:
    return KPoly() if isinstance(template, KPoly) else 0


def one_like(template: RingElem) -> RingElem:
    return const_like(1, template)


def elem_is_zero(x: RingElem) -> bool:
    return x.is_zero if isinstance(x, KPoly) else x == 0


def ipow(x: RingElem, e: int) -> RingElem:
    """x**e for a non-negative integer exponent, either mode."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    if isinstance(x, int):
        return x**e
    acc = KPoly.constant(1)
    base = x
    n = e
    while n:
        if n & 1:
            acc = acc * base
        base = base * base
        n >>= 1
    return acc


def exact_div_int(x: RingElem, d: int) -> RingElem:
    """Divide by an integer that must divide evenly; error otherwise.

    The error names the offending value (for polynomials, the first
    non-divisible coefficient and its degree).
    """
    if not isinstance(d, int):
        raise TypeError("divisor must be int")
    if d == 0:
        raise ZeroDivisionError("exact division by zero")
    if isinstance(x, KPoly):
        out = []
        for i, c in enumerate(x.coeffs):
            if c % d != 0:
                raise ExactDivisionError(
                    f"{d} does not divide coefficient {c} of k^{i} in {x}"
                )
            out.append(c // d)
        return KPoly(out)
    if x % d != 0:
        raise ExactDivisionError(f"{d} does not divide {x}")
    return x // d


def poly_eval(p: KPoly, value: int) -> int:
    """Evaluate a symbolic result at an integer k (symbolic -> numeric bridge)."""
    if not isinstance(p, KPoly):
        raise TypeError("poly_eval expects a KPoly")
    if not isinstance(value, int):
        raise TypeError("evaluation point must be int")
    return p.evaluate(value)


def elem_str(x: RingElem) -> str:
    """Decimal string for ints, descending-degree text for polynomials."""
    return str(x)
