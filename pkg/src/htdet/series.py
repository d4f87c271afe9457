"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` knows ``order`` coefficients, those of x^0 .. x^(order-1).
Every operation returns a series whose order never exceeds what its inputs
determine.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "PowerSeries",
    "ps_arith",
    "ps_sqrt",
    "gf_catalog",
    "GF_IDS",
    "g_series",
    "f_from_g",
]


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = (cs + [Fraction(0)] * order)[:order]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient x^{k} is beyond truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[:order])

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self.order)
        m = min(self.order, other.order)
        return PowerSeries(a + b for a, b in zip(self.coeffs[:m], other.coeffs[:m]))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other):
        return _coerce(other, self.order) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(c * other for c in self.coeffs)
        m = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(m):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]), Fraction(0)))
        return PowerSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("series divided by zero scalar")
            return PowerSeries(c / other for c in self.coeffs)
        return _divide(self, other)

    def __rtruediv__(self, other):
        return _divide(_coerce(other, self.order), self)

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by x^k; negative k drops leading terms, which must be zero."""
        if k >= 0:
            return PowerSeries((Fraction(0),) * k + self.coeffs)
        drop = -k
        if drop > self.order:
            raise ValueError("shift drops more terms than the series has")
        if any(self.coeffs[:drop]):
            raise ValueError(f"negative shift by {drop} would discard nonzero terms")
        return PowerSeries(self.coeffs[drop:])

    def scale(self, c) -> "PowerSeries":
        """Substitute x -> c*x."""
        c = Fraction(c)
        return PowerSeries(a * c**i for i, a in enumerate(self.coeffs))

    # output --------------------------------------------------------------

    def integer_coeffs(self) -> list[int]:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return out

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(f"{sign} {body}")
        terms.append(("+ " if terms else "") + f"O(x^{self.order})")
        return " ".join(terms)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "PowerSeries":
        return cls(Fraction(s) for s in json.loads(text))


def _coerce(value, order: int) -> PowerSeries:
    if isinstance(value, PowerSeries):
        return value
    if isinstance(value, (int, Fraction)):
        return PowerSeries([value], order)
    raise TypeError(f"cannot treat {type(value).__name__} as a power series")


def _divide(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    v = b.valuation()
    if v is None:
        raise ZeroDivisionError("division by a series that vanishes to its order")
    if v:
        # cancel the common x^v before dividing
        a, b = a.shift(-v), b.shift(-v)
    m = min(a.order, b.order)
    inv0 = 1 / b.coeffs[0]
    bc = b.coeffs
    q: list[Fraction] = []
    for k in range(m):
        acc = a.coeffs[k] - sum((q[i] * bc[k - i] for i in range(k) if q[i] and bc[k - i]), Fraction(0))
        q.append(acc * inv0)
    return PowerSeries(q)


def ps_arith(op: str, a: PowerSeries, b) -> PowerSeries:
    """Dispatch ``add``, ``sub``, ``mul``, ``div`` or ``shift`` (b an exponent)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "shift":
        return a.shift(int(b))
    raise ValueError(f"unknown series operation {op!r}")


def _rational_sqrt(q: Fraction) -> Fraction:
    if q <= 0:
        raise ValueError(f"constant term {q} is not a positive rational square")
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        raise ValueError(f"constant term {q} is not a rational square")
    return Fraction(rn, rd)


def ps_sqrt(a: PowerSeries) -> PowerSeries:
    """Square root with positive constant term, by Newton iteration.

    Each pass y <- (y + a/y) / 2 doubles the number of correct coefficients.
    """
    if a.order == 0:
        return a
    y = PowerSeries([_rational_sqrt(a.coeffs[0])])
    prec = 1
    while prec < a.order:
        prec = min(2 * prec, a.order)
        yp = PowerSeries(y.coeffs, prec)
        y = (yp + a.truncate(prec) / yp) / 2
    return y


# ---------------------------------------------------------------------------
# Generating functions

GF_IDS = ("LargeSchroeder", "SmallSchroeder", "Fine", "Catalan", "A134425")


def _poly(cs: Sequence[int], order: int) -> PowerSeries:
    return PowerSeries(cs, order)


def gf_catalog(gf_id: str, order: int) -> PowerSeries:
    """Closed-form generating functions expanded to ``order`` coefficients."""
    if order < 1:
        raise ValueError("order must be at least 1")
    gf_id = str(getattr(gf_id, "value", gf_id))
    p = order + 1
    if gf_id in ("LargeSchroeder", "SmallSchroeder", "A134425"):
        r6 = ps_sqrt(_poly([1, -6, 1], p))
    else:
        r4 = ps_sqrt(_poly([1, -4], p))
    if gf_id == "LargeSchroeder":
        out = (_poly([1, -1], p) - r6).shift(-1) / 2
    elif gf_id == "SmallSchroeder":
        out = (_poly([1, 1], p) - r6).shift(-1) / 4
    elif gf_id == "Catalan":
        out = (_poly([1], p) - r4).shift(-1) / 2
    elif gf_id == "Fine":
        out = (_poly([1, 2], p) - r4) / _poly([4, 2], p)
    elif gf_id == "A134425":
        out = 2 / (_poly([1, -7], p) + r6)
    else:
        raise ValueError(f"no generating function for {gf_id!r}; expected one of {GF_IDS}")
    return out.truncate(order)


def g_series(a0: int, a: Sequence) -> PowerSeries:
    """g(x) = sum_{i>=1} (-a0)^(i-1) a_i x^i, exact through x^len(a)."""
    return PowerSeries([0] + [(-a0) ** i * ai for i, ai in enumerate(a)])


def f_from_g(g: PowerSeries) -> PowerSeries:
    """g / (1 - g); coefficient n is det(A_n) for the spec that produced g."""
    if g.order and g.coeffs[0] != 0:
        raise ValueError("g must have zero constant term")
    return g / (1 - g)
