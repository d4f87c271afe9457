"""Exact integer and rational primitives.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
``fractions.Fraction``, which is always kept in lowest terms with a positive
denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Fraction",
    "binomial",
    "multinomial",
    "signed_power",
    "exact_div",
    "format_int",
    "parse_int",
    "format_rational",
    "parse_rational",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k lies outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(part!), built as a product of binomials."""
    total = 0
    result = 1
    for p in parts:
        if p < 0:
            raise ValueError(f"multinomial: negative part {p}")
        total += p
        result *= math.comb(total, p)
    return result


def signed_power(base: int, exp: int) -> int:
    # 0 ** 0 == 1 is the convention wanted by Trudi's formula
    if exp < 0:
        raise ValueError(f"signed_power: negative exponent {exp}")
    return base**exp


def exact_div(num: int, den: int) -> int:
    """Integer division that refuses to round."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def format_int(value: int) -> str:
    return str(int(value))


def parse_int(text: str) -> int:
    s = text.strip()
    body = s[1:] if s.startswith("-") else s
    if not body.isdigit() or not body.isascii():
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(s)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        d = parse_int(den)
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(parse_int(num), d)
    return Fraction(parse_int(s))
