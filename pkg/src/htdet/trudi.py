"""Trudi's expansion of a Hessenberg-Toeplitz determinant.

Two independent evaluations of det(A_n(a0; a1..an)):

* over partitions of n, written as multiplicity vectors v with
  sum(i * v_i) == n, each weighted by a multinomial coefficient;
* over compositions of n, one product of entries per composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .numeric import multinomial, signed_power

COMPOSITION_CAP = 22


class CompositionCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class PartitionMultiplicity:
    n: int
    v: tuple[int, ...]

    def __post_init__(self):
        if min(self.v, default=0) < 0 or self.weight != self.n or self.size < 1:
            raise ValueError(f"{self.v} is not a partition of {self.n}")

    @property
    def size(self) -> int:
        """Number of parts, |v|."""
        return sum(self.v)

    @property
    def weight(self) -> int:
        return sum(i * vi for i, vi in enumerate(self.v, start=1))


def partitions_of(n: int) -> Iterator[PartitionMultiplicity]:
    """Multiplicity vectors of the partitions of n, lexicographic in v."""
    if n < 1:
        raise ValueError(f"partitions_of needs n >= 1, got {n}")
    v = [0] * n

    def fill(i: int, rest: int) -> Iterator[PartitionMultiplicity]:
        if i > n:
            if rest == 0:
                yield PartitionMultiplicity(n, tuple(v))
            return
        for count in range(rest // i + 1):
            left = rest - count * i
            # what remains must be expressible with parts larger than i
            if left != 0 and left < i + 1:
                continue
            v[i - 1] = count
            yield from fill(i + 1, left)
        v[i - 1] = 0

    yield from fill(1, n)


def compositions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All 2^(n-1) compositions of n; bit b of the counter cuts after b+1."""
    if n < 1:
        raise ValueError(f"compositions_of needs n >= 1, got {n}")
    for mask in range(1 << (n - 1)):
        parts = []
        last = 0
        for b in range(n - 1):
            if mask >> b & 1:
                parts.append(b + 1 - last)
                last = b + 1
        parts.append(n - last)
        yield tuple(parts)


def trudi_partition_sum(a0: int, a: Sequence[int]) -> int:
    if a0 == 0:
        raise ValueError("a0 must be nonzero")
    n = len(a)
    if n == 0:
        return 1
    total = 0
    for p in partitions_of(n):
        term = signed_power(-a0, n - p.size) * multinomial(p.v)
        for ai, vi in zip(a, p.v):
            if vi:
                term *= ai**vi
        total += term
    return total


def trudi_composition_sum(a0: int, a: Sequence[int], cap: int | None = None) -> int:
    if a0 == 0:
        raise ValueError("a0 must be nonzero")
    n = len(a)
    cap = COMPOSITION_CAP if cap is None else cap
    if n > cap:
        raise CompositionCapExceeded(f"n={n} exceeds composition cap {cap}")
    if n == 0:
        return 1
    total = 0
    for comp in compositions_of(n):
        term = signed_power(-a0, n - len(comp))
        for part in comp:
            term *= a[part - 1]
        total += term
    return total
