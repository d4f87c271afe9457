"""Hessenberg-Toeplitz determinants and the Hankel/Deutsch companions.

The matrix A_n(a0; a1..an) has a1 on the diagonal, a_{i-j+1} below it and a0
on the superdiagonal.  Its determinant is computed without building the
matrix, via the first-part recurrence

    D_0 = 1,  D_m = sum_{k=1}^{m} (-a0)^(k-1) a_k D_{m-k}.

Dense matrices are only materialized for the fraction-free elimination
oracle and the Hankel/Deutsch checks.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from . import sequences

log = logging.getLogger(__name__)

__all__ = [
    "HTSpec",
    "build_matrix",
    "det_recurrence",
    "det_prefixes",
    "det_fraction_free",
    "d_plus",
    "d_minus",
    "forward_dets",
    "invert_sequence",
    "hankel_matrix",
    "hankel_det",
    "deutsch_fine",
]


@dataclass(frozen=True)
class HTSpec:
    a0: int
    entries: tuple[int, ...]

    def __init__(self, a0: int, entries: Sequence[int]):
        if a0 == 0:
            raise ValueError("a0 must be nonzero")
        if len(entries) < 1:
            raise ValueError("need at least one entry")
        object.__setattr__(self, "a0", int(a0))
        object.__setattr__(self, "entries", tuple(int(e) for e in entries))

    @property
    def n(self) -> int:
        return len(self.entries)


def build_matrix(spec: HTSpec) -> list[list[int]]:
    a = (spec.a0,) + spec.entries
    n = spec.n
    return [[a[i - j + 1] if j <= i + 1 else 0 for j in range(n)] for i in range(n)]


def det_prefixes(a0: int, entries: Sequence[int]) -> list[int]:
    """[D_1, ..., D_n] for the leading principal blocks, O(n^2) products."""
    if a0 == 0:
        raise ValueError("a0 must be nonzero")
    n = len(entries)
    weights = [(-a0) ** k * entries[k] for k in range(n)]
    d = [1]
    for m in range(1, n + 1):
        d.append(sum(weights[k - 1] * d[m - k] for k in range(1, m + 1) if weights[k - 1]))
    return d[1:]


def det_recurrence(spec: HTSpec) -> int:
    return det_prefixes(spec.a0, spec.entries)[-1]


def d_plus(entries: Sequence[int]) -> int:
    return det_prefixes(1, entries)[-1]


def d_minus(entries: Sequence[int]) -> int:
    return det_prefixes(-1, entries)[-1]


def det_fraction_free(m: Sequence[Sequence[int]]) -> int:
    """Bareiss one-step fraction-free elimination; every division is exact."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            log.debug("zero pivot at column %d, swapping rows %d and %d", k, k, swap)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * piv - a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss division was not exact"
                a[i][j] = q
            a[i][k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def forward_dets(a: Sequence[int]) -> list[int]:
    """[b_0, b_1, ..., b_n] with b_0 = 1 and b_n = D_+(a_1..a_n)."""
    return [1] + det_prefixes(1, a)


def invert_sequence(b: Sequence[int]) -> list[int]:
    """Recover a_1..a_n from b_0..b_n, where b_k = D_+(a_1..a_k) and b_0 = 1.

    The map is its own inverse: a_n is the determinant built from b.
    """
    if not b or b[0] != 1:
        raise ValueError("b_0 must equal 1")
    if len(b) == 1:
        return []
    return det_prefixes(1, b[1:])


def hankel_matrix(sid, offset: int, n: int) -> list[list[int]]:
    sid = sequences.parse_sequence_id(sid)
    terms = [sequences.value(sid, k + offset) for k in range(2 * n - 1)]
    return [[terms[i + j] for j in range(n)] for i in range(n)]


def hankel_det(sid, offset: int, n: int) -> int:
    """det(seq[i+j+offset]) for 0 <= i, j < n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if offset not in (0, 1, 2):
        raise ValueError("offset must be 0, 1 or 2")
    return det_fraction_free(hankel_matrix(sid, offset, n))


def deutsch_fine(n: int) -> int:
    """(-1)^(n-1) det A_n(1; C_0, ..., C_{n-1}), evaluated densely."""
    if n < 1:
        raise ValueError("n must be at least 1")
    spec = HTSpec(1, [sequences.catalan(k) for k in range(n)])
    return (-1) ** (n - 1) * det_fraction_free(build_matrix(spec))

