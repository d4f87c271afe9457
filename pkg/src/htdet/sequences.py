"""Named integer sequences, each reachable by more than one formula.

Indexing follows the usual conventions: S_0 = s_0 = C_0 = 1, t_0 = 0, and the
sequences ``U`` and ``A137398`` start at index 1.  Convolution recurrences
are backed by grow-on-demand prefix tables.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

from . import paths
from .numeric import binomial, exact_div
from .series import gf_catalog

__all__ = [
    "SequenceId",
    "SequencePrefix",
    "OFFSETS",
    "OEIS",
    "parse_sequence_id",
    "catalan",
    "catalan_via_convolution",
    "large_schroeder",
    "small_schroeder",
    "fine",
    "fine_via_catalan",
    "fine_half_alternating",
    "schroeder_via_catalan",
    "u_sequence",
    "a137398",
    "a137398_alt_recurrence_holds",
    "auxiliary_sequence",
    "check_catalan_fine_relation",
    "value",
    "prefix",
    "SOURCES",
]


class SequenceId(str, Enum):
    LargeSchroeder = "LargeSchroeder"
    SmallSchroeder = "SmallSchroeder"
    Fine = "Fine"
    Catalan = "Catalan"
    U = "U"
    A137398 = "A137398"
    A134425 = "A134425"
    A225887 = "A225887"
    A114710 = "A114710"
    A030238 = "A030238"

    def __str__(self) -> str:
        return self.value


OEIS = {
    SequenceId.LargeSchroeder: "A006318",
    SequenceId.SmallSchroeder: "A001003",
    SequenceId.Fine: "A000957",
    SequenceId.Catalan: "A000108",
    SequenceId.A137398: "A137398",
    SequenceId.A134425: "A134425",
    SequenceId.A225887: "A225887",
    SequenceId.A114710: "A114710",
    SequenceId.A030238: "A030238",
}

OFFSETS = {sid: 0 for sid in SequenceId}
OFFSETS[SequenceId.U] = 1
OFFSETS[SequenceId.A137398] = 1

_ALIASES = {
    "S": SequenceId.LargeSchroeder,
    "s": SequenceId.SmallSchroeder,
    "t": SequenceId.Fine,
    "C": SequenceId.Catalan,
    "u": SequenceId.U,
    "b": SequenceId.A137398,
}


def parse_sequence_id(text) -> SequenceId:
    """Accept enum values, short symbols (S, s, t, C, u, b) or A-numbers."""
    if isinstance(text, SequenceId):
        return text
    if text in _ALIASES:
        return _ALIASES[text]
    for sid in SequenceId:
        if text.lower() == sid.value.lower() or text.upper() == OEIS.get(sid):
            return sid
    raise ValueError(f"unknown sequence {text!r}")


@dataclass(frozen=True)
class SequencePrefix:
    id: SequenceId
    values: tuple[int, ...]
    source: str
    offset: int = 0

    def items(self):
        return [(self.offset + i, v) for i, v in enumerate(self.values)]


class _PrefixTable:
    """Lazily extended list of terms; writers are serialized."""

    def __init__(self, seed: list[int], step: Callable[[list[int], int], int], first: int = 0):
        self._terms = list(seed)
        self._step = step
        self._first = first
        self._lock = threading.Lock()

    def get(self, n: int) -> int:
        i = n - self._first
        if i < 0:
            raise ValueError(f"index {n} is below the first index {self._first}")
        terms = self._terms
        if i < len(terms):
            return terms[i]
        with self._lock:
            # build into a private copy, then publish in one assignment
            terms = list(self._terms)
            while len(terms) <= i:
                terms.append(self._step(terms, len(terms) + self._first))
            self._terms = terms
        return terms[i]


def _need_index(n: int, low: int = 0) -> None:
    if n < low:
        raise ValueError(f"index must be >= {low}, got {n}")


# --- Catalan -----------------------------------------------------------------


def catalan(n: int) -> int:
    _need_index(n)
    return exact_div(binomial(2 * n, n), n + 1)


_catalan_conv = _PrefixTable(
    [1], lambda c, n: sum(c[k] * c[n - 1 - k] for k in range(n))
)


def catalan_via_convolution(n: int) -> int:
    """C_n = sum_k C_k C_{n-1-k}."""
    _need_index(n)
    return _catalan_conv.get(n)


# --- Schroeder ---------------------------------------------------------------


def large_schroeder(n: int) -> int:
    _need_index(n)
    if n == 0:
        return 1
    total = sum(2**k * binomial(n, k) * binomial(n, k - 1) for k in range(1, n + 1))
    return exact_div(total, n)


def small_schroeder(n: int) -> int:
    _need_index(n)
    if n == 0:
        return 1
    return exact_div(large_schroeder(n), 2)


def schroeder_via_catalan(n: int) -> int:
    """S_n = sum_{k=0}^{n} C(n+k, 2k) C_k, for n >= 1."""
    _need_index(n, 1)
    return sum(binomial(n + k, 2 * k) * catalan(k) for k in range(n + 1))


# --- Fine --------------------------------------------------------------------


def fine(n: int) -> int:
    _need_index(n)
    if n == 0:
        return 0
    return 3 * sum(binomial(2 * n - 2 * k, n - 1) for k in range(1, (n + 1) // 2 + 1)) - binomial(2 * n, n)


_fine_conv = _PrefixTable(
    [0], lambda t, m: catalan(m - 1) - sum(catalan(k) * t[m - 1 - k] for k in range(m - 1))
)


def fine_via_catalan(n: int) -> int:
    """t_{m+1} = C_m - sum_{k=0}^{m-1} C_k t_{m-k}, seeded with t_0 = 0."""
    _need_index(n)
    return _fine_conv.get(n)


def fine_half_alternating(n: int) -> int:
    """t_{n+1} = 1/2 sum_{k=2}^{n} C_k / (-2)^(n-k), for n >= 1."""
    _need_index(n, 1)
    total = sum((Fraction(catalan(k), (-2) ** (n - k)) for k in range(2, n + 1)), Fraction(0)) / 2
    if total.denominator != 1:
        raise ArithmeticError(f"alternating Fine sum at n={n} did not clear: {total}")
    return total.numerator


def check_catalan_fine_relation(n: int) -> bool:
    """C_n == 2 t_{n+1} + t_n."""
    _need_index(n)
    return catalan(n) == 2 * fine(n + 1) + fine(n)


# --- u and b sequences -----------------------------------------------------


def _u_step(u: list[int], n: int) -> int:
    # u is indexed from 1: u[i - 1] holds u_i
    return u[n - 2] + sum((-1) ** (i + 1) * catalan(i) * u[n - i - 2] for i in range(1, n - 1))


_u_table = _PrefixTable([1, 1], _u_step, first=1)


def u_sequence(n: int) -> int:
    """u_1 = u_2 = 1, u_n = u_{n-1} + sum_{i=1}^{n-2} (-1)^(i+1) C_i u_{n-i-1}."""
    _need_index(n, 1)
    return _u_table.get(n)


def _b_step(b: list[int], n: int) -> int:
    return catalan(n - 1) + 2 * sum(catalan(k) * b[n - k - 2] for k in range(1, n - 2))


_b_table = _PrefixTable([0, 1], _b_step, first=1)


def a137398(n: int) -> int:
    """b_1 = 0, b_2 = 1, b_n = C_{n-1} + 2 sum_{k=1}^{n-3} C_k b_{n-k-1}."""
    _need_index(n, 1)
    return _b_table.get(n)


def a137398_alt_recurrence_holds(n: int) -> bool:
    """b_n == 2 b_{n-1} + 2 b_{n-2} + sum_{k=1}^{n-3} C_k b_{n-k-1}, n >= 4."""
    _need_index(n, 4)
    b = a137398
    rhs = 2 * b(n - 1) + 2 * b(n - 2) + sum(catalan(k) * b(n - k - 1) for k in range(1, n - 2))
    return b(n) == rhs


# --- auxiliary OEIS sequences ------------------------------------------------

_gf_cache: dict[str, tuple[int, ...]] = {}
_gf_lock = threading.Lock()


def _gf_terms(gf_id: str, n: int) -> int:
    terms = _gf_cache.get(gf_id, ())
    if n >= len(terms):
        with _gf_lock:
            order = max(n + 1, 2 * len(terms), 16)
            terms = tuple(gf_catalog(gf_id, order).integer_coeffs())
            _gf_cache[gf_id] = terms
    return terms[n]


def auxiliary_sequence(sid, n: int) -> int:
    """A134425, A225887, A114710 and A030238 from their path/GF constructions.

    * A134425: coefficients of 2 / (1 - 7x + sqrt(1 - 6x + x^2)).
    * A225887: Schroeder paths whose low h steps take one of three colors.
    * A114710: Schroeder paths with no low h step and no peak of height 1.
    * A030238: sum_j a(n+2-j, j), a(m, j) = Dyck paths of length m with j returns.
    """
    sid = parse_sequence_id(sid)
    _need_index(n)
    if sid is SequenceId.A134425:
        return _gf_terms("A134425", n)
    if sid is SequenceId.A225887:
        return paths.count_paths(n, low_h_weight=3)
    if sid is SequenceId.A114710:
        return paths.count_paths(n, low_h_weight=0, peak1=False)
    if sid is SequenceId.A030238:
        return paths.a030238_sum(n, method="count")
    raise ValueError(f"{sid} is not an auxiliary sequence")


# --- dispatch ----------------------------------------------------------------

_PRIMARY: dict[SequenceId, Callable[[int], int]] = {
    SequenceId.LargeSchroeder: large_schroeder,
    SequenceId.SmallSchroeder: small_schroeder,
    SequenceId.Fine: fine,
    SequenceId.Catalan: catalan,
    SequenceId.U: u_sequence,
    SequenceId.A137398: a137398,
    SequenceId.A134425: lambda n: auxiliary_sequence(SequenceId.A134425, n),
    SequenceId.A225887: lambda n: auxiliary_sequence(SequenceId.A225887, n),
    SequenceId.A114710: lambda n: auxiliary_sequence(SequenceId.A114710, n),
    SequenceId.A030238: lambda n: auxiliary_sequence(SequenceId.A030238, n),
}


def value(sid, n: int) -> int:
    """Term n of a named sequence by its primary route."""
    return _PRIMARY[parse_sequence_id(sid)](n)


def _series_route(sid: SequenceId, n: int) -> int:
    return _gf_terms(sid.value, n)


def _enumeration_route(sid: SequenceId, n: int) -> int:
    card = paths.family_cardinality
    if sid is SequenceId.LargeSchroeder:
        return card("P", n)
    if sid is SequenceId.SmallSchroeder:
        return card("Q", n)
    if sid is SequenceId.Catalan:
        return card("D", n)
    if sid is SequenceId.Fine:
        return 0 if n == 0 else card("E", n - 1)
    if sid is SequenceId.A134425:
        return card("Ptilde4", n)
    if sid is SequenceId.A225887:
        return card("Pstar3", n)
    if sid is SequenceId.A114710:
        return sum(1 for w in paths.words("Q", n) if paths.stats(w).peaks_h1 == 0)
    if sid is SequenceId.A030238:
        return paths.a030238_sum(n)
    raise ValueError(f"no enumeration route for {sid}")


def _determinant_route(sid: SequenceId, n: int) -> int:
    from . import hessenberg

    if sid is SequenceId.Fine:
        return 0 if n == 0 else hessenberg.deutsch_fine(n)
    if sid is SequenceId.U:
        return hessenberg.d_plus([fine(i) for i in range(1, n + 1)])
    if sid is SequenceId.A137398:
        return hessenberg.d_minus([fine(i) for i in range(2, n + 2)])
    raise ValueError(f"no determinant route for {sid}")


def _recurrence_route(sid: SequenceId, n: int) -> int:
    if sid is SequenceId.Catalan:
        return catalan_via_convolution(n)
    if sid is SequenceId.LargeSchroeder:
        return 1 if n == 0 else schroeder_via_catalan(n)
    if sid is SequenceId.SmallSchroeder:
        return 1 if n == 0 else exact_div(schroeder_via_catalan(n), 2)
    if sid is SequenceId.Fine:
        return fine_via_catalan(n)
    if sid in (SequenceId.U, SequenceId.A137398):
        return value(sid, n)
    if sid in (SequenceId.A225887, SequenceId.A114710, SequenceId.A030238):
        return auxiliary_sequence(sid, n)
    raise ValueError(f"no recurrence route for {sid}")


def _closed_form_route(sid: SequenceId, n: int) -> int:
    if sid in (SequenceId.Catalan, SequenceId.LargeSchroeder, SequenceId.SmallSchroeder, SequenceId.Fine):
        return value(sid, n)
    raise ValueError(f"no closed form for {sid}")


SOURCES: dict[str, Callable[[SequenceId, int], int]] = {
    "closed_form": _closed_form_route,
    "recurrence": _recurrence_route,
    "series": _series_route,
    "enumeration": _enumeration_route,
    "determinant": _determinant_route,
}


def prefix(sid, count: int, source: str | None = None) -> SequencePrefix:
    """First ``count`` terms starting at the sequence's natural offset."""
    sid = parse_sequence_id(sid)
    off = OFFSETS[sid]
    if source is None:
        fn = lambda n: value(sid, n)  # noqa: E731
        source = {
            SequenceId.U: "recurrence",
            SequenceId.A137398: "recurrence",
            SequenceId.A134425: "series",
            SequenceId.A225887: "recurrence",
            SequenceId.A114710: "recurrence",
            SequenceId.A030238: "recurrence",
        }.get(sid, "closed_form")
    else:
        if source not in SOURCES:
            raise ValueError(f"unknown source {source!r}")
        route = SOURCES[source]
        fn = lambda n: route(sid, n)  # noqa: E731
    return SequencePrefix(sid, tuple(fn(off + i) for i in range(count)), source, off)
