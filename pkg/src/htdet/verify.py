"""Identity registry and the multi-route verification runner.

Each registered identity is checked per n by every requested route:

* ``recurrence``          first-part determinant recurrence
* ``series``              coefficient of g/(1-g), g built from the closed-form
                          generating function of the entry sequence (for
                          Hankel ids: matrix entries taken from that series)
* ``trudi_partition``     Trudi's multinomial sum over partitions
* ``trudi_composition``   Trudi's sum over compositions
* ``enumeration``         signed sum or cardinality of the matching path family
* ``fraction_free``       dense Bareiss elimination (Hankel, Deutsch)
* ``closed_form``         two sequence formulas compared directly (relations)

Right-hand sides always come from :mod:`htdet.sequences`.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Mapping

from . import hessenberg, paths, sequences, trudi
from .report import Record, VerificationReport
from .sequences import SequenceId as Sq
from .series import PowerSeries, f_from_g, gf_catalog

__all__ = [
    "DetSide",
    "SeqSide",
    "IdentitySpec",
    "REGISTRY",
    "ROUTES",
    "DEFAULT_TIERS",
    "ROUTE_CAPS",
    "get_identity",
    "run_identity",
    "run_all",
]

ROUTES = (
    "recurrence",
    "series",
    "trudi_partition",
    "trudi_composition",
    "enumeration",
    "fraction_free",
    "closed_form",
)

# largest n each route is asked to evaluate by default
ROUTE_CAPS = {
    "trudi_partition": 18,
    "trudi_composition": 14,
    "enumeration": 8,
}

DEFAULT_TIERS = {
    "theorem": 25,
    "hankel": 7,
    "deutsch": 15,
    "relation": 40,
}


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class DetSide:
    """det A_n(a0; a_1..a_n) with a_i = seq[i + shift]."""

    a0: int
    seq: Sq
    shift: int

    def entries(self, n: int) -> list[int]:
        return [sequences.value(self.seq, i + self.shift) for i in range(1, n + 1)]

    def describe(self) -> str:
        sym = {Sq.LargeSchroeder: "S", Sq.SmallSchroeder: "s", Sq.Fine: "t", Sq.Catalan: "C"}[self.seq]
        sign = "+" if self.a0 == 1 else "-"
        return f"D{sign}({sym}_{1 + self.shift},...,{sym}_(n{self.shift:+d}))"


@dataclass(frozen=True)
class SeqSide:
    """factor * (-1)^(n-1 if alternating) * seq[n + shift]."""

    seq: Sq
    shift: int = 0
    alternating: bool = False
    factor: int = 1

    def __call__(self, n: int) -> int:
        sign = (-1) ** (n - 1) if self.alternating else 1
        return self.factor * sign * sequences.value(self.seq, n + self.shift)


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    statement: str
    valid_from: int
    routes: tuple[str, ...]
    tier: str = "theorem"
    lhs: DetSide | None = None
    rhs: SeqSide | Callable[[int], int] | None = None
    family: tuple[str, str] | None = None  # (tag, "signed" | "count")
    twin: str | None = None
    lhs_alternating: bool = False  # lhs is (-1)^(n-1) times the determinant
    note: str = ""
    # route name -> lhs(n) for identities that are not plain determinants
    evaluators: Mapping[str, Callable[[int], int]] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Registry

S, s, t, C = Sq.LargeSchroeder, Sq.SmallSchroeder, Sq.Fine, Sq.Catalan
_HT_ROUTES = ("recurrence", "series", "enumeration")
_TRUDI_ROUTES = ("trudi_partition", "trudi_composition")


def _thm(id_, statement, a0, seq, shift, rhs, family, valid_from=1, note=""):
    return IdentitySpec(
        id=id_,
        statement=statement,
        valid_from=valid_from,
        routes=_HT_ROUTES,
        lhs=DetSide(a0, seq, shift),
        rhs=rhs,
        family=family,
        note=note,
    )


_THM1 = [
    _thm("thm1.e1", "D+(S_1..S_n) = (-1)^(n-1) S_(n-1), n >= 2", 1, S, 0,
         SeqSide(S, -1, True), ("A", "signed"), valid_from=2),
    _thm("thm1.e2", "D-(S_1..S_n) = 2 A134425[n-1]", -1, S, 0,
         SeqSide(Sq.A134425, -1, factor=2), ("A", "count"),
         note="stated without a range guard; holds from n = 1 (D-(S_1) = 2 = 2*A134425[0])"),
    _thm("thm1.e3", "D+(S_0..S_(n-1)) = (-1)^(n-1) s_(n-1)", 1, S, -1,
         SeqSide(s, -1, True), ("B", "signed")),
    _thm("thm1.e4", "D-(S_0..S_(n-1)) = s_n", -1, S, -1, SeqSide(s), ("B", "count")),
    _thm("thm1.e5", "D+(s_1..s_n) = (-1)^(n-1) S_(n-1)", 1, s, 0,
         SeqSide(S, -1, True), ("Aprime", "signed")),
    _thm("thm1.e6", "D-(s_1..s_n) = A225887[n-1]", -1, s, 0,
         SeqSide(Sq.A225887, -1), ("Aprime", "count"),
         note="A225887 indexed from 0: D-(s_1) = 1 = A225887[0]"),
    _thm("thm1.e7", "D+(s_0..s_(n-1)) = (-1)^(n-1) A114710[n-1]", 1, s, -1,
         SeqSide(Sq.A114710, -1, True), ("Bprime", "signed")),
    _thm("thm1.e8", "D-(s_0..s_(n-1)) = S_(n-1)", -1, s, -1, SeqSide(S, -1), ("Bprime", "count")),
    _thm("thm1.e9", "D+(s_2..s_(n+1)) = (-1)^(n-1) S_(n-1), n >= 2", 1, s, 1,
         SeqSide(S, -1, True), ("Jtuple", "signed"), valid_from=2),
]

_THM3 = [
    _thm("thm3.e22", "D+(t_1..t_n) = u_n", 1, t, 0, SeqSide(Sq.U), ("Dprime", "signed")),
    _thm("thm3.e23", "D-(t_1..t_n) = C_(n-1)", -1, t, 0, SeqSide(C, -1), ("Dprime", "count")),
    _thm("thm3.e24", "D+(t_2..t_(n+1)) = (-1)^(n-1) C_(n-1), n >= 2", 1, t, 1,
         SeqSide(C, -1, True), ("L", "signed"), valid_from=2),
    _thm("thm3.e25", "D-(t_2..t_(n+1)) = A137398[n]", -1, t, 1, SeqSide(Sq.A137398), ("L", "count"),
         note="A137398 via b_1 = 0, b_2 = 1 and the first-unit recurrence"),
    _thm("thm3.e26", "D+(t_3..t_(n+2)) = (-1)^(n-1) A030238[n-1]", 1, t, 2,
         SeqSide(Sq.A030238, -1, True), ("Mtuple", "signed"),
         note="A030238[m] = sum_j a(m+2-j, j), a = Dyck paths by number of returns"),
    _thm("thm3.e27", "D+(t_4..t_(n+3)) = (-1)^(n-1) C_(n-1), n >= 3", 1, t, 3,
         SeqSide(C, -1, True), ("Ttuple", "signed"), valid_from=3),
]


def _thm2(id_, twin: IdentitySpec, statement: str, rhs=None, note=""):
    return IdentitySpec(
        id=id_,
        statement=statement,
        valid_from=twin.valid_from,
        routes=_TRUDI_ROUTES,
        lhs=twin.lhs,
        rhs=rhs or twin.rhs,
        twin=twin.id,
        note=note,
    )


_THM2 = [
    _thm2(f"thm2.e{13 + i}", tw, f"Trudi form of {tw.id}: {tw.statement}")
    for i, tw in enumerate(_THM1)
]
_THM2[5] = replace(
    _THM2[5],
    note="printed with A225887[n]; the determinant twin and D-(s_1) = 1 = A225887[0] fix the index at n-1",
)


def _hankel_from_series(seq, offset, n):
    # same determinant, entries read off the closed-form generating function
    c = gf_catalog(seq.value, 2 * n - 1 + offset).integer_coeffs()
    return hessenberg.det_fraction_free([[c[i + j + offset] for j in range(n)] for i in range(n)])


def _hankel(id_, seq, offset, statement, formula):
    return IdentitySpec(
        id=id_,
        statement=statement,
        valid_from=1,
        routes=("fraction_free", "series"),
        tier="hankel",
        rhs=formula,
        evaluators={
            "fraction_free": lambda n: hessenberg.hankel_det(seq, offset, n),
            "series": lambda n: _hankel_from_series(seq, offset, n),
        },
    )


_HANKEL = [
    _hankel("hankel.schroeder0", S, 0, "det(S_(i+j)) = 2^C(n,2)", lambda n: 2 ** (n * (n - 1) // 2)),
    _hankel("hankel.schroeder1", S, 1, "det(S_(i+j+1)) = 2^C(n+1,2)", lambda n: 2 ** (n * (n + 1) // 2)),
    _hankel("hankel.fine1", t, 1, "det(t_(i+j+1)) = 1", lambda n: 1),
    _hankel("hankel.fine2", t, 2, "det(t_(i+j+2)) = 1 - n", lambda n: 1 - n),
]

_DEUTSCH = IdentitySpec(
    id="deutsch.eq1",
    statement="t_n = (-1)^(n-1) det A_n(1; C_0..C_(n-1))",
    valid_from=1,
    routes=("fraction_free", "recurrence", "series"),
    tier="deutsch",
    lhs=DetSide(1, C, -1),
    lhs_alternating=True,
    rhs=SeqSide(t),
    evaluators={"fraction_free": hessenberg.deutsch_fine},
)


def _relation(id_, statement, valid_from, lhs, rhs):
    return IdentitySpec(
        id=id_,
        statement=statement,
        valid_from=valid_from,
        routes=("closed_form",),
        tier="relation",
        rhs=rhs,
        evaluators={"closed_form": lhs},
    )


_RELATIONS = [
    _relation("rel.catalan_fine", "C_n = 2 t_(n+1) + t_n, n >= 1", 1,
              sequences.catalan, lambda n: 2 * sequences.fine(n + 1) + sequences.fine(n)),
    _relation("rel.schroeder_catalan", "S_n = sum_k C(n+k, 2k) C_k", 1,
              sequences.large_schroeder, sequences.schroeder_via_catalan),
    _relation("rel.fine_half", "t_(n+1) = 1/2 sum_{k=2}^{n} C_k / (-2)^(n-k)", 1,
              lambda n: sequences.fine(n + 1), sequences.fine_half_alternating),
    _relation("rel.fine_conv", "t_(n+1) = C_n - sum_k C_k t_(n-k)", 0,
              sequences.fine, sequences.fine_via_catalan),
    _relation("rel.small_is_half", "s_n = S_n / 2", 1,
              lambda n: 2 * sequences.small_schroeder(n), sequences.large_schroeder),
]

REGISTRY: tuple[IdentitySpec, ...] = tuple(_THM1 + _THM2 + _THM3 + _HANKEL + [_DEUTSCH] + _RELATIONS)
_BY_ID = {spec.id: spec for spec in REGISTRY}

# thm2 and thm3 ids may also be addressed by their position within
# the group (thm2.e1..e9, thm3.e1..e6).
_ALIASES = {f"thm2.e{i + 1}": f"thm2.e{13 + i}" for i in range(9)}
_ALIASES.update({f"thm3.e{i + 1}": f"thm3.e{22 + i}" for i in range(6)})


def get_identity(identity_id: str, registry: Iterable[IdentitySpec] | None = None) -> IdentitySpec:
    table = _BY_ID if registry is None else {s.id: s for s in registry}
    key = identity_id if identity_id in table else _ALIASES.get(identity_id, identity_id)
    try:
        return table[key]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {identity_id!r}") from None


# ---------------------------------------------------------------------------
# Evaluation


def _catalog_g(side: DetSide, n: int) -> PowerSeries:
    """g(x) = sum_i (-a0)^(i-1) a_i x^i from the entry sequence's closed-form GF."""
    keep = 1 + side.shift  # first GF index that becomes an entry
    G = gf_catalog(side.seq.value, n + 1 + side.shift)
    tail = PowerSeries([0] * keep + list(G.coeffs[keep:]))
    h = tail.shift(-side.shift) if side.shift >= 0 else tail.shift(1)
    c = -side.a0
    return h.scale(c) / c


class _Evaluator:
    """Evaluates one identity for every n, caching the per-run work."""

    def __init__(self, spec: IdentitySpec, max_n: int):
        self.spec = spec
        self.max_n = max_n
        self._entries: list[int] | None = None
        self._dets: list[int] | None = None
        self._f: PowerSeries | None = None

    def entries(self) -> list[int]:
        if self._entries is None:
            self._entries = self.spec.lhs.entries(self.max_n)
        return self._entries

    def _sign_adjust(self, n: int) -> int:
        # the Trudi twins state a0 = +1 sums with (-1)^(|v|-1), which is
        # (-1)^(n-1) times the determinant
        if self.spec.twin is not None and self.spec.lhs.a0 == 1:
            return (-1) ** (n - 1)
        return 1

    def rhs(self, n: int) -> int:
        return self._sign_adjust(n) * self.spec.rhs(n)

    def lhs(self, route: str, n: int) -> int:
        spec = self.spec
        if route in spec.evaluators:
            return spec.evaluators[route](n)
        side = spec.lhs
        sign = (-1) ** (n - 1) if spec.lhs_alternating else 1
        if route == "recurrence":
            if self._dets is None:
                self._dets = hessenberg.det_prefixes(side.a0, self.entries())
            return sign * self._dets[n - 1]
        if route == "series":
            if self._f is None:
                self._f = f_from_g(_catalog_g(side, self.max_n))
            c = self._f[n]
            assert c.denominator == 1
            return sign * c.numerator
        if route == "trudi_partition":
            return self._sign_adjust(n) * trudi.trudi_partition_sum(side.a0, self.entries()[:n])
        if route == "trudi_composition":
            return self._sign_adjust(n) * trudi.trudi_composition_sum(side.a0, self.entries()[:n])
        if route == "enumeration":
            tag, kind = spec.family
            if kind == "signed":
                return paths.family_signed_sum(tag, n)
            return paths.family_cardinality(tag, n)
        raise ValueError(f"identity {spec.id} has no route {route!r}")


_CAP_ERRORS = (paths.EnumerationCapExceeded, trudi.CompositionCapExceeded)


def run_identity(spec: IdentitySpec | str, max_n: int | None = None,
                 routes: Iterable[str] | None = None,
                 route_caps: Mapping[str, int] | None = None) -> VerificationReport:
    """Check one identity for n = valid_from .. max_n along each route.

    Requested routes the identity does not support are ignored; if none
    remain, the identity's primary route is used.  Evaluations past a
    route's cap are listed as skipped, not failed.
    """
    if isinstance(spec, str):
        spec = get_identity(spec)
    if max_n is None:
        max_n = DEFAULT_TIERS[spec.tier]
    caps = dict(ROUTE_CAPS)
    caps.update(route_caps or {})
    chosen = list(spec.routes)
    if routes is not None:
        wanted = set(routes)
        unknown = wanted - set(ROUTES)
        if unknown:
            raise ValueError(f"unknown route(s): {sorted(unknown)}")
        chosen = [r for r in spec.routes if r in wanted] or [spec.routes[0]]

    start = time.perf_counter()
    report = VerificationReport(identity=spec.id)
    if spec.note:
        report.notes.append(spec.note)
    ev = _Evaluator(spec, max_n)
    for n in range(spec.valid_from, max_n + 1):
        rhs = ev.rhs(n)
        for route in chosen:
            if n > caps.get(route, max_n):
                report.skipped.append((n, route, f"above {route} cap {caps[route]}"))
                continue
            try:
                lhs = ev.lhs(route, n)
            except _CAP_ERRORS as exc:
                report.skipped.append((n, route, str(exc)))
                continue
            report.records.append(Record(n, str(lhs), str(rhs), route, lhs == rhs))
    report.wall_time = time.perf_counter() - start
    return report


def run_all(max_n: int | Mapping[str, int] | None = None,
            routes: Iterable[str] | None = None,
            registry: Iterable[IdentitySpec] | None = None,
            identities: Iterable[str] | None = None,
            route_caps: Mapping[str, int] | None = None,
            workers: int = 1) -> tuple[list[VerificationReport], int]:
    """Run the registry; returns the reports (registry order) and exit status.

    ``max_n`` is either one bound for every identity or a mapping from tier
    name (theorem, hankel, deutsch, relation) to bound.
    """
    specs = list(REGISTRY if registry is None else registry)
    if identities is not None:
        specs = [get_identity(i, specs) for i in identities]
    tiers = dict(DEFAULT_TIERS)
    if isinstance(max_n, int):
        tiers = {k: max_n for k in tiers}
    elif max_n is not None:
        tiers.update(max_n)
    routes = None if routes is None else list(routes)

    def work(spec: IdentitySpec) -> VerificationReport:
        return run_identity(spec, tiers[spec.tier], routes, route_caps)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(work, specs))
    else:
        reports = [work(spec) for spec in specs]
    status = 0 if all(r.passed for r in reports) else 1
    return reports, status
