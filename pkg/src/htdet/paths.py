"""Lattice-path families built from u=(1,1), d=(1,-1) and h=(2,0) steps.

Paths are stored as words over ``"udh"``.  The *length* of a path is
``#u + #h`` (half the horizontal distance).  Plain families (Schroeder,
restricted Schroeder, Dyck, Fine) are produced by a pruned descent over
(remaining distance, height); decorated families enumerate a base word and
then every admissible set of marks or colors; tuple families walk the
compositions of the length budget.

Every count here comes from explicit generation, except :func:`count_paths`
and :func:`dyck_return_count` with ``method="count"``, which run a transfer
DP over the same step automaton and serve as the fast route for long
sequence prefixes.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple

from .trudi import compositions_of

__all__ = [
    "FAMILIES",
    "PLAIN_FAMILIES",
    "CAPS",
    "EnumerationCapExceeded",
    "Step",
    "LatticePath",
    "PathStats",
    "stats",
    "words",
    "enumerate_family",
    "is_member",
    "family_cardinality",
    "family_signed_sum",
    "count_paths",
    "dyck_return_count",
    "a030238_sum",
]

PLAIN_FAMILIES = ("P", "Q", "D", "E")
MARKED_FAMILIES = ("A", "Aprime", "B", "Bprime", "Dprime", "L")
COLORED_FAMILIES = {"Pstar3": 3, "Ptilde4": 4}
TUPLE_FAMILIES = ("Jtuple", "Mtuple", "Ttuple")
FAMILIES = PLAIN_FAMILIES + MARKED_FAMILIES + tuple(COLORED_FAMILIES) + TUPLE_FAMILIES
SIGNED_FAMILIES = ("A", "Aprime", "B", "Bprime", "Dprime", "L") + TUPLE_FAMILIES

# largest n that enumerate/count will accept; mutate to reconfigure
CAPS = {"plain": 12, "decorated": 9}


class EnumerationCapExceeded(ValueError):
    pass


def _check_family(tag: str) -> None:
    if tag not in FAMILIES:
        raise ValueError(f"unknown path family {tag!r}; expected one of {FAMILIES}")


def _check_cap(tag: str, n: int) -> None:
    kind = "plain" if tag in PLAIN_FAMILIES else "decorated"
    if n > CAPS[kind]:
        raise EnumerationCapExceeded(
            f"family {tag} at n={n} exceeds the {kind} enumeration cap {CAPS[kind]}"
        )


# ---------------------------------------------------------------------------
# Single paths and their statistics


class Step(NamedTuple):
    kind: str
    marked: bool = False
    color: int | None = None


class PathStats(NamedTuple):
    returns: int
    low_h: int
    peaks_h1: int
    special_valleys: int
    units: tuple[tuple[int, int], ...]
    primitive: bool
    short_units: int


def stats(path: "str | LatticePath") -> PathStats:
    """All path statistics in a single left-to-right pass.

    A return is an ``h`` or ``d`` step ending on the x-axis; units are the
    slices between consecutive returns, so a low ``h`` is a unit by itself.
    """
    word = path.word if isinstance(path, LatticePath) else path
    height = 0
    returns = low_h = peaks = valleys = short = 0
    units = []
    start = 0
    prev = ""
    for i, c in enumerate(word):
        if c == "u":
            if prev == "d" and height == 1:
                valleys += 1
            height += 1
        elif c == "d":
            if prev == "u" and height == 1:
                peaks += 1
            height -= 1
        elif c == "h":
            if height == 0:
                low_h += 1
        else:
            raise ValueError(f"bad step {c!r} in {word!r}")
        if height < 0:
            raise ValueError(f"path {word!r} goes below the axis")
        if height == 0 and c != "u":
            returns += 1
            units.append((start, i + 1))
            if i + 1 - start == 2 and c == "d":
                short += 1
            start = i + 1
        prev = c
    if height != 0:
        raise ValueError(f"path {word!r} does not end on the axis")
    return PathStats(returns, low_h, peaks, valleys, tuple(units), returns <= 1, short)


def return_positions(word: str) -> list[int]:
    """Indices of the steps that end on the x-axis (h or d)."""
    out = []
    height = 0
    for i, c in enumerate(word):
        height += 1 if c == "u" else -1 if c == "d" else 0
        if height == 0 and c != "u":
            out.append(i)
    return out


def low_h_positions(word: str) -> list[int]:
    out = []
    height = 0
    for i, c in enumerate(word):
        if c == "h" and height == 0:
            out.append(i)
        height += 1 if c == "u" else -1 if c == "d" else 0
    return out


@dataclass(frozen=True)
class LatticePath:
    """A step word with optional marks (on step indices) and colors.

    Serializes as space-separated steps, ``'`` for a mark and ``:k`` for a
    color, e.g. ``"u d h':2"``.
    """

    word: str
    marks: frozenset[int] = field(default_factory=frozenset)
    colors: tuple[tuple[int, int], ...] = ()

    @property
    def length(self) -> int:
        return self.word.count("u") + self.word.count("h")

    @property
    def steps(self) -> tuple[Step, ...]:
        color = dict(self.colors)
        return tuple(
            Step(c, i in self.marks, color.get(i)) for i, c in enumerate(self.word)
        )

    def stats(self) -> PathStats:
        return stats(self.word)

    def __str__(self) -> str:
        parts = []
        for s in self.steps:
            tok = s.kind + ("'" if s.marked else "")
            if s.color is not None:
                tok += f":{s.color}"
            parts.append(tok)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "LatticePath":
        word = []
        marks = set()
        colors = []
        for i, tok in enumerate(text.split()):
            kind, _, color = tok.partition(":")
            if kind.endswith("'"):
                marks.add(i)
                kind = kind[:-1]
            if kind not in ("u", "d", "h"):
                raise ValueError(f"bad step token {tok!r}")
            word.append(kind)
            if color:
                colors.append((i, int(color)))
        return cls("".join(word), frozenset(marks), tuple(colors))


# ---------------------------------------------------------------------------
# Plain word generation


class _Rules(NamedTuple):
    h: bool  # h steps allowed at all
    low_h: bool  # h steps allowed at height 0
    peak1: bool  # peaks of height 1 allowed


_FAMILY_RULES = {
    "P": _Rules(True, True, True),
    "Q": _Rules(True, False, True),
    "D": _Rules(False, False, True),
    "E": _Rules(False, False, False),
}


def _moves(rem: int, height: int, flag: bool, rules: _Rules):
    # flag: previous step was a u ending at height 1
    if height + 1 <= rem - 1:
        yield "u", 1, height + 1, height == 0 and not rules.peak1
    if height >= 1 and not flag:
        yield "d", 1, height - 1, False
    if rules.h and rem >= 2 and height <= rem - 2 and (height > 0 or rules.low_h):
        yield "h", 2, height, False


@lru_cache(maxsize=None)
def _suffixes(rem: int, height: int, flag: bool, rules: _Rules) -> tuple[str, ...]:
    if rem == 0:
        return ("",) if height == 0 else ()
    out = []
    for c, dx, h2, f2 in _moves(rem, height, flag, rules):
        out.extend(c + s for s in _suffixes(rem - dx, h2, f2, rules))
    return tuple(out)


def _prefix_groups(total: int, split: int, rules: _Rules) -> dict:
    """Prefixes reaching horizontal position >= split, grouped by end state."""
    groups: dict = {}
    frontier = [("", 0, 0, False)]
    while frontier:
        nxt = []
        for word, pos, height, flag in frontier:
            for c, dx, h2, f2 in _moves(total - pos, height, flag, rules):
                item = (word + c, pos + dx, h2, f2)
                if pos + dx >= split:
                    groups.setdefault((pos + dx, h2, f2), []).append(item[0])
                else:
                    nxt.append(item)
        frontier = nxt
    return groups


def _plain_words(n: int, rules: _Rules) -> Iterator[str]:
    total = 2 * n
    if total <= 16:
        yield from _suffixes(total, 0, False, rules)
        return
    # meet in the middle: enumerate prefixes to the midpoint, then join with
    # the memoized suffix tables
    groups = _prefix_groups(total, n, rules)
    for key in sorted(groups):
        pos, height, flag = key
        tails = _suffixes(total - pos, height, flag, rules)
        if not tails:
            continue
        for p in groups[key]:
            for s in tails:
                yield p + s


def words(tag: str, n: int) -> Iterator[str]:
    """Raw step words of a plain family (P, Q, D, E) of length n."""
    if tag not in _FAMILY_RULES:
        raise ValueError(f"{tag!r} is not a plain family")
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_cap(tag, n)
    return _plain_words(n, _FAMILY_RULES[tag])


@lru_cache(maxsize=64)
def _word_list(tag: str, n: int) -> tuple[str, ...]:
    return tuple(_plain_words(n, _FAMILY_RULES[tag]))


# ---------------------------------------------------------------------------
# Decorated and tuple families.  Raw members are (word, marks) pairs,
# (word, colors) pairs, or tuples of words; the sign exponent of each member
# is computed alongside.


def _subsets(items: list[int]) -> Iterator[tuple[int, ...]]:
    for mask in range(1 << len(items)):
        yield tuple(x for b, x in enumerate(items) if mask >> b & 1)


def _raw_members(tag: str, n: int) -> Iterator[tuple[object, int]]:
    """Yield (raw member, sign exponent) pairs."""
    if tag in PLAIN_FAMILIES:
        # streamed, not cached: |P_12| alone is 27 million words
        for w in _plain_words(n, _FAMILY_RULES[tag]):
            yield w, 0
    elif tag in ("A", "Aprime"):
        base = "P" if tag == "A" else "Q"
        for w in _word_list(base, n):
            rets = return_positions(w)
            if not rets:
                continue
            last = rets[-1]
            for sub in _subsets(rets[:-1]):
                yield (w, sub + (last,)), n - len(sub) - 1
    elif tag in ("B", "Bprime"):
        for w in _word_list("P", n):
            if not w.endswith("h"):
                continue
            lows = low_h_positions(w)
            if tag == "Bprime":
                yield (w, tuple(lows)), n - len(lows)
                continue
            for sub in _subsets(lows[:-1]):
                yield (w, sub + (lows[-1],)), n - len(sub) - 1
    elif tag == "Dprime":
        for w in _word_list("D", n):
            if w.endswith("ud"):
                yield (w, ()), n - stats(w).short_units
    elif tag == "L":
        for w in _word_list("E", n):
            closers = return_positions(w)
            units = len(closers)
            for sub in _subsets(closers[1:]):
                yield (w, sub), n - (units - len(sub))
    elif tag in COLORED_FAMILIES:
        k = COLORED_FAMILIES[tag]
        for w in _word_list("P", n):
            lows = low_h_positions(w)
            for cols in itertools.product(range(1, k + 1), repeat=len(lows)):
                yield (w, tuple(zip(lows, cols))), 0
    elif tag in TUPLE_FAMILIES:
        # component length = part + extra, drawn from `base`
        base, extra = {"Jtuple": ("Q", 1), "Mtuple": ("E", 1), "Ttuple": ("E", 2)}[tag]
        if n == 0:
            return
        for comp in compositions_of(n):
            pools = [_word_list(base, r + extra) for r in comp]
            exp = n - len(comp)
            for combo in itertools.product(*pools):
                yield combo, exp
    else:
        raise ValueError(f"unknown family {tag!r}")


def _wrap(tag: str, raw) -> "LatticePath | tuple[LatticePath, ...]":
    if tag in PLAIN_FAMILIES:
        return LatticePath(raw)
    if tag in TUPLE_FAMILIES:
        return tuple(LatticePath(w) for w in raw)
    word, deco = raw
    if tag in COLORED_FAMILIES:
        return LatticePath(word, colors=deco)
    return LatticePath(word, frozenset(deco))


def enumerate_family(tag: str, n: int, *, check: bool = False):
    """Every member of a family at length parameter n, each exactly once.

    With ``check=True`` each yielded member is re-validated by
    :func:`is_member`, which is written independently of the generator.
    """
    _check_family(tag)
    _check_cap(tag, n)
    for raw, _ in _raw_members(tag, n):
        obj = _wrap(tag, raw)
        if check and not is_member(tag, n, obj):
            raise AssertionError(f"generated non-member of {tag}_{n}: {obj}")
        yield obj


def family_cardinality(tag: str, n: int) -> int:
    _check_family(tag)
    _check_cap(tag, n)
    return sum(1 for _ in _raw_members(tag, n))


def family_signed_sum(tag: str, n: int) -> int:
    """Sum of (-1)^(sign statistic) over the family.

    The statistic is n minus: the number of marked returns (A, A'), marked
    low h steps (B, B'), short units (D'), unmarked units (L), or the number
    of components (tuple families).
    """
    _check_family(tag)
    if tag not in SIGNED_FAMILIES:
        raise ValueError(f"family {tag} carries no sign")
    _check_cap(tag, n)
    total = 0
    for _, exp in _raw_members(tag, n):
        total += -1 if exp & 1 else 1
    return total


# ---------------------------------------------------------------------------
# Independent membership predicates


def _is_schroeder(word: str, n: int) -> bool:
    try:
        stats(word)
    except ValueError:
        return False
    return word.count("u") + word.count("h") == n


def _peaks_h1(word: str) -> int:
    return stats(word).peaks_h1


def _plain_member(tag: str, word: str, n: int) -> bool:
    if not _is_schroeder(word, n):
        return False
    if tag == "P":
        return True
    if tag == "Q":
        return stats(word).low_h == 0
    if tag == "D":
        return "h" not in word
    if tag == "E":
        return "h" not in word and _peaks_h1(word) == 0
    raise ValueError(tag)


def _all_units_long(word: str) -> bool:
    return "h" not in word and word != "" and stats(word).short_units == 0


def is_member(tag: str, n: int, obj) -> bool:
    """Membership test written directly from the family definitions."""
    if tag in TUPLE_FAMILIES:
        if not isinstance(obj, tuple) or not obj:
            return False
        k = len(obj)
        ws = [p.word for p in obj]
        if any(p.marks or p.colors for p in obj):
            return False
        if tag == "Jtuple":
            ok = all(_plain_member("Q", w, len(w) - w.count("d")) for w in ws)
            ok = ok and all(w.count("u") + w.count("h") >= 2 for w in ws)
            return ok and sum(p.length for p in obj) == n + k
        if not all(_is_schroeder(w, p.length) and _all_units_long(w) for w, p in zip(ws, obj)):
            return False
        if tag == "Mtuple":
            return sum(p.length for p in obj) == n + k
        return all(p.length >= 3 for p in obj) and sum(p.length for p in obj) == n + 2 * k

    if not isinstance(obj, LatticePath):
        return False
    w = obj.word
    if not _is_schroeder(w, n):
        return False
    marks = set(obj.marks)
    rets = return_positions(w)
    if tag in PLAIN_FAMILIES:
        return not marks and not obj.colors and _plain_member(tag, w, n)
    if tag in COLORED_FAMILIES:
        lows = low_h_positions(w)
        cols = dict(obj.colors)
        k = COLORED_FAMILIES[tag]
        return not marks and sorted(cols) == lows and all(1 <= c <= k for c in cols.values())
    if obj.colors:
        return False
    if tag in ("A", "Aprime"):
        if tag == "Aprime" and stats(w).low_h:
            return False
        return bool(rets) and marks <= set(rets) and rets[-1] in marks
    if tag in ("B", "Bprime"):
        lows = set(low_h_positions(w))
        if not rets or rets[-1] not in marks or not marks <= lows:
            return False
        return tag == "B" or marks == lows
    if tag == "Dprime":
        return not marks and "h" not in w and n >= 1 and stats(w).units[-1] == (2 * n - 2, 2 * n)
    if tag == "L":
        if "h" in w or _peaks_h1(w) or not rets:
            return False
        return marks <= set(rets) and rets[0] not in marks
    raise ValueError(f"unknown family {tag!r}")


# ---------------------------------------------------------------------------
# Counting without generation


def count_paths(n: int, *, h: bool = True, low_h_weight: int = 1, peak1: bool = True) -> int:
    """Weighted count of Schroeder-type paths of length n by transfer DP.

    Each low h step contributes a factor ``low_h_weight`` (the number of
    colors it may carry; 0 forbids low h steps).  ``peak1=False`` forbids
    peaks of height 1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 2 * n
    # state: (height, flag) -> weighted count, indexed by horizontal position
    layers: list[dict] = [dict() for _ in range(total + 1)]
    layers[0][(0, False)] = 1
    for pos in range(total):
        for (height, flag), cnt in layers[pos].items():
            if height + 1 <= total - pos - 1:
                key = (height + 1, height == 0 and not peak1)
                layers[pos + 1][key] = layers[pos + 1].get(key, 0) + cnt
            if height >= 1 and not flag:
                key = (height - 1, False)
                layers[pos + 1][key] = layers[pos + 1].get(key, 0) + cnt
            if h and pos + 2 <= total and height <= total - pos - 2:
                w = low_h_weight if height == 0 else 1
                if w:
                    key = (height, False)
                    layers[pos + 2][key] = layers[pos + 2].get(key, 0) + cnt * w
    return layers[total].get((0, False), 0)


@lru_cache(maxsize=None)
def _dyck_return_tally(m: int) -> Counter:
    return Counter(stats(w).returns for w in _word_list("D", m))


@lru_cache(maxsize=None)
def _dyck_return_counts(m: int) -> tuple[int, ...]:
    # DP over (height, returns so far); entry j of the result is a(m, j)
    layers = [Counter({(0, 0): 1})]
    for pos in range(2 * m):
        nxt: Counter = Counter()
        for (height, r), cnt in layers[-1].items():
            if height + 1 <= 2 * m - pos - 1:
                nxt[(height + 1, r)] += cnt
            if height >= 1:
                nxt[(height - 1, r + (height == 1))] += cnt
        layers.append(nxt)
    out = [0] * (m + 1)
    for (height, r), cnt in layers[-1].items():
        if height == 0:
            out[r] += cnt
    return tuple(out)


def dyck_return_count(m: int, j: int, *, method: str = "enumerate") -> int:
    """a(m, j): Dyck paths of length m with exactly j returns.

    ``method="enumerate"`` tallies an explicit generation of the Dyck paths
    (subject to the plain cap); ``method="count"`` uses a DP.
    """
    if m < 0 or j < 0:
        return 0
    if method == "count":
        counts = _dyck_return_counts(m)
        return counts[j] if j < len(counts) else 0
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    _check_cap("D", m)
    return _dyck_return_tally(m)[j]


def a030238_sum(n: int, *, method: str = "enumerate") -> int:
    """sum_{j=1}^{floor((n+2)/2)} a(n+2-j, j)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(dyck_return_count(n + 2 - j, j, method=method) for j in range(1, (n + 2) // 2 + 1))
