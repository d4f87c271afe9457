"""OEIS b-file reading/writing and the fixture cross-check."""

from __future__ import annotations

import time
import urllib.request
import warnings
from importlib import resources
from pathlib import Path

from . import sequences
from .numeric import parse_int
from .report import Record, VerificationReport
from .sequences import OEIS, OFFSETS, SequenceId, SequencePrefix

__all__ = [
    "BFileError",
    "parse_bfile",
    "read_bfile",
    "format_bfile",
    "write_bfile",
    "load_fixture",
    "oeis_crosscheck",
    "MIN_FIXTURE_TERMS",
]

# fixtures shorter than this trigger a warning
MIN_FIXTURE_TERMS = 20


class BFileError(ValueError):
    pass


def parse_bfile(text: str, name: str = "<b-file>") -> list[tuple[int, int]]:
    """(n, value) pairs in ascending, gap-free order of n."""
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"{name}: line {lineno}: expected 'n value', got {raw!r}")
        try:
            n, v = parse_int(fields[0]), parse_int(fields[1])
        except ValueError:
            raise BFileError(f"{name}: line {lineno}: malformed entry {raw!r}") from None
        if pairs and n != pairs[-1][0] + 1:
            raise BFileError(
                f"{name}: line {lineno}: index {n} does not follow {pairs[-1][0]}"
            )
        pairs.append((n, v))
    return pairs


def read_bfile(path, sid=None) -> SequencePrefix:
    path = Path(path)
    pairs = parse_bfile(path.read_text(encoding="ascii"), str(path))
    if not pairs:
        raise BFileError(f"{path}: no entries")
    sid = sequences.parse_sequence_id(sid) if sid is not None else _guess_id(path)
    return SequencePrefix(sid, tuple(v for _, v in pairs), "bfile", pairs[0][0])


def _guess_id(path: Path) -> SequenceId | None:
    try:
        return sequences.parse_sequence_id(path.stem)
    except ValueError:
        return None


def format_bfile(prefix: SequencePrefix, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines += [f"{n} {v}" for n, v in prefix.items()]
    return "".join(line + "\n" for line in lines)


def write_bfile(path, prefix: SequencePrefix, comments: list[str] | None = None) -> None:
    Path(path).write_bytes(format_bfile(prefix, comments).encode("ascii"))


def load_fixture(sid) -> SequencePrefix:
    sid = sequences.parse_sequence_id(sid)
    res = resources.files("htdet") / "data" / "bfiles" / f"{sid.value}.txt"
    pairs = parse_bfile(res.read_text(encoding="ascii"), f"fixture {sid.value}")
    return SequencePrefix(sid, tuple(v for _, v in pairs), "bfile", pairs[0][0])


def _fetch_remote(sid: SequenceId, timeout: float = 30.0) -> SequencePrefix:
    anum = OEIS.get(sid)
    if anum is None:
        raise ValueError(f"{sid} has no OEIS entry to fetch")
    url = f"https://oeis.org/{anum}/b{anum[1:]}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        text = resp.read().decode("ascii", errors="replace")
    pairs = parse_bfile(text, url)
    return SequencePrefix(sid, tuple(v for _, v in pairs), "remote", pairs[0][0])


def oeis_crosscheck(sid, source: str = "fixture", *, max_terms: int | None = None,
                    reference: SequencePrefix | None = None) -> VerificationReport:
    """Compare generated terms with a b-file on every overlapping index.

    ``reference`` overrides the b-file (used to test short or shifted files).
    Remote fetching happens only with ``source="remote"``.
    """
    sid = sequences.parse_sequence_id(sid)
    start = time.perf_counter()
    if reference is None:
        if source == "fixture":
            reference = load_fixture(sid)
        elif source == "remote":
            reference = _fetch_remote(sid)
        else:
            raise ValueError(f"unknown source {source!r}")
    notes = []
    offset = OFFSETS[sid]
    ok = True
    if reference.offset != offset:
        notes.append(f"index offset mismatch: b-file starts at {reference.offset}, expected {offset}")
        ok = False
    items = reference.items()
    if max_terms is not None:
        items = items[:max_terms]
    if len(items) < MIN_FIXTURE_TERMS:
        msg = f"short b-file for {sid.value}: {len(items)} terms"
        notes.append(msg)
        warnings.warn(msg, stacklevel=2)
    records = []
    for n, expected in items:
        if n < offset:
            continue
        got = sequences.value(sid, n)
        records.append(Record(n, str(got), str(expected), source, got == expected))
    return VerificationReport(
        identity=f"oeis.{sid.value}",
        records=records,
        notes=notes,
        forced_fail=not ok,
        wall_time=time.perf_counter() - start,
    )
