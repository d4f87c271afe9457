import warnings

import pytest

from htdet import bfile
from htdet.bfile import BFileError, format_bfile, load_fixture, oeis_crosscheck, parse_bfile, read_bfile, write_bfile
from htdet.sequences import SequenceId, SequencePrefix, prefix


def test_write_catalan_prefix(tmp_path):
    path = tmp_path / "cat.txt"
    write_bfile(path, prefix(SequenceId.Catalan, 5))
    assert path.read_bytes() == b"0 1\n1 1\n2 2\n3 5\n4 14\n"


def test_read_roundtrip(tmp_path):
    path = tmp_path / "b.txt"
    pre = prefix(SequenceId.U, 12)
    write_bfile(path, pre, comments=["U values"])
    back = read_bfile(path, SequenceId.U)
    assert back.values == pre.values
    assert back.offset == 1


def test_comments_and_blank_lines():
    assert parse_bfile("# header\n\n0 5\n1 -7\n") == [(0, 5), (1, -7)]


def test_malformed_line_names_line():
    with pytest.raises(BFileError, match="line 3"):
        parse_bfile("1 1\n2 1\n3 x\n")


def test_noncontiguous_rejected():
    with pytest.raises(BFileError):
        parse_bfile("0 1\n2 2\n")


def test_big_values():
    v = 10 ** 80 + 7
    assert parse_bfile(f"0 {v}\n") == [(0, v)]


def test_fine_fixture():
    pre = load_fixture(SequenceId.Fine)
    assert pre.values[:8] == (0, 1, 0, 1, 2, 6, 18, 57)
    assert len(pre.values) >= 20


@pytest.mark.parametrize("sid", list(SequenceId))
def test_fixture_crosscheck(sid):
    rep = oeis_crosscheck(sid)
    assert rep.passed
    assert len(rep.records) >= 20


def test_short_fixture_warns_but_passes():
    short = SequencePrefix(SequenceId.Catalan, (1, 1, 2), "fixture", 0)
    with pytest.warns(UserWarning, match="short"):
        rep = oeis_crosscheck(SequenceId.Catalan, reference=short)
    assert rep.passed
    assert len(rep.records) == 3


def test_offset_mismatch_reported():
    shifted = SequencePrefix(SequenceId.U, tuple(range(25)), "fixture", 0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = oeis_crosscheck(SequenceId.U, reference=shifted)
    assert not rep.passed
    assert any("offset" in note for note in rep.notes)


def test_wrong_value_fails():
    vals = list(load_fixture(SequenceId.Catalan).values)
    vals[7] += 1
    rep = oeis_crosscheck(SequenceId.Catalan, reference=SequencePrefix(SequenceId.Catalan, tuple(vals), "fixture", 0))
    assert not rep.passed
    assert [r.n for r in rep.records if not r.passed] == [7]


def test_format_has_lf_only():
    text = format_bfile(prefix(SequenceId.Fine, 4))
    assert "\r" not in text and text.endswith("\n")


def test_remote_never_used_by_default(monkeypatch):
    def boom(*a, **k):
        raise AssertionError("network touched")

    monkeypatch.setattr(bfile, "_fetch_remote", boom)
    assert oeis_crosscheck(SequenceId.Fine).passed
