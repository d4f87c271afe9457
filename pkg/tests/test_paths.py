import pytest
from hypothesis import given
from hypothesis import strategies as st

from htdet import paths
from htdet import sequences as sq
from htdet.hessenberg import d_minus, d_plus
from htdet.numeric import binomial
from htdet.paths import EnumerationCapExceeded, LatticePath

import oracles

S, s, t, C = sq.large_schroeder, sq.small_schroeder, sq.fine, sq.catalan


@pytest.mark.parametrize("tag", ["P", "Q", "D", "E"])
@pytest.mark.parametrize("n", range(0, 6))
def test_plain_generator_matches_brute_filter(tag, n):
    assert sorted(paths.words(tag, n)) == sorted(oracles.brute_family(tag, n))


def test_meet_in_the_middle_matches_brute():
    # n = 9 and 10 are past the split threshold
    for n in (9, 10):
        assert sorted(paths.words("D", n)) == sorted(oracles.brute_dyck(n))
        fine_paths = sorted(w for w in oracles.brute_dyck(n) if not _h1_peak(w))
        assert sorted(paths.words("E", n)) == fine_paths


def _h1_peak(w):
    hs = oracles.heights(w)
    return any(w[i:i + 2] == "ud" and hs[i + 1] == 1 for i in range(len(w) - 1))


@pytest.mark.parametrize("tag,n,expected", [("P", 2, 6), ("E", 2, 1), ("E", 3, 2), ("Q", 3, 11)])
def test_cardinality_examples(tag, n, expected):
    assert paths.family_cardinality(tag, n) == expected


def test_stats_examples():
    a = paths.stats("uudd")
    assert (a.returns, a.primitive, a.peaks_h1) == (1, True, 0)
    b = paths.stats("udud")
    assert (b.returns, b.short_units, b.peaks_h1) == (2, 2, 2)
    c = paths.stats("h")
    assert (c.returns, c.low_h, c.units) == (1, 1, ((0, 1),))


def test_stats_valleys_and_units():
    st_ = paths.stats("uudduduudd")
    assert st_.special_valleys == 0
    assert st_.returns == 3
    assert st_.units == ((0, 4), (4, 6), (6, 10))
    assert paths.stats("uududd").special_valleys == 1


@pytest.mark.parametrize("bad", ["d", "uu", "ux", "udd"])
def test_stats_rejects(bad):
    with pytest.raises(ValueError):
        paths.stats(bad)


def test_returns_against_brute():
    for n in range(1, 6):
        for w in paths.words("P", n):
            assert paths.return_positions(w) == oracles.brute_returns(w)
            assert paths.stats(w).returns == len(oracles.brute_returns(w))


@pytest.mark.parametrize("tag", paths.FAMILIES)
def test_enumeration_yields_members(tag):
    n = 5 if tag in paths.PLAIN_FAMILIES else 4
    members = list(paths.enumerate_family(tag, n, check=True))
    assert len(members) == len(set(members)) == paths.family_cardinality(tag, n)
    for m in members:
        for p in (m if isinstance(m, tuple) else (m,)):
            hs = oracles.heights(p.word)
            assert min(hs) >= 0 and hs[-1] == 0


def test_predicates_reject_outsiders():
    assert not paths.is_member("Q", 1, LatticePath("h"))
    assert not paths.is_member("E", 1, LatticePath("ud"))
    assert not paths.is_member("A", 1, LatticePath("ud"))  # final return unmarked
    assert paths.is_member("A", 1, LatticePath("ud", frozenset({1})))
    assert not paths.is_member("Pstar3", 1, LatticePath("h", colors=((0, 4),)))
    assert paths.is_member("Ptilde4", 1, LatticePath("h", colors=((0, 4),)))


def test_cap_enforced():
    with pytest.raises(EnumerationCapExceeded):
        paths.family_cardinality("A", 10)
    with pytest.raises(EnumerationCapExceeded):
        next(paths.enumerate_family("P", 13))
    with pytest.raises(ValueError):
        paths.family_cardinality("Z", 2)


def test_unsigned_family_has_no_signed_sum():
    with pytest.raises(ValueError):
        paths.family_signed_sum("P", 3)


def test_cardinality_laws_to_9():
    for n in range(1, 10):
        assert paths.family_cardinality("P", n) == S(n)
        assert paths.family_cardinality("Q", n) == s(n)
        assert paths.family_cardinality("D", n) == C(n)
        assert paths.family_cardinality("E", n - 1) == t(n)
        assert paths.family_cardinality("Dprime", n) == C(n - 1)
        assert paths.family_cardinality("B", n) == s(n)
        assert paths.family_cardinality("Bprime", n) == S(n - 1)


@pytest.mark.parametrize("tag,n,expected", [("B", 3, 11), ("A", 2, 10), ("Pstar3", 1, 4)])
def test_family_count_examples(tag, n, expected):
    assert paths.family_cardinality(tag, n) == expected


@pytest.mark.parametrize("tag,n,expected", [("A", 3, 6), ("Dprime", 3, 2), ("Ttuple", 3, 2)])
def test_signed_sum_examples(tag, n, expected):
    assert paths.family_signed_sum(tag, n) == expected


SIGNED = {
    "A": lambda n: [S(i) for i in range(1, n + 1)],
    "Aprime": lambda n: [s(i) for i in range(1, n + 1)],
    "B": lambda n: [S(i) for i in range(n)],
    "Bprime": lambda n: [s(i) for i in range(n)],
    "Dprime": lambda n: [t(i) for i in range(1, n + 1)],
    "L": lambda n: [t(i) for i in range(2, n + 2)],
    "Jtuple": lambda n: [s(i) for i in range(2, n + 2)],
    "Mtuple": lambda n: [t(i) for i in range(3, n + 3)],
    "Ttuple": lambda n: [t(i) for i in range(4, n + 4)],
}
COUNTED = ("A", "Aprime", "B", "Bprime", "Dprime", "L")


@pytest.mark.parametrize("tag", sorted(SIGNED))
def test_signed_sums_match_plus_determinants(tag):
    for n in range(1, 7):
        assert paths.family_signed_sum(tag, n) == d_plus(SIGNED[tag](n))


@pytest.mark.parametrize("tag", COUNTED)
def test_cardinalities_match_minus_determinants(tag):
    for n in range(1, 7):
        assert paths.family_cardinality(tag, n) == d_minus(SIGNED[tag](n))


def test_doubling_law():
    for n in range(1, 7):
        assert paths.family_cardinality("A", n) == 2 * paths.family_cardinality("Ptilde4", n - 1)


def test_count_paths_matches_enumeration():
    for n in range(7):
        assert paths.count_paths(n) == S(n)
        assert paths.count_paths(n, h=False) == C(n)
        assert paths.count_paths(n, low_h_weight=0) == s(n)
        assert paths.count_paths(n, low_h_weight=3) == paths.family_cardinality("Pstar3", n)
        assert paths.count_paths(n, low_h_weight=4) == paths.family_cardinality("Ptilde4", n)
        no_peak = sum(1 for w in paths.words("Q", n) if paths.stats(w).peaks_h1 == 0)
        assert paths.count_paths(n, low_h_weight=0, peak1=False) == no_peak


@pytest.mark.parametrize("m,j,expected", [(2, 1, 1), (3, 1, 2), (2, 2, 1), (4, 5, 0)])
def test_dyck_return_count(m, j, expected):
    assert paths.dyck_return_count(m, j) == expected
    assert paths.dyck_return_count(m, j, method="count") == expected


def test_dyck_return_ballot_formula():
    for m in range(1, 11):
        for j in range(1, m + 1):
            ballot = j * binomial(2 * m - j, m) // (2 * m - j)
            assert paths.dyck_return_count(m, j) == ballot


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 3)])
def test_a030238_sum(n, expected):
    assert paths.a030238_sum(n) == expected


def test_a030238_sum_matches_plus_determinant():
    for n in range(1, 10):
        assert (-1) ** (n - 1) * paths.a030238_sum(n - 1) == d_plus([t(i) for i in range(3, n + 3)])


def test_serialization():
    p = LatticePath("udh", frozenset({2}), ((2, 2),))
    assert str(p) == "u d h':2"
    assert LatticePath.parse("u d h':2") == p
    assert p.length == 2
    with pytest.raises(ValueError):
        LatticePath.parse("u x")


@given(st.integers(2, 4), st.data())
def test_serialization_roundtrip(n, data):
    tag = data.draw(st.sampled_from(["A", "B", "L", "Pstar3", "Ptilde4"]))
    members = list(paths.enumerate_family(tag, n))
    m = data.draw(st.sampled_from(members))
    assert LatticePath.parse(str(m)) == m
