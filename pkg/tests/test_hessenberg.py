import itertools
import logging
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from htdet.hessenberg import (
    HTSpec,
    build_matrix,
    d_minus,
    d_plus,
    det_fraction_free,
    det_prefixes,
    det_recurrence,
    deutsch_fine,
    forward_dets,
    hankel_det,
    invert_sequence,
)
from htdet.sequences import SequenceId, catalan, fine, large_schroeder, small_schroeder

import oracles


@pytest.mark.parametrize(
    "a0,entries,expected",
    [
        (1, [2, 6], [[2, 1], [6, 2]]),
        (-1, [1], [[1]]),
        (1, [1, 1, 2], [[1, 1, 0], [1, 1, 1], [2, 1, 1]]),
    ],
)
def test_build_matrix(a0, entries, expected):
    assert build_matrix(HTSpec(a0, entries)) == expected


def test_htspec_validation():
    with pytest.raises(ValueError):
        HTSpec(0, [1])
    with pytest.raises(ValueError):
        HTSpec(1, [])


@pytest.mark.parametrize("a0,entries,expected", [(1, [2, 6], -2), (1, [2, 6, 22], 6), (-1, [2, 6, 22], 54)])
def test_det_recurrence_examples(a0, entries, expected):
    assert det_recurrence(HTSpec(a0, entries)) == expected
    assert oracles.leibniz_det(oracles.ht_matrix(a0, entries)) == expected


@pytest.mark.parametrize("m,expected", [([[1, 1], [0, 1]], 1), ([[0, 1], [1, 2]], -1), ([[2, 1], [6, 2]], -2)])
def test_fraction_free_examples(m, expected):
    assert det_fraction_free(m) == expected


def test_fraction_free_logs_row_swap(caplog):
    with caplog.at_level(logging.DEBUG, logger="htdet.hessenberg"):
        assert det_fraction_free([[0, 1], [1, 2]]) == -1
    assert any("swap" in r.getMessage() for r in caplog.records)


def test_fraction_free_singular():
    assert det_fraction_free([[1, 2], [2, 4]]) == 0
    assert det_fraction_free([[0, 0], [0, 0]]) == 0


def test_d_plus_minus_examples():
    t = [fine(k) for k in range(1, 4)]
    assert d_plus(t) == 2
    assert d_minus(t) == 2
    assert d_plus([3, 11]) == -2


def test_oracle_equivalence_random_specs():
    rng = random.Random(20240531)
    for _ in range(200):
        a0 = rng.choice([-1, 1, 2, -3])
        n = rng.randint(1, 12)
        entries = [rng.randint(-9, 9) for _ in range(n)]
        spec = HTSpec(a0, entries)
        assert det_recurrence(spec) == det_fraction_free(build_matrix(spec))
        if n <= 6:
            assert det_recurrence(spec) == oracles.leibniz_det(oracles.ht_matrix(a0, entries))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=10))
def test_inversion_roundtrip(a):
    b = forward_dets(a)
    assert b[0] == 1
    assert invert_sequence(b) == a


def test_prefixes_are_leading_minors():
    entries = [3, -1, 4, 1, -5, 9]
    dets = det_prefixes(2, entries)
    for n in range(1, len(entries) + 1):
        assert dets[n - 1] == oracles.gauss_det(oracles.ht_matrix(2, entries[:n]))


def test_invert_unit_bidiagonal():
    assert invert_sequence([1, 1] + [0] * 8) == [1] * 9


def test_invert_catalan_roundtrip():
    b = [catalan(k) for k in range(9)]
    assert forward_dets(invert_sequence(b)) == b


def test_invert_schroeder_if_and_only_if():
    # forward dets of (S_0, S_1, ...) are (-1)^(n-1) s_(n-1)
    a = [large_schroeder(k) for k in range(10)]
    b = forward_dets(a)
    assert b[1:] == [(-1) ** (n - 1) * small_schroeder(n - 1) for n in range(1, 11)]
    assert invert_sequence(b) == a


def test_invert_rejects_bad_b0():
    with pytest.raises(ValueError):
        invert_sequence([2, 1])


def test_signature_bridge():
    # with a0 = -1 every composition contributes with a plus sign
    rng = random.Random(7)
    for n in range(1, 11):
        a = [rng.randint(-5, 5) for _ in range(n)]
        total = 0
        for cuts in itertools.product([0, 1], repeat=n - 1):
            parts, size = [], 1
            for c in cuts:
                if c:
                    parts.append(size)
                    size = 1
                else:
                    size += 1
            parts.append(size)
            prod = 1
            for p in parts:
                prod *= a[p - 1]
            total += prod
        assert d_minus(a) == total


@pytest.mark.parametrize("sid,offset,n,expected", [
    (SequenceId.LargeSchroeder, 0, 2, 2),
    (SequenceId.Fine, 1, 3, 1),
    (SequenceId.Fine, 2, 2, -1),
])
def test_hankel_examples(sid, offset, n, expected):
    assert hankel_det(sid, offset, n) == expected


def test_hankel_laws():
    for n in range(1, 8):
        assert hankel_det(SequenceId.LargeSchroeder, 0, n) == 2 ** (n * (n - 1) // 2)
        assert hankel_det(SequenceId.LargeSchroeder, 1, n) == 2 ** (n * (n + 1) // 2)
        assert hankel_det(SequenceId.Fine, 1, n) == 1
        assert hankel_det(SequenceId.Fine, 2, n) == 1 - n
        if n <= 5:
            m = [[large_schroeder(i + j) for j in range(n)] for i in range(n)]
            assert oracles.leibniz_det(m) == 2 ** (n * (n - 1) // 2)


@pytest.mark.parametrize("n,expected", [(1, 1), (3, 1), (6, 18)])
def test_deutsch_examples(n, expected):
    assert deutsch_fine(n) == expected


def test_deutsch_to_15():
    for n in range(1, 16):
        assert deutsch_fine(n) == fine(n)
