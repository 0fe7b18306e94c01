"""Arrays: strength, indices, distances, Singleton sandwich, irredundancy."""

from __future__ import annotations

import math
import random

import numpy as np
import pytest

from moakit import (
    MixedArray,
    extremal_check,
    index_table,
    is_irredundant,
    is_linear,
    max_strength,
    min_hamming_distance,
    min_index,
    mixed_array,
    singleton_analysis,
    subset_index,
    verify_strength,
)
from moakit.errors import (
    AlphabetError,
    BadIndexError,
    NotUniformError,
    StrengthError,
    WrongLengthError,
)
from moakit import fixture_path, parse_moa_file
from moakit._reference import ARRAY_EXPECTED
from oracles import min_hamming_distance_rows, strength_by_counting


def _load(name):
    arr, _ = parse_moa_file(fixture_path(name))
    return arr


def test_mixed_array_validation():
    with pytest.raises(AlphabetError):
        mixed_array(2, (1, 2), [[0, 0]])  # degrees must be nonincreasing
    with pytest.raises(AlphabetError):
        mixed_array(2, (2, 1), [[4, 0]])  # symbol out of range
    with pytest.raises(WrongLengthError):
        mixed_array(2, (1, 1), [])


def test_subset_index_and_witness():
    arr = _load("moa8_5_t2.moa")
    assert subset_index(arr, (0, 1)) == 1
    assert subset_index(arr, (3, 4)) == 2
    with pytest.raises(NotUniformError) as e:
        subset_index(arr, (0, 1, 2))
    err = e.value
    (ta, ca), (tb, cb) = err.witness
    assert ca != cb
    assert err.columns == (0, 1, 2)


def test_index_table_complete():
    arr = _load("moa8_5_t2.moa")
    table = index_table(arr, 2)
    assert len(table) == math.comb(5, 2)
    for cols, lam in table.items():
        space = math.prod(arr.alphabet_sizes[c] for c in cols)
        assert lam * space == arr.M


def test_strength_against_counting_oracle():
    rng = random.Random(31)
    for name in ARRAY_EXPECTED:
        arr = _load(name)
        ms = max_strength(arr)
        assert ms == ARRAY_EXPECTED[name]["max_strength"]
        rows = arr.rows.tolist()
        assert strength_by_counting(rows, arr.alphabet_sizes, ms)
        if ms < arr.s:
            assert not strength_by_counting(rows, arr.alphabet_sizes, ms + 1)
            assert not verify_strength(arr, ms + 1)


def test_min_index_formula():
    arr = _load("irmoa16_6_t2.moa")
    assert min_index(arr, 1) == 4
    assert min_index(arr, 2) == 1
    with pytest.raises(BadIndexError):
        min_index(arr, 0)
    with pytest.raises(StrengthError):
        min_index(arr, 3)


def test_min_hamming_distance_matches_oracle():
    for name in ARRAY_EXPECTED:
        arr = _load(name)
        assert min_hamming_distance(arr) == min_hamming_distance_rows(arr.rows)


def test_min_hamming_distance_degenerate():
    one = mixed_array(2, (1, 1), [[0, 1]])
    assert min_hamming_distance(one) == 3  # single row: s + 1 by convention
    dup = mixed_array(2, (1, 1), [[0, 1], [0, 1]])
    assert min_hamming_distance(dup) == 0


def test_is_linear_verdicts():
    arr = _load("moa8_5_t2.moa")
    assert is_linear(arr)
    assert arr.linearity == "verified_linear"
    # swap two symbols in one column: still an OA-shaped table, not a subspace
    rows = arr.rows.copy()
    rows[0], rows[1] = arr.rows[1].copy(), arr.rows[0].copy()
    shuffled = mixed_array(2, arr.degrees, rows)
    assert is_linear(shuffled)  # row order cannot matter
    broken = arr.rows.copy()
    broken[0, 4] = 1  # no zero row any more
    assert not is_linear(mixed_array(2, arr.degrees, broken))
    odd_size = mixed_array(2, (1,), [[0], [1], [0]])
    assert not is_linear(odd_size)


def test_is_irredundant_cross_check():
    arr = _load("moa8_5_t2.moa")
    assert is_irredundant(arr, 2, cross_check=True)
    assert not is_irredundant(arr, 3, cross_check=True)
    assert is_irredundant(arr, 0, cross_check=True)
    with pytest.raises(BadIndexError):
        is_irredundant(arr, 9)


def test_irredundancy_needs_two_t_le_s():
    # strength 2, s = 3: irredundant would need d_H >= 3 over 3 columns
    arr = _load("moa8_3_t2.moa")
    rep = singleton_analysis(arr, 2)
    assert not rep.is_irredundant
    assert not rep.two_t_le_s


def test_extremal_criterion_applies_on_e1():
    arr = _load("moa8_5_t2.moa")
    chk = extremal_check(arr, 2)
    assert chk.applies and not chk.clamped
    assert chk.is_mds and chk.lambda_min == 1


def test_extremal_criterion_clamped_when_s_equals_2t():
    # s = 2t = 2: the degree window t+1 .. 2t+1 sticks out past s.
    # The repetition array has strength 1 and distance 2, so it is
    # irredundant, and M = 2 meets the upper bound.
    rep = mixed_array(2, (1, 1), [[0, 0], [1, 1]])
    chk = extremal_check(rep, 1)
    assert chk.applies and chk.clamped
    assert chk.is_mds and chk.lambda_min == 1
    assert "clamped" in chk.note


def test_extremal_criterion_refuses_wrong_t():
    arr = _load("irmoa16_6_t2.moa")
    chk = extremal_check(arr, 2)
    assert not chk.applies


def test_singleton_analysis_fixture_values():
    for name, want in ARRAY_EXPECTED.items():
        arr = _load(name)
        rep = singleton_analysis(arr, want["max_strength"])
        assert (rep.bound_lower, rep.rows, rep.bound_upper, rep.bound_loose) \
            == want["bounds"]
        assert rep.is_mds == want["is_mds"]
        assert rep.is_almost_mds == want["is_almost_mds"]
        assert rep.singleton_defect == want["defect"]
        assert rep.parameters == want["parameters"]


def test_singleton_analysis_duplicate_rows():
    dup = mixed_array(2, (1, 1), [[0, 0], [0, 0], [1, 1], [1, 1]])
    rep = singleton_analysis(dup, 1)
    assert rep.min_hamming_distance == 0
    assert "duplicate_rows" in rep.notes
    assert not rep.is_mds and not rep.is_irredundant


def test_report_dict_round_trip():
    arr = _load("moa8_5_t2.moa")
    rep = singleton_analysis(arr, 2)
    d = rep.to_dict()
    assert d["parameters"] == rep.parameters
    assert d["indices"][0]["cols"] == [1, 2]
    import json

    json.dumps(d)  # must be serializable as-is
