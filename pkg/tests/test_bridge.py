"""Coordinate maps: round trips, preservation, trace duals, irredundancy."""

from __future__ import annotations

import random

import numpy as np
import pytest

from moakit import (
    CoordMap,
    array_to_code,
    code_to_array,
    dual_code,
    irredundancy_from_code,
    make_ext_field,
    min_block_distance,
    mixed_array,
    trace_dual,
)
from moakit import fixture_path, parse_code_file, parse_moa_file
from moakit.blockcode import codewords
from moakit.errors import (
    NotLinearError,
    PartitionMismatchError,
    SelfDualUnavailableError,
    ZeroCodeError,
)
from moakit.moa import min_hamming_distance
from generators import random_gf2_code


def _e1():
    arr, _ = parse_moa_file(fixture_path("moa8_5_t2.moa"))
    return arr


def _code():
    code, _ = parse_code_file(fixture_path("code10_4.code"))
    return code


def test_build_policies():
    ctx = CoordMap.build(2, (2, 1, 1), basis="auto")
    assert ctx.policy == "self_dual" and ctx.all_self_dual
    ctx = CoordMap.build(2, (2, 1, 1), basis="poly")
    assert ctx.policy == "poly" and not ctx.all_self_dual
    ctx = CoordMap.build(3, (2, 1), basis="auto")
    assert ctx.policy == "poly"  # GF(9) over GF(3) has no self-dual basis
    with pytest.raises(SelfDualUnavailableError):
        CoordMap.build(3, (2, 1), basis="self-dual")
    with pytest.raises(ValueError):
        CoordMap.build(2, (1, 1), basis="bogus")


def test_matrix_round_trip():
    for basis in ("self-dual", "poly"):
        ctx = CoordMap.build(2, (2, 2, 1), basis=basis)
        rng = random.Random(41)
        rows = np.array(
            [[rng.randrange(4), rng.randrange(4), rng.randrange(2)]
             for _ in range(20)],
            dtype=np.int64,
        )
        mat = ctx.to_matrix(rows)
        assert mat.shape == (20, 5)
        back = ctx.from_matrix(mat)
        assert np.array_equal(back, rows)
        row = tuple(int(x) for x in rows[0])
        assert ctx.from_vector(ctx.to_vector(row)) == row


def test_trace_inner_matches_gram_form():
    ctx = CoordMap.build(2, (2, 1), basis="poly")
    F = ctx.column_fields[0]
    base = ctx.base
    for a in range(4):
        for b in range(4):
            for x in range(2):
                for y in range(2):
                    got = ctx.trace_inner((a, x), (b, y))
                    want = int(base.add[F.trace(F.mul(a, b)), base.mul[x, y]])
                    assert got == want


def test_trace_inner_alpha_alpha():
    # Tr(x * x) = Tr(x^2) = 1 in GF(4)
    ctx = CoordMap.build(2, (2,), basis="self-dual")
    assert ctx.trace_inner((2,), (2,)) == 1
    assert ctx.trace_inner((2,), (3,)) == 0


def test_code_array_round_trip():
    code = _code()
    for basis in ("self-dual", "poly"):
        ctx = CoordMap.build(2, code.partition.sizes, basis=basis)
        arr, cert = code_to_array(ctx, code)
        assert cert.strength == 2
        back, ccert = array_to_code(ctx, arr)
        assert back == code
        assert ccert.dual_block_distance == cert.strength + 1


def test_array_to_code_accepts_any_same_frame_context():
    # symbols are canonical labels: an array parsed with polynomial-basis
    # columns must convert under a self-dual context of the same frame
    arr = _e1()
    ctx = CoordMap.build(2, arr.degrees, basis="self-dual")
    code, cert = array_to_code(ctx, arr)
    assert (code.n, code.k) == (6, 3)
    assert cert.strength == 2


def test_frame_mismatch_rejected():
    arr = _e1()
    ctx = CoordMap.build(2, (2, 1, 1), basis="poly")
    with pytest.raises(PartitionMismatchError):
        array_to_code(ctx, arr)
    with pytest.raises(PartitionMismatchError):
        trace_dual(ctx, arr)


def test_array_to_code_requires_linearity():
    ctx = CoordMap.build(2, (1, 1), basis="poly")
    arr = mixed_array(2, (1, 1), [[0, 1], [1, 0]])
    with pytest.raises(NotLinearError):
        array_to_code(ctx, arr)
    with pytest.raises(NotLinearError):
        trace_dual(ctx, arr)


def test_distance_preserved_through_map():
    rng = random.Random(42)
    for _ in range(30):
        code = random_gf2_code(rng, max_total=8)
        ctx = CoordMap.build(2, code.partition.sizes, basis="poly")
        arr, _ = code_to_array(ctx, code)
        assert min_hamming_distance(arr) == min_block_distance(code)


def test_trace_dual_involution_and_sizes():
    arr = _e1()
    for basis in ("self-dual", "poly"):
        ctx = CoordMap.build(2, arr.degrees, basis=basis)
        td = trace_dual(ctx, arr)
        assert arr.M * td.M == 2**ctx.n
        assert np.array_equal(trace_dual(ctx, td).rows, arr.rows)


def test_trace_dual_matches_euclidean_dual_under_self_dual():
    rng = random.Random(43)
    for _ in range(20):
        code = random_gf2_code(rng, max_total=8)
        ctx = CoordMap.build(2, code.partition.sizes, basis="self-dual")
        arr, _ = code_to_array(ctx, code)
        td = trace_dual(ctx, arr)
        got = {tuple(r) for r in ctx.to_matrix(td.rows).tolist()}
        want = {tuple(w) for w in codewords(dual_code(code)).tolist()}
        assert got == want


def test_irredundancy_from_code_clauses():
    code = _code()
    ctx = CoordMap.build(2, code.partition.sizes, basis="self-dual")
    rep, primal, dual_arr = irredundancy_from_code(ctx, code)
    assert rep.primal_irredundant and rep.dual_irredundant is False
    assert rep.both_irredundant is False
    assert primal.M == 2**code.k and dual_arr.M == 2**(code.n - code.k)
    # polynomial bases cannot assert the dual clause
    ctx_p = CoordMap.build(2, code.partition.sizes, basis="poly")
    rep_p, _, _ = irredundancy_from_code(ctx_p, code)
    assert rep_p.dual_irredundant is None and rep_p.both_irredundant is None
    with pytest.raises(SelfDualUnavailableError):
        irredundancy_from_code(ctx_p, code, dual_clause=True)


def test_irredundancy_from_code_rejects_degenerate():
    from moakit import Partition, make_code, prime_power

    F = prime_power(2)
    p = Partition((2, 1))
    zero = make_code(p, F, np.zeros((1, 3), dtype=np.uint8))
    ctx = CoordMap.build(2, (2, 1), basis="self-dual")
    with pytest.raises(ZeroCodeError):
        irredundancy_from_code(ctx, zero)
    everything = make_code(p, F, np.eye(3, dtype=np.uint8))
    with pytest.raises(ZeroCodeError):
        irredundancy_from_code(ctx, everything)


def test_context_array_constructor_checks_alphabet():
    ctx = CoordMap.build(2, (2, 1), basis="poly")
    arr = ctx.array(np.array([[0, 0], [3, 1]], dtype=np.int64))
    assert arr.M == 2
    from moakit.errors import AlphabetError

    with pytest.raises(AlphabetError):
        ctx.array(np.array([[4, 0]], dtype=np.int64))
