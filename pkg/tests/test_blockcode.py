"""Block codes: weights, distances, duals, Singleton classification."""

from __future__ import annotations

import random

import numpy as np
import pytest

from moakit import (
    Partition,
    block_independence,
    block_weight,
    dual_code,
    make_code,
    min_block_distance,
    parity_check,
    prime_power,
    singleton_report,
)
from moakit.blockcode import block_weights_rows, codewords
from moakit.errors import (
    AlphabetError,
    BadIndexError,
    CapExceededError,
    WrongLengthError,
    ZeroCodeError,
)
from generators import random_gf2_code, random_sizes
from oracles import min_block_distance_gf2


def test_partition_validation():
    p = Partition((3, 3, 1, 1, 1))
    assert p.num_blocks == 5 and p.total == 9
    assert p.starts == (0, 3, 6, 7, 8, 9)
    assert p.type_string() == "[3][3][1][1][1]"
    with pytest.raises(AlphabetError):
        Partition((1, 2))
    with pytest.raises(AlphabetError):
        Partition((2, 0))
    with pytest.raises(WrongLengthError):
        Partition(())


def test_partition_sort_with_permutation():
    p, perm = Partition.sort_with_permutation((1, 3, 2))
    assert p.sizes == (3, 2, 1)
    assert perm == (1, 2, 0)


def test_block_weight_counts_blocks_not_symbols():
    p = Partition((3, 3, 1, 1, 1))
    assert block_weight(p, (0, 0, 0, 0, 0, 0, 0, 0, 1)) == 1
    assert block_weight(p, (1, 0, 0, 1, 1, 0, 1, 1, 1)) == 5
    assert block_weight(p, (0,) * 9) == 0
    assert block_weight(p, (1, 1, 1, 0, 0, 0, 0, 0, 0)) == 1
    with pytest.raises(WrongLengthError):
        block_weight(p, (0,) * 8)


def test_block_weights_rows_matches_scalar():
    rng = random.Random(21)
    p = Partition((2, 2, 1))
    mat = np.array(
        [[rng.randint(0, 1) for _ in range(5)] for _ in range(20)], dtype=np.uint8
    )
    got = block_weights_rows(p, mat)
    for i in range(20):
        assert got[i] == block_weight(p, mat[i])


def test_min_distance_against_xor_oracle():
    rng = random.Random(22)
    for _ in range(80):
        code = random_gf2_code(rng, max_total=9)
        want = min_block_distance_gf2(code.gen.tolist(), code.partition.sizes)
        assert min_block_distance(code) == want


def test_min_distance_rejects_zero_code_and_cap():
    F = prime_power(2)
    p = Partition((2, 1))
    zero = make_code(p, F, np.zeros((1, 3), dtype=np.uint8))
    assert zero.k == 0
    with pytest.raises(ZeroCodeError):
        min_block_distance(zero)
    code = random_gf2_code(random.Random(1), sizes=(2, 2, 1))
    with pytest.raises(CapExceededError):
        min_block_distance(code, cap=1)


def test_dual_dimensions_and_involution():
    rng = random.Random(23)
    for _ in range(40):
        code = random_gf2_code(rng)
        dual = dual_code(code)
        assert code.k + dual.k == code.n
        again = dual_code(dual)
        assert again == code, "double dual must recover the row space"
        # every pair of codewords is orthogonal
        prod = (code.gen.astype(int) @ dual.gen.astype(int).T) % 2
        assert not prod.any()


def test_dual_over_gf4():
    F = prime_power(4)
    p = Partition((1, 1, 1))
    code = make_code(p, F, np.array([[1, 2, 3]], dtype=np.uint8))
    dual = dual_code(code)
    assert dual.k == 2
    # orthogonality under GF(4) arithmetic, not integer arithmetic
    for row in dual.gen:
        acc = 0
        for a, b in zip((1, 2, 3), row):
            acc = int(F.add[acc, F.mul[a, int(b)]])
        assert acc == 0


def test_parity_check_annihilates_codewords():
    rng = random.Random(24)
    code = random_gf2_code(rng, sizes=(2, 2, 1, 1))
    H = parity_check(code)
    words = codewords(code)
    prod = (words.astype(int) @ H.mat.astype(int).T) % 2
    assert not prod.any()
    assert H.block_columns(0).shape[1] == 2


def test_block_independence_matches_distance():
    # distance >= t + 1 iff every t-block column union is independent
    rng = random.Random(25)
    for _ in range(30):
        code = random_gf2_code(rng, max_total=8)
        H = parity_check(code)
        d = min_block_distance(code)
        from itertools import combinations

        s = code.partition.num_blocks
        for t in range(1, s + 1):
            all_indep = all(
                block_independence(H, blocks)
                for blocks in combinations(range(s), t)
            )
            assert all_indep == (d >= t + 1), (code.gen, t, d)


def test_block_independence_validates():
    code = random_gf2_code(random.Random(2), sizes=(2, 1, 1))
    H = parity_check(code)
    with pytest.raises(BadIndexError):
        block_independence(H, (0, 0))
    with pytest.raises(BadIndexError):
        block_independence(H, (3,))
    assert block_independence(H, ())


def test_singleton_bound_and_mds():
    rng = random.Random(26)
    for _ in range(60):
        code = random_gf2_code(rng)
        rep = singleton_report(code)
        rhs = sum(code.partition.sizes[: rep.distance - 1])
        assert rep.bound_rhs == rhs
        assert rep.slack == (code.n - code.k) - rhs >= 0
        assert rep.is_mds == (rep.slack == 0)


def test_distance_sum_bound():
    rng = random.Random(27)
    for _ in range(60):
        code = random_gf2_code(rng)
        d = min_block_distance(code)
        dd = min_block_distance(dual_code(code))
        assert d + dd <= code.n + 2


def test_make_code_validates():
    F = prime_power(2)
    p = Partition((2, 1))
    with pytest.raises(WrongLengthError):
        make_code(p, F, np.zeros((1, 4), dtype=np.uint8))
    with pytest.raises(AlphabetError):
        make_code(p, F, np.array([[0, 2, 0]], dtype=np.uint8))


def test_codewords_count():
    rng = random.Random(28)
    code = random_gf2_code(rng, sizes=(2, 2, 1))
    words = codewords(code)
    assert words.shape == (2**code.k, code.n)
    assert len({tuple(w) for w in words.tolist()}) == 2**code.k
