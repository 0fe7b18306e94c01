"""Release gate: nine end-to-end checks, one test per criterion.

Every numeric claim here is either frozen in _reference or re-derived by
the bit-level oracles in tests/oracles.py, so a pass means the library and
an independent implementation agree on the same instances.  Each test ends
by printing its own ACCEPTANCE line (visible under pytest -s).
"""

from __future__ import annotations

import math
import random
from itertools import combinations

import numpy as np
import pytest

from moakit import (
    CoordMap,
    array_to_code,
    code_to_array,
    codewords,
    dual_code,
    fixture_path,
    index_table,
    irredundancy_from_code,
    is_irredundant,
    make_ext_field,
    max_strength,
    min_block_distance,
    min_hamming_distance,
    min_index,
    parse_code_file,
    parse_moa_file,
    prime_power,
    singleton_analysis,
    subset_index,
    trace_dual,
)
from moakit import _reference as ref
from moakit.linalg import matmul

from generators import random_gf2_code
from oracles import (
    block_masks,
    block_weight_int,
    min_block_distance_gf2,
    min_hamming_distance_rows,
    row_to_int,
    strength_by_counting,
)


def load_moa(name):
    arr, _ = parse_moa_file(fixture_path(name))
    return arr


def oracle_dual_distance(code) -> int:
    """Dual block distance by scanning all 2^n words for orthogonality."""
    gens = [row_to_int(r) for r in code.gen]
    masks = block_masks(code.partition.sizes)
    best = None
    for v in range(1, 1 << code.n):
        if all(bin(v & g).count("1") % 2 == 0 for g in gens):
            w = block_weight_int(v, masks)
            if best is None or w < best:
                best = w
                if best == 1:
                    break
    assert best is not None
    return best


_CTX_CACHE: dict[tuple[int, ...], CoordMap] = {}


def context_for(sizes) -> CoordMap:
    sizes = tuple(sizes)
    if sizes not in _CTX_CACHE:
        _CTX_CACHE[sizes] = CoordMap.build(2, sizes, basis="self-dual")
    return _CTX_CACHE[sizes]


@pytest.fixture(scope="module")
def code_batch():
    """200 binary codes with their distances, dual distances by oracle."""
    rng = random.Random(52001)
    out = []
    for _ in range(200):
        code = random_gf2_code(rng)
        d = min_block_distance(code)
        dd = oracle_dual_distance(code)
        out.append((code, d, dd))
    return out


@pytest.fixture(scope="module")
def array_batch():
    """100 linear mixed arrays built as code preimages over self-dual bases."""
    rng = random.Random(52002)
    out = []
    for _ in range(100):
        code = random_gf2_code(rng)
        ctx = context_for(code.partition.sizes)
        arr, cert = code_to_array(ctx, code)
        out.append((ctx, code, arr, cert))
    return out


def test_criterion_1():
    arr = load_moa("moa8_5_t2.moa")
    assert arr.M == 8 and arr.degrees == (2, 1, 1, 1, 1)
    for i, j in combinations(range(5), 2):
        want = 1 if i == 0 else 2
        assert subset_index(arr, (i, j)) == want
    rows = [tuple(int(x) for x in r) for r in arr.rows]
    assert strength_by_counting(rows, arr.alphabet_sizes, 2)
    assert not strength_by_counting(rows, arr.alphabet_sizes, 3)
    assert min_hamming_distance_rows(rows) == 3
    rep = singleton_analysis(arr, 2, cross_check=True)
    assert rep.min_hamming_distance == 3
    assert (rep.bound_lower, rep.rows, rep.bound_upper, rep.bound_loose) == (8, 8, 8, 16)
    assert rep.bound_lower == arr.M == rep.bound_upper
    assert rep.is_mds and rep.is_irredundant and not rep.is_almost_mds
    assert rep.extremal.applies and rep.extremal.is_mds
    print("ACCEPTANCE 1 pair indices and MDS verdicts on the 8x5 array: PASS")


def test_criterion_2():
    small = load_moa("moa8_3_t2.moa")
    rep = singleton_analysis(small, 2, cross_check=True)
    assert rep.lambda_min == 1
    assert rep.min_hamming_distance == 1
    assert not rep.is_mds and rep.rows == 8 < rep.bound_upper == 16
    assert rep.is_almost_mds and rep.singleton_defect == 1

    full = load_moa("moa16_3_t2.moa")
    assert max_strength(full) == 3
    assert min_index(full, 2) == ref.MOA16_3_LAMBDA_AT_2 == 2
    rep3 = singleton_analysis(full, 3, cross_check=True)
    assert rep3.lambda_min == 1
    assert rep3.min_hamming_distance == 1
    assert rep3.is_mds and rep3.rows == 16 == rep3.bound_upper
    print("ACCEPTANCE 2 index collapse on the two 8-level arrays: PASS")


def test_criterion_3():
    arr = load_moa("moa16_4_t3.moa")
    assert max_strength(arr) == 3
    rows = [tuple(int(x) for x in r) for r in arr.rows]
    assert strength_by_counting(rows, arr.alphabet_sizes, 3)
    rep = singleton_analysis(arr, 3, cross_check=True)
    assert rep.lambda_min == 1
    assert rep.singleton_defect == 1
    assert rep.is_almost_mds and not rep.is_mds
    assert arr.M * arr.base.q == rep.bound_upper
    print("ACCEPTANCE 3 defect-one classification of the 16x4 array: PASS")


def test_criterion_4():
    code, _ = parse_code_file(fixture_path("code10_4.code"))
    assert (code.n, code.k) == (10, 4)
    assert code.partition.sizes == (2, 2, 2, 2, 1, 1)
    d = min_block_distance(code)
    assert d == 4 == min_block_distance_gf2(code.gen, code.partition.sizes)
    dual = dual_code(code)
    assert min_block_distance(dual) == 3 == oracle_dual_distance(code)

    ctx = CoordMap.build(2, code.partition.sizes, basis="poly")
    arr, cert = code_to_array(ctx, code)
    fixture = load_moa("irmoa16_6_t2.moa")
    got = {tuple(int(x) for x in r) for r in arr.rows}
    want = {tuple(int(x) for x in r) for r in fixture.rows}
    assert got == want and len(got) == 16
    assert cert.strength == 2 == max_strength(arr)
    assert is_irredundant(arr, 2, cross_check=True)

    classes: dict[tuple[int, int], tuple[int, int]] = {}
    for cols, v in index_table(arr, 2).items():
        key = tuple(sorted((arr.degrees[c] for c in cols), reverse=True))
        cnt, val = classes.get(key, (0, v))
        assert val == v, "index not constant on a degree class"
        classes[key] = (cnt + 1, v)
    assert classes == ref.IRMOA_INDEX_CLASSES
    assert {v for _, v in classes.values()} == {1, 2, 4}
    print("ACCEPTANCE 4 ten-coordinate code and its 16-row preimage: PASS")


def test_criterion_5(code_batch):
    failures = []
    for code, _, dd in code_batch:
        ctx = context_for(code.partition.sizes)
        arr, _ = code_to_array(ctx, code)
        if max_strength(arr) != dd - 1:
            failures.append((code.partition.sizes, code.k))
    assert not failures, f"{len(failures)} strength/dual-distance mismatches"
    assert len(code_batch) == 200
    print("ACCEPTANCE 5 strength equals dual distance minus one, 200 codes: PASS")


def test_criterion_6(array_batch):
    for ctx, code, arr, _ in array_batch:
        image, _ = array_to_code(ctx, arr)
        d_arr = min_hamming_distance(arr)
        assert d_arr == min_block_distance(image)
        assert d_arr == min_block_distance_gf2(image.gen, image.partition.sizes)

        td = trace_dual(ctx, arr)
        got = {tuple(int(x) for x in r) for r in ctx.to_matrix(td.rows)}
        want = {tuple(int(x) for x in r) for r in codewords(dual_code(image))}
        assert got == want
    assert len(array_batch) == 100
    print("ACCEPTANCE 6 distance transfer and trace duality, 100 arrays: PASS")


def test_criterion_7(code_batch, array_batch):
    fixture_arrays = [
        load_moa(name)
        for name in (
            "moa8_5_t2.moa",
            "moa8_3_t2.moa",
            "moa16_3_t2.moa",
            "moa16_4_t3.moa",
            "irmoa16_6_t2.moa",
        )
    ]
    fixture_code, _ = parse_code_file(fixture_path("code10_4.code"))
    instances = fixture_arrays + [arr for _, _, arr, _ in array_batch]

    for arr in instances:
        t = max_strength(arr)
        sizes = arr.alphabet_sizes
        d = min_hamming_distance_rows(arr.rows)
        lower = math.prod(sizes[:t])
        upper = math.prod(sizes[d - 1:]) if d <= arr.s else 1
        loose = math.prod(sizes[: arr.s - d + 1]) if d <= arr.s else 1
        assert lower <= arr.M <= upper <= loose
        if t >= 1:
            rep = singleton_analysis(arr, t)
            assert rep.min_hamming_distance == d
            assert (rep.bound_lower, rep.bound_upper, rep.bound_loose) == (
                lower, upper, loose,
            )

        for tt in range(0, arr.s + 1):
            assert is_irredundant(arr, tt, cross_check=True) == (d >= tt + 1)

        if is_irredundant(arr, t):
            assert 2 * t <= arr.s
            assert math.prod(sizes[:t]) <= math.prod(sizes[t:])

    pairs = [(fixture_code, min_block_distance(fixture_code),
              oracle_dual_distance(fixture_code))]
    pairs += code_batch
    for code, d, dd in pairs:
        assert d + dd <= code.n + 2
    print("ACCEPTANCE 7 invariant battery over fixtures and random instances: PASS")


def test_criterion_8(code_batch):
    for code, d, dd in code_batch[:100]:
        ctx = context_for(code.partition.sizes)
        report, arr1, arr2 = irredundancy_from_code(ctx, code)
        assert report.d_primal == d == min_block_distance_gf2(
            code.gen, code.partition.sizes
        )
        assert report.d_dual == dd
        assert report.primal_irredundant == (d >= dd)
        assert report.primal_irredundant == is_irredundant(arr1, report.t_primal)
        assert report.dual_irredundant == (dd >= d)
        assert report.dual_irredundant == is_irredundant(arr2, report.t_dual)
        assert report.both_irredundant == (d == dd)
    print("ACCEPTANCE 8 irredundancy criterion on 100 codes, both clauses: PASS")


def _prime_powers(limit):
    out = []
    for q in range(2, limit + 1):
        p = next(f for f in range(2, q + 1) if q % f == 0)
        x = q
        while x % p == 0:
            x //= p
        if x == 1:
            out.append(q)
    return out


def test_criterion_9():
    checked = 0
    for q in _prime_powers(64):
        m = 1
        while q**m <= 64:
            F = make_ext_field(prime_power(q), m)
            o = F.order
            e = np.arange(o)
            A = np.array([[F.add(a, b) for b in range(o)] for a in range(o)])
            M = np.array([[F.mul(a, b) for b in range(o)] for a in range(o)])

            assert np.array_equal(A, A.T) and np.array_equal(M, M.T)
            assert np.array_equal(A[0], e) and np.array_equal(M[1], e)
            assert not M[0].any()
            assert np.array_equal(A[A], A[:, A])
            assert np.array_equal(M[M], M[:, M])
            assert np.array_equal(M[:, A], A[M[:, :, None], M[:, None, :]])
            assert np.array_equal(np.sort(A, axis=1), np.broadcast_to(e, A.shape))
            assert np.array_equal(np.sort(M[1:], axis=1),
                                  np.broadcast_to(e, (o - 1, o)))

            tr = np.array([F.trace(a) for a in range(o)])
            assert np.array_equal(tr[A], F.base.add[tr[:, None], tr[None, :]])
            for c in range(F.base.q):
                assert np.array_equal(tr[M[c]], F.base.mul[c, tr])
            assert np.all(np.bincount(tr, minlength=F.base.q) == o // F.base.q)

            R = np.array([F.coords_of(a) for a in range(o)], dtype=np.uint8)
            form = matmul(F.base, matmul(F.base, R, F.gram), R.T)
            assert np.array_equal(tr[M], form)
            checked += 1
            m += 1
    # 27 prime powers up to 64 as bases, plus 12 proper extensions
    assert checked == 39

    F4 = make_ext_field(2, 2).with_basis(ref.GF4_SELF_DUAL_LABELS)
    assert F4.basis == (2, 3)
    assert F4.is_self_dual
    assert np.array_equal(F4.gram, np.eye(2, dtype=np.uint8))
    print("ACCEPTANCE 9 field axioms, traces, Gram identity to order 64: PASS")
