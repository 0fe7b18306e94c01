"""Re-derive every frozen reference value from the shipped fixture bytes.

Each check recomputes one fact from scratch and compares it against the
constants in `_reference`.  One CheckResult per check; any failure means a
toolkit bug.  The `moakit fixtures-selftest` verb is a thin wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _reference as ref
from . import linalg
from .blockcode import dual_code, min_block_distance, singleton_report
from .bridge import CoordMap, array_to_code, code_to_array, irredundancy_from_code, trace_dual
from .errors import ToolkitError
from .fields import find_self_dual_basis, make_ext_field, self_dual_basis_exists
from .fileio import parse_code_file, parse_moa_file
from .fixtures import fixture_path
from .moa import is_linear, min_index, singleton_analysis


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _check_gf4(base):
    F = make_ext_field(2, 2)
    assert F.modulus == ref.GF4_MODULUS, f"modulus {F.modulus}"
    traces = tuple(F.trace(x) for x in range(4))
    assert traces == ref.GF4_TRACE_TABLE, f"trace table {traces}"
    gram = F.basis_value().gram
    assert gram == ref.GF4_POLY_GRAM, f"gram {gram}"
    return "modulus (1,1,1), traces (0,0,1,1), gram ((0,1),(1,1))"


def _check_gf4_self_dual(base):
    F = make_ext_field(2, 2)
    basis = find_self_dual_basis(F)
    assert basis is not None, "no self-dual basis found"
    assert basis.elements == ref.GF4_SELF_DUAL_LABELS, f"labels {basis.elements}"
    for i, a in enumerate(basis.elements):
        for j, b in enumerate(basis.elements):
            want = 1 if i == j else 0
            got = F.trace(F.mul(a, b))
            assert got == want, f"Tr(b{i} b{j}) = {got}"
    return "labels (2, 3) = {x, x^2}, gram is the identity"


def _check_gf8(base):
    F = make_ext_field(2, 3)
    assert F.modulus == ref.GF8_MODULUS, f"modulus {F.modulus}"
    return "modulus (1, 1, 0, 1)"


def _check_gf9(base):
    assert not self_dual_basis_exists(3, 2), "parity rule"
    assert find_self_dual_basis(make_ext_field(3, 2)) is None, "search"
    return "no self-dual basis over GF(3), degree 2"


def _code(base):
    code, _ = parse_code_file(fixture_path("code10_4.code", base))
    return code


def _check_code_parameters(base):
    code = _code(base)
    want = ref.CODE10_4
    assert (code.n, code.k) == (want["n"], want["k"]), f"[{code.n}, {code.k}]"
    assert code.partition.type_string() == want["type_string"]
    d = min_block_distance(code)
    dd = min_block_distance(dual_code(code))
    assert d == want["distance"], f"distance {d}"
    assert dd == want["dual_distance"], f"dual distance {dd}"
    assert d + dd <= code.n + 2
    rep = singleton_report(code, d)
    assert rep.is_mds == want["is_mds"] and rep.bound_rhs == want["bound_rhs"]
    return f"[{code.n}, {code.k}] type {want['type_string']}, d {d}, dual d {dd}, MDS"


def _check_code_parity_rows(base):
    code = _code(base)
    dual = dual_code(code)
    pinned = np.array(ref.CODE10_4_PARITY_ROWS, dtype=np.uint8)
    assert linalg.row_space_equal(code.field, dual.gen, pinned), "row spaces differ"
    return "dual row space matches the frozen parity-check rows"


def _array_check(name):
    def check(base):
        arr, _ = parse_moa_file(fixture_path(name, base))
        want = ref.ARRAY_EXPECTED[name]
        assert is_linear(arr) == want["linear"], "linearity"
        rep = singleton_analysis(arr, want["max_strength"])
        assert rep.max_strength == want["max_strength"], f"max strength {rep.max_strength}"
        assert rep.lambda_min == want["lambda_min"], f"lambda_min {rep.lambda_min}"
        assert rep.min_hamming_distance == want["d_H"], f"d_H {rep.min_hamming_distance}"
        bounds = (rep.bound_lower, rep.rows, rep.bound_upper, rep.bound_loose)
        assert bounds == want["bounds"], f"bounds {bounds}"
        assert rep.singleton_defect == want["defect"], f"defect {rep.singleton_defect}"
        assert rep.is_mds == want["is_mds"], f"mds {rep.is_mds}"
        assert rep.is_almost_mds == want["is_almost_mds"], f"almost {rep.is_almost_mds}"
        assert rep.is_irredundant == want["is_irredundant"], f"irred {rep.is_irredundant}"
        assert rep.extremal.applies == want["extremal_applies"], "extremal"
        assert rep.parameters == want["parameters"], f"parameters {rep.parameters}"
        return want["parameters"]

    return check


def _check_full_product_index(base):
    arr, _ = parse_moa_file(fixture_path("moa16_3_t2.moa", base))
    lam = min_index(arr, 2)
    assert lam == ref.MOA16_3_LAMBDA_AT_2, f"index {lam} at strength 2"
    return f"index {lam} on every pair at strength 2"


def _check_index_classes(base):
    arr, _ = parse_moa_file(fixture_path("irmoa16_6_t2.moa", base))
    rep = singleton_analysis(arr, 2)
    seen: dict[tuple[int, int], list[int]] = {}
    for cols, v in rep.indices:
        key = tuple(sorted((arr.degrees[c] for c in cols), reverse=True))
        seen.setdefault(key, []).append(v)
    got = {k: (len(v), v[0]) for k, v in seen.items() if len(set(v)) == 1}
    assert got == ref.IRMOA_INDEX_CLASSES, f"classes {got}"
    return "pair indices 1 / 2 / 4 with class sizes 6 / 8 / 1"


def _check_conversion_rows(base):
    code = _code(base)
    ctx = CoordMap.build(2, code.partition.sizes, basis="poly")
    arr, cert = code_to_array(ctx, code)
    fixed, _ = parse_moa_file(fixture_path("irmoa16_6_t2.moa", base))
    assert cert.strength == 2, f"strength {cert.strength}"
    got = set(map(tuple, arr.rows.tolist()))
    want = set(map(tuple, fixed.rows.tolist()))
    assert got == want, "row sets differ"
    return "polynomial-basis preimage reproduces the fixture rows"


def _check_irredundancy_report(base):
    code = _code(base)
    ctx = CoordMap.build(2, code.partition.sizes, basis="self-dual")
    rep, _, _ = irredundancy_from_code(ctx, code)
    for key, want in ref.IRREDUNDANCY_EXPECTED.items():
        got = getattr(rep, key)
        assert got == want, f"{key} = {got}, expected {want}"
    return "primal clause holds, dual clause fails, as frozen"


def _check_trace_dual(base):
    arr, _ = parse_moa_file(fixture_path("moa8_5_t2.moa", base))
    ctx = CoordMap.build(2, arr.degrees, basis="self-dual")
    td = trace_dual(ctx, arr)
    assert arr.M * td.M == ctx.base.q**ctx.n, f"sizes {arr.M} * {td.M}"
    back = trace_dual(ctx, td)
    assert (back.rows == arr.rows).all(), "double dual differs"
    code_td, _ = array_to_code(ctx, td)
    code_arr, _ = array_to_code(ctx, arr)
    assert linalg.row_space_equal(
        ctx.base, code_td.gen, dual_code(code_arr).gen
    ), "trace dual does not map to the Euclidean dual"
    return "sizes multiply to q^n, double dual returns, image is the Euclidean dual"


CHECKS = [
    ("gf4 arithmetic", _check_gf4),
    ("gf4 self-dual basis", _check_gf4_self_dual),
    ("gf8 modulus", _check_gf8),
    ("gf9 self-dual absent", _check_gf9),
    ("code10_4 parameters", _check_code_parameters),
    ("code10_4 parity rows", _check_code_parity_rows),
    ("array moa8_5_t2", _array_check("moa8_5_t2.moa")),
    ("array moa8_3_t2", _array_check("moa8_3_t2.moa")),
    ("array moa16_3_t2", _array_check("moa16_3_t2.moa")),
    ("array moa16_4_t3", _array_check("moa16_4_t3.moa")),
    ("array irmoa16_6_t2", _array_check("irmoa16_6_t2.moa")),
    ("full product pair index", _check_full_product_index),
    ("irmoa index classes", _check_index_classes),
    ("code to array rows", _check_conversion_rows),
    ("irredundancy clauses", _check_irredundancy_report),
    ("trace dual round trip", _check_trace_dual),
]


def run_selftest(base_dir: Path | str | None = None) -> list[CheckResult]:
    """Run every check; missing fixture files propagate as FileNotFoundError.

    `base_dir` overrides the packaged fixtures directory.
    """
    results = []
    for name, fn in CHECKS:
        try:
            detail = fn(base_dir)
            results.append(CheckResult(name, True, detail))
        except (AssertionError, ToolkitError) as e:
            results.append(CheckResult(name, False, str(e) or type(e).__name__))
    return results
