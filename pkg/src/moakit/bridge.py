"""The coordinate bridge between mixed arrays and error-block codes.

Fix one basis of GF(q^(n_i)) over GF(q) per column.  Writing every symbol in
its column's basis and concatenating the coordinate vectors maps each array
row to a vector in GF(q)^n, n = sum n_i; blocks of the partition
[n_1]...[n_s] correspond to columns of the array.  The map is an isometry
between Hamming weight on symbols and block weight on vectors, and it turns
the trace inner product sum_i Tr(a_i b_i) into the bilinear form given by
the block-diagonal Gram matrix of the chosen bases.  With self-dual bases
(Gram = identity) trace duality on the array side matches Euclidean duality
on the code side exactly.

Consequences used here, each asserted on concrete data whenever computed:
the preimage of a k-dimensional code C is a linear array of q^k rows whose
exact strength is the dual block distance minus one; the preimage is
irredundant at that strength iff the primal block distance is at least the
dual one; and block distances of a dual pair satisfy d + d_dual <= n + 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .blockcode import (
    BlockCode,
    DEFAULT_ENUM_CAP,
    Partition,
    codewords,
    dual_code,
    make_code,
    min_block_distance,
)
from .errors import (
    BoundViolationError,
    CapExceededError,
    NotLinearError,
    PartitionMismatchError,
    SelfDualUnavailableError,
    ZeroCodeError,
)
from .fields import (
    ExtField,
    PrimePower,
    find_self_dual_basis,
    make_ext_field,
    prime_power,
    self_dual_basis_exists,
)
from .moa import (
    LINEARITY_LINEAR,
    MixedArray,
    index_table,
    is_irredundant,
    is_linear,
    max_strength,
)

POLICY_SELF_DUAL = "self_dual"
POLICY_POLY = "poly"

_SD_FIELD_CACHE: dict[tuple[int, int, int], ExtField] = {}


def _self_dual_field(base: PrimePower, m: int) -> ExtField:
    key = (base.p, base.r, m)
    if key not in _SD_FIELD_CACHE:
        f = make_ext_field(base, m)
        sd = find_self_dual_basis(f)
        if sd is None:
            raise SelfDualUnavailableError(
                f"no self-dual basis for degree {m} over GF({base.q}): "
                "need q even, or q and the block degree both odd"
            )
        _SD_FIELD_CACHE[key] = f.with_basis(sd.elements)
    return _SD_FIELD_CACHE[key]


class CoordMap:
    """Per-column bases plus the machinery to move between symbol rows and
    GF(q)-coordinate vectors."""

    __slots__ = ("base", "column_fields", "partition", "block_gram", "policy")

    def __init__(self, base: PrimePower, column_fields, policy: str):
        self.base = base
        self.column_fields = tuple(column_fields)
        self.partition = Partition(tuple(f.m for f in self.column_fields))
        g = np.zeros((self.partition.total, self.partition.total), dtype=np.uint8)
        starts = self.partition.starts
        for i, f in enumerate(self.column_fields):
            g[starts[i]:starts[i + 1], starts[i]:starts[i + 1]] = f.gram
        assert np.array_equal(g, g.T), "Gram matrix must be symmetric"
        g.setflags(write=False)
        self.block_gram = g
        self.policy = policy

    @classmethod
    def build(cls, q: int | PrimePower, degrees, basis: str = "auto") -> "CoordMap":
        """Build with one policy for all columns: 'self-dual' (strict),
        'poly', or 'auto' (self-dual whenever every block admits one)."""
        base = q if isinstance(q, PrimePower) else prime_power(q)
        degrees = tuple(int(m) for m in degrees)
        Partition(degrees)  # validates ordering
        if basis == "auto":
            want_sd = all(self_dual_basis_exists(base, m) for m in degrees)
        elif basis in ("self-dual", POLICY_SELF_DUAL):
            want_sd = True
        elif basis in ("poly", POLICY_POLY):
            want_sd = False
        else:
            raise ValueError(f"unknown basis policy {basis!r}")
        if want_sd:
            fields = tuple(_self_dual_field(base, m) for m in degrees)
            policy = POLICY_SELF_DUAL
        else:
            fields = tuple(make_ext_field(base, m) for m in degrees)
            policy = POLICY_POLY
        return cls(base, fields, policy)

    @property
    def all_self_dual(self) -> bool:
        return all(f.is_self_dual for f in self.column_fields)

    @property
    def n(self) -> int:
        return self.partition.total

    @property
    def s(self) -> int:
        return self.partition.num_blocks

    # -- row <-> vector ---------------------------------------------------

    def to_matrix(self, rows: np.ndarray) -> np.ndarray:
        """Coordinate expansion of symbol rows; shape (M, n)."""
        rows = np.asarray(rows, dtype=np.int64)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        assert rows.shape[1] == self.s
        out = np.zeros((rows.shape[0], self.n), dtype=np.uint8)
        starts = self.partition.starts
        for i, f in enumerate(self.column_fields):
            ci = f.coords_int_vec(rows[:, i])
            for j in range(f.m):
                out[:, starts[i] + j] = ci % f.base.q
                ci //= f.base.q
        return out

    def from_matrix(self, mat: np.ndarray) -> np.ndarray:
        """Inverse of to_matrix; shape (M, s) of canonical labels."""
        mat = np.asarray(mat, dtype=np.int64)
        if mat.ndim == 1:
            mat = mat.reshape(1, -1)
        assert mat.shape[1] == self.n
        out = np.zeros((mat.shape[0], self.s), dtype=np.int64)
        starts = self.partition.starts
        for i, f in enumerate(self.column_fields):
            block = mat[:, starts[i]:starts[i + 1]]
            weights = f.base.q ** np.arange(f.m, dtype=np.int64)
            ci = (block * weights).sum(axis=1)
            out[:, i] = f.labels_from_coords_int(ci)
        return out

    def to_vector(self, row) -> np.ndarray:
        return self.to_matrix(np.asarray(row).reshape(1, -1))[0]

    def from_vector(self, vec) -> tuple[int, ...]:
        return tuple(int(x) for x in
                     self.from_matrix(np.asarray(vec).reshape(1, -1))[0])

    # -- trace inner product ----------------------------------------------

    def trace_inner(self, row_a, row_b) -> int:
        """sum_i Tr(a_i b_i), a base-field label.  In debug mode the
        bilinear-form route rho(a) G rho(b)^T is computed too and must agree."""
        row_a = [int(x) for x in row_a]
        row_b = [int(x) for x in row_b]
        assert len(row_a) == len(row_b) == self.s
        acc = 0
        for f, a, b in zip(self.column_fields, row_a, row_b):
            acc = int(self.base.add[acc, f.trace(f.mul(a, b))])
        if __debug__:
            va = self.to_vector(row_a).reshape(1, -1)
            vb = self.to_vector(row_b).reshape(1, -1)
            form = linalg.matmul(self.base, linalg.matmul(self.base, va, self.block_gram), vb.T)
            assert int(form[0, 0]) == acc, "trace and Gram form disagree; bug"
        return acc

    def array(self, rows, *, linear: bool = False) -> MixedArray:
        arr = MixedArray(self.base, self.column_fields, rows)
        if linear:
            arr.linearity = LINEARITY_LINEAR
        return arr


def _sorted_rows(rows: np.ndarray) -> np.ndarray:
    order = np.lexsort(rows.T[::-1])
    return rows[order]


def _require_frame(ctx: CoordMap, code: BlockCode):
    if code.partition != ctx.partition or code.field != ctx.base:
        raise PartitionMismatchError(
            f"code frame {code.partition.type_string()}/q={code.field.q} does "
            f"not match context {ctx.partition.type_string()}/q={ctx.base.q}"
        )


def _require_array_frame(ctx: CoordMap, arr: MixedArray):
    # symbols are canonical labels, so any context over the same base field
    # and degree sequence may interpret the array; basis need not match
    if arr.base != ctx.base or arr.degrees != ctx.partition.sizes:
        raise PartitionMismatchError(
            f"array frame q={arr.base.q}/degrees={arr.degrees} does not "
            f"match context {ctx.partition.type_string()}/q={ctx.base.q}"
        )


@dataclass(frozen=True)
class StrengthCertificate:
    """Verified strength of a converted array: the claimed t, the index of
    every t-subset at that strength, and the basis policy used."""

    strength: int
    indices: tuple[tuple[tuple[int, ...], int], ...]
    basis_policy: str


def code_to_array(ctx: CoordMap, code: BlockCode,
                  cap: int = DEFAULT_ENUM_CAP) -> tuple[MixedArray, StrengthCertificate]:
    """Preimage of a code under the coordinate map: a linear mixed array of
    q^k rows whose exact strength is the dual block distance minus one.
    Both the strength and its exactness are asserted, not assumed."""
    _require_frame(ctx, code)
    words = codewords(code, cap=cap)
    rows = _sorted_rows(ctx.from_matrix(words))
    arr = ctx.array(rows, linear=True)
    dual = dual_code(code)
    if dual.k == 0:
        # full-space code: preimage is the whole product space, strength s
        t_claim = ctx.s
    else:
        t_claim = min_block_distance(dual, cap=cap) - 1
    ms = max_strength(arr)
    if ms != t_claim:
        raise BoundViolationError(
            f"preimage has max strength {ms}, dual distance predicts {t_claim}; bug"
        )
    table = index_table(arr, t_claim) if t_claim >= 1 else {}
    cert = StrengthCertificate(
        strength=t_claim,
        indices=tuple(sorted(table.items())),
        basis_policy=ctx.policy,
    )
    return arr, cert


@dataclass(frozen=True)
class CodeCertificate:
    strength: int
    dual_block_distance: int
    basis_policy: str


def array_to_code(ctx: CoordMap, arr: MixedArray,
                  cap: int = DEFAULT_ENUM_CAP) -> tuple[BlockCode, CodeCertificate]:
    """Image of a linear array under the coordinate map, with the exactness
    assertion dual block distance = max strength + 1."""
    _require_array_frame(ctx, arr)
    if not is_linear(arr):
        raise NotLinearError("array is not linear; no code to extract")
    vectors = ctx.to_matrix(arr.rows)
    code = make_code(ctx.partition, ctx.base, vectors)
    assert ctx.base.q**code.k == arr.M, "row space size mismatch; bug"
    t = max_strength(arr)
    dual = dual_code(code)
    if dual.k == 0:
        d_dual = ctx.s + 1
    else:
        d_dual = min_block_distance(dual, cap=cap)
    if d_dual != t + 1:
        raise BoundViolationError(
            f"dual block distance {d_dual} != strength {t} + 1; bug"
        )
    cert = CodeCertificate(strength=t, dual_block_distance=d_dual,
                           basis_policy=ctx.policy)
    return code, cert


def trace_dual(ctx: CoordMap, arr: MixedArray, cap: int = DEFAULT_ENUM_CAP,
               verify_cap: int = 10**6) -> MixedArray:
    """All rows pairing to zero with every row of `arr` under the trace
    inner product.  Sizes multiply to q^n; membership is re-verified by
    brute force when M * M_dual is small enough."""
    _require_array_frame(ctx, arr)
    if not is_linear(arr):
        raise NotLinearError("trace dual needs a linear array")
    gen = linalg.row_basis(ctx.base, ctx.to_matrix(arr.rows))
    k = gen.shape[0]
    assert ctx.base.q**k == arr.M, "row space size mismatch; bug"
    adjoint = linalg.matmul(ctx.base, gen, ctx.block_gram)
    null = linalg.nullspace(ctx.base, adjoint)
    if ctx.base.q ** null.shape[0] > cap:
        raise CapExceededError(
            f"dual has {ctx.base.q**null.shape[0]} rows, over cap {cap}"
        )
    from . import kernels

    dual_vecs = kernels.codeword_table(null, ctx.base.q, ctx.base.add, ctx.base.mul)
    dual_rows = _sorted_rows(ctx.from_matrix(dual_vecs))
    dual_arr = ctx.array(dual_rows, linear=True)
    if arr.M * dual_arr.M != ctx.base.q**ctx.n:
        raise BoundViolationError(
            f"|arr| * |dual| = {arr.M * dual_arr.M} != q^n = {ctx.base.q**ctx.n}; bug"
        )
    if arr.M * dual_arr.M <= verify_cap:
        for db in dual_arr.rows:
            for ab in arr.rows:
                if ctx.trace_inner(ab, db) != 0:
                    raise BoundViolationError(
                        f"claimed dual row {tuple(db)} does not annihilate "
                        f"{tuple(ab)}; bug"
                    )
    return dual_arr


@dataclass(frozen=True)
class IrredundancyReport:
    """Both sides of the irredundancy construction for a code and its dual."""

    d_primal: int
    d_dual: int
    t_primal: int
    t_dual: int
    primal_irredundant: bool
    dual_irredundant: bool | None
    both_irredundant: bool | None
    basis_policy: str
    primal_parameters: str
    dual_parameters: str
    notes: tuple[str, ...]


def irredundancy_from_code(ctx: CoordMap, code: BlockCode, *,
                           dual_clause: str | bool = "auto",
                           cap: int = DEFAULT_ENUM_CAP,
                           ) -> tuple[IrredundancyReport, MixedArray, MixedArray]:
    """Build the preimages of a code and its dual and verify the
    irredundancy criteria: the primal array (strength t1 = d_dual - 1) is
    irredundant iff d >= d_dual; with self-dual bases the dual array
    (strength t2 = d - 1) likewise iff d_dual >= d.

    dual_clause='auto' asserts the dual side only when the context bases are
    all self-dual; True demands it (SelfDualUnavailableError otherwise);
    False skips it.  Returns (report, primal_array, dual_array)."""
    from .moa import parameter_string

    _require_frame(ctx, code)
    if code.k == 0:
        raise ZeroCodeError("irredundancy construction needs 1 <= k <= n-1")
    if code.k == code.n:
        raise ZeroCodeError("irredundancy construction needs a nonzero dual")
    dual = dual_code(code)
    d1 = min_block_distance(code, cap=cap)
    d2 = min_block_distance(dual, cap=cap)
    if d1 + d2 > code.n + 2:
        raise BoundViolationError(
            f"dual distance bound violated: {d1} + {d2} > n + 2 = {code.n + 2}; bug"
        )
    t1, t2 = d2 - 1, d1 - 1
    assert code.n >= t1 + t2
    arr1, _ = code_to_array(ctx, code, cap=cap)
    arr2, _ = code_to_array(ctx, dual, cap=cap)
    notes = []
    primal_irr = is_irredundant(arr1, t1)
    if primal_irr != (d1 >= d2):
        raise BoundViolationError(
            f"primal irredundancy {primal_irr} disagrees with d >= d_dual "
            f"({d1} >= {d2}); bug"
        )
    if dual_clause is True and not ctx.all_self_dual:
        raise SelfDualUnavailableError(
            "dual-side clause demands self-dual bases; context has "
            f"policy {ctx.policy}"
        )
    run_dual = dual_clause is True or (dual_clause == "auto" and ctx.all_self_dual)
    dual_irr = both = None
    if run_dual:
        dual_irr = is_irredundant(arr2, t2)
        if dual_irr != (d2 >= d1):
            raise BoundViolationError(
                f"dual irredundancy {dual_irr} disagrees with d_dual >= d "
                f"({d2} >= {d1}); bug"
            )
        both = primal_irr and dual_irr
        if both != (d1 == d2):
            raise BoundViolationError(
                f"both-sides clause {both} disagrees with d = d_dual "
                f"({d1} = {d2}); bug"
            )
        if arr1.M * arr2.M <= 10**6:
            td = trace_dual(ctx, arr1, cap=cap)
            if not np.array_equal(td.rows, arr2.rows):
                raise BoundViolationError(
                    "trace dual of the primal array differs from the dual "
                    "code's preimage under self-dual bases; bug"
                )
    else:
        notes.append("dual_clause_skipped: bases not self-dual")
    report = IrredundancyReport(
        d_primal=d1,
        d_dual=d2,
        t_primal=t1,
        t_dual=t2,
        primal_irredundant=primal_irr,
        dual_irredundant=dual_irr,
        both_irredundant=both,
        basis_policy=ctx.policy,
        primal_parameters=parameter_string(arr1, t1, irredundant=primal_irr),
        dual_parameters=parameter_string(arr2, t2,
                                         irredundant=bool(dual_irr)),
        notes=tuple(notes),
    )
    return report, arr1, arr2
