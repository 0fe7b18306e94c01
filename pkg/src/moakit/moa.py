"""Mixed orthogonal arrays over products of extension fields of one GF(q).

An array has s columns, column i taking symbols in GF(q^(n_i)) with the
degrees n_i nonincreasing, and M rows.  Strength t means every projection
onto t columns hits each symbol tuple equally often; the count for a given
column subset is that subset's index.  Symbols are canonical integer labels
(see fields), so an array file means the same thing under every basis policy.

The Singleton sandwich for a strength-t array with minimum Hamming distance
d reads

    prod_(i=1..t) q^(n_i)  <=  M  <=  prod_(i=d..s) q^(n_i)
                                  <=  prod_(i=1..s-d+1) q^(n_i),

with MDS meaning the middle equality and almost-MDS a defect of one q-power.
Irredundancy at strength t (distinct rows on every s-t columns) is governed
by d >= t+1.  Violating any of these on concrete data raises
BoundViolationError: they are theorems, so a breach is an internal bug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import (
    AlphabetError,
    BadIndexError,
    BoundViolationError,
    CapExceededError,
    NotUniformError,
    StrengthError,
    WrongLengthError,
)
from .fields import ExtField, PrimePower, make_ext_field, prime_power

SUBSET_CAP = 1 << 22
CROSS_CHECK_PAIR_CAP = 256
IRREDUNDANT_WORK_CAP = 10**6

LINEARITY_UNVERIFIED = "unverified"
LINEARITY_LINEAR = "verified_linear"
LINEARITY_NONLINEAR = "verified_nonlinear"


class MixedArray:
    """Rows over a product of extension fields, degrees nonincreasing."""

    __slots__ = ("base", "column_fields", "rows", "linearity")

    def __init__(self, base: PrimePower, column_fields, rows):
        column_fields = tuple(column_fields)
        assert all(isinstance(f, ExtField) and f.base == base for f in column_fields)
        degrees = tuple(f.m for f in column_fields)
        if any(degrees[i] < degrees[i + 1] for i in range(len(degrees) - 1)):
            raise AlphabetError(
                f"column degrees must be nonincreasing, got {degrees}"
            )
        mat = np.array(rows, dtype=np.int64)
        if mat.ndim == 1:
            mat = mat.reshape(1, -1)
        if mat.ndim != 2 or mat.shape[1] != len(column_fields):
            raise WrongLengthError(
                f"rows must be M x {len(column_fields)}, got shape {mat.shape}"
            )
        if mat.shape[0] < 1:
            raise WrongLengthError("array needs at least one row")
        for i, f in enumerate(column_fields):
            col = mat[:, i]
            if col.min() < 0 or col.max() >= f.order:
                raise AlphabetError(
                    f"column {i + 1} has symbols outside [0, {f.order})"
                )
        mat.setflags(write=False)
        self.base = base
        self.column_fields = column_fields
        self.rows = mat
        self.linearity = LINEARITY_UNVERIFIED

    @property
    def M(self) -> int:
        return self.rows.shape[0]

    @property
    def s(self) -> int:
        return self.rows.shape[1]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.m for f in self.column_fields)

    @property
    def alphabet_sizes(self) -> tuple[int, ...]:
        return tuple(f.order for f in self.column_fields)

    def __repr__(self):
        return (f"MixedArray(q={self.base.q}, degrees={self.degrees}, "
                f"M={self.M})")


def mixed_array(q: int, degrees, rows) -> MixedArray:
    """Convenience constructor: polynomial-basis column fields over GF(q)."""
    base = prime_power(q)
    cols = tuple(make_ext_field(base, int(m)) for m in degrees)
    return MixedArray(base, cols, rows)


def _normalize_cols(arr: MixedArray, cols) -> tuple[int, ...]:
    asked = [int(c) for c in cols]
    out = tuple(sorted(set(asked)))
    if len(out) != len(asked) or not out:
        raise BadIndexError(f"column subset {asked} has duplicates or is empty")
    if out[0] < 0 or out[-1] >= arr.s:
        raise BadIndexError(f"column subset {asked} out of range for s = {arr.s}")
    return out


def subset_index(arr: MixedArray, cols, cap: int = SUBSET_CAP) -> int:
    """Common tuple count of the projection onto `cols` (0-based).

    Raises NotUniformError with a two-tuple witness when counts differ.
    """
    cols = _normalize_cols(arr, cols)
    sizes = [arr.column_fields[c].order for c in cols]
    space = math.prod(sizes)
    if space > cap:
        raise CapExceededError(
            f"projection alphabet of size {space} exceeds cap {cap}"
        )
    # lexicographic tuple order == numeric order of these codes
    weights = []
    w = 1
    for sz in reversed(sizes):
        weights.append(w)
        w *= sz
    weights.reverse()
    codes = np.zeros(arr.M, dtype=np.int64)
    for c, wt in zip(cols, weights):
        codes += arr.rows[:, c] * wt
    counts = np.bincount(codes, minlength=space)
    first = int(counts[0])
    bad = np.nonzero(counts != first)[0]
    if bad.size:
        j = int(bad[0])
        witness = (
            (_decode_tuple(0, sizes), first),
            (_decode_tuple(j, sizes), int(counts[j])),
        )
        raise NotUniformError(cols, witness)
    assert first * space == arr.M
    return first


def _decode_tuple(code: int, sizes) -> tuple[int, ...]:
    out = []
    for sz in reversed(sizes):
        out.append(code % sz)
        code //= sz
    return tuple(reversed(out))


def index_table(arr: MixedArray, t: int,
                cap: int = SUBSET_CAP) -> dict[tuple[int, ...], int]:
    """Index of every t-subset of columns; raises NotUniformError on the
    first non-uniform projection.  t = 0 gives the empty table."""
    if not 0 <= t <= arr.s:
        raise BadIndexError(f"strength t = {t} must lie in [0, {arr.s}]")
    out: dict[tuple[int, ...], int] = {}
    for cols in combinations(range(arr.s), t):
        if cols:
            out[cols] = subset_index(arr, cols, cap=cap)
    return out


def verify_strength(arr: MixedArray, t: int, cap: int = SUBSET_CAP) -> bool:
    """True iff every t-column projection is uniform; t = 0 is vacuous."""
    try:
        index_table(arr, t, cap=cap)
    except NotUniformError:
        return False
    return True


def max_strength(arr: MixedArray, cap: int = SUBSET_CAP) -> int:
    """Largest t with strength t (strength t implies strength t-1, so the
    first failure ends the scan)."""
    t = 0
    while t < arr.s and verify_strength(arr, t + 1, cap=cap):
        t += 1
    return t


def min_index(arr: MixedArray, t: int, cap: int = SUBSET_CAP) -> int:
    """Smallest index over t-subsets: M / (q^(n_1) ... q^(n_t)), attained on
    the t largest-degree columns.  Cross-checked against the full table."""
    if not 1 <= t <= arr.s:
        raise BadIndexError(f"strength t = {t} must lie in [1, {arr.s}]")
    table = _checked_index_table(arr, t, cap)
    denom = math.prod(arr.alphabet_sizes[:t])
    assert arr.M % denom == 0
    lam = arr.M // denom
    assert lam == min(table.values()), "min index formula disagrees with table"
    return lam


def _checked_index_table(arr, t, cap):
    try:
        return index_table(arr, t, cap=cap)
    except NotUniformError as e:
        raise StrengthError(
            f"array does not have strength {t}: {e}"
        ) from e


def has_duplicate_rows(arr: MixedArray) -> bool:
    return np.unique(arr.rows, axis=0).shape[0] < arr.M


def min_hamming_distance(arr: MixedArray) -> int:
    """Minimum pairwise Hamming distance between rows.

    Returns 0 when rows repeat; a single-row array gets s + 1, the empty
    upper product convention.  For a verified-linear array the minimum
    nonzero row weight is used and, for M <= 256, cross-checked against the
    pairwise scan.
    """
    M, s = arr.M, arr.s
    if M == 1:
        return s + 1
    if has_duplicate_rows(arr):
        return 0
    if arr.linearity == LINEARITY_LINEAR:
        weights = (arr.rows != 0).sum(axis=1)
        nz = weights[weights > 0]
        d = int(nz.min())
        if M <= CROSS_CHECK_PAIR_CAP:
            dp = _pairwise_min_distance(arr.rows)
            if d != dp:
                raise BoundViolationError(
                    f"linear weight distance {d} != pairwise distance {dp}; bug"
                )
        return d
    return _pairwise_min_distance(arr.rows)


def _pairwise_min_distance(rows: np.ndarray) -> int:
    M = rows.shape[0]
    best = rows.shape[1]
    for i in range(M - 1):
        d = int((rows[i + 1:] != rows[i]).sum(axis=1).min())
        if d < best:
            best = d
            if best == 1:
                break
    assert best >= 1, "duplicate rows reached the pairwise scan"
    return best


def is_linear(arr: MixedArray) -> bool:
    """Check the rows form an F_q-subspace: zero row present, closed under
    addition and under base-field scalars.  Caches the verdict on the array."""
    if arr.linearity != LINEARITY_UNVERIFIED:
        return arr.linearity == LINEARITY_LINEAR

    def verdict(v: bool) -> bool:
        arr.linearity = LINEARITY_LINEAR if v else LINEARITY_NONLINEAR
        return v

    M = arr.M
    p = arr.base.p
    # subspaces have p-power size
    n = M
    while n % p == 0:
        n //= p
    if n != 1:
        return verdict(False)
    row_set = {r.tobytes() for r in arr.rows}
    if len(row_set) != M:
        return verdict(False)
    if np.zeros(arr.s, dtype=np.int64).tobytes() not in row_set:
        return verdict(False)
    cols = arr.column_fields
    for i in range(M):
        total = np.empty_like(arr.rows)
        for c, f in enumerate(cols):
            total[:, c] = f.add_vec(np.full(M, arr.rows[i, c]), arr.rows[:, c])
        for r in total:
            if r.tobytes() not in row_set:
                return verdict(False)
    for scalar in range(2, arr.base.q):
        scaled = np.empty_like(arr.rows)
        for c, f in enumerate(cols):
            scaled[:, c] = f.scalar_mul_vec(scalar, arr.rows[:, c])
        for r in scaled:
            if r.tobytes() not in row_set:
                return verdict(False)
    return verdict(True)


def is_irredundant(arr: MixedArray, t: int, cross_check: str | bool = "auto",
                   work_cap: int = IRREDUNDANT_WORK_CAP) -> bool:
    """Irredundancy at strength t: rows distinct on every s-t column subset.

    Decided via d >= t+1; the direct subarray scan runs as a cross-check
    when C(s, s-t) * M fits the work cap (always when cross_check=True)."""
    if not 0 <= t <= arr.s:
        raise BadIndexError(f"t = {t} must lie in [0, {arr.s}]")
    d = min_hamming_distance(arr)
    verdict = d >= t + 1
    work = math.comb(arr.s, arr.s - t) * arr.M
    do_cross = cross_check is True or (cross_check == "auto" and work <= work_cap)
    if do_cross:
        direct = _direct_irredundancy(arr, t)
        if direct != verdict:
            raise BoundViolationError(
                f"irredundancy criterion d >= t+1 ({verdict}) disagrees with "
                f"direct subarray check ({direct}); internal bug"
            )
    return verdict


def _direct_irredundancy(arr: MixedArray, t: int) -> bool:
    keep = arr.s - t
    if keep == 0:
        return arr.M == 1
    for cols in combinations(range(arr.s), keep):
        sub = arr.rows[:, cols]
        if np.unique(sub, axis=0).shape[0] < arr.M:
            return False
    return True


@dataclass(frozen=True)
class ExtremalCheck:
    """Result of the extremal MDS criterion at t = floor(s/2)."""

    applies: bool
    clamped: bool = False
    is_mds: bool | None = None
    lambda_min: int | None = None
    note: str = ""


def extremal_check(arr: MixedArray, t: int, *, irredundant: bool | None = None,
                   is_mds: bool | None = None, lambda_min_value: int | None = None,
                   cap: int = SUBSET_CAP) -> ExtremalCheck:
    """Extremal criterion: for an irredundant strength-t array with
    t = floor(s/2) and sum_(j=t+1..min(2t+1,s)) n_j = sum_(i=1..t) n_i,
    MDS is equivalent to minimum index 1.  The upper limit 2t+1 is clamped
    to s when s = 2t, and the report says so."""
    s = arr.s
    degrees = arr.degrees
    clamped = 2 * t + 1 > s
    if t != s // 2:
        return ExtremalCheck(applies=False, note=f"t = {t} is not floor(s/2) = {s // 2}")
    hi = min(2 * t + 1, s)
    if sum(degrees[t:hi]) != sum(degrees[:t]):
        return ExtremalCheck(
            applies=False, clamped=clamped,
            note=f"degree sums differ: {sum(degrees[t:hi])} vs {sum(degrees[:t])}",
        )
    if irredundant is None:
        irredundant = is_irredundant(arr, t)
    if not irredundant:
        return ExtremalCheck(applies=False, clamped=clamped,
                             note="array is not irredundant at this strength")
    if lambda_min_value is None:
        lambda_min_value = min_index(arr, t, cap=cap)
    if is_mds is None:
        is_mds = _upper_product(arr) == arr.M
    if is_mds != (lambda_min_value == 1):
        raise BoundViolationError(
            f"extremal criterion failed: is_mds={is_mds} but "
            f"lambda_min={lambda_min_value}; internal bug"
        )
    note = "upper limit 2t+1 clamped to s" if clamped else ""
    return ExtremalCheck(applies=True, clamped=clamped, is_mds=is_mds,
                         lambda_min=lambda_min_value, note=note)


def _upper_product(arr: MixedArray, d: int | None = None) -> int:
    if d is None:
        d = min_hamming_distance(arr)
    if d < 1:
        return math.prod(arr.alphabet_sizes)
    return math.prod(arr.alphabet_sizes[d - 1:]) if d <= arr.s else 1


@dataclass(frozen=True)
class MoaReport:
    """Everything the analyzer derives about one array at one strength."""

    q: int
    degrees: tuple[int, ...]
    rows: int
    columns: int
    strength: int
    max_strength: int
    indices: tuple[tuple[tuple[int, ...], int], ...]
    lambda_min: int
    min_hamming_distance: int
    bound_lower: int
    bound_upper: int
    bound_loose: int
    singleton_defect: int | None
    is_mds: bool
    is_almost_mds: bool
    is_irredundant: bool
    two_t_le_s: bool
    linearity: str
    extremal: ExtremalCheck
    parameters: str
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        d = {
            "q": self.q,
            "degrees": list(self.degrees),
            "rows": self.rows,
            "columns": self.columns,
            "strength": self.strength,
            "max_strength": self.max_strength,
            "indices": [
                {"cols": [c + 1 for c in cols], "value": v}
                for cols, v in self.indices
            ],
            "lambda_min": self.lambda_min,
            "min_hamming_distance": self.min_hamming_distance,
            "bound_lower": self.bound_lower,
            "bound_upper": self.bound_upper,
            "bound_loose": self.bound_loose,
            "singleton_defect": self.singleton_defect,
            "is_mds": self.is_mds,
            "is_almost_mds": self.is_almost_mds,
            "is_irredundant": self.is_irredundant,
            "two_t_le_s": self.two_t_le_s,
            "linearity": self.linearity,
            "extremal": {
                "applies": self.extremal.applies,
                "clamped": self.extremal.clamped,
                "is_mds": self.extremal.is_mds,
                "lambda_min": self.extremal.lambda_min,
                "note": self.extremal.note,
            },
            "parameters": self.parameters,
            "notes": list(self.notes),
        }
        return d


def parameter_string(arr: MixedArray, t: int, irredundant: bool = False) -> str:
    q = arr.base.q
    parts = []
    for size, count in _grouped(arr.degrees):
        sym = f"{q}^{size}" if size > 1 else f"{q}"
        parts.extend([sym] * count)
    name = "IrMOA" if irredundant else "MOA"
    return f"{name}({arr.M}, {arr.s}, ({', '.join(parts)}), {t})"


def _grouped(degrees):
    out = []
    for x in degrees:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [(a, b) for a, b in out]


def singleton_analysis(arr: MixedArray, t: int, cap: int = SUBSET_CAP,
                       cross_check: str | bool = "auto") -> MoaReport:
    """Full report at strength t: index table, minimum index, Hamming
    distance, Singleton sandwich, defect, MDS/almost-MDS/irredundancy
    verdicts, and the extremal criterion."""
    if not 1 <= t <= arr.s:
        raise BadIndexError(f"strength t = {t} must lie in [1, {arr.s}]")
    table = _checked_index_table(arr, t, cap)
    lam = min_index(arr, t, cap=cap)
    is_linear(arr)
    d = min_hamming_distance(arr)
    notes = []
    if d == 0:
        notes.append("duplicate_rows")
    if arr.M == 1:
        notes.append("single_row")
    lower = math.prod(arr.alphabet_sizes[:t])
    if d >= 1:
        upper = _upper_product(arr, d)
        loose = math.prod(arr.alphabet_sizes[: max(arr.s - d + 1, 0)])
        if not (lower <= arr.M <= upper <= loose):
            raise BoundViolationError(
                f"Singleton sandwich violated: {lower} <= {arr.M} <= {upper} "
                f"<= {loose} fails; internal bug"
            )
    else:
        # repeated rows fall outside the sandwich; report trivial bounds
        upper = loose = math.prod(arr.alphabet_sizes)
    defect = None
    e = _exact_log(arr.M, arr.base.q)
    if e is not None and 1 <= d <= arr.s:
        defect = sum(arr.degrees[d - 1:]) - e
    mds = d >= 1 and arr.M == upper
    almost = d >= 1 and arr.M * arr.base.q == upper
    if 1 <= d <= arr.s and sum(arr.degrees[:t]) == sum(arr.degrees[d - 1:]) - 1:
        if almost != (lam == 1):
            raise BoundViolationError(
                f"almost-MDS criterion failed: defect-1 is {almost} but "
                f"lambda_min = {lam}; internal bug"
            )
    irred = is_irredundant(arr, t, cross_check=cross_check)
    ext = extremal_check(arr, t, irredundant=irred, is_mds=mds,
                         lambda_min_value=lam, cap=cap)
    return MoaReport(
        q=arr.base.q,
        degrees=arr.degrees,
        rows=arr.M,
        columns=arr.s,
        strength=t,
        max_strength=max_strength(arr, cap=cap),
        indices=tuple(sorted(table.items())),
        lambda_min=lam,
        min_hamming_distance=d,
        bound_lower=lower,
        bound_upper=upper,
        bound_loose=loose,
        singleton_defect=defect,
        is_mds=mds,
        is_almost_mds=almost,
        is_irredundant=irred,
        two_t_le_s=2 * t <= arr.s,
        linearity=arr.linearity,
        extremal=ext,
        parameters=parameter_string(arr, t, irredundant=irred),
        notes=tuple(notes),
    )


def _exact_log(M: int, q: int) -> int | None:
    e = 0
    n = M
    while n % q == 0:
        n //= q
        e += 1
    return e if n == 1 else None
