"""Linear codes measured by block support.

A partition [n_1][n_2]...[n_s] of n splits coordinate space GF(q)^n into s
consecutive blocks, sizes nonincreasing.  The block weight of a vector is the
number of blocks it touches; the block distance of a linear code is the
minimum block weight of its nonzero codewords.  With all blocks of size 1
this is Hamming weight and distance.

The Singleton analogue for these codes reads n - k >= n_1 + ... + n_(d-1)
where d is the block distance; codes meeting it with equality are MDS for
their partition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, linalg
from .errors import (
    AlphabetError,
    BadIndexError,
    BoundViolationError,
    CapExceededError,
    PartitionMismatchError,
    WrongLengthError,
    ZeroCodeError,
)
from .fields import PrimePower

DEFAULT_ENUM_CAP = 1 << 22


@dataclass(frozen=True)
class Partition:
    """Block sizes, nonincreasing, each >= 1."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(x) for x in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if not sizes:
            raise WrongLengthError("partition needs at least one block")
        if any(x < 1 for x in sizes):
            raise AlphabetError(f"block sizes must be >= 1, got {sizes}")
        if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
            raise AlphabetError(
                f"block sizes must be nonincreasing, got {sizes}; "
                "use sort_with_permutation first"
            )

    @property
    def num_blocks(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def starts(self) -> tuple[int, ...]:
        out = [0]
        for x in self.sizes:
            out.append(out[-1] + x)
        return tuple(out)

    @property
    def grouped(self) -> tuple[tuple[int, int], ...]:
        """(size, multiplicity) pairs, sizes descending."""
        out = []
        for x in self.sizes:
            if out and out[-1][0] == x:
                out[-1][1] += 1
            else:
                out.append([x, 1])
        return tuple((a, b) for a, b in out)

    def type_string(self) -> str:
        return "".join(f"[{x}]" for x in self.sizes)

    @staticmethod
    def sort_with_permutation(sizes) -> tuple["Partition", tuple[int, ...]]:
        """Sorted partition plus the stable permutation that sorts the input
        (perm[i] = position in the input of output block i)."""
        sizes = [int(x) for x in sizes]
        order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
        return Partition(tuple(sizes[i] for i in order)), tuple(order)


class BlockCode:
    """A linear code with a block partition; generator held in canonical
    reduced echelon form, full rank k (possibly k = 0)."""

    __slots__ = ("partition", "field", "gen")

    def __init__(self, partition: Partition, field: PrimePower, gen: np.ndarray):
        assert gen.ndim == 2 and gen.shape[1] == partition.total
        self.partition = partition
        self.field = field
        g = np.asarray(gen, dtype=np.uint8).copy()
        g.setflags(write=False)
        self.gen = g

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def n(self) -> int:
        return self.partition.total

    def __repr__(self):
        return (f"BlockCode(q={self.field.q}, type={self.partition.type_string()}, "
                f"n={self.n}, k={self.k})")

    def __eq__(self, other):
        return (
            isinstance(other, BlockCode)
            and self.partition == other.partition
            and self.field == other.field
            and np.array_equal(self.gen, other.gen)
        )

    def __hash__(self):
        return hash((BlockCode, self.partition, self.field, self.gen.tobytes()))


@dataclass(frozen=True)
class ParityCheck:
    """Parity-check matrix for a BlockCode: full rank, gen @ mat.T = 0."""

    partition: Partition
    field: PrimePower
    mat: np.ndarray

    def __post_init__(self):
        assert self.mat.ndim == 2 and self.mat.shape[1] == self.partition.total

    def block_columns(self, block: int) -> np.ndarray:
        s = self.partition.starts
        return self.mat[:, s[block]:s[block + 1]]


def make_code(partition: Partition, field: PrimePower, rows) -> BlockCode:
    """Build a code from spanning rows; dependent rows are dropped and the
    generator is stored in reduced echelon form."""
    rows = np.array(rows, dtype=np.int64)
    if rows.ndim == 1:
        rows = rows.reshape(1, -1)
    if rows.size == 0:
        rows = rows.reshape(0, partition.total)
    if rows.shape[1] != partition.total:
        raise WrongLengthError(
            f"rows have length {rows.shape[1]}, partition total is {partition.total}"
        )
    if rows.size and (rows.min() < 0 or rows.max() >= field.q):
        raise AlphabetError(f"symbols must lie in [0, {field.q})")
    gen = linalg.row_basis(field, rows.astype(np.uint8))
    return BlockCode(partition, field, gen)


def dual_code(code: BlockCode) -> BlockCode:
    """Euclidean dual; generator is the canonical kernel basis, row-reduced."""
    null = linalg.nullspace(code.field, code.gen)
    dual = make_code(code.partition, code.field, null)
    assert code.k + dual.k == code.n, "rank-nullity failed; elimination bug"
    if code.k and dual.k:
        prod = linalg.matmul(code.field, code.gen, dual.gen.T)
        assert not prod.any()
    return dual


def parity_check(code: BlockCode) -> ParityCheck:
    return ParityCheck(code.partition, code.field, dual_code(code).gen)


def block_weight(partition: Partition, v) -> int:
    """Number of blocks of v containing a nonzero symbol."""
    v = np.asarray(v)
    if v.shape != (partition.total,):
        raise WrongLengthError(
            f"vector length {v.shape} does not match partition total {partition.total}"
        )
    return int(block_weights_rows(partition, v.reshape(1, -1))[0])


def block_weights_rows(partition: Partition, mat: np.ndarray) -> np.ndarray:
    """Block weight of every row of mat."""
    starts = np.asarray(partition.starts[:-1], dtype=np.int64)
    nz = np.add.reduceat((np.asarray(mat) != 0).astype(np.int16), starts, axis=1) > 0
    return nz.sum(axis=1)


def min_block_distance(code: BlockCode, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Minimum block weight over nonzero codewords, by full enumeration."""
    if code.k == 0:
        raise ZeroCodeError("block distance undefined for the zero code")
    words = code.field.q**code.k
    if words > cap:
        raise CapExceededError(
            f"enumerating {words} codewords exceeds cap {cap}"
        )
    starts = np.asarray(code.partition.starts, dtype=np.int64)
    return kernels.min_block_weight(
        code.gen, code.field.q, code.field.add, code.field.mul, starts
    )


def codewords(code: BlockCode, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
    """All codewords, message-lexicographic order; shape (q^k, n)."""
    words = code.field.q**code.k
    if words > cap:
        raise CapExceededError(f"materializing {words} codewords exceeds cap {cap}")
    return kernels.codeword_table(code.gen, code.field.q, code.field.add,
                                  code.field.mul)


def block_independence(parity: ParityCheck, blocks) -> bool:
    """True iff the chosen blocks' columns of the parity matrix are linearly
    independent.  The empty set is vacuously independent."""
    asked = [int(b) for b in blocks]
    blocks = tuple(sorted(set(asked)))
    if len(blocks) != len(asked):
        raise BadIndexError("duplicate block indices")
    s = parity.partition.num_blocks
    if any(not 0 <= b < s for b in blocks):
        raise BadIndexError(f"block indices must lie in [0, {s})")
    if not blocks:
        return True
    cols = np.concatenate([parity.block_columns(b) for b in blocks], axis=1)
    want = sum(parity.partition.sizes[b] for b in blocks)
    return linalg.rank(parity.field, cols) == want


@dataclass(frozen=True)
class SingletonReport:
    length: int
    dimension: int
    distance: int
    bound_rhs: int
    slack: int
    is_mds: bool


def singleton_report(code: BlockCode, distance: int | None = None,
                     cap: int = DEFAULT_ENUM_CAP) -> SingletonReport:
    """Check n - k >= n_1 + ... + n_(d-1) and classify MDS.

    A violation is raised as BoundViolationError: the bound is a theorem, so
    failing it on concrete data means the distance or the elimination is
    buggy, never the input.
    """
    if distance is None:
        distance = min_block_distance(code, cap=cap)
    rhs = sum(code.partition.sizes[: distance - 1])
    slack = (code.n - code.k) - rhs
    if slack < 0:
        raise BoundViolationError(
            f"Singleton bound violated: n-k = {code.n - code.k} < {rhs}; internal bug"
        )
    return SingletonReport(
        length=code.n,
        dimension=code.k,
        distance=distance,
        bound_rhs=rhs,
        slack=slack,
        is_mds=(slack == 0),
    )


def require_same_frame(a: BlockCode, b: BlockCode):
    if a.partition != b.partition or a.field != b.field:
        raise PartitionMismatchError(
            f"codes disagree on frame: {a.partition.type_string()}/q={a.field.q} "
            f"vs {b.partition.type_string()}/q={b.field.q}"
        )
