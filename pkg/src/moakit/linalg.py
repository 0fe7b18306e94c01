"""Dense exact linear algebra over GF(q), table-driven.

Matrices are numpy uint8 arrays of field labels; `F` is any object exposing
q plus add/sub/neg/mul/inv lookup tables (PrimePower qualifies).  Pivoting is
deterministic: leftmost nonzero column, topmost nonzero row, so reduced
echelon forms are canonical and row-space questions reduce to array equality.
"""

from __future__ import annotations

import numpy as np


def as_matrix(F, rows) -> np.ndarray:
    mat = np.array(rows, dtype=np.int64)
    if mat.ndim == 1:
        mat = mat.reshape(1, -1)
    assert mat.ndim == 2
    if mat.size and (mat.min() < 0 or mat.max() >= F.q):
        raise ValueError(f"matrix entries must lie in [0, {F.q})")
    return mat.astype(np.uint8)


def rref(F, mat) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    R = np.array(mat, dtype=np.uint8, copy=True)
    nrows, ncols = R.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        top = row + int(nz[0])
        if top != row:
            R[[row, top]] = R[[top, row]]
        R[row] = F.mul[F.inv[R[row, col]], R[row]]
        for r in range(nrows):
            if r != row and R[r, col] != 0:
                R[r] = F.sub[R[r], F.mul[R[r, col], R[row]]]
        pivots.append(col)
        row += 1
    return R, tuple(pivots)


def rank(F, mat) -> int:
    return len(rref(F, mat)[1])


def row_basis(F, mat) -> np.ndarray:
    """Canonical basis of the row space: nonzero rows of the rref."""
    R, pivots = rref(F, mat)
    return R[: len(pivots)].copy()


def row_space_equal(F, a, b) -> bool:
    return np.array_equal(row_basis(F, a), row_basis(F, b))


def nullspace(F, mat) -> np.ndarray:
    """Basis of the right kernel {v : mat v^T = 0}, one row per free column.

    Rows are ordered by ascending free column, which makes the result
    canonical for a canonical input.
    """
    mat = np.asarray(mat, dtype=np.uint8)
    nrows, ncols = mat.shape
    R, pivots = rref(F, mat)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = np.zeros((len(free), ncols), dtype=np.uint8)
    for i, fc in enumerate(free):
        out[i, fc] = 1
        for prow, pcol in enumerate(pivots):
            out[i, pcol] = F.neg[R[prow, fc]]
    if out.size:
        check = matmul(F, mat, out.T)
        assert not check.any(), "kernel vectors fail mat v = 0; elimination bug"
    return out


def matmul(F, a, b) -> np.ndarray:
    """Matrix product over GF(q)."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    assert a.shape[-1] == b.shape[0]
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for k in range(a.shape[1]):
        out = F.add[out, F.mul[a[:, k][:, None], b[k, :][None, :]]]
    return out


def inverse(F, mat) -> np.ndarray | None:
    """Matrix inverse, or None if singular."""
    mat = np.asarray(mat, dtype=np.uint8)
    n = mat.shape[0]
    assert mat.shape == (n, n)
    aug = np.concatenate([mat, np.eye(n, dtype=np.uint8)], axis=1)
    R, pivots = rref(F, aug)
    if pivots != tuple(range(n)):
        return None
    return R[:, n:].copy()


def in_row_space(F, rows, v) -> bool:
    base = row_basis(F, rows)
    aug = np.concatenate([base, np.asarray(v, dtype=np.uint8).reshape(1, -1)])
    return rank(F, aug) == base.shape[0]
