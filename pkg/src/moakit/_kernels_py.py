"""Pure numpy enumeration kernels (fallback for the compiled ones).

Both backends share one contract.  Messages over GF(q)^k are indexed by
integers: message digit j (the coefficient of generator row j) is
(index // q^j) % q, so row 0 varies fastest.  `codeword_table` materializes
all q^k codewords in that order; `min_block_weight` scans them for the
minimum number of nonzero blocks among nonzero codewords without holding
more than a bounded chunk in memory.
"""

from __future__ import annotations

import numpy as np

_CHUNK_ROWS = 1 << 16


def codeword_table(gen: np.ndarray, q: int, add: np.ndarray,
                   mul: np.ndarray) -> np.ndarray:
    k, n = gen.shape
    table = np.zeros((1, n), dtype=np.uint8)
    for j in range(k):
        scaled = [mul[c, gen[j]][None, :] for c in range(q)]
        table = np.concatenate([add[table, s] for s in scaled], axis=0)
    return table


def _message_codeword(gen: np.ndarray, index: int, q: int, add: np.ndarray,
                      mul: np.ndarray) -> np.ndarray:
    cw = np.zeros(gen.shape[1], dtype=np.uint8)
    for j in range(gen.shape[0]):
        d = (index // q**j) % q
        if d:
            cw = add[cw, mul[d, gen[j]]]
    return cw


def min_block_weight(gen: np.ndarray, q: int, add: np.ndarray,
                     mul: np.ndarray, block_starts: np.ndarray) -> int:
    k, n = gen.shape
    assert k >= 1
    starts = np.asarray(block_starts[:-1], dtype=np.int64)
    k0 = 0
    while k0 < k and q ** (k0 + 1) <= _CHUNK_ROWS:
        k0 += 1
    low = codeword_table(gen[:k0], q, add, mul)
    best = len(starts) + 1
    for hi in range(q ** (k - k0)):
        high_cw = _message_codeword(gen[k0:], hi, q, add, mul)
        chunk = add[low, high_cw[None, :]]
        nz = np.add.reduceat(chunk.astype(np.int16), starts, axis=1) > 0
        w = nz.sum(axis=1)
        if hi == 0:
            w[0] = len(starts) + 1  # skip the zero codeword
        m = int(w.min())
        if m < best:
            best = m
            if best == 1:
                break
    assert 1 <= best <= len(starts)
    return best
