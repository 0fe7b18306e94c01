"""Backend dispatch for the enumeration kernels.

The compiled Cython kernels are used when the extension built; otherwise the
numpy fallback takes over.  Set MOAKIT_PURE=1 to force the fallback (the
benchmark uses this to compare backends).  Both backends implement the same
contract, documented in _kernels_py.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

_IMPL = _kernels_py
BACKEND = "python"

if not os.environ.get("MOAKIT_PURE"):
    try:
        from . import _ckernels

        _IMPL = _ckernels
        BACKEND = "compiled"
    except ImportError:
        pass


def _normalize(gen, add, mul):
    gen = np.ascontiguousarray(gen, dtype=np.uint8)
    add = np.ascontiguousarray(add, dtype=np.uint8)
    mul = np.ascontiguousarray(mul, dtype=np.uint8)
    assert gen.ndim == 2 and add.shape == mul.shape and add.shape[0] == add.shape[1]
    return gen, add, mul


def codeword_table(gen, q, add, mul):
    """All q^k combinations of the rows of gen, message digit j = row j,
    row 0 fastest; shape (q^k, n)."""
    gen, add, mul = _normalize(gen, add, mul)
    return np.asarray(_IMPL.codeword_table(gen, q, add, mul))


def min_block_weight(gen, q, add, mul, block_starts):
    """Minimum number of nonzero blocks over nonzero codewords of a
    full-rank generator; block_starts has s+1 entries, starts plus total."""
    gen, add, mul = _normalize(gen, add, mul)
    starts = np.ascontiguousarray(block_starts, dtype=np.int64)
    assert starts[0] == 0 and starts[-1] == gen.shape[1]
    return int(_IMPL.min_block_weight(gen, q, add, mul, starts))
