"""Both enumeration backends must agree word for word."""

from __future__ import annotations

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from moakit import kernels
from moakit._kernels_py import codeword_table as py_table
from moakit._kernels_py import min_block_weight as py_weight
from moakit.fields import prime_power

try:
    from moakit import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(
    _ckernels is None, reason="compiled kernels not built"
)


def _random_instance(rng, q):
    # identity block keeps the generator full rank, as min_block_weight needs
    F = prime_power(q)
    n = rng.randrange(4, 11)
    k = rng.randrange(1, min(n, 5))
    gen = np.zeros((k, n), dtype=np.uint8)
    gen[:, :k] = np.eye(k, dtype=np.uint8)
    for i in range(k):
        for j in range(k, n):
            gen[i, j] = rng.randrange(q)
    cols = list(range(n))
    rng.shuffle(cols)
    gen = np.ascontiguousarray(gen[:, cols])
    sizes = []
    left = n
    while left:
        b = rng.randrange(1, min(3, left) + 1)
        sizes.append(b)
        left -= b
    starts = np.cumsum([0] + sizes)
    return gen, F.add, F.mul, starts


@needs_compiled
def test_backends_agree_on_codeword_tables():
    rng = random.Random(911)
    for _ in range(40):
        q = rng.choice([2, 3, 4])
        gen, add, mul, _ = _random_instance(rng, q)
        a = np.asarray(_ckernels.codeword_table(gen, q, add, mul))
        b = py_table(gen, q, add, mul)
        assert a.shape == b.shape
        assert np.array_equal(a, b)


@needs_compiled
def test_backends_agree_on_min_block_weight():
    rng = random.Random(912)
    for _ in range(60):
        q = rng.choice([2, 3, 4])
        gen, add, mul, starts = _random_instance(rng, q)
        a = int(_ckernels.min_block_weight(gen, q, add, mul, starts))
        b = py_weight(gen, q, add, mul, starts)
        assert a == b


def test_dispatch_normalizes_dtypes():
    F = prime_power(2)
    gen = [[1, 0, 1], [0, 1, 1]]
    table = kernels.codeword_table(gen, 2, F.add, F.mul)
    assert table.shape == (4, 3)
    assert kernels.min_block_weight(gen, 2, F.add, F.mul, [0, 1, 2, 3]) == 2


def test_pure_env_forces_python_backend():
    env = dict(os.environ, MOAKIT_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import moakit; print(moakit.KERNEL_BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_default_backend_reported():
    out = subprocess.run(
        [sys.executable, "-c", "import moakit; print(moakit.KERNEL_BACKEND)"],
        capture_output=True,
        text=True,
        env=dict(os.environ, MOAKIT_PURE=""),
        check=True,
    )
    assert out.stdout.strip() in ("compiled", "python")
    if _ckernels is not None:
        assert out.stdout.strip() == "compiled"
