# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same contract as _kernels_py: message digit j multiplies generator row j and
varies with period q^j, so row 0 is fastest.  Both kernels walk an odometer
over the digits and keep partial sums per digit position, which makes the
update cost per codeword amortized O(n).
"""

import numpy as np


def codeword_table(const unsigned char[:, ::1] gen, int q,
                   const unsigned char[:, ::1] add,
                   const unsigned char[:, ::1] mul):
    cdef Py_ssize_t k = gen.shape[0]
    cdef Py_ssize_t n = gen.shape[1]
    cdef long long total = 1
    cdef Py_ssize_t j
    for j in range(k):
        total *= q
    out_arr = np.zeros((total, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] out = out_arr
    levels_arr = np.zeros((k + 1, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] levels = levels_arr
    digits_arr = np.zeros(k if k else 1, dtype=np.int32)
    cdef int[::1] digits = digits_arr
    cdef long long i
    cdef Py_ssize_t c, lvl, pos
    # levels[j] = sum over t >= j of digits[t] * gen[t]; the codeword is levels[0]
    for i in range(total):
        for c in range(n):
            out[i, c] = levels[0, c]
        pos = 0
        while pos < k:
            if digits[pos] + 1 == q:
                digits[pos] = 0
                pos += 1
            else:
                digits[pos] += 1
                break
        if pos == k:
            break
        for c in range(n):
            levels[pos, c] = add[levels[pos + 1, c],
                                 mul[<unsigned char> digits[pos], gen[pos, c]]]
        for lvl in range(pos - 1, -1, -1):
            for c in range(n):
                levels[lvl, c] = levels[lvl + 1, c]
    return out_arr


def min_block_weight(const unsigned char[:, ::1] gen, int q,
                     const unsigned char[:, ::1] add,
                     const unsigned char[:, ::1] mul,
                     const long long[::1] block_starts):
    cdef Py_ssize_t k = gen.shape[0]
    cdef Py_ssize_t n = gen.shape[1]
    cdef Py_ssize_t s = block_starts.shape[0] - 1
    cdef long long total = 1
    cdef Py_ssize_t j
    for j in range(k):
        total *= q
    levels_arr = np.zeros((k + 1, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] levels = levels_arr
    digits_arr = np.zeros(k if k else 1, dtype=np.int32)
    cdef int[::1] digits = digits_arr
    cdef long long i
    cdef Py_ssize_t c, lvl, pos, b
    cdef int w, best
    best = <int> s + 1
    for i in range(1, total):
        pos = 0
        while pos < k:
            if digits[pos] + 1 == q:
                digits[pos] = 0
                pos += 1
            else:
                digits[pos] += 1
                break
        for c in range(n):
            levels[pos, c] = add[levels[pos + 1, c],
                                 mul[<unsigned char> digits[pos], gen[pos, c]]]
        for lvl in range(pos - 1, -1, -1):
            for c in range(n):
                levels[lvl, c] = levels[lvl + 1, c]
        w = 0
        for b in range(s):
            for c in range(block_starts[b], block_starts[b + 1]):
                if levels[0, c] != 0:
                    w += 1
                    break
        if w < best:
            best = w
            if best == 1:
                break
    return best
