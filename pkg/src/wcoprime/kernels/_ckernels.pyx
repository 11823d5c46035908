# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tuple-counting kernel.

Masks are packed into a (D, W) array of 64-bit words so any number of
places fits.  Counts are accumulated in unsigned 64-bit integers; the
Python wrapper only takes this path when the total weight to the m-th power
fits, and otherwise defers to the pure-Python kernel.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from ._pykernels import count_disjoint_tuples as _py_count

cnp.import_array()

cdef uint64_t _walk(const uint64_t[:, ::1] masks, const uint64_t[::1] weights,
                    uint64_t* stack, const uint64_t* tail, int depth, int m,
                    Py_ssize_t D, Py_ssize_t W) noexcept nogil:
    cdef uint64_t acc = 0
    cdef Py_ssize_t i, k
    cdef int left = m - depth - 1
    cdef uint64_t* prefix = stack + (depth - 1) * W
    cdef uint64_t* cur = stack + depth * W
    cdef uint64_t nz
    for i in range(D):
        nz = 0
        for k in range(W):
            cur[k] = prefix[k] & masks[i, k]
            nz |= cur[k]
        if nz == 0:
            acc += weights[i] * tail[left]
        elif left > 0:
            acc += weights[i] * _walk(masks, weights, stack, tail, depth + 1, m, D, W)
    return acc


cdef uint64_t _count(const uint64_t[:, ::1] mv, const uint64_t[::1] wv,
                     uint64_t total, int m) except? 0:
    cdef Py_ssize_t D = mv.shape[0]
    cdef Py_ssize_t W = mv.shape[1]
    cdef uint64_t* stack = <uint64_t*> malloc(m * W * sizeof(uint64_t))
    cdef uint64_t* tail = <uint64_t*> malloc(m * sizeof(uint64_t))
    cdef uint64_t acc = 0
    cdef uint64_t nz
    cdef Py_ssize_t i, k
    if stack == NULL or tail == NULL:
        free(stack)
        free(tail)
        raise MemoryError()
    tail[0] = 1
    for k in range(1, m):
        tail[k] = tail[k - 1] * total
    with nogil:
        for i in range(D):
            nz = 0
            for k in range(W):
                stack[k] = mv[i, k]
                nz |= stack[k]
            if nz == 0:
                acc += wv[i] * tail[m - 1]
            elif m > 1:
                acc += wv[i] * _walk(mv, wv, stack, tail, 1, m, D, W)
    free(stack)
    free(tail)
    return acc


def count_disjoint_tuples(masks, weights, int m):
    """Same contract as the pure-Python kernel; see ``_pykernels``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if len(masks) != len(weights):
        raise ValueError("masks and weights differ in length")
    pairs = [(int(mk), int(wt)) for mk, wt in zip(masks, weights) if wt]
    if not pairs:
        return 0
    total = sum(wt for _, wt in pairs)
    if total ** m >= 2**63 or any(mk < 0 for mk, _ in pairs):
        return _py_count(masks, weights, m)
    nbits = max(mk.bit_length() for mk, _ in pairs)
    words = max(1, (nbits + 63) // 64)
    packed = np.zeros((len(pairs), words), dtype=np.uint64)
    wts = np.empty(len(pairs), dtype=np.uint64)
    low = (1 << 64) - 1
    for row, (mk, wt) in enumerate(pairs):
        wts[row] = wt
        for w in range(words):
            packed[row, w] = (mk >> (64 * w)) & low
    return int(_count(packed, wts, total, m))
