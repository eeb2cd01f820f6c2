# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled serving and inversion-count kernels.

Mirrors ``_pykernels`` exactly; see that module for the contract.
"""
import numpy as np

from libc.stdint cimport int64_t

cdef enum:
    MTF = 0
    TRANS = 1
    FC = 2
    MFM = 3
    MTP = 4


def serve(order_in, requests_in, int rule, Py_ssize_t q, counts_in, bint dynamic, bint record):
    cdef int64_t[::1] req = np.ascontiguousarray(requests_in, dtype=np.int64)
    cdef Py_ssize_t n = req.shape[0]
    cdef Py_ssize_t length = len(order_in)
    cdef Py_ssize_t cap = length
    cdef Py_ssize_t i, j, p, t, l, m
    cdef int64_t x, c
    cdef int64_t access = 0
    cdef int64_t free_moves = 0

    if dynamic and n > 0:
        cap = max(cap, <Py_ssize_t>(np.max(req)) + 1)

    cdef int64_t[::1] order = np.empty(cap, dtype=np.int64)
    cdef int64_t[::1] pos = np.full(cap, -1, dtype=np.int64)
    cdef int64_t[::1] counts
    cdef int64_t[::1] found
    cdef int64_t[::1] targets

    for i in range(length):
        order[i] = order_in[i]
        pos[order[i]] = i

    counts_arr = np.zeros(cap, dtype=np.int64)
    if rule == FC:
        counts_arr[:] = counts_in[:cap]
    counts = counts_arr
    found_arr = np.empty(n if record else 0, dtype=np.int64)
    targets_arr = np.empty(n if record else 0, dtype=np.int64)
    found = found_arr
    targets = targets_arr

    with nogil:
        for i in range(n):
            x = req[i]
            if pos[x] < 0:
                order[length] = x
                pos[x] = length
                length += 1
            p = pos[x] + 1
            access += p
            l = length
            if rule == MTF:
                t = 1
            elif rule == MFM:
                m = (l + 1) // 2
                t = 1 if p <= m else m
            elif rule == MTP:
                t = 1 if p <= q else q
            elif rule == TRANS:
                t = p - 1 if p > 1 else 1
            else:
                counts[x] += 1
                c = counts[x]
                t = p
                while t > 1 and counts[order[t - 2]] < c:
                    t -= 1
            if t < p:
                free_moves += 1
                j = p - 1
                while j > t - 1:
                    order[j] = order[j - 1]
                    pos[order[j]] = j
                    j -= 1
                order[t - 1] = x
                pos[x] = t - 1
            if record:
                found[i] = p
                targets[i] = t

    if rule == FC:
        for i in range(cap):
            counts_in[i] = counts[i]
    final = [order[i] for i in range(length)]
    if record:
        return int(access), int(free_moves), final, found_arr.tolist(), targets_arr.tolist()
    return int(access), int(free_moves), final, None, None


def count_inversions(seq):
    cdef int64_t[::1] a = np.array(seq, dtype=np.int64)
    cdef Py_ssize_t n = a.shape[0]
    if n < 2:
        return 0
    cdef int64_t[::1] b = np.empty(n, dtype=np.int64)
    cdef int64_t* src = &a[0]
    cdef int64_t* buf = &b[0]
    cdef int64_t* tmp
    cdef int64_t inv = 0
    cdef Py_ssize_t width = 1, lo, mid, hi, i, j, k
    with nogil:
        while width < n:
            lo = 0
            while lo < n:
                mid = min(lo + width, n)
                hi = min(lo + 2 * width, n)
                i = lo
                j = mid
                k = lo
                while i < mid and j < hi:
                    if src[i] <= src[j]:
                        buf[k] = src[i]
                        i += 1
                    else:
                        buf[k] = src[j]
                        j += 1
                        inv += mid - i
                    k += 1
                while i < mid:
                    buf[k] = src[i]
                    i += 1
                    k += 1
                while j < hi:
                    buf[k] = src[j]
                    j += 1
                    k += 1
                lo += 2 * width
            tmp = src
            src = buf
            buf = tmp
            width *= 2
    return int(inv)
