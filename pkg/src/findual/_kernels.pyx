# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Mirrors ``findual._purepy`` exactly."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t, uint8_t

cnp.import_array()


def box_table(succ, int n):
    cdef cnp.ndarray[uint64_t, ndim=1] s = np.asarray([int(v) for v in succ], dtype=np.uint64)
    cdef Py_ssize_t size = 1 << n
    cdef cnp.ndarray[int64_t, ndim=1] out = np.zeros(size, dtype=np.int64)
    cdef Py_ssize_t u, x
    cdef int64_t acc
    cdef Py_ssize_t w = s.shape[0]
    for u in range(size):
        acc = 0
        for x in range(w):
            if (s[x] & ~(<uint64_t>u)) == 0:
                acc |= (<int64_t>1) << x
        out[u] = acc
    return out


cdef inline Py_ssize_t _find(const uint64_t[:] masks, uint64_t v) nogil:
    cdef Py_ssize_t lo = 0, hi = masks.shape[0] - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if masks[mid] < v:
            lo = mid + 1
        elif masks[mid] > v:
            hi = mid - 1
        else:
            return mid
    return -1


def tables_from_masks(masks_in):
    cdef const uint64_t[:] masks = np.ascontiguousarray(masks_in, dtype=np.uint64)
    cdef Py_ssize_t n = masks.shape[0], i, j
    meet_a = np.empty((n, n), dtype=np.int32)
    join_a = np.empty((n, n), dtype=np.int32)
    cdef int32_t[:, :] meet = meet_a
    cdef int32_t[:, :] join = join_a
    with nogil:
        for i in range(n):
            for j in range(i, n):
                meet[i, j] = <int32_t>_find(masks, masks[i] & masks[j])
                meet[j, i] = meet[i, j]
                join[i, j] = <int32_t>_find(masks, masks[i] | masks[j])
                join[j, i] = join[i, j]
    return meet_a, join_a


def residual_table(meet_in, join_in, leq_in, int bottom):
    cdef const int32_t[:, :] meet = np.ascontiguousarray(meet_in, dtype=np.int32)
    cdef const int32_t[:, :] join = np.ascontiguousarray(join_in, dtype=np.int32)
    cdef const uint8_t[:, :] leq = np.ascontiguousarray(leq_in, dtype=np.uint8)
    cdef Py_ssize_t n = meet.shape[0], a, b, c
    cdef int32_t acc
    arrow_a = np.empty((n, n), dtype=np.int32)
    cdef int32_t[:, :] arrow = arrow_a
    with nogil:
        for a in range(n):
            for b in range(n):
                acc = bottom
                for c in range(n):
                    if leq[meet[a, c], b]:
                        acc = join[acc, c]
                arrow[a, b] = acc
    return arrow_a


def residuation_violation(meet_in, leq_in, arrow_in):
    cdef const int32_t[:, :] meet = np.ascontiguousarray(meet_in, dtype=np.int32)
    cdef const uint8_t[:, :] leq = np.ascontiguousarray(leq_in, dtype=np.uint8)
    cdef const int32_t[:, :] arrow = np.ascontiguousarray(arrow_in, dtype=np.int32)
    cdef Py_ssize_t n = meet.shape[0], a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if leq[meet[a, c], b] != leq[c, arrow[a, b]]:
                    return (a, b, c)
    return None


def distributivity_violation(meet_in, join_in):
    cdef const int32_t[:, :] meet = np.ascontiguousarray(meet_in, dtype=np.int32)
    cdef const int32_t[:, :] join = np.ascontiguousarray(join_in, dtype=np.int32)
    cdef Py_ssize_t n = meet.shape[0], a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a, join[b, c]] != join[meet[a, b], meet[a, c]]:
                    return (a, b, c)
    return None


def box_meet_violation(box_in, meet_in):
    cdef const int64_t[:] box = np.ascontiguousarray(box_in, dtype=np.int64)
    cdef const int32_t[:, :] meet = np.ascontiguousarray(meet_in, dtype=np.int32)
    cdef Py_ssize_t n = meet.shape[0], a, b
    for a in range(n):
        for b in range(n):
            if box[meet[a, b]] != meet[box[a], box[b]]:
                return (a, b)
    return None


def conjugate_violation(box_f_in, box_p_in, int n):
    cdef const int64_t[:] box_f = np.ascontiguousarray(box_f_in, dtype=np.int64)
    cdef const int64_t[:] box_p = np.ascontiguousarray(box_p_in, dtype=np.int64)
    cdef int64_t full = ((<int64_t>1) << n) - 1
    cdef int64_t a
    for a in range(full + 1):
        if a & ~box_f[full ^ box_p[full ^ a]]:
            return a
        if a & ~box_p[full ^ box_f[full ^ a]]:
            return a
    return -1
