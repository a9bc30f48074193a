# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Dense uint64 transposition walk.

Callers guarantee (number of transpositions)**steps fits in uint64, which
bounds every accumulated count.
"""
import numpy as np

from libc.stdint cimport int32_t, uint64_t


def evolve(const int32_t[:, ::1] perm_next,
           const int32_t[:, ::1] part_next,
           Py_ssize_t start_perm,
           Py_ssize_t start_part,
           Py_ssize_t full_part,
           Py_ssize_t steps):
    cdef Py_ssize_t n_perm = perm_next.shape[0]
    cdef Py_ssize_t n_trans = perm_next.shape[1]
    cdef Py_ssize_t n_part = part_next.shape[0]
    cdef Py_ssize_t p, q, t, k
    cdef uint64_t c

    cur_arr = np.zeros((n_perm, n_part), dtype=np.uint64)
    nxt_arr = np.zeros((n_perm, n_part), dtype=np.uint64)
    out_arr = np.zeros((steps + 1, n_perm), dtype=np.uint64)
    cdef uint64_t[:, ::1] cur = cur_arr
    cdef uint64_t[:, ::1] nxt = nxt_arr
    cdef uint64_t[:, ::1] out = out_arr
    cdef uint64_t[:, ::1] swap

    cur[start_perm, start_part] = 1
    for p in range(n_perm):
        out[0, p] = cur[p, full_part]

    for k in range(1, steps + 1):
        nxt[:, :] = 0
        for p in range(n_perm):
            for q in range(n_part):
                c = cur[p, q]
                if c == 0:
                    continue
                for t in range(n_trans):
                    nxt[perm_next[p, t], part_next[q, t]] += c
        swap = cur
        cur = nxt
        nxt = swap
        for p in range(n_perm):
            out[k, p] = cur[p, full_part]
    return out_arr
