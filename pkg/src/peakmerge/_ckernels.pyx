# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled versions of the O(n^2) hot kernels.

Must match _kernels_py bit-for-bit: same operation order, same IEEE
arithmetic. Keep the two files in sync.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def pairwise_distances(cnp.ndarray[cnp.float64_t, ndim=2] points):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t dim = points.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] p = np.ascontiguousarray(points)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t i, j, k
    cdef double acc, diff
    cdef double xi, yi, dx, dy
    # row-wise writes only: computing each pair twice is cheaper than the
    # cache-hostile transposed stores once the matrix outgrows the cache.
    # The planar case gets its own loop so the compiler can vectorize it.
    if dim == 2:
        for i in range(n):
            xi = p[i, 0]
            yi = p[i, 1]
            for j in range(n):
                dx = xi - p[j, 0]
                dy = yi - p[j, 1]
                o[i, j] = sqrt(dx * dx + dy * dy)
            o[i, i] = 0.0
    else:
        for i in range(n):
            for j in range(n):
                acc = 0.0
                for k in range(dim):
                    diff = p[i, k] - p[j, k]
                    acc += diff * diff
                o[i, j] = sqrt(acc)
            o[i, i] = 0.0
    return out


def density_counts(cnp.ndarray[cnp.float64_t, ndim=2] dm, double dc):
    cdef Py_ssize_t n = dm.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] rho = np.zeros(n, dtype=np.int64)
    cdef double[:, :] d = dm
    cdef cnp.int64_t[::1] r = rho
    cdef Py_ssize_t i, j
    cdef cnp.int64_t c
    # branchless count vectorizes; the self pair (distance 0) is counted
    # whenever dc > 0 and removed afterwards
    for i in range(n):
        c = 0
        for j in range(n):
            c += d[i, j] < dc
        r[i] = c - (dc > 0.0)
    return rho


def delta_parent(cnp.ndarray[cnp.float64_t, ndim=2] dm,
                 cnp.ndarray[cnp.int64_t, ndim=1] order):
    cdef Py_ssize_t n = dm.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] delta = np.zeros(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] parent = np.full(n, -1, dtype=np.int64)
    cdef double[:, :] d = dm
    cdef cnp.int64_t[:] ordv = order
    cdef double[::1] dv = delta
    cdef cnp.int64_t[::1] pv = parent
    cdef cnp.ndarray[cnp.int64_t, ndim=1] pos_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] pos = pos_arr
    cdef Py_ssize_t t, i, j, root, my_pos
    cdef double best, cur, mx
    cdef Py_ssize_t best_j, best_pos
    for t in range(n):
        pos[ordv[t]] = t
    root = ordv[0]
    if n > 1:
        mx = d[root, 0]
        for t in range(1, n):
            if d[root, t] > mx:
                mx = d[root, t]
        dv[root] = mx
    # sequential row scans instead of gathers through the order array; the
    # winner is the minimum of (distance, order position), which matches
    # the prefix-argmin rule of the numpy path exactly. The select is
    # written branch-free: the eligibility test is data dependent, so a
    # conditional jump here would mispredict about half the time.
    cdef double INF = float("inf")
    cdef bint take
    for i in range(n):
        my_pos = pos[i]
        if my_pos == 0:
            continue
        best = INF
        best_j = -1
        best_pos = n
        for j in range(n):
            cur = d[i, j]
            take = (pos[j] < my_pos) & (
                (cur < best) | ((cur == best) & (pos[j] < best_pos))
            )
            best = cur if take else best
            best_j = j if take else best_j
            best_pos = pos[j] if take else best_pos
        pv[i] = best_j
        dv[i] = best
    return delta, parent
