# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``; same signatures."""
import numpy as np


def ray_shift(const double[:, ::1] A, const double[::1] denom,
              const double[:, ::1] D):
    cdef Py_ssize_t N = D.shape[0], n = D.shape[1], k = A.shape[0]
    cdef Py_ssize_t r, i, j
    cdef double best, acc
    out = np.empty(N)
    cdef double[::1] o = out
    for r in range(N):
        best = 0.0
        for i in range(k):
            acc = 0.0
            for j in range(n):
                acc += D[r, j] * A[i, j]
            acc = acc / denom[i]
            if acc > best:
                best = acc
        o[r] = best
    return out


def ray_extent(const double[:, ::1] A, const double[::1] denom,
               const double[:, ::1] D):
    cdef Py_ssize_t N = D.shape[0], n = D.shape[1], k = A.shape[0]
    cdef Py_ssize_t r, i, j
    cdef double best, acc
    out = np.empty(N)
    cdef double[::1] o = out
    for r in range(N):
        best = 0.0
        for i in range(k):
            acc = 0.0
            for j in range(n):
                acc += D[r, j] * A[i, j]
            acc = acc / denom[i]
            if i == 0 or acc < best:
                best = acc
        o[r] = best
    return out


def grid_envelope(const double[:, ::1] F, const double[:, ::1] G):
    cdef Py_ssize_t N = F.shape[0], m = F.shape[1]
    cdef Py_ssize_t r, i
    cdef double run, gap
    out = np.empty((N, m))
    cdef double[:, ::1] o = out
    for r in range(N):
        run = 0.0
        for i in range(m):
            gap = G[r, i] - F[r, i]
            if gap > run:
                run = gap
            o[r, i] = F[r, i] + run
    return out


def box_mf1_member(const double[:, ::1] Z, const double[::1] lo,
                   const double[::1] hi, const double[::1] bound):
    cdef Py_ssize_t N = Z.shape[0], m = Z.shape[1]
    cdef Py_ssize_t r, i
    cdef double h, need, b
    cdef bint ok
    out = np.empty(N, dtype=bool)
    cdef unsigned char[::1] o = out.view(np.uint8)
    for r in range(N):
        b = bound[r]
        h = 0.0
        ok = True
        for i in range(m):
            if Z[r, i] > hi[i] + b:
                ok = False
                break
            need = Z[r, i] - hi[i]
            if need > h:
                h = need
            if h > Z[r, i] - lo[i] + b:
                ok = False
                break
        o[r] = ok
    return out


def dominated_pairs(const double[:, ::1] S, const double[::1] left,
                    const double[::1] right):
    cdef Py_ssize_t K = S.shape[0], m = S.shape[1]
    cdef Py_ssize_t i, j, c, count = 0, pos
    cdef bint dom
    for i in range(K):
        for j in range(K):
            if left[i] > right[j]:
                dom = True
                for c in range(m):
                    if S[i, c] > S[j, c]:
                        dom = False
                        break
                if dom:
                    count += 1
    ii = np.empty(count, dtype=np.int64)
    jj = np.empty(count, dtype=np.int64)
    cdef long long[::1] iv = ii
    cdef long long[::1] jv = jj
    pos = 0
    for i in range(K):
        for j in range(K):
            if left[i] > right[j]:
                dom = True
                for c in range(m):
                    if S[i, c] > S[j, c]:
                        dom = False
                        break
                if dom:
                    iv[pos] = i
                    jv[pos] = j
                    pos += 1
    return ii, jj
