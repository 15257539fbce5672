# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in ``_pykernels``.

Same signatures and same results.  The Jacobi sweep runs on dense machine
integers when the scaled constants are small enough that no intermediate can
overflow, and defers to the Python loop otherwise.
"""
from libc.stdlib cimport malloc, calloc, free
from math import gcd

from . import _pykernels

# |c| bound for the int64 path; n * 3 * BOUND**2 must stay below 2**62
cdef long long BOUND = 1 << 24
# dense n**3 tables above this size would be wasteful
cdef Py_ssize_t MAXN = 160


cdef object _content(list row):
    cdef object g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    return g


def rref_int(rows, Py_ssize_t ncols):
    cdef list work = [list(r) for r in rows if any(r)]
    cdef list pivots = []
    cdef Py_ssize_t top = 0, col, i, k, sel, nrows = len(work)
    cdef list prow, row
    cdef object p, c, g, a, b
    for col in range(ncols):
        if top == nrows:
            break
        sel = -1
        for i in range(top, nrows):
            if (<list>work[i])[col]:
                sel = i
                break
        if sel < 0:
            continue
        work[top], work[sel] = work[sel], work[top]
        prow = <list>work[top]
        p = prow[col]
        for i in range(nrows):
            if i == top:
                continue
            row = <list>work[i]
            c = row[col]
            if not c:
                continue
            g = gcd(p, c)
            a = p // g
            b = c // g
            for k in range(ncols):
                row[k] = a * row[k] - b * prow[k]
            g = _content(row)
            if g > 1:
                for k in range(ncols):
                    row[k] = row[k] // g
        pivots.append(col)
        top += 1
    cdef list out = work[:top]
    for i in range(top):
        row = <list>out[i]
        col = pivots[i]
        if row[col] < 0:
            for k in range(ncols):
                row[k] = -row[k]
        g = _content(row)
        if g > 1:
            for k in range(ncols):
                row[k] = row[k] // g
    return out, pivots


def jacobi_residuals(Py_ssize_t n, parities, dict table):
    cdef Py_ssize_t i, j, k, t, u
    cdef long long c
    if n == 0:
        return []
    if n > MAXN:
        return _pykernels.jacobi_residuals(n, parities, table)
    for entries in table.values():
        for _, cc in entries:
            if cc >= BOUND or cc <= -BOUND:
                return _pykernels.jacobi_residuals(n, parities, table)

    cdef long long *T = <long long *>calloc(n * n * n, sizeof(long long))
    cdef long long *acc = <long long *>calloc(n, sizeof(long long))
    cdef int *par = <int *>malloc(n * sizeof(int))
    # nz[i*n + j] lists the k with T[i,j,k] != 0, as offsets into idx
    cdef int *cnt = <int *>calloc(n * n, sizeof(int))
    cdef int *idx = <int *>malloc(n * n * n * sizeof(int))
    if T == NULL or acc == NULL or par == NULL or cnt == NULL or idx == NULL:
        free(T); free(acc); free(par); free(cnt); free(idx)
        raise MemoryError()
    cdef long long s2, s3, cij, d
    cdef int pi, pj, pk, a, b
    out = []
    try:
        for i in range(n):
            par[i] = parities[i] & 1
        for (i, j), entries in table.items():
            for t, cc in entries:
                T[(i * n + j) * n + t] += cc
        for i in range(n * n):
            for t in range(n):
                if T[i * n + t] != 0:
                    idx[i * n + cnt[i]] = t
                    cnt[i] += 1
        for i in range(n):
            pi = par[i]
            for j in range(n):
                pj = par[j]
                for k in range(n):
                    pk = par[k]
                    s2 = -1 if (pi * (pj + pk)) & 1 else 1
                    s3 = -1 if (pk * (pi + pj)) & 1 else 1
                    for u in range(n):
                        acc[u] = 0
                    for a in range(cnt[i * n + j]):
                        t = idx[(i * n + j) * n + a]
                        cij = T[(i * n + j) * n + t]
                        for b in range(cnt[t * n + k]):
                            u = idx[(t * n + k) * n + b]
                            acc[u] += cij * T[(t * n + k) * n + u]
                    for a in range(cnt[j * n + k]):
                        t = idx[(j * n + k) * n + a]
                        cij = s2 * T[(j * n + k) * n + t]
                        for b in range(cnt[t * n + i]):
                            u = idx[(t * n + i) * n + b]
                            acc[u] += cij * T[(t * n + i) * n + u]
                    for a in range(cnt[k * n + i]):
                        t = idx[(k * n + i) * n + a]
                        cij = s3 * T[(k * n + i) * n + t]
                        for b in range(cnt[t * n + j]):
                            u = idx[(t * n + j) * n + b]
                            acc[u] += cij * T[(t * n + j) * n + u]
                    res = None
                    for u in range(n):
                        if acc[u] != 0:
                            if res is None:
                                res = {}
                            res[u] = acc[u]
                    if res is not None:
                        out.append((i, j, k, res))
    finally:
        free(T); free(acc); free(par); free(cnt); free(idx)
    return out
