# cython: boundscheck=False, wraparound=False, cdivision=True
"""Odometer box enumeration with incremental norm updates.

Walks every integer point of the box prod_i [-r_i, r_i] keeping the
vector w = G v and the norm v G v^T up to date under single-coordinate
moves, so each point costs O(n) int64 operations.  The caller guarantees
(via a precheck) that every intermediate value fits in 64 bits.
"""

from libc.stdlib cimport free, malloc


def enumerate_box(gram, radii, long long tn, long long td):
    """Nonzero integer vectors v in the box with td * (v G v^T) <= tn."""
    cdef Py_ssize_t n = len(radii)
    cdef Py_ssize_t i, j, k
    cdef long long delta
    cdef long long norm
    if n == 0:
        return []

    cdef long long *g = <long long *> malloc(n * n * sizeof(long long))
    cdef long long *r = <long long *> malloc(n * sizeof(long long))
    cdef long long *v = <long long *> malloc(n * sizeof(long long))
    cdef long long *w = <long long *> malloc(n * sizeof(long long))
    if g == NULL or r == NULL or v == NULL or w == NULL:
        free(g); free(r); free(v); free(w)
        raise MemoryError()

    results = []
    try:
        for i in range(n):
            r[i] = radii[i]
            row = gram[i]
            for j in range(n):
                g[i * n + j] = row[j]
        for i in range(n):
            v[i] = -r[i]
        for i in range(n):
            w[i] = 0
            for j in range(n):
                w[i] += g[i * n + j] * v[j]
        norm = 0
        for i in range(n):
            norm += v[i] * w[i]

        while True:
            if td * norm <= tn:
                for i in range(n):
                    if v[i] != 0:
                        results.append(tuple([v[j] for j in range(n)]))
                        break
            # Find the last coordinate that can still be incremented.
            k = n - 1
            while k >= 0 and v[k] == r[k]:
                k -= 1
            if k < 0:
                break
            # v[k] += 1, then reset the tail to its lower bound.
            norm += 2 * w[k] + g[k * n + k]
            v[k] += 1
            for i in range(n):
                w[i] += g[i * n + k]
            for j in range(k + 1, n):
                delta = -2 * r[j]
                if delta != 0:
                    norm += delta * (2 * w[j] + delta * g[j * n + j])
                    v[j] = -r[j]
                    for i in range(n):
                        w[i] += delta * g[i * n + j]
    finally:
        free(g); free(r); free(v); free(w)
    return results
