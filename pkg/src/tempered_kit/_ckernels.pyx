# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pykernels``; same signatures."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXN = 16


cdef void _fill(int n, object up, unsigned int* upm, unsigned int* down):
    cdef int i, j
    for i in range(n):
        upm[i] = <unsigned int>up[i]
        down[i] = 0
    for i in range(n):
        for j in range(n):
            if (upm[i] >> j) & 1:
                down[j] |= (1u << i)


cdef unsigned long long _order_code(int n, unsigned int* upm, int* perm):
    cdef unsigned long long a = 0
    cdef int p, q
    cdef unsigned int row
    for p in range(n - 1):
        row = upm[perm[p]]
        for q in range(p + 1, n):
            a = (a << 1) | ((row >> perm[q]) & 1)
    return a


def linear_extensions(int n, up):
    cdef unsigned int upm[MAXN]
    cdef unsigned int down[MAXN]
    cdef int perm[MAXN]
    cdef int cand[MAXN]
    cdef unsigned int placed = 0
    cdef int k = 0, i, j
    if n > MAXN:
        raise ValueError("at most 16 points")
    if n == 0:
        return [()]
    _fill(n, up, upm, down)
    out = []
    cand[0] = -1
    while k >= 0:
        i = cand[k] + 1
        while i < n and (((placed >> i) & 1) or (down[i] & ~placed)):
            i += 1
        if i >= n:
            k -= 1
            if k >= 0:
                placed &= ~(1u << perm[k])
            continue
        cand[k] = i
        perm[k] = i
        if k == n - 1:
            out.append(tuple([perm[j] for j in range(n)]))
        else:
            placed |= (1u << i)
            k += 1
            cand[k] = -1
    return out


def order_code(int n, up, perm):
    cdef unsigned int upm[MAXN]
    cdef unsigned int down[MAXN]
    cdef int cperm[MAXN]
    cdef int i
    _fill(n, up, upm, down)
    for i in range(n):
        cperm[i] = perm[i]
    return _order_code(n, upm, cperm)


def temperature_code(int n, unsigned int tau, perm):
    cdef unsigned int t = 0
    cdef int p
    for p in range(n):
        t = (t << 1) | ((tau >> <int>perm[p]) & 1)
    return t


def minimal_order_code(int n, up):
    cdef unsigned int upm[MAXN]
    cdef unsigned int down[MAXN]
    cdef int cperm[MAXN]
    cdef unsigned long long a, best = 0
    cdef bint have = False
    cdef int i
    _fill(n, up, upm, down)
    perms = []
    for perm in linear_extensions(n, up):
        for i in range(n):
            cperm[i] = perm[i]
        a = _order_code(n, upm, cperm)
        if not have or a < best:
            best = a
            have = True
            perms = [perm]
        elif a == best:
            perms.append(perm)
    return best, perms


def minimal_temperature_codes(int n, perms):
    cdef int m = len(perms)
    cdef int p, s
    cdef unsigned int tau, t, best
    cdef int* P = <int*>malloc(max(m, 1) * n * sizeof(int))
    if P == NULL:
        raise MemoryError()
    try:
        for s in range(m):
            for p in range(n):
                P[s * n + p] = perms[s][p]
        out = []
        for tau in range(1u << n):
            best = 0xFFFFFFFFu
            for s in range(m):
                t = 0
                for p in range(n):
                    t = (t << 1) | ((tau >> P[s * n + p]) & 1)
                if t < best:
                    best = t
            out.append(best)
        return out
    finally:
        free(P)
