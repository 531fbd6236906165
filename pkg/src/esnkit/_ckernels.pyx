# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the functions in ``_pykernels``."""

from libc.stdlib cimport malloc, free

cdef enum:
    UNDEF = -1
    UNKNOWN = -2


cdef bint _assoc_scan(int* T, int n) nogil:
    cdef int s, t, r, st, tr, x, y
    for s in range(n):
        for t in range(n):
            st = T[s * n + t]
            for r in range(n):
                tr = T[t * n + r]
                if st >= 0:
                    x = T[st * n + r]
                else:
                    x = st
                if tr >= 0:
                    y = T[s * n + tr]
                else:
                    y = tr
                if not ((st >= 0 and (tr >= 0 or x >= 0)) or (tr >= 0 and y >= 0)):
                    continue
                if st == UNDEF or tr == UNDEF or x == UNDEF or y == UNDEF:
                    return False
                if st >= 0 and tr >= 0 and x >= 0 and y >= 0 and x != y:
                    return False
    return True


cdef int* _copy(object seq, int size) except NULL:
    cdef int* out = <int*> malloc(max(size, 1) * sizeof(int))
    cdef int i
    if out == NULL:
        raise MemoryError()
    for i in range(size):
        out[i] = seq[i]
    return out


def assoc_ok(tab, int n):
    cdef int* T = _copy(tab, n * n)
    try:
        return _assoc_scan(T, n)
    finally:
        free(T)


cdef bint _lms_fits(int* T, int n, int k) nogil:
    cdef int i = k // n
    cdef int j = k % n
    cdef int v = T[k]
    cdef int w = T[j * n + i]
    if i == j and v != i:
        return False
    if w != UNKNOWN and w != v:
        return False
    return True


cdef void _search_tables(int* T, int n, int k, bint lms, list out):
    cdef int v, i
    if k == n * n:
        out.append(tuple([T[i] for i in range(n * n)]))
        return
    for v in range(-1, n):
        T[k] = v
        if lms and not _lms_fits(T, n, k):
            continue
        if _assoc_scan(T, n):
            _search_tables(T, n, k + 1, lms, out)
    T[k] = UNKNOWN


def search_tables(int n, lms=False):
    cdef int size = n * n
    cdef int* T = <int*> malloc(max(size, 1) * sizeof(int))
    cdef int i
    cdef list out = []
    if T == NULL:
        raise MemoryError()
    try:
        for i in range(size):
            T[i] = UNKNOWN
        _search_tables(T, n, 0, bool(lms), out)
    finally:
        free(T)
    return out


cdef bint _left_scan(int* T, int* u, int n, bint restriction) nogil:
    cdef int s, t, ps, pt, a, c, st, d, pst
    for s in range(n):
        ps = u[s]
        if ps >= 0 and T[ps * n + s] != s:
            return False
    for s in range(n):
        ps = u[s]
        for t in range(n):
            pt = u[t]
            if pt < 0:
                continue
            if ps >= 0:
                a = T[ps * n + pt]
                if a >= 0:
                    if T[pt * n + ps] != a:
                        return False
                    c = T[ps * n + t]
                    if c < 0:
                        return False
                    if u[c] >= 0 and u[c] != a:
                        return False
            st = T[s * n + t]
            if st < 0:
                continue
            d = T[s * n + pt]
            if d < 0:
                return False
            pst = u[st]
            if pst < 0:
                continue
            if restriction:
                if T[pst * n + s] != d:
                    return False
            elif u[d] >= 0 and pst != u[d]:
                return False
    return True


cdef int* _table(object tab, int n, bint right) except NULL:
    cdef int* T = _copy(tab, n * n)
    cdef int i, j, tmp
    if right:
        for i in range(n):
            for j in range(i + 1, n):
                tmp = T[i * n + j]
                T[i * n + j] = T[j * n + i]
                T[j * n + i] = tmp
    return T


def unary_ok(tab, u, int n, right=False, restriction=False):
    cdef int* T = _table(tab, n, bool(right))
    cdef int* U = NULL
    try:
        U = _copy(u, n)
        return _left_scan(T, U, n, bool(restriction))
    finally:
        free(T)
        if U != NULL:
            free(U)


cdef void _search_unary(int* T, int* u, int n, int k, bint restriction, list out):
    cdef int v, i
    if k == n:
        out.append(tuple([u[i] for i in range(n)]))
        return
    for v in range(n):
        u[k] = v
        if _left_scan(T, u, n, restriction):
            _search_unary(T, u, n, k + 1, restriction, out)
    u[k] = UNKNOWN


def search_unary(tab, int n, right=False, restriction=False):
    cdef int* T = _table(tab, n, bool(right))
    cdef int* u = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int i
    cdef list out = []
    try:
        if u == NULL:
            raise MemoryError()
        for i in range(n):
            u[i] = UNKNOWN
        _search_unary(T, u, n, 0, bool(restriction), out)
    finally:
        free(T)
        if u != NULL:
            free(u)
    return out


def unique_pseudo_inverses(tab, int n):
    cdef int* T = _copy(tab, n * n)
    cdef int s, u, su, us, found, count
    cdef list inv = []
    try:
        for s in range(n):
            found = -1
            count = 0
            for u in range(n):
                su = T[s * n + u]
                us = T[u * n + s]
                if su < 0 or us < 0:
                    continue
                if T[su * n + s] == s and T[us * n + u] == u:
                    count += 1
                    found = u
            if count != 1:
                return None
            inv.append(found)
    finally:
        free(T)
    return inv
