# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word-scan kernels; semantics match ``_kernels_py`` exactly.

Words longer than the stack buffer fall back to generic tuple slicing,
which keeps the functions total for any input length.
"""

DEF MAXLEN = 256

BACKEND = "c"


cdef inline Py_ssize_t _load(tuple w, long *buf) except -2:
    cdef Py_ssize_t n = len(w)
    cdef Py_ssize_t i
    if n > MAXLEN:
        return -1
    for i in range(n):
        buf[i] = <long> w[i]
    return n


def find_factor(tuple u, tuple v):
    """First start index of v as a contiguous factor of u, or -1."""
    cdef long bu[MAXLEN]
    cdef long bv[MAXLEN]
    cdef Py_ssize_t n, m, i, j
    n = _load(u, bu)
    m = _load(v, bv)
    if n < 0 or m < 0:
        return _find_factor_slow(u, v)
    if m == 0:
        return 0
    if m > n:
        return -1
    for i in range(n - m + 1):
        if bu[i] == bv[0]:
            j = 1
            while j < m and bu[i + j] == bv[j]:
                j += 1
            if j == m:
                return i
    return -1


def is_factor(tuple u, tuple v):
    """True when v occurs contiguously inside u."""
    return find_factor(u, v) >= 0


def factor_positions(tuple u, tuple v):
    """All start indices of v inside u, ascending; overlapping hits count."""
    cdef long bu[MAXLEN]
    cdef long bv[MAXLEN]
    cdef Py_ssize_t n, m, i, j
    cdef list out = []
    n = _load(u, bu)
    m = _load(v, bv)
    if n < 0 or m < 0:
        return _factor_positions_slow(u, v)
    if m == 0:
        return list(range(n + 1))
    if m > n:
        return out
    for i in range(n - m + 1):
        if bu[i] == bv[0]:
            j = 1
            while j < m and bu[i + j] == bv[j]:
                j += 1
            if j == m:
                out.append(i)
    return out


def overlap_lengths(tuple u, tuple v):
    """Lengths L >= 1 with u[-L:] == v[:L] and L < len(u), ascending."""
    cdef long bu[MAXLEN]
    cdef long bv[MAXLEN]
    cdef Py_ssize_t n, m, L, j, top
    cdef bint ok
    cdef list out = []
    n = _load(u, bu)
    m = _load(v, bv)
    if n < 0 or m < 0:
        return _overlap_lengths_slow(u, v)
    top = n - 1
    if m < top:
        top = m
    for L in range(1, top + 1):
        ok = True
        for j in range(L):
            if bu[n - L + j] != bv[j]:
                ok = False
                break
        if ok:
            out.append(L)
    return out


def _find_factor_slow(tuple u, tuple v):
    cdef Py_ssize_t m = len(v)
    cdef Py_ssize_t n = len(u)
    cdef Py_ssize_t i
    if m == 0:
        return 0
    if m > n:
        return -1
    for i in range(n - m + 1):
        if u[i : i + m] == v:
            return i
    return -1


def _factor_positions_slow(tuple u, tuple v):
    cdef Py_ssize_t m = len(v)
    cdef Py_ssize_t n = len(u)
    cdef Py_ssize_t i
    cdef list out = []
    if m == 0:
        return list(range(n + 1))
    for i in range(n - m + 1):
        if u[i : i + m] == v:
            out.append(i)
    return out


def _overlap_lengths_slow(tuple u, tuple v):
    cdef Py_ssize_t n = len(u)
    cdef Py_ssize_t m = len(v)
    cdef Py_ssize_t L
    cdef list out = []
    cdef Py_ssize_t top = n - 1
    if m < top:
        top = m
    for L in range(1, top + 1):
        if u[n - L :] == v[:L]:
            out.append(L)
    return out
