"""Pure-Python word-scan kernels.

Words are tuples of small non-negative ints (letter indices).  These four
scans sit in the innermost loops of reduction and composition search; a
compiled twin lives in ``_speedups.pyx`` with identical semantics.
"""

BACKEND = "python"


def find_factor(u, v):
    """First start index of v as a contiguous factor of u, or -1."""
    m = len(v)
    if m == 0:
        return 0
    n = len(u)
    if m > n:
        return -1
    first = v[0]
    for i in range(n - m + 1):
        if u[i] == first and u[i : i + m] == v:
            return i
    return -1


def is_factor(u, v):
    """True when v occurs contiguously inside u."""
    return find_factor(u, v) >= 0


def factor_positions(u, v):
    """All start indices of v inside u, ascending; overlapping hits count."""
    m = len(v)
    n = len(u)
    if m == 0:
        return list(range(n + 1))
    out = []
    if m > n:
        return out
    first = v[0]
    for i in range(n - m + 1):
        if u[i] == first and u[i : i + m] == v:
            out.append(i)
    return out


def overlap_lengths(u, v):
    """Lengths L >= 1 with u[-L:] == v[:L] and L < len(u), ascending.

    These are the proper nonempty suffixes of u that begin v; L may equal
    len(v) (v occurring as a proper suffix of u).
    """
    n = len(u)
    m = len(v)
    out = []
    for L in range(1, min(n - 1, m) + 1):
        if u[n - L :] == v[:L]:
            out.append(L)
    return out
