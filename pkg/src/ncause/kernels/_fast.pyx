# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled minimal-sufficient-set kernel; same contract as ``_pure``."""

from libc.stdlib cimport calloc, free

DEF KMAX = 16
MAX_ARITY = KMAX


cdef int _fill_masks(const int[:] table, int* act, int k, int radix, int target,
                     unsigned char* seen) nogil:
    cdef int digits[KMAX]
    cdef Py_ssize_t row, n = table.shape[0]
    cdef int i, m
    for i in range(k):
        digits[i] = 0
    for row in range(n):
        if table[row] != target:
            m = 0
            for i in range(k):
                if digits[i] == act[i]:
                    m |= 1 << i
            seen[m] = 1
        # mixed-radix increment, last position fastest
        i = k - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < radix:
                break
            digits[i] = 0
            i -= 1
    return 0


cdef int _popcount(unsigned int x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def _check(table, actual, int radix):
    cdef int k = len(actual)
    if k > KMAX:
        raise ValueError(f"arity {k} exceeds kernel limit {KMAX}")
    if len(table) != radix ** k:
        raise ValueError("fire table length does not match radix ** arity")
    return k


def agreement_masks(const int[:] table, actual, int radix, int target):
    cdef int k = _check(table, actual, radix)
    cdef int act[KMAX]
    cdef int i, size = 1 << k
    cdef unsigned char* seen = <unsigned char*> calloc(size, 1)
    if seen == NULL:
        raise MemoryError()
    try:
        for i in range(k):
            act[i] = actual[i]
        with nogil:
            _fill_masks(table, act, k, radix, target, seen)
        return [m for m in range(size) if seen[m]]
    finally:
        free(seen)


def minimal_sufficient(const int[:] table, actual, int radix, int target):
    cdef int k = _check(table, actual, radix)
    cdef int act[KMAX]
    cdef int i, s, bit, low, b, size = 1 << k
    cdef bint minimal
    cdef unsigned char* cov = <unsigned char*> calloc(size, 1)
    if cov == NULL:
        raise MemoryError()
    out = []
    try:
        for i in range(k):
            act[i] = actual[i]
        with nogil:
            _fill_masks(table, act, k, radix, target, cov)
            for i in range(k):
                bit = 1 << i
                for s in range(size):
                    if (s & bit) and cov[s]:
                        cov[s ^ bit] = 1
        for s in range(size):
            if cov[s]:
                continue
            minimal = True
            b = s
            while b:
                low = b & -b
                if not cov[s ^ low]:
                    minimal = False
                    break
                b ^= low
            if minimal:
                out.append((_popcount(s), s))
    finally:
        free(cov)
    out.sort()
    return [s for _, s in out]
