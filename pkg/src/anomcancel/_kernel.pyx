# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exhaustive scan over (m, n, i1, i2). Callers guarantee b**(d1+d2) < 2**62."""

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"

ctypedef long long i64


cdef void _split(i64 lo, i64 hi, i64 b, int d, i64 *digs, i64 *reds) noexcept nogil:
    cdef i64 v, p, q, low, high, c
    cdef int i
    cdef i64 k = 0
    for v in range(lo, hi):
        p = 1
        for i in range(d):
            q = v // p
            low = v - q * p
            high = q // b
            c = q - high * b
            digs[k * d + i] = c
            reds[k * d + i] = high * p + low
            p *= b
        k += 1


def scan(long long b, int d1, int d2, long long m_lo, long long m_hi):
    cdef i64 n_lo = 1, n_hi, i
    for i in range(d2 - 1):
        n_lo *= b
    n_hi = n_lo * b
    cdef i64 mcount = m_hi - m_lo
    cdef i64 ncount = n_hi - n_lo
    cdef i64 *mdig = <i64 *> malloc(max(mcount, 1) * d1 * sizeof(i64))
    cdef i64 *mred = <i64 *> malloc(max(mcount, 1) * d1 * sizeof(i64))
    cdef i64 *ndig = <i64 *> malloc(ncount * d2 * sizeof(i64))
    cdef i64 *nred = <i64 *> malloc(ncount * d2 * sizeof(i64))
    if not mdig or not mred or not ndig or not nred:
        free(mdig); free(mred); free(ndig); free(nred)
        raise MemoryError()
    hits = []
    cdef i64 mi, ni, m, n, c, n_red, m_red
    cdef int i1, i2
    try:
        _split(m_lo, m_hi, b, d1, mdig, mred)
        _split(n_lo, n_hi, b, d2, ndig, nred)
        for mi in range(mcount):
            m = m_lo + mi
            for ni in range(ncount):
                n = n_lo + ni
                for i2 in range(d2):
                    c = ndig[ni * d2 + i2]
                    n_red = nred[ni * d2 + i2]
                    for i1 in range(d1):
                        if mdig[mi * d1 + i1] != c:
                            continue
                        m_red = mred[mi * d1 + i1]
                        if n_red >= 1 and m_red >= 1 and m * n_red == m_red * n:
                            hits.append((m, n, i1, i2))
    finally:
        free(mdig); free(mred); free(ndig); free(nred)
    return hits, mcount * ncount
