# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) kernels over packed uint64 words.

Mirrors ``embedcert._pykernels`` exactly: same pivot rule, same Gray-code
walk, same early exit, so both backends return identical bits.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

NAME = "cython"


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline Py_ssize_t _nwords(Py_ssize_t ncols):
    return (ncols + 63) // 64 if ncols > 0 else 1


cdef void _load(uint64_t* dst, object value, Py_ssize_t nw) except *:
    cdef bytes raw = (<object>value).to_bytes(nw * 8, "little")
    memcpy(dst, <char*>raw, nw * 8)


cdef object _store(uint64_t* src, Py_ssize_t nw):
    return int.from_bytes((<char*>src)[:nw * 8], "little")


def rref(rows, Py_ssize_t ncols):
    """Fully reduced row echelon form; see ``_pykernels.rref``."""
    cdef list live = [x for x in rows if x]
    cdef Py_ssize_t n = len(live)
    cdef Py_ssize_t nw = _nwords(ncols)
    cdef Py_ssize_t i, r, p, w, col, top = 0
    cdef uint64_t bit, tmp
    cdef uint64_t* buf
    cdef uint64_t* prow
    cdef uint64_t* row
    cdef list pivots = []
    if n == 0:
        return [], []
    buf = <uint64_t*>calloc(n * nw, sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            _load(buf + i * nw, live[i], nw)
        for col in range(ncols):
            if top == n:
                break
            w = col >> 6
            bit = (<uint64_t>1) << (col & 63)
            p = top
            while p < n and not (buf[p * nw + w] & bit):
                p += 1
            if p == n:
                continue
            if p != top:
                for i in range(nw):
                    tmp = buf[p * nw + i]
                    buf[p * nw + i] = buf[top * nw + i]
                    buf[top * nw + i] = tmp
            prow = buf + top * nw
            for r in range(n):
                if r != top:
                    row = buf + r * nw
                    if row[w] & bit:
                        for i in range(w, nw):
                            row[i] ^= prow[i]
            pivots.append(col)
            top += 1
        return [_store(buf + i * nw, nw) for i in range(top)], pivots
    finally:
        free(buf)


def min_weight_combination(basis, Py_ssize_t ncols, long stop_at):
    """Gray-code minimum-weight search; see ``_pykernels``."""
    cdef Py_ssize_t r = len(basis)
    cdef Py_ssize_t nw = _nwords(ncols)
    cdef Py_ssize_t j, k
    cdef unsigned long long i, limit, best_i = 0, mask
    cdef long wt, best_w = ncols + 1
    cdef uint64_t* vecs
    cdef uint64_t* cur
    cdef uint64_t* src
    if r == 0:
        return 0, 0
    if r > 62:
        raise OverflowError("kernel dimension too large for Gray-code walk")
    vecs = <uint64_t*>calloc((r + 1) * nw, sizeof(uint64_t))
    if vecs == NULL:
        raise MemoryError()
    cur = vecs + r * nw
    try:
        for j in range(r):
            _load(vecs + j * nw, basis[j], nw)
        limit = (<unsigned long long>1) << r
        with nogil:
            i = 1
            while i < limit:
                src = vecs + __builtin_ctzll(i) * nw
                wt = 0
                for k in range(nw):
                    cur[k] ^= src[k]
                    wt += __builtin_popcountll(cur[k])
                if wt < best_w:
                    best_w = wt
                    best_i = i
                    if wt <= stop_at:
                        break
                i += 1
        mask = best_i ^ (best_i >> 1)
        for k in range(nw):
            cur[k] = 0
        j = 0
        while mask:
            if mask & 1:
                src = vecs + j * nw
                for k in range(nw):
                    cur[k] ^= src[k]
            mask >>= 1
            j += 1
        return int(best_w), _store(cur, nw)
    finally:
        free(vecs)


def span_weights(basis):
    """All nonzero span vectors with weights, Gray-code order."""
    cdef list out = []
    cur = 0
    cdef unsigned long long i, limit = (<unsigned long long>1) << len(basis)
    i = 1
    while i < limit:
        cur ^= basis[__builtin_ctzll(i)]
        out.append((cur.bit_count(), cur))
        i += 1
    return out
