# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer matrix kernels.

Same contract as `_kernels_py`: flat row-major lists of Python ints.
Entries small enough for 64-bit accumulation take a C fast path; anything
larger falls back to Python-object arithmetic inside compiled loops, so
results are exact either way.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

# |entry| below this bound guarantees k * amax * bmax fits in 63 bits for
# every k that can appear here (k <= 2**20).
DEF FAST_LIMIT = 1 << 20


cdef bint _fits(list a, long long limit):
    cdef object v
    for v in a:
        if v > limit or v < -limit:
            return False
    return True


cdef long long* _to_ll(list a) except NULL:
    cdef Py_ssize_t i, size = len(a)
    cdef long long* buf = <long long*> malloc(size * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = a[i]
    return buf


def matmul(list a, list b, Py_ssize_t m, Py_ssize_t k, Py_ssize_t n):
    if k <= FAST_LIMIT and _fits(a, FAST_LIMIT) and _fits(b, FAST_LIMIT):
        return _matmul_ll(a, b, m, k, n)
    return _matmul_obj(a, b, m, k, n)


cdef list _matmul_ll(list a, list b, Py_ssize_t m, Py_ssize_t k, Py_ssize_t n):
    cdef long long* ca = _to_ll(a)
    cdef long long* cb = _to_ll(b)
    cdef long long* co = <long long*> malloc(m * n * sizeof(long long))
    cdef Py_ssize_t i, j, t
    cdef long long av, acc
    if co == NULL:
        free(ca); free(cb)
        raise MemoryError()
    try:
        for i in range(m):
            for j in range(n):
                acc = 0
                for t in range(k):
                    av = ca[i * k + t]
                    if av != 0:
                        acc += av * cb[t * n + j]
                co[i * n + j] = acc
        return [co[i] for i in range(m * n)]
    finally:
        free(ca); free(cb); free(co)


cdef list _matmul_obj(list a, list b, Py_ssize_t m, Py_ssize_t k, Py_ssize_t n):
    cdef list out = [0] * (m * n)
    cdef Py_ssize_t i, j, t, ai, oi, bt
    cdef object av, bv
    for i in range(m):
        ai = i * k
        oi = i * n
        for t in range(k):
            av = a[ai + t]
            if av == 0:
                continue
            bt = t * n
            for j in range(n):
                bv = b[bt + j]
                if bv != 0:
                    out[oi + j] = out[oi + j] + av * bv
    return out


def kron(list a, list b, Py_ssize_t ra, Py_ssize_t ca,
         Py_ssize_t rb, Py_ssize_t cb):
    cdef Py_ssize_t cols = ca * cb
    cdef list out = [0] * (ra * rb * cols)
    cdef Py_ssize_t i, j, s, t, ro, bo
    cdef object av, bv
    for i in range(ra):
        for j in range(ca):
            av = a[i * ca + j]
            if av == 0:
                continue
            for s in range(rb):
                ro = (i * rb + s) * cols + j * cb
                bo = s * cb
                for t in range(cb):
                    bv = b[bo + t]
                    if bv != 0:
                        out[ro + t] = av * bv
    return out
