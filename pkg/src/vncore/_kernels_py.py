"""Pure-Python integer matrix kernels (fallback for the compiled core).

Matrices are flat row-major lists of Python ints.  Exactness is free
(arbitrary precision); the compiled twin in `_kernels.pyx` exists purely
for speed on the dense products that dominate the identity checks.
"""

BACKEND = "python"


def matmul(a, b, m, k, n):
    """(m x k) @ (k x n), skipping zero entries of `a`."""
    out = [0] * (m * n)
    for i in range(m):
        ai = i * k
        oi = i * n
        for t in range(k):
            av = a[ai + t]
            if not av:
                continue
            bt = t * n
            for j in range(n):
                bv = b[bt + j]
                if bv:
                    out[oi + j] += av * bv
    return out


def kron(a, b, ra, ca, rb, cb):
    """Kronecker product of (ra x ca) and (rb x cb)."""
    cols = ca * cb
    out = [0] * (ra * rb * cols)
    for i in range(ra):
        for j in range(ca):
            av = a[i * ca + j]
            if not av:
                continue
            for s in range(rb):
                ro = (i * rb + s) * cols + j * cb
                bo = s * cb
                for t in range(cb):
                    bv = b[bo + t]
                    if bv:
                        out[ro + t] = av * bv
    return out
