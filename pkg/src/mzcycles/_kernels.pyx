# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled nested-sum kernel for one-variable multiple polylogarithms."""
from libc.math cimport pow

cdef enum:
    MAXDEPTH = 32


def li_checkpoints(ks, zs, long N, checkpoints):
    """Partial sums of sum_{n_1 > ... > n_m >= 1} prod z_i^{n_i} / n_i^{k_i}
    for n_1 <= c, at each checkpoint c (ascending, <= N)."""
    cdef int m = len(ks)
    if m > MAXDEPTH:
        raise ValueError("depth too large")
    cdef double k[MAXDEPTH]
    cdef double inner[MAXDEPTH]
    cdef double comp[MAXDEPTH]
    cdef double term[MAXDEPTH]
    cdef double zz[MAXDEPTH]
    cdef double zp[MAXDEPTH]
    cdef int i
    for i in range(m):
        k[i] = ks[i]
        zz[i] = zs[i]
        zp[i] = 1.0
        inner[i] = 0.0
        comp[i] = 0.0
    inner[m - 1] = 1.0
    cdef double total = 0.0, c = 0.0, y, t, dn
    cdef long n
    cps = sorted(checkpoints)
    out = []
    cdef int ci = 0
    cdef long nxt = cps[0] if cps else N + 1
    for n in range(1, N + 1):
        dn = <double>n
        for i in range(m):
            zp[i] *= zz[i]
            term[i] = zp[i] * (inner[i] + comp[i]) / pow(dn, k[i])
        # Neumaier summation for the outer sum
        y = term[0]
        t = total + y
        if abs(total) >= abs(y):
            c += (total - t) + y
        else:
            c += (y - t) + total
        total = t
        for i in range(1, m):
            y = term[i]
            t = inner[i - 1] + y
            if abs(inner[i - 1]) >= abs(y):
                comp[i - 1] += (inner[i - 1] - t) + y
            else:
                comp[i - 1] += (y - t) + inner[i - 1]
            inner[i - 1] = t
        while n == nxt:
            out.append(total + c)
            ci += 1
            nxt = cps[ci] if ci < len(cps) else N + 1
    return out
