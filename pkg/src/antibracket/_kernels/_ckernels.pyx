# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels; see ``_pykernels`` for the contract."""

from gmpy2 import mpq


cdef inline int _popcount(unsigned long long v) nogil:
    cdef int c = 0
    while v:
        v &= v - 1
        c += 1
    return c


cdef inline int _csign(unsigned long long a, unsigned long long b) nogil:
    cdef int swaps = 0
    cdef unsigned long long low
    cdef int j
    if a & b:
        return 0
    while b:
        low = b & (~b + 1)
        j = 0
        while (low >> j) != 1:
            j += 1
        swaps += _popcount(a >> (j + 1))
        b ^= low
    return -1 if swaps & 1 else 1


def grassmann_sign(a, b):
    return _csign(a, b)


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef Py_ssize_t k, n
    for ea, ca in a.items():
        n = len(ea)
        for eb, cb in b.items():
            e = tuple([ea[k] + eb[k] for k in range(n)])
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def poly_add(dict a, dict b, scale=1):
    cdef dict out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def superpoly_mul(dict a, dict b):
    cdef dict out = {}
    cdef dict pa, pb, prod, acc
    cdef int s
    cdef unsigned long long ma, mb, m
    for ma_obj, pa in a.items():
        ma = ma_obj
        for mb_obj, pb in b.items():
            mb = mb_obj
            s = _csign(ma, mb)
            if s == 0:
                continue
            prod = poly_mul(pa, pb)
            if not prod:
                continue
            m = ma | mb
            acc = out.get(m)
            if acc is None:
                acc = {}
                out[m] = acc
            for e, c in prod.items():
                v = acc.get(e, 0) + (c if s > 0 else -c)
                if v:
                    acc[e] = v
                else:
                    del acc[e]
            if not acc:
                del out[m]
    return out


def upoly_mul(list a, list b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        ca = a[i]
        if not ca:
            continue
        for j in range(nb):
            cb = b[j]
            if cb:
                out[i + j] = out[i + j] + ca * cb
    while out and not out[len(out) - 1]:
        out.pop()
    return out


def reduce_row(dict row, dict pivots):
    cdef dict prow
    for c in [c for c in row if c in pivots]:
        f = row.get(c)
        if not f:
            continue
        prow = pivots[c]
        for k, v in prow.items():
            w = row.get(k, 0) - f * v
            if w:
                row[k] = w
            else:
                row.pop(k, None)
    return row


def insert_row(dict row, dict pivots):
    cdef dict other
    row = reduce_row(dict(row), pivots)
    if not row:
        return -1
    p = min(row)
    inv = mpq(1) / row[p]
    row = {k: v * inv for k, v in row.items()}
    for q, other in pivots.items():
        f = other.get(p)
        if f:
            for k, v in row.items():
                w = other.get(k, 0) - f * v
                if w:
                    other[k] = w
                else:
                    other.pop(k, None)
    pivots[p] = row
    return p
