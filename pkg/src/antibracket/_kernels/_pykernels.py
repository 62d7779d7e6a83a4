"""Pure-Python reference versions of the hot kernels.

Every function here has a twin of the same name and signature in
``_ckernels.pyx``. Coefficients are any exact numeric type closed under
``+``, ``-`` and ``*`` (ints, ``gmpy2.mpq``); zero coefficients are never stored.
"""

from gmpy2 import mpq


def grassmann_sign(a, b):
    """Sign of ``m_a * m_b`` written back in ascending generator order.

    ``a`` and ``b`` are bitmasks of odd generators. Returns 0 when the
    monomials share a generator.
    """
    if a & b:
        return 0
    swaps = 0
    while b:
        low = b & -b
        j = low.bit_length() - 1
        swaps += bin(a >> (j + 1)).count("1")
        b ^= low
    return -1 if swaps & 1 else 1


def poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(i + j for i, j in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def poly_add(a, b, scale=1):
    """``a + scale*b`` as a new dict."""
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def superpoly_mul(a, b):
    """Product of two ``{odd_mask: {exponents: coef}}`` maps."""
    out = {}
    for ma, pa in a.items():
        for mb, pb in b.items():
            s = grassmann_sign(ma, mb)
            if not s:
                continue
            prod = poly_mul(pa, pb)
            if not prod:
                continue
            m = ma | mb
            acc = out.get(m)
            if acc is None:
                acc = out[m] = {}
            for e, c in prod.items():
                v = acc.get(e, 0) + (c if s > 0 else -c)
                if v:
                    acc[e] = v
                else:
                    del acc[e]
            if not acc:
                del out[m]
    return out


def upoly_mul(a, b):
    """Dense univariate product, coefficients listed from degree 0."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    while out and not out[-1]:
        out.pop()
    return out


def reduce_row(row, pivots):
    """Reduce a sparse row against a fully reduced pivot set, in place."""
    for c in [c for c in row if c in pivots]:
        f = row.get(c)
        if not f:
            continue
        for k, v in pivots[c].items():
            w = row.get(k, 0) - f * v
            if w:
                row[k] = w
            else:
                row.pop(k, None)
    return row


def insert_row(row, pivots):
    """Add ``row`` to a reduced row echelon form kept as ``{pivot_col: row}``.

    Returns the new pivot column, or -1 if the row was dependent.
    """
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
