"""Exact sparse linear algebra over the rationals (rows are ``{column: value}``)."""

from ._kernels import insert_row, reduce_row

__all__ = ["RowSpace", "rank", "nullspace"]


class RowSpace:
    """Incrementally built row space in reduced row echelon form.

    Column keys may be any hashable values; they are numbered in order of
    first appearance. Pivots are chosen as the smallest surviving column
    number, so the result depends only on the order of insertion.
    """

    def __init__(self, rows=()):
        self.pivots = {}
        self.columns = {}
        for r in rows:
            self.add(r)

    def _encode(self, row, grow):
        out = {}
        for k, v in row.items():
            c = self.columns.get(k)
            if c is None:
                if not grow:
                    # a column no pivot row touches cannot be cancelled
                    return None
                c = self.columns[k] = len(self.columns)
            out[c] = v
        return out

    def add(self, row):
        """Insert ``row``; return ``True`` if it enlarged the space."""
        return insert_row(self._encode(row, True), self.pivots) >= 0

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        """Remainder of ``row`` modulo the space, keyed by the original columns."""
        enc = self._encode(row, True)
        keys = {c: k for k, c in self.columns.items()}
        return {keys[c]: v for c, v in reduce_row(enc, self.pivots).items()}

    def contains(self, row):
        enc = self._encode(row, False)
        if enc is None:
            return not any(row.values())
        return not reduce_row(enc, self.pivots)

    def copy(self):
        out = RowSpace()
        out.pivots = {k: dict(v) for k, v in self.pivots.items()}
        out.columns = dict(self.columns)
        return out


def rank(rows):
    return RowSpace(rows).rank


def nullspace(rows, ncols):
    """Basis of ``{v : row . v = 0 for every row}`` as sparse vectors, one per free column."""
    rs = RowSpace()
    # intern columns in natural order so pivots are the leftmost columns
    for c in range(ncols):
        rs.columns[c] = c
    for r in rows:
        rs.add(r)
    basis = []
    for f in range(ncols):
        if f in rs.pivots:
            continue
        v = {f: 1}
        for p, row in rs.pivots.items():
            w = row.get(f)
            if w:
                v[p] = -w
        basis.append(v)
    return basis
