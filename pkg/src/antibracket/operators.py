"""Distinguished differential operators on superfunctions.

``delta_op`` is the odd Laplacian, ``euler_z`` and ``n_xi`` the Euler
operators, ``script_e`` the companion ``1 - N_z/2`` that appears next to the
Laplacian in the even local cocycle, and ``diagonal_series_op`` the formal
series ``hbar*c / (1 + hbar*c*N_z/2)`` applied after the Laplacian.
"""

from dataclasses import dataclass

from .errors import RepresentationError
from .scalars import is_scalar, mpq
from .series import DEFAULT_ORDER, HbarSeries

__all__ = [
    "delta_op",
    "euler_z",
    "n_xi",
    "script_e",
    "euler_series",
    "diagonal_series_op",
    "LocalOperator",
]


def delta_op(f):
    """``sum_i d/dx^i d/dxi^i f``."""
    terms = [f.dxi(i).dx(i) for i in range(f.sig.n)]
    out = terms[0]
    for t in terms[1:]:
        out = out + t
    return out


def euler_z(f):
    """``N_z f = sum_i (x^i d/dx^i + xi^i d/dxi^i) f``; auxiliary symbols are not counted."""
    out = None
    for i in range(f.sig.n):
        t = f.dx(i).mul_x(i) + n_xi_single(f, i)
        out = t if out is None else out + t
    return out


def n_xi_single(f, i):
    """``xi^i d/dxi^i f``: keeps exactly the terms containing ``xi^i``."""
    if hasattr(f, "comps"):
        bit = 1 << i
        return f._raw(f.sig, {m: c for m, c in f.comps.items() if m & bit})
    return f.sig.xi(i + 1) * f.dxi(i)


def n_xi(f):
    """``N_xi f = sum_i xi^i d/dxi^i f``."""
    out = None
    for i in range(f.sig.n):
        t = n_xi_single(f, i)
        out = t if out is None else out + t
    return out


def script_e(f, a=1, b=mpq(1, 2)):
    """``(a - b*N_z) f``; the defaults give the operator ``1 - N_z/2``.

    The coefficients are exposed so the tests can show that other choices
    break the cocycle condition.
    """
    if a == 1 and b == 0:
        return f
    return f.scale(a) - euler_z(f).scale(b) if b else f.scale(a)


def euler_series(c, d, order=DEFAULT_ORDER):
    """Scalar series ``hbar*c / (1 + hbar*c*d/2)`` for an even series ``c``."""
    if is_scalar(c):
        c = HbarSeries([c], order)
    hc = c.shift(1)
    hc = HbarSeries(hc.coeffs, order)
    denom = HbarSeries([1], order) + hc * mpq(d, 2)
    return hc * denom.inverse()


def diagonal_series_op(c, f, order=DEFAULT_ORDER):
    """``hbar*c / (1 + hbar*c*N_z/2) Delta f`` as an hbar-series of superfunctions.

    ``f`` must have polynomial coefficients, so that ``Delta f`` splits into
    ``N_z`` eigenvectors.
    """
    if getattr(f, "kind", None) == "spline":
        raise RepresentationError("the N_z series needs polynomial coefficients")
    g = delta_op(f)
    if not hasattr(g, "euler_parts"):
        # symbols are not N_z eigenvectors; only the first order is available
        if order > 1:
            raise RepresentationError("the N_z series beyond first order needs polynomial input")
        c0 = c.coeff(0) if isinstance(c, HbarSeries) else c
        return HbarSeries([g.scale(0), g.scale(c0)], order)
    out = HbarSeries([], order)
    for d, part in sorted(g.euler_parts().items()):
        s = euler_series(c, d, order)
        out = out + HbarSeries([part.scale(k) if k else f.sig.zero() for k in s.coeffs], order)
    return out


@dataclass(frozen=True)
class LocalOperator:
    """``f -> sum_k coef_k(z) * D_k f`` with ``D_k`` a monomial in the derivatives.

    ``terms`` is a tuple of ``(coef, xorders, ximask)``: ``xorders[i]`` is the
    number of ``d/dx^i`` and ``ximask`` the set of ``d/dxi^i`` (applied from
    the left, highest index first so that the word reads ``d_xi1 d_xi2 ...``).
    """

    terms: tuple

    def __call__(self, f):
        out = None
        for coef, xorders, ximask in self.terms:
            g = f
            for i in reversed(range(f.sig.n)):
                if ximask >> i & 1:
                    g = g.dxi(i)
            for i, k in enumerate(xorders):
                for _ in range(k):
                    g = g.dx(i)
            t = coef * g
            out = t if out is None else out + t
        return out if out is not None else f.sig.zero()

    def parity(self):
        """Grassmann parity by which the operator shifts its argument, or ``None`` if mixed."""
        ps = set()
        for coef, _, ximask in self.terms:
            if coef.is_zero():
                continue
            p = coef.parity()
            if p == "mixed":
                return None
            ps.add((p + bin(ximask).count("1")) & 1)
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0
