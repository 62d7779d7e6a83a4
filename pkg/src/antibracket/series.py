"""Truncated formal power series in an even parameter hbar, and the
deformation scalars ``a(hbar) + theta*b(hbar)`` with ``theta`` odd."""

from .scalars import is_scalar, mpq, to_q

__all__ = ["HbarSeries", "DeformationScalar", "DEFAULT_ORDER"]

DEFAULT_ORDER = 6


def _is_zero(c):
    if is_scalar(c):
        return not c
    return c.is_zero()


class HbarSeries:
    """``sum_{k<=order} coeffs[k] * hbar^k``.

    Coefficients may be rationals or any ring element supporting ``+``, ``*``
    and ``is_zero`` (for instance :class:`SuperFunction`). Products drop every
    term above ``order``.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=DEFAULT_ORDER):
        coeffs = list(coeffs)[: order + 1]
        self.coeffs = [to_q(c) if is_scalar(c) else c for c in coeffs]
        self.order = order

    @classmethod
    def constant(cls, c, order=DEFAULT_ORDER):
        return cls([c], order)

    @classmethod
    def hbar(cls, order=DEFAULT_ORDER):
        return cls([0, 1], order)

    def coeff(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def is_zero(self):
        return all(_is_zero(c) for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _lift(self, other):
        if isinstance(other, HbarSeries):
            return other
        return HbarSeries([other], self.order)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        order = min(self.order, other.order)
        out = []
        for k in range(n):
            a, b = self.coeff(k), other.coeff(k)
            out.append(b if is_scalar(a) and not a else a if is_scalar(b) and not b else a + b)
        return HbarSeries(out, order)

    __radd__ = __add__

    def __neg__(self):
        return HbarSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        order = min(self.order, other.order)
        out = [0] * min(order + 1, len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > order:
                    break
                if _is_zero(b):
                    continue
                t = a * b
                out[i + j] = t if is_scalar(out[i + j]) and not out[i + j] else out[i + j] + t
        return HbarSeries(out, order)

    def __rmul__(self, other):
        # scalars and ring elements multiply from the left
        return self._lift(other) * self

    def shift(self, k=1):
        """Multiply by ``hbar^k``."""
        return HbarSeries([0] * k + self.coeffs, self.order)

    def map(self, fn):
        return HbarSeries([fn(c) for c in self.coeffs], self.order)

    def inverse(self):
        """Multiplicative inverse of a scalar series with nonzero constant term."""
        a0 = self.coeff(0)
        if not is_scalar(a0) or not a0:
            raise ZeroDivisionError("series is not invertible")
        inv = [mpq(1) / a0]
        for k in range(1, self.order + 1):
            s = sum(self.coeff(j) * inv[k - j] for j in range(1, k + 1))
            inv.append(-s * inv[0])
        return HbarSeries(inv, self.order)

    def __eq__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        for k in range(n):
            a, b = self.coeff(k), other.coeff(k)
            if _is_zero(a) and _is_zero(b):
                continue
            if is_scalar(a) and not is_scalar(b):
                a, b = b, a
            if a != b:
                return False
        return True

    __hash__ = None

    def __repr__(self):
        terms = [f"({c})*hbar^{k}" for k, c in enumerate(self.coeffs) if not _is_zero(c)]
        return "HbarSeries(" + (" + ".join(terms) or "0") + ")"


class DeformationScalar:
    """``even + theta*odd`` with ``even``, ``odd`` scalar hbar-series and ``theta^2 = 0``."""

    __slots__ = ("even", "odd")

    def __init__(self, even, odd=None, order=DEFAULT_ORDER):
        self.even = even if isinstance(even, HbarSeries) else HbarSeries(even, order)
        if odd is None:
            odd = HbarSeries([], self.even.order)
        self.odd = odd if isinstance(odd, HbarSeries) else HbarSeries(odd, order)

    def __add__(self, other):
        return DeformationScalar(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other):
        return DeformationScalar(self.even - other.even, self.odd - other.odd)

    def __mul__(self, other):
        # theta commutes with the (even) rational coefficients; theta*theta = 0
        return DeformationScalar(self.even * other.even, self.even * other.odd + self.odd * other.even)

    def __eq__(self, other):
        return self.even == other.even and self.odd == other.odd

    __hash__ = None

    def __repr__(self):
        return f"DeformationScalar({self.even!r} + theta*{self.odd!r})"
