"""Sparse multivariate polynomials with exact coefficients."""

from ._kernels import poly_add, poly_mul
from .scalars import is_scalar, mpq, q_to_str, to_q

__all__ = ["Poly"]


class Poly:
    """``{exponent tuple: coefficient}`` over a fixed number of commuting variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, nvars, c):
        c = to_q(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if is_scalar(other):
            other = Poly.const(self.nvars, other)
        return Poly._raw(self.nvars, poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        if is_scalar(other):
            other = Poly.const(self.nvars, other)
        return Poly._raw(self.nvars, poly_add(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return Poly.const(self.nvars, other) - self

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return Poly._raw(self.nvars, poly_mul(self.terms, other.terms))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = to_q(c)
        if not c:
            return Poly._raw(self.nvars, {})
        return Poly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        if is_scalar(other):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def diff(self, i):
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                out[e2] = c * k
        return Poly._raw(self.nvars, out)

    def mul_var(self, i):
        return Poly._raw(
            self.nvars, {e[:i] + (e[i] + 1,) + e[i + 1:]: c for e, c in self.terms.items()}
        )

    def degree(self, vars=None):
        """Maximum total degree in ``vars`` (all variables by default); -1 for zero."""
        if not self.terms:
            return -1
        vars = range(self.nvars) if vars is None else vars
        return max(sum(e[i] for i in vars) for e in self.terms)

    def split_by_degree(self, vars):
        """``{d: homogeneous part of degree d in vars}``."""
        parts = {}
        for e, c in self.terms.items():
            d = sum(e[i] for i in vars)
            parts.setdefault(d, {})[e] = c
        return {d: Poly._raw(self.nvars, t) for d, t in parts.items()}

    def evaluate(self, point):
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * mpq(x) ** k
            total += v
        return total

    def substitute_zero(self, i):
        """Set variable ``i`` to zero."""
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if e[i] == 0})

    def coefficient_list(self, i):
        """Coefficients of a polynomial in the single variable ``i``, from degree 0."""
        if not self.terms:
            return []
        out = [0] * (max(e[i] for e in self.terms) + 1)
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError("polynomial depends on other variables")
            out[e[i]] = c
        return out

    def format(self, names):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            cs = q_to_str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.format([f'x{i + 1}' for i in range(self.nvars)])})"
