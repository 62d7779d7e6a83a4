"""Grassmann-valued functions on R^{n|n}.

A :class:`SuperFunction` is ``sum_m c_m(x) * m`` over odd monomials ``m``
(bitmasks, ascending generator order), with coefficients either sparse
:class:`~antibracket.poly.Poly` polynomials or, for ``n == 1`` without
extra even parameters, :class:`~antibracket.spline.PiecewisePolynomial`
splines. Besides the coordinates ``xi_1..xi_n`` a signature may carry
auxiliary odd symbols (deformation parameter, odd momenta) and extra even
symbols (even momenta); these are constants as far as derivatives go.
"""

from dataclasses import dataclass, field

from ._kernels import grassmann_sign, superpoly_mul
from .errors import ContextError, DivergenceError, RepresentationError
from .grassmann import MIXED, GrassmannContext, GrassmannElement, OddGenerator, mask_parity
from .poly import Poly
from .scalars import is_scalar, to_q
from .spline import PiecewisePolynomial, SupportSet

__all__ = [
    "Signature",
    "SuperFunction",
    "partial",
    "multiply",
    "integrate_full",
    "cumulative_integral",
    "support",
    "equal",
]

_AUX_KINDS = {"theta": "deformation", "eta": "dummy"}


def _popcount(m):
    return bin(m).count("1")


@dataclass(frozen=True)
class Signature:
    """Which variables a function may depend on.

    ``n`` coordinate pairs ``(x^i, xi^i)``; ``aux`` names extra odd symbols
    (ordered after the ``xi``); ``params`` names extra even symbols.
    """

    n: int
    aux: tuple = ()
    params: tuple = ()
    context: GrassmannContext = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "aux", tuple(self.aux))
        object.__setattr__(self, "params", tuple(self.params))
        gens = [OddGenerator(name, "coordinate") for name in self.xi_names]
        gens += [OddGenerator(a, _AUX_KINDS.get(a.rstrip("0123456789"), "momentum")) for a in self.aux]
        object.__setattr__(self, "context", GrassmannContext(gens))

    @property
    def x_names(self):
        return ("x",) if self.n == 1 else tuple(f"x{i + 1}" for i in range(self.n))

    @property
    def xi_names(self):
        return ("xi",) if self.n == 1 else tuple(f"xi{i + 1}" for i in range(self.n))

    @property
    def nvars(self):
        return self.n + len(self.params)

    @property
    def coord_mask(self):
        return (1 << self.n) - 1

    @property
    def aux_mask(self):
        return ((1 << len(self.aux)) - 1) << self.n

    @property
    def spline_capable(self):
        return self.n == 1 and not self.params

    def with_aux(self, *names):
        return Signature(self.n, self.aux + tuple(a for a in names if a not in self.aux), self.params)

    def with_params(self, *names):
        return Signature(self.n, self.aux, self.params + tuple(p for p in names if p not in self.params))

    def coordinate(self, name):
        """``("x", i)`` or ``("xi", i)`` for a coordinate name such as ``"xi2"``."""
        if name in self.x_names:
            return "x", self.x_names.index(name)
        if name in self.xi_names:
            return "xi", self.xi_names.index(name)
        raise ContextError(f"unknown coordinate {name!r}")

    # constructors ----------------------------------------------------------
    def zero(self):
        return SuperFunction(self, {})

    def const(self, c):
        return SuperFunction(self, {0: Poly.const(self.nvars, c)})

    def one(self):
        return self.const(1)

    def x(self, i=1):
        return SuperFunction(self, {0: Poly.var(self.nvars, i - 1)})

    def xi(self, i=1):
        return SuperFunction(self, {1 << (i - 1): Poly.const(self.nvars, 1)})

    def gen(self, name):
        return SuperFunction(self, {1 << self.context.index(name): Poly.const(self.nvars, 1)})

    def param(self, name):
        return SuperFunction(self, {0: Poly.var(self.nvars, self.n + self.params.index(name))})

    def odd_monomial(self, mask, coef=1):
        return SuperFunction(self, {mask: Poly.const(self.nvars, coef)})

    def spline(self, components):
        """Build an ``n == 1`` function from ``{odd mask: PiecewisePolynomial}``."""
        if not self.spline_capable:
            raise RepresentationError("splines need n == 1 and no even parameters")
        return SuperFunction(self, dict(components))

    def xi_monomial(self, indices, coef=1):
        """``coef * xi^{i_1} ... xi^{i_k}`` with the product taken in the order given (1-based)."""
        f = self.const(coef)
        for i in indices:
            f = f * self.xi(i)
        return f


def _coerce_pair(a, b, nvars):
    """Bring two coefficients to a common representation."""
    if type(a) is type(b):
        return a, b
    if isinstance(a, Poly):
        return _poly_to_spline(a), b
    return a, _poly_to_spline(b)


def _poly_to_spline(p):
    if p.nvars != 1:
        raise RepresentationError("only univariate polynomials convert to splines")
    return PiecewisePolynomial.polynomial(p.coefficient_list(0))


class SuperFunction:
    """An immutable Grassmann-valued function; see the module docstring."""

    __slots__ = ("sig", "comps", "_hash")

    def __init__(self, sig, comps):
        self.sig = sig
        self.comps = {m: c for m, c in comps.items() if not c.is_zero()}
        self._hash = None

    @classmethod
    def _raw(cls, sig, comps):
        f = cls.__new__(cls)
        f.sig = sig
        f.comps = comps
        f._hash = None
        return f

    # representation --------------------------------------------------------
    @property
    def kind(self):
        if not self.comps:
            return "zero"
        if any(isinstance(c, PiecewisePolynomial) for c in self.comps.values()):
            return "spline"
        return "poly"

    def is_zero(self):
        return not self.comps

    def __bool__(self):
        return bool(self.comps)

    def component(self, mask):
        c = self.comps.get(mask)
        if c is None:
            return Poly.const(self.sig.nvars, 0) if self.kind != "spline" else PiecewisePolynomial.constant(0)
        return c

    def as_spline(self):
        """Same function with every coefficient converted to a spline."""
        if not self.sig.spline_capable:
            raise RepresentationError("splines need n == 1 and no even parameters")
        return SuperFunction._raw(
            self.sig,
            {m: c if isinstance(c, PiecewisePolynomial) else _poly_to_spline(c) for m, c in self.comps.items()},
        )

    def _check(self, other):
        if is_scalar(other):
            return self.sig.const(other)
        if not isinstance(other, SuperFunction):
            return None
        if other.sig != self.sig:
            raise ContextError(f"signature mismatch: {self.sig} vs {other.sig}")
        return other

    # algebra --------------------------------------------------------------
    def _addsub(self, other, sign):
        out = dict(self.comps)
        for m, c in other.comps.items():
            cur = out.get(m)
            if cur is None:
                out[m] = c if sign > 0 else -c
            else:
                cur, c = _coerce_pair(cur, c, self.sig.nvars)
                v = cur + c if sign > 0 else cur - c
                if v.is_zero():
                    del out[m]
                else:
                    out[m] = v
        return SuperFunction._raw(self.sig, out)

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self._addsub(other, 1)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other._addsub(self, -1)

    def __neg__(self):
        return SuperFunction._raw(self.sig, {m: -c for m, c in self.comps.items()})

    def scale(self, c):
        c = to_q(c)
        if not c:
            return self.sig.zero()
        return SuperFunction._raw(self.sig, {m: v.scale(c) for m, v in self.comps.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        other = self._check(other)
        if other is None:
            return NotImplemented
        if self.kind != "spline" and other.kind != "spline":
            prod = superpoly_mul(
                {m: c.terms for m, c in self.comps.items()},
                {m: c.terms for m, c in other.comps.items()},
            )
            nv = self.sig.nvars
            return SuperFunction._raw(self.sig, {m: Poly._raw(nv, t) for m, t in prod.items()})
        out = {}
        for ma, ca in self.comps.items():
            for mb, cb in other.comps.items():
                s = grassmann_sign(ma, mb)
                if not s:
                    continue
                x, y = _coerce_pair(ca, cb, self.sig.nvars)
                p = x * y
                if s < 0:
                    p = -p
                m = ma | mb
                out[m] = out[m] + p if m in out else p
        return SuperFunction(self.sig, out)

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other * self

    def __eq__(self, other):
        if is_scalar(other):
            other = self.sig.const(other)
        if not isinstance(other, SuperFunction):
            return NotImplemented
        if other.sig != self.sig or self.comps.keys() != other.comps.keys():
            return False
        for m, c in self.comps.items():
            a, b = _coerce_pair(c, other.comps[m], self.sig.nvars)
            if a != b:
                return False
        return True

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sig, frozenset(self.comps.items())))
        return self._hash

    # derivatives ----------------------------------------------------------
    def dx(self, i):
        """Derivative in the even coordinate ``x^{i+1}`` (0-based index)."""
        out = {}
        for m, c in self.comps.items():
            d = c.diff() if isinstance(c, PiecewisePolynomial) else c.diff(i)
            if not d.is_zero():
                out[m] = d
        return SuperFunction._raw(self.sig, out)

    def dxi(self, i, side="left", convention="standard"):
        """Left or right derivative in the odd generator with bit index ``i``.

        ``standard``: the left derivative carries ``(-1)^(#generators before)``
        and the right one ``(-1)^(#generators after)``; ``swapped`` exchanges
        the two rules (kept only so tests can show it breaks the Jacobi identity).
        """
        bit = 1 << i
        use_before = (side == "left") == (convention == "standard")
        out = {}
        for m, c in self.comps.items():
            if not m & bit:
                continue
            k = _popcount(m & (bit - 1)) if use_before else _popcount(m >> (i + 1))
            out[m ^ bit] = -c if k & 1 else c
        return SuperFunction._raw(self.sig, out)

    def mul_x(self, i):
        out = {}
        for m, c in self.comps.items():
            out[m] = c.mul_var() if isinstance(c, PiecewisePolynomial) else c.mul_var(i)
        return SuperFunction._raw(self.sig, out)

    # gradings -------------------------------------------------------------
    def parity(self):
        """Grassmann parity over all odd generators; ``MIXED`` if inhomogeneous."""
        ps = {mask_parity(m) for m in self.comps}
        if len(ps) > 1:
            return MIXED
        return ps.pop() if ps else 0

    def bracket_parity(self):
        p = self.parity()
        return MIXED if p == MIXED else 1 - p

    def parity_parts(self):
        parts = {}
        for m, c in self.comps.items():
            parts.setdefault(mask_parity(m), {})[m] = c
        return {p: SuperFunction._raw(self.sig, cs) for p, cs in parts.items()}

    def split_aux(self):
        """``{aux mask a: F_a}`` with ``self == sum_a a * F_a`` and each ``F_a`` free of aux symbols."""
        cm = self.sig.coord_mask
        parts = {}
        for m, c in self.comps.items():
            a, x = m & ~cm, m & cm
            if _popcount(a) & _popcount(x) & 1:
                c = -c
            parts.setdefault(a, {})[x] = c
        return {a: SuperFunction._raw(self.sig, cs) for a, cs in parts.items()}

    def is_pure(self):
        am = self.sig.aux_mask
        return all(not m & am for m in self.comps)

    def euler_parts(self):
        """``{d: part}`` where ``d`` is the total degree in ``x`` and ``xi`` (polynomials only)."""
        if self.kind == "spline":
            raise RepresentationError("spline coefficients are not N_z eigenvectors")
        xvars = range(self.sig.n)
        parts = {}
        for m, c in self.comps.items():
            k = _popcount(m & self.sig.coord_mask)
            for d, piece in c.split_by_degree(xvars).items():
                parts.setdefault(d + k, {})[m] = piece
        return {d: SuperFunction._raw(self.sig, cs) for d, cs in parts.items()}

    # spline-specific ------------------------------------------------------
    def evaluate(self, point):
        """Value at the even point as a Grassmann element."""
        if not isinstance(point, (tuple, list)):
            point = (point,)
        terms = {}
        for m, c in self.comps.items():
            v = c.evaluate(point[0]) if isinstance(c, PiecewisePolynomial) else c.evaluate(point)
            terms[m] = v
        return GrassmannElement(self.sig.context, terms)

    def is_compact(self):
        for c in self.comps.values():
            if isinstance(c, Poly) or not c.is_compact():
                return False
        return True

    # display --------------------------------------------------------------
    def format(self):
        if not self.comps:
            return "0"
        names = list(self.sig.x_names) + list(self.sig.params)
        parts = []
        for m in sorted(self.comps, key=lambda m: (_popcount(m), m)):
            c = self.comps[m]
            cs = c.format(names) if isinstance(c, Poly) else c.format(names[0])
            mono = self.sig.context.monomial_name(m)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            elif isinstance(c, Poly) and len(c.terms) == 1:
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __str__ = format

    def __repr__(self):
        return f"SuperFunction({self.format()})"


# module-level operations ------------------------------------------------------


def partial(f, coordinate, side="left", convention="standard"):
    """Derivative of ``f`` in a named coordinate (``"x"``, ``"xi"``, ``"x2"``, ...)."""
    kind, i = f.sig.coordinate(coordinate)
    if kind == "x":
        return f.dx(i)
    return f.dxi(i, side, convention)


def multiply(f, g):
    return f * g


def integrate_full(f):
    """``int dz f = int d^n x int d xi f`` as a Grassmann element (aux symbols may remain)."""
    sig = f.sig
    top = sig.coord_mask
    terms = {}
    for m, c in f.comps.items():
        if m & top != top:
            continue
        if isinstance(c, Poly):
            raise DivergenceError("integral of a polynomial over R^n")
        if not c.is_compact():
            raise DivergenceError("integral of a non-compact spline")
        terms[m & ~top] = terms.get(m & ~top, 0) + c.integral()
    return GrassmannElement(sig.context, terms)


def cumulative_integral(f):
    """Componentwise ``x -> int theta(x-y) f(y) dy`` for ``n == 1``."""
    if f.sig.n != 1:
        raise RepresentationError("cumulative integral is defined for n == 1 only")
    f = f.as_spline()
    return SuperFunction(f.sig, {m: c.cumulative() for m, c in f.comps.items()})


def support(f):
    out = SupportSet()
    for c in f.comps.values():
        if isinstance(c, Poly):
            return SupportSet([(None, None)])
        out = out | c.support()
    return out


def equal(f, g):
    return f == g
