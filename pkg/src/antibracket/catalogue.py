"""The six explicit 2-cocycles of the antibracket and the ``n = 1`` component calculus.

``m2_3`` and ``m2_4`` are local and defined for every ``n``; ``m2_1``,
``m2_2``, ``m2_5`` and ``m2_6`` are nonlocal (Berezin integrals, optionally
against the step kernel ``theta(x - y)``) and defined for ``n = 1`` on
compactly supported splines. Their values are smooth but in general not
compactly supported.

For ``n = 1`` write ``f = f_0(x) + xi f_1(x)``. A 1-form splits into four
scalar maps ``M1(f) = T1(f_0) + T2(f_1) + xi [T3(f_0) + T4(f_1)]`` and a
2-form into six,
``M2(f,g) = M(1)(f_0,g_0) + M(2)(f_0,g_1) - M(2)(g_0,f_1) + M(3)(f_1,g_1) + xi [same with 4,5,6]``.
"""

from dataclasses import dataclass

from .brackets import extend_bilinear, m2_3_raw, m2_4_raw
from .cohomology import Cochain, shifted_parity
from .errors import RepresentationError
from .spline import PiecewisePolynomial
from .superfunction import SuperFunction, cumulative_integral, integrate_full

__all__ = [
    "m2_1",
    "m2_2",
    "m2_3",
    "m2_4",
    "m2_5",
    "m2_6",
    "CatalogueEntry",
    "CATALOGUE",
    "entry",
    "cochain",
    "ComponentDecomposition",
    "decompose_n1",
    "decompose_1form_n1",
    "coboundary_components",
]


def _n1(f):
    if f.sig.n != 1:
        raise RepresentationError("nonlocal cocycles are defined for n == 1 only")


def _d3(f):
    return f.dx(0).dx(0).dx(0)


def _constant(sig, v):
    if not v:
        return sig.zero()
    return SuperFunction(sig, {0: PiecewisePolynomial.constant(v)})


def _berezin_cumulative(integrand):
    """``x -> int du theta(x - y) F(u)`` for ``F(u) = F_0(y) + eta F_1(y)``."""
    sig = integrand.sig
    top = integrand.split_aux().get(0, sig.zero()).comps.get(1)
    if top is None:
        return sig.zero()
    return cumulative_integral(SuperFunction(sig, {0: top}))


def _full(integrand):
    return _constant(integrand.sig, integrate_full(integrand).scalar_part())


def m2_1(f, g):
    """``int du (-1)^{shifted(f)} [d_y^3 f(u)] d_eta g(u)``; a constant function."""
    _n1(f)
    t = _d3(f) * g.dxi(0)
    if shifted_parity(f):
        t = -t
    return _full(t)


def _m2_2_local(f, g):
    a, b = f.dxi(0), g.dxi(0)
    return (a.dx(0).dx(0) * b.dx(0) - a.dx(0) * b.dx(0).dx(0)).mul_x(0)


def m2_2(f, g, variant="appendix"):
    """Cumulative third-derivative cocycle.

    ``appendix``: ``int du theta(x-y) (-1)^{shifted(f)} {[d^3 f] d_eta g + (-1)^{eps(g)} [d_eta f] d^3 g}
    - x {[d_x^2 d_xi f] d_x d_xi g - [d_x d_xi f] d_x^2 d_xi g}``.
    ``results``: ``int du theta(x-y) [d_eta g d^3 f - d_eta f d^3 g]`` plus the same local
    term with the opposite sign. Only the ``appendix`` variant is a cocycle.
    """
    _n1(f)
    if variant == "appendix":
        t = _d3(f) * g.dxi(0)
        u = f.dxi(0) * _d3(g)
        if g.parity():
            u = -u
        t = t + u
        if shifted_parity(f):
            t = -t
        return _berezin_cumulative(t) - _m2_2_local(f, g)
    if variant == "results":
        t = g.dxi(0) * _d3(f) - f.dxi(0) * _d3(g)
        return _berezin_cumulative(t) + _m2_2_local(f, g)
    raise ValueError(f"unknown variant {variant!r}")


def m2_3(f, g):
    """``(-1)^{eps(f)} {(1 - N_xi) f} (1 - N_xi) g``."""
    return m2_3_raw(f, g)


def m2_4(f, g):
    """``(-1)^{eps(f)} {Delta f} E g + {E f} Delta g`` with ``E = 1 - N_z/2``."""
    return m2_4_raw(f, g)


def m2_5(f, g, signed=True):
    """``int du (-1)^{shifted(f)} d_y f(u) d_y g(u)``; a constant function.

    ``signed=False`` drops the sign factor; that version fails superantisymmetry.
    """
    _n1(f)
    t = f.dx(0) * g.dx(0)
    if signed and shifted_parity(f):
        t = -t
    return _full(t)


def m2_6(f, g, signed=True):
    """``int du theta(x-y) (-1)^{shifted(f)} d_y f(u) d_y g(u)``."""
    _n1(f)
    t = f.dx(0) * g.dx(0)
    if signed and shifted_parity(f):
        t = -t
    return _berezin_cumulative(t)


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    eps: int
    local: bool
    raw: object

    @property
    def grassmann_parity(self):
        return (self.eps + 3) % 2

    def applies_to(self, n):
        return self.local or n == 1

    def __call__(self, f, g):
        return extend_bilinear(self.raw, self.grassmann_parity)(f, g)


CATALOGUE = {
    "m2_1": CatalogueEntry("m2_1", 1, False, m2_1),
    "m2_2": CatalogueEntry("m2_2", 1, False, m2_2),
    "m2_3": CatalogueEntry("m2_3", 1, True, m2_3),
    "m2_4": CatalogueEntry("m2_4", 0, True, m2_4),
    "m2_5": CatalogueEntry("m2_5", 0, False, m2_5),
    "m2_6": CatalogueEntry("m2_6", 0, False, m2_6),
}


def entry(name):
    try:
        return CATALOGUE[name]
    except KeyError:
        raise KeyError(f"unknown cocycle {name!r}; choose from {sorted(CATALOGUE)}") from None


def cochain(name):
    e = entry(name)
    return Cochain(2, e.eps, e, "catalogue", name)


# n = 1 components ---------------------------------------------------------------


def _split(v):
    """``(v_0, v_1)`` with ``v = v_0 + xi v_1`` as scalar coefficient functions."""
    sig = v.sig
    z = sig.zero()
    return SuperFunction(sig, {0: v.comps[0]}) if 0 in v.comps else z, (
        SuperFunction(sig, {0: v.comps[1]}) if 1 in v.comps else z
    )


@dataclass
class ComponentDecomposition:
    """Values of ``M(1)..M(6)`` on a list of probe pairs ``(phi, psi)``."""

    pairs: list
    values: dict

    def component(self, k):
        return self.values[k]

    def __eq__(self, other):
        return self.values == other.values

    def mismatches(self, other):
        return [
            (k, i)
            for k in range(1, 7)
            for i, (a, b) in enumerate(zip(self.values[k], other.values[k]))
            if a != b
        ]


def decompose_n1(M2, probes):
    """Split a 2-form into its six scalar components on probe pairs of ``xi``-free functions."""
    values = {k: [] for k in range(1, 7)}
    pairs = list(probes)
    for phi, psi in pairs:
        xi = phi.sig.xi()
        a0, a1 = _split(M2(phi, psi))
        b0, b1 = _split(M2(phi, xi * psi))
        c0, c1 = _split(M2(xi * phi, xi * psi))
        for k, v in zip(range(1, 7), (a0, b0, c0, a1, b1, c1)):
            values[k].append(v)
    return ComponentDecomposition(pairs, values)


def decompose_1form_n1(M1):
    """``(T1, T2, T3, T4)`` as functions of a scalar argument."""

    def comp(odd_arg, part):
        def t(phi):
            arg = phi.sig.xi() * phi if odd_arg else phi
            return _split(M1(arg))[part]

        return t

    return comp(False, 0), comp(True, 0), comp(False, 1), comp(True, 1)


def _b0(phi, psi):
    return phi.dx(0) * psi


def _b1(phi, psi):
    return phi.dx(0) * psi - phi * psi.dx(0)


def coboundary_components(T1, T2, T3, T4, probes):
    """The six components of ``d_1 M1`` built directly from the scalar maps ``T1..T4``."""
    values = {k: [] for k in range(1, 7)}
    pairs = list(probes)
    for a, b in pairs:
        d = lambda f: f.dx(0)
        values[1].append(-(T3(a) * d(b)) - T3(b) * d(a))
        values[2].append(d(T1(a)) * b + T4(b) * d(a) - T1(_b0(a, b)))
        values[3].append(d(T2(a)) * b - d(T2(b)) * a - T2(_b1(a, b)))
        values[4].append(a.sig.zero())
        values[5].append(d(T3(a)) * b - T3(a) * d(b) - T3(_b0(a, b)))
        values[6].append(
            d(T4(a)) * b - d(T4(b)) * a + T4(b) * d(a) - T4(a) * d(b) - T4(_b1(a, b))
        )
    return ComponentDecomposition(pairs, values)
