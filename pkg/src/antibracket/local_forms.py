"""Local 1- and 2-forms with polynomial coefficients: enumeration and random draws."""

import itertools

from .cohomology import Cochain
from .operators import LocalOperator
from .poly import Poly
from .sampling import random_rational
from .superfunction import SuperFunction

__all__ = [
    "derivative_monomials",
    "apply_derivative",
    "coefficient_monomials",
    "LocalBilinear",
    "random_local_operator",
    "random_local_2form",
]


def derivative_monomials(n, order):
    """All ``(xorders, ximask)`` with total order ``sum(xorders) + |ximask| <= order``."""
    out = []
    for mask in range(1 << n):
        k = bin(mask).count("1")
        if k > order:
            continue
        for xs in itertools.product(range(order - k + 1), repeat=n):
            if sum(xs) + k <= order:
                out.append((xs, mask))
    out.sort(key=lambda d: (sum(d[0]) + bin(d[1]).count("1"), d[1], d[0]))
    return out


def apply_derivative(f, xorders, ximask):
    g = f
    for i in reversed(range(f.sig.n)):
        if ximask >> i & 1:
            g = g.dxi(i)
    for i, k in enumerate(xorders):
        for _ in range(k):
            g = g.dx(i)
    return g


def coefficient_monomials(sig, degree):
    """Coefficient functions ``x^a xi^m`` with ``|a| <= degree``, deterministic order."""
    out = []
    for mask in range(1 << sig.n):
        for a in itertools.product(range(degree + 1), repeat=sig.n):
            if sum(a) <= degree:
                e = a + (0,) * len(sig.params)
                out.append(SuperFunction(sig, {mask: Poly(sig.nvars, {e: 1})}))
    return out


class LocalBilinear:
    """``M(f,g) = sum c (D1 f)(D2 g) - (-1)^{e(f)e(g)} c (D1 g)(D2 f)`` with ``e`` the shifted parity."""

    def __init__(self, terms):
        self.terms = list(terms)

    def grassmann_shift(self):
        ps = {
            (c.parity() + bin(d1[1]).count("1") + bin(d2[1]).count("1")) % 2
            for c, d1, d2 in self.terms
            if not c.is_zero()
        }
        if len(ps) > 1:
            raise ValueError("mixed-parity local form")
        return ps.pop() if ps else 0

    def __call__(self, f, g):
        sf, sg = 1 - f.parity(), 1 - g.parity()
        out = f.sig.zero()
        for c, d1, d2 in self.terms:
            a = c * apply_derivative(f, *d1) * apply_derivative(g, *d2)
            b = c * apply_derivative(g, *d1) * apply_derivative(f, *d2)
            out = out + (a + b if sf & sg else a - b)
        return out

    def cochain(self, name="local"):
        eps = (self.grassmann_shift() + 1) % 2
        return Cochain(2, eps, self, "local-ansatz", name)


def _random_coef(sig, rng, parity, degree, terms=2):
    masks = [m for m in range(1 << sig.n) if bin(m).count("1") % 2 == parity]
    out = sig.zero()
    for _ in range(terms):
        a = tuple(rng.randint(0, degree) for _ in range(sig.n)) + (0,) * len(sig.params)
        out = out + SuperFunction(sig, {rng.choice(masks): Poly(sig.nvars, {a: random_rational(rng)})})
    return out


def random_local_operator(sig, rng, shift, order=2, degree=2, terms=3):
    """A local 1-form ``sum c(z) D`` shifting Grassmann parity by ``shift``."""
    ders = derivative_monomials(sig.n, order)
    out = []
    for _ in range(terms):
        xs, mask = rng.choice(ders)
        cpar = (shift + bin(mask).count("1")) % 2
        out.append((_random_coef(sig, rng, cpar, degree), xs, mask))
    return LocalOperator(tuple(out))


def random_local_2form(sig, rng, shift, order=2, degree=2, terms=3):
    """A random superantisymmetric local 2-form shifting Grassmann parity by ``shift``."""
    ders = derivative_monomials(sig.n, order)
    out = []
    for _ in range(terms):
        d1, d2 = rng.choice(ders), rng.choice(ders)
        cpar = (shift + bin(d1[1]).count("1") + bin(d2[1]).count("1")) % 2
        out.append((_random_coef(sig, rng, cpar, degree), d1, d2))
    return LocalBilinear(out)
