"""Finite Grassmann algebras with exact coefficients.

Monomials are bitmasks over an ordered tuple of odd generators; bit ``i`` set
means generator ``i`` is present, and the stored word is always in ascending
generator order, so two elements are equal iff their term maps are equal.
"""

from dataclasses import dataclass
from typing import Iterable

from ._kernels import grassmann_sign
from .errors import ContextError
from .scalars import q_to_str, to_q

__all__ = [
    "OddGenerator",
    "GrassmannContext",
    "GrassmannElement",
    "MIXED",
    "gr_multiply",
    "parity",
    "berezin_integrate",
    "mask_parity",
]

GENERATOR_KINDS = ("coordinate", "deformation", "momentum", "dummy")

MIXED = "mixed"


def mask_parity(mask):
    return bin(mask).count("1") & 1


@dataclass(frozen=True)
class OddGenerator:
    id: str
    kind: str = "coordinate"

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")


class GrassmannContext:
    """An ordered set of odd generators; the order fixes the canonical form."""

    def __init__(self, generators: Iterable):
        gens = tuple(g if isinstance(g, OddGenerator) else OddGenerator(g) for g in generators)
        ids = [g.id for g in gens]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate generator ids in {ids}")
        if len(gens) > 62:
            raise ValueError("at most 62 odd generators are supported")
        self.generators = gens
        self._index = {g.id: i for i, g in enumerate(gens)}

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return isinstance(other, GrassmannContext) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"GrassmannContext({[g.id for g in self.generators]})"

    def index(self, gen):
        key = gen.id if isinstance(gen, OddGenerator) else gen
        try:
            return self._index[key]
        except KeyError:
            raise ContextError(f"generator {key!r} not in {self!r}") from None

    def mask_of(self, gens):
        mask = 0
        for g in gens:
            mask |= 1 << self.index(g)
        return mask

    def monomial_name(self, mask):
        return "*".join(g.id for i, g in enumerate(self.generators) if mask >> i & 1)

    def gen(self, g):
        return GrassmannElement(self, {1 << self.index(g): 1})

    def one(self):
        return GrassmannElement(self, {0: 1})

    def monomial(self, gens, coef=1):
        """The product of ``gens`` taken in the order given."""
        out = GrassmannElement(self, {0: to_q(coef)})
        for g in gens:
            out = out * self.gen(g)
        return out


class GrassmannElement:
    __slots__ = ("context", "terms")

    def __init__(self, context, terms=None):
        self.context = context
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def _check(self, other):
        if not isinstance(other, GrassmannElement):
            other = GrassmannElement(self.context, {0: to_q(other)})
        if other.context != self.context:
            raise ContextError(f"{self.context!r} vs {other.context!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GrassmannElement(self.context, out)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.context, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                s = grassmann_sign(ma, mb)
                if s:
                    m = ma | mb
                    out[m] = out.get(m, 0) + s * ca * cb
        return GrassmannElement(self.context, out)

    def __rmul__(self, scalar):
        return self._check(scalar) * self

    def __eq__(self, other):
        try:
            other = self._check(other)
        except (ContextError, TypeError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def scalar_part(self):
        return self.terms.get(0, 0)

    def parity(self):
        """Grassmann parity 0/1, or ``MIXED`` for inhomogeneous elements (0 counts as even)."""
        ps = {mask_parity(m) for m in self.terms}
        if len(ps) > 1:
            return MIXED
        return ps.pop() if ps else 0

    def __repr__(self):
        return f"GrassmannElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (bin(m).count("1"), m)):
            c = q_to_str(self.terms[m])
            name = self.context.monomial_name(m)
            if name and c in ("1", "-1"):
                parts.append(name if c == "1" else f"-{name}")
            else:
                parts.append(c if not name else f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")


def gr_multiply(a, b):
    return a * b


def parity(a):
    """Return ``(eps, shifted_eps)``; both are ``MIXED`` for inhomogeneous input."""
    p = a.parity()
    if p == MIXED:
        return MIXED, MIXED
    return p, 1 - p


def berezin_integrate(a, gens):
    """Iterated Berezin integral ``int d g_1 ... d g_k a``.

    Normalised by ``int d g_1 ... d g_k (g_1 ... g_k) = 1``: each integral is a
    left derivative, applied for ``g_1`` first.
    """
    ctx = a.context
    idx = [ctx.index(g) for g in gens]
    if len(set(idx)) != len(idx):
        raise ValueError("repeated integration variable")
    terms = dict(a.terms)
    for i in idx:
        out = {}
        for m, c in terms.items():
            if m >> i & 1:
                before = bin(m & ((1 << i) - 1)).count("1")
                out[m ^ (1 << i)] = out.get(m ^ (1 << i), 0) + (-c if before & 1 else c)
        terms = out
    return GrassmannElement(ctx, terms)
