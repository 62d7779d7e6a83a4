"""Random test functions and JSON-configurable sampling plans."""

import itertools
import json
import random
from dataclasses import asdict, dataclass, field

from .poly import Poly
from .scalars import mpq
from .spline import PiecewisePolynomial
from .superfunction import Signature, SuperFunction

__all__ = [
    "SamplingPlan",
    "parity_patterns",
    "random_rational",
    "random_poly_function",
    "random_spline_function",
    "random_function",
]


def parity_patterns(arity):
    """All tuples of shifted parities for ``arity`` arguments."""
    return list(itertools.product((0, 1), repeat=arity))


def random_rational(rng, bound=3, denominators=(1, 1, 1, 2, 3)):
    while True:
        v = mpq(rng.randint(-bound, bound), rng.choice(denominators))
        if v:
            return v


def _masks_with_parity(n, eps):
    return [m for m in range(1 << n) if bin(m).count("1") % 2 == eps]


def random_poly_function(sig, rng, shifted, terms=3, degree=4):
    """Sparse random polynomial function of shifted parity ``shifted`` (Grassmann parity ``1 - shifted``)."""
    masks = _masks_with_parity(sig.n, 1 - shifted)
    comps = {}
    for _ in range(terms):
        m = rng.choice(masks)
        e = tuple(rng.randint(0, degree) for _ in range(sig.n)) + (0,) * len(sig.params)
        c = comps.setdefault(m, {})
        c[e] = c.get(e, 0) + random_rational(rng)
    return SuperFunction(sig, {m: Poly(sig.nvars, t) for m, t in comps.items()})


def random_bump_spline(rng, smoothness=4, bumps=2, degree=2, span=(-3, 3)):
    """Sum of random low-degree polynomials times ``C^smoothness`` bumps on rational intervals."""
    out = PiecewisePolynomial.constant(0)
    for _ in range(bumps):
        a = mpq(rng.randint(span[0] * 4, span[1] * 4 - 2), 4)
        b = a + mpq(rng.randint(1, 8), 4)
        body = PiecewisePolynomial.polynomial([random_rational(rng) for _ in range(rng.randint(0, degree) + 1)])
        out = out + body * PiecewisePolynomial.bump(a, b, order=smoothness + 1)
    if out.is_zero():
        return random_bump_spline(rng, smoothness, bumps, degree, span)
    return out


def random_spline_function(sig, rng, shifted, smoothness=4, span=(-3, 3)):
    """Compactly supported spline function (``n == 1``) of the given shifted parity."""
    mask = 1 if shifted == 0 else 0
    return SuperFunction(sig, {mask: random_bump_spline(rng, smoothness, span=span)})


def random_function(sig, rng, shifted, kind="poly", degree=4, terms=3, smoothness=4):
    if kind == "spline":
        return random_spline_function(sig, rng, shifted, smoothness)
    return random_poly_function(sig, rng, shifted, terms, degree)


@dataclass
class SamplingPlan:
    """How to draw argument tuples for an exact identity check."""

    seed: int = 0
    trials: int = 50
    n: int = 1
    degree: int = 4
    terms: int = 3
    kind: str = "poly"
    smoothness: int = 4
    patterns: list = field(default=None)

    def __post_init__(self):
        if self.kind not in ("poly", "spline", "both"):
            raise ValueError(f"unknown sampling kind {self.kind!r}")
        if self.kind != "poly" and self.n != 1:
            raise ValueError("spline sampling needs n == 1")
        if self.trials < 0 or self.degree < 0 or self.terms < 1:
            raise ValueError("invalid sampling bounds")

    def signature(self):
        return Signature(self.n)

    def tuples(self, arity, sig=None):
        """Yield ``(pattern, args)``: every parity pattern, ``trials`` times each."""
        sig = sig or self.signature()
        rng = random.Random(self.seed)
        pats = [tuple(p) for p in self.patterns] if self.patterns else parity_patterns(arity)
        kinds = ["poly", "spline"] if self.kind == "both" else [self.kind]
        for pat in pats:
            for t in range(self.trials):
                kind = kinds[t % len(kinds)]
                args = tuple(
                    random_function(sig, rng, e, kind, self.degree, self.terms, self.smoothness) for e in pat
                )
                yield pat, args

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(**data)
