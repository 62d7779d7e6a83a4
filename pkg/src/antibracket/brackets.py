"""The antibracket, its deformations, Jacobiators and similarity transforms.

Deformed brackets return :class:`HbarSeries` of superfunctions. An odd
deformation parameter ``theta`` is an auxiliary odd symbol of the signature;
every bilinear map is extended to arguments carrying auxiliary symbols by
:func:`extend_bilinear`, which moves those symbols to the front with the
usual Koszul sign.
"""

from .errors import ParityError
from .grassmann import MIXED
from .operators import delta_op, diagonal_series_op, n_xi, script_e
from .scalars import is_scalar
from .series import DEFAULT_ORDER, HbarSeries

__all__ = [
    "antibracket",
    "antibracket_divergence_form",
    "omega",
    "extend_bilinear",
    "m2_3_raw",
    "m2_4_raw",
    "even_deformed",
    "odd_deformed",
    "Bracket",
    "classical",
    "even_deformed_bracket",
    "odd_deformed_bracket",
    "mixed_bracket",
    "custom_bracket",
    "jacobiator",
    "SimilarityOperator",
    "similarity_transform",
]


def antibracket(f, g):
    """``[f,g] = sum_i (f <-d_{x^i})(d_{xi^i} g) - (f <-d_{xi^i})(d_{x^i} g)``."""
    out = None
    for i in range(f.sig.n):
        t = f.dx(i) * g.dxi(i) - f.dxi(i, "right") * g.dx(i)
        out = t if out is None else out + t
    return out


def omega(n):
    """The constant metric ``omega^{AB}`` read off from the antibracket.

    Keys are pairs of coordinates ``(("x", i), ("xi", i))``; only the nonzero
    entries are listed.
    """
    w = {}
    for i in range(n):
        w[("x", i), ("xi", i)] = 1
        w[("xi", i), ("x", i)] = -1
    return w


def _d(f, coord):
    kind, i = coord
    return f.dx(i) if kind == "x" else f.dxi(i)


def antibracket_divergence_form(f, g):
    """``(-1)^{eps_A * shifted(f)} d_A (f omega^{AB} d_B g) - 2 f Delta g``."""
    out = f.sig.zero()
    for p, fp in f.parity_parts().items():
        shifted = 1 - p
        for (a, b), w in omega(f.sig.n).items():
            t = _d(fp * _d(g, b).scale(w), a)
            if a[0] == "xi" and shifted:
                t = -t
            out = out + t
        out = out - (fp * delta_op(g)).scale(2)
    return out


def extend_bilinear(raw, eps_m):
    """Extend a bilinear map of Grassmann parity ``eps_m`` to arguments with auxiliary symbols.

    ``raw`` is evaluated only on arguments free of auxiliary symbols and of
    definite parity; ``M(aF, bG) = (-1)^{|b|(eps_m + eps(F))} a b M(F, G)``.
    """

    def wrapped(f, g):
        out = None
        fs, gs = f.split_aux(), g.split_aux()
        for a, fa in fs.items():
            am = f.sig.odd_monomial(a) if a else None
            for p, fp in fa.parity_parts().items():
                for b, gb in gs.items():
                    bm = f.sig.odd_monomial(b) if b else None
                    neg = bin(b).count("1") & (eps_m + p) & 1
                    for gq in gb.parity_parts().values():
                        t = raw(fp, gq)
                        if neg:
                            t = -t
                        if bm is not None:
                            t = bm * t
                        if am is not None:
                            t = am * t
                        out = t if out is None else out + t
        if out is None:
            return f.sig.zero()
        return out

    return wrapped


def _eps(f):
    p = f.parity()
    if p == MIXED:
        raise ParityError("argument must have definite parity")
    return p


def m2_3_raw(f, g):
    """``(-1)^{eps(f)} {(1 - N_xi) f} (1 - N_xi) g`` on homogeneous arguments."""
    t = (f - n_xi(f)) * (g - n_xi(g))
    return -t if _eps(f) else t


def m2_4_raw(f, g, e=script_e):
    """``(-1)^{eps(f)} {Delta f} E g + {E f} Delta g`` on homogeneous arguments."""
    t = delta_op(f) * e(g)
    if _eps(f):
        t = -t
    return t + e(f) * delta_op(g)


def _homogeneous_parts(fn):
    def split(f, g):
        out = None
        for fp in f.parity_parts().values():
            for gq in g.parity_parts().values():
                t = fn(fp, gq)
                out = t if out is None else out + t
        return out if out is not None else f.sig.zero()

    return split


def _as_series(c, order):
    if isinstance(c, HbarSeries):
        return HbarSeries(c.coeffs, order)
    if is_scalar(c):
        return HbarSeries([c], order)
    return HbarSeries(list(c), order)


def _even_raw(f, g, c, order):
    c = _as_series(c, order)
    out = HbarSeries([antibracket(f, g)], order)
    if c.is_zero():
        return out
    df = diagonal_series_op(c, f, order)
    dg = diagonal_series_op(c, g, order)
    ef, eg = script_e(f), script_e(g)
    t1 = df * HbarSeries([eg], order)
    if _eps(f):
        t1 = -t1
    return out + t1 + HbarSeries([ef], order) * dg


def even_deformed(f, g, c, order=DEFAULT_ORDER):
    """The bracket deformed by an even parameter, as an hbar-series truncated at ``order``."""
    raw = _homogeneous_parts(lambda a, b: _even_raw(a, b, c, order))
    return extend_bilinear(raw, 1)(f, g)


def odd_deformed(f, g, term="m2_4"):
    """``[f,g] + theta * term(f,g)``; the signature must contain the odd symbol ``theta``.

    The default ``term="m2_4"`` is the operator ``(-1)^{eps(f)} {Delta f} E g +
    {E f} Delta g``; ``term="m2_3"`` uses the odd local cocycle instead, which
    keeps the bracket parity-homogeneous. Both satisfy the Jacobi identity on
    theta-free arguments; only ``m2_3`` keeps it on theta-dependent ones.
    """
    th = f.sig.gen("theta")
    cocycle = m2_3_raw if term == "m2_3" else m2_4_raw
    eps_m = 1 if term == "m2_3" else 0

    def raw(a, b):
        return antibracket(a, b) + th * cocycle(a, b)

    return extend_bilinear(_homogeneous_parts(raw), eps_m)(f, g)


# bracket objects --------------------------------------------------------------


class Bracket:
    """A bilinear bracket on superfunctions.

    ``evaluator(f, g)`` returns a superfunction, or an hbar-series of them when
    ``order`` is set. Calling the bracket also accepts hbar-series arguments
    and distributes bilinearly, truncating at ``order``.
    """

    def __init__(self, kind, evaluator, order=None, parity=1, params=None):
        self.kind = kind
        self.evaluator = evaluator
        self.order = order
        self.parity = parity
        self.params = params or {}

    def __repr__(self):
        return f"Bracket({self.kind}, order={self.order})"

    def _series(self, v):
        if isinstance(v, HbarSeries):
            return v
        return HbarSeries([v], self.order)

    def __call__(self, f, g):
        if self.order is None:
            return self.evaluator(f, g)
        if not isinstance(f, HbarSeries) and not isinstance(g, HbarSeries):
            return self._series(self.evaluator(f, g))
        fs, gs = self._series(f), self._series(g)
        out = HbarSeries([], self.order)
        for i, a in enumerate(fs.coeffs):
            if is_scalar(a) or a.is_zero():
                continue
            for j, b in enumerate(gs.coeffs):
                if i + j > self.order:
                    break
                if is_scalar(b) or b.is_zero():
                    continue
                out = out + self._series(self.evaluator(a, b)).shift(i + j)
        return HbarSeries(out.coeffs, self.order)


def classical():
    return Bracket("classical", antibracket)


def even_deformed_bracket(c, order=DEFAULT_ORDER):
    return Bracket("even", lambda f, g: even_deformed(f, g, c, order), order, params={"c": c})


def odd_deformed_bracket(term="m2_4"):
    return Bracket("odd", lambda f, g: odd_deformed(f, g, term), params={"term": term})


def mixed_bracket(c, order=DEFAULT_ORDER, with_even_term=True):
    """``[f,g] + theta*m2_3(f,g) + (even deformation terms if requested)``.

    With the even term switched on this is not a deformation: the Jacobiator
    has a nonzero ``hbar*theta`` component.
    """
    cc = c if with_even_term else 0

    def raw(a, b):
        th = a.sig.gen("theta")
        out = _even_raw(a, b, cc, order)
        return out + HbarSeries([th * m2_3_raw(a, b)], order)

    ev = extend_bilinear(_homogeneous_parts(raw), 1)
    return Bracket("mixed", ev, order, params={"c": c, "with_even_term": with_even_term})


def custom_bracket(evaluator, order=None, kind="custom"):
    return Bracket(kind, evaluator, order)


def _shifted(f):
    if isinstance(f, HbarSeries):
        ps = {_shifted(c) for c in f.coeffs if not is_scalar(c) and not c.is_zero()}
        if len(ps) > 1:
            raise ParityError("series argument has no definite parity")
        return ps.pop() if ps else 0
    p = f.parity()
    if p == MIXED:
        raise ParityError("Jacobiator arguments must have definite parity")
    return 1 - p


def jacobiator(B, f, g, h):
    """``(-1)^{e(f)e(h)} B(B(f,g),h) + cyclic``, with ``e`` the shifted parity."""
    ef, eg, eh = _shifted(f), _shifted(g), _shifted(h)
    out = None
    for a, b, c, ea, ec in ((f, g, h, ef, eh), (g, h, f, eg, ef), (h, f, g, eh, eg)):
        t = B(B(a, b), c)
        if ea & ec:
            t = -t
        out = t if out is None else out + t
    return out


# similarity transforms ----------------------------------------------------------


class SimilarityOperator:
    """``T = id + sum_k hbar^k T_k`` with each ``T_k`` a parity-preserving linear map."""

    def __init__(self, corrections, order=DEFAULT_ORDER):
        self.corrections = list(corrections)
        self.order = order

    def _correction(self, F):
        F = F if isinstance(F, HbarSeries) else HbarSeries([F], self.order)
        out = HbarSeries([], self.order)
        for k, Tk in enumerate(self.corrections, start=1):
            if Tk is None:
                continue
            out = out + F.map(lambda c: c if is_scalar(c) else Tk(c)).shift(k)
        return HbarSeries(out.coeffs, self.order)

    def apply(self, F):
        F = F if isinstance(F, HbarSeries) else HbarSeries([F], self.order)
        return F + self._correction(F)

    def apply_inverse(self, F):
        """Solve ``T Y = F`` by fixed-point iteration; each pass fixes one more hbar order."""
        F = F if isinstance(F, HbarSeries) else HbarSeries([F], self.order)
        Y = F
        for _ in range(self.order):
            Y = F - self._correction(Y)
        return Y


def similarity_transform(B, T):
    """``C_T(f,g) = T^{-1} B(T f, T g)`` truncated at ``T.order``."""
    order = T.order
    base = B if B.order == order else Bracket(B.kind, B.evaluator, order, B.parity, B.params)

    def ev(f, g):
        return T.apply_inverse(base(T.apply(f), T.apply(g)))

    return Bracket(f"similar({B.kind})", ev, order, B.parity)
