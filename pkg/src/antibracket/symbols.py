"""Exponential symbols ``P(z) e^{zp}`` and the momentum-space form of the
Jacobi obstruction between the two local cocycles.

``zp = x^i u_i + xi^i alpha_i`` with even momenta ``u`` (commuting symbols)
and odd momenta ``alpha`` (auxiliary odd generators). ``e^{x u}`` is never
expanded: an :class:`ExpPolynomial` is a finite sum of exponentials
``e^{x.L}`` (``L`` linear in the even momenta) with superfunction bodies.
"""

from dataclasses import dataclass

from .brackets import antibracket, extend_bilinear, m2_3_raw, m2_4_raw
from .errors import ContextError
from .grassmann import MIXED
from .linalg import nullspace
from .poly import Poly
from .scalars import is_scalar, mpq, to_q
from .superfunction import Signature, SuperFunction

__all__ = [
    "momentum_signature",
    "Momentum",
    "ExpPolynomial",
    "exp_symbol",
    "angle_bracket",
    "composite",
    "p4",
    "printed_p4",
    "printed_composites",
    "momentum_degree_part",
    "reduce_at_r_zero",
    "SecondOrderAnsatz",
    "solve_second_order",
]

_EVEN = ("u", "v", "t")
_ODD = ("alpha", "beta", "gamma")


def momentum_signature(n=1):
    """Signature with coordinates, odd momenta ``alpha, beta, gamma``, the odd
    deformation parameter ``theta`` and even momenta ``u, v, t``."""

    def names(base):
        return (base,) if n == 1 else tuple(f"{base}{i + 1}" for i in range(n))

    aux = sum((names(a) for a in _ODD), ()) + ("theta",)
    params = sum((names(p) for p in _EVEN), ())
    return Signature(n, aux, params)


@dataclass(frozen=True)
class Momentum:
    """``p_A = (u_i, alpha_i)``: ``even[i]`` maps parameter names to rational
    coefficients; ``odd[i]`` is an odd superfunction built from odd momenta."""

    sig: Signature
    even: tuple
    odd: tuple

    @classmethod
    def named(cls, sig, index):
        """The symbolic momentum ``p``, ``q`` or ``r`` for ``index`` 0, 1, 2."""
        n = sig.n
        ev, od = _EVEN[index], _ODD[index]
        if n == 1:
            return cls(sig, ({ev: 1},), (sig.gen(od),))
        return cls(sig, tuple({f"{ev}{i + 1}": 1} for i in range(n)), tuple(sig.gen(f"{od}{i + 1}") for i in range(n)))

    @classmethod
    def zero(cls, sig):
        return cls(sig, tuple({} for _ in range(sig.n)), tuple(sig.zero() for _ in range(sig.n)))

    def __add__(self, other):
        ev = []
        for a, b in zip(self.even, other.even):
            d = dict(a)
            for k, v in b.items():
                d[k] = d.get(k, 0) + v
            ev.append({k: v for k, v in d.items() if v})
        return Momentum(self.sig, tuple(ev), tuple(a + b for a, b in zip(self.odd, other.odd)))

    def __neg__(self):
        return Momentum(self.sig, tuple({k: -v for k, v in a.items()} for a in self.even), tuple(-a for a in self.odd))

    def even_function(self, i):
        out = self.sig.zero()
        for name, c in self.even[i].items():
            out = out + self.sig.param(name).scale(c)
        return out

    def components(self):
        """``[(p_A as superfunction, A)]`` with ``A`` in ``("x", i)`` or ``("xi", i)``."""
        out = []
        for i in range(self.sig.n):
            out.append((self.even_function(i), ("x", i)))
            out.append((self.odd[i], ("xi", i)))
        return out

    def zp(self):
        """``z^A p_A = x^i u_i + xi^i alpha_i``."""
        out = self.sig.zero()
        for i in range(self.sig.n):
            out = out + self.sig.x(i + 1) * self.even_function(i) + self.sig.xi(i + 1) * self.odd[i]
        return out

    def exponent_key(self):
        names = self.sig.params
        return tuple(tuple(to_q(self.even[i].get(p, 0)) for p in names) for i in range(self.sig.n))


class ExpPolynomial:
    """``sum_L e^{x.L} B_L(z)`` with superfunction bodies ``B_L``."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig, terms):
        self.sig = sig
        self.terms = {k: b for k, b in terms.items() if not b.is_zero()}

    @classmethod
    def from_function(cls, f):
        zero = tuple(tuple(0 for _ in f.sig.params) for _ in range(f.sig.n))
        return cls(f.sig, {zero: f})

    def _coerce(self, other):
        if isinstance(other, ExpPolynomial):
            if other.sig != self.sig:
                raise ContextError("signature mismatch")
            return other
        if isinstance(other, SuperFunction):
            return ExpPolynomial.from_function(other)
        if is_scalar(other):
            return ExpPolynomial.from_function(self.sig.const(other))
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _addsub(self, other, sign):
        out = dict(self.terms)
        for k, b in other.terms.items():
            if k in out:
                out[k] = out[k] + b if sign > 0 else out[k] - b
            else:
                out[k] = b if sign > 0 else -b
        return ExpPolynomial(self.sig, out)

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self._addsub(other, 1)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self._addsub(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else other._addsub(self, -1)

    def __neg__(self):
        return ExpPolynomial(self.sig, {k: -b for k, b in self.terms.items()})

    def scale(self, c):
        return ExpPolynomial(self.sig, {k: b.scale(c) for k, b in self.terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for k1, b1 in self.terms.items():
            for k2, b2 in other.terms.items():
                k = tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(k1, k2))
                p = b1 * b2
                out[k] = out[k] + p if k in out else p
        return ExpPolynomial(self.sig, out)

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms.keys() == other.terms.keys() and all(b == other.terms[k] for k, b in self.terms.items())

    __hash__ = None

    def _linear(self, key, i):
        out = self.sig.zero()
        for name, c in zip(self.sig.params, key[i]):
            if c:
                out = out + self.sig.param(name).scale(c)
        return out

    def dx(self, i):
        return ExpPolynomial(self.sig, {k: self._linear(k, i) * b + b.dx(i) for k, b in self.terms.items()})

    def dxi(self, i, side="left", convention="standard"):
        return ExpPolynomial(self.sig, {k: b.dxi(i, side, convention) for k, b in self.terms.items()})

    def mul_x(self, i):
        return ExpPolynomial(self.sig, {k: b.mul_x(i) for k, b in self.terms.items()})

    def parity(self):
        ps = {b.parity() for b in self.terms.values()}
        if MIXED in ps or len(ps) > 1:
            return MIXED
        return ps.pop() if ps else 0

    def parity_parts(self):
        out = {}
        for k, b in self.terms.items():
            for p, part in b.parity_parts().items():
                out.setdefault(p, {})[k] = part
        return {p: ExpPolynomial(self.sig, t) for p, t in out.items()}

    def split_aux(self):
        out = {}
        for k, b in self.terms.items():
            for a, part in b.split_aux().items():
                out.setdefault(a, {})[k] = part
        return {a: ExpPolynomial(self.sig, t) for a, t in out.items()}

    def body(self):
        """The body of a single-exponential symbol with zero exponent."""
        if not self.terms:
            return self.sig.zero()
        if len(self.terms) != 1:
            raise ValueError("more than one exponential present")
        (k, b), = self.terms.items()
        if any(any(row) for row in k):
            raise ValueError("exponent is not zero")
        return b

    def taylor(self, degree):
        """Replace each ``e^{x.L}`` by its Taylor polynomial of x-degree ``degree``."""
        out = self.sig.zero()
        for k, b in self.terms.items():
            e = self.sig.one()
            for i in range(self.sig.n):
                lin = self._linear(k, i) * self.sig.x(i + 1)
                s, power = self.sig.one(), self.sig.one()
                fact = 1
                for j in range(1, degree + 1):
                    power = power * lin
                    fact *= j
                    s = s + power.scale(mpq(1, fact))
                e = e * s
            out = out + e * b
        return out

    def __repr__(self):
        parts = []
        for k, b in self.terms.items():
            parts.append(f"e^{k}*({b})")
        return "ExpPolynomial(" + " + ".join(parts) + ")"


def exp_symbol(p):
    """``e^{zp} = prod_i e^{x^i u_i} (1 + xi^i alpha_i)``."""
    sig = p.sig
    body = sig.one()
    for i in range(sig.n):
        body = body * (sig.one() + sig.xi(i + 1) * p.odd[i])
    return ExpPolynomial(sig, {p.exponent_key(): body})


def _strip(value, total):
    """``value * e^{-z total}`` reduced to a single body."""
    if not isinstance(value, ExpPolynomial):
        value = ExpPolynomial.from_function(value)
    return (value * exp_symbol(-total)).body()


def angle_bracket(p, q):
    """``<p,q> = [e^{zp}, e^{zq}] e^{-z(p+q)}``."""
    return _strip(antibracket(exp_symbol(p), exp_symbol(q)), p + q)


_M23 = extend_bilinear(m2_3_raw, 0)
_M24 = extend_bilinear(m2_4_raw, 1)


def _theta_m23(f, g):
    """``theta * m2_3`` extended as one map of Grassmann parity 1, as inside the mixed bracket."""
    th = f.sig.gen("theta")
    return extend_bilinear(lambda a, b: th * m2_3_raw(a, b), 1)(f, g)


def composite(outer, inner, p, q, r, coupling="theta"):
    """``outer(inner(e^{zp}, e^{zq}), e^{zr}) e^{-z(p+q+r)}`` for ``outer, inner`` in ``{"m2_3", "m2_4"}``.

    ``coupling="theta"`` evaluates ``m2_3`` through ``theta * m2_3`` and strips
    ``theta`` at the end: this is the term that appears in the ``hbar*theta``
    part of the Jacobiator of ``[,] + theta m2_3 + hbar m2_4``, where odd
    momenta in the first argument pass ``theta``. ``coupling="standalone"``
    extends ``m2_3`` on its own; the two differ by ``(-1)^{|a|}`` for an odd
    momentum factor ``a`` in the first argument of ``m2_3``.
    """
    f, g, h = exp_symbol(p), exp_symbol(q), exp_symbol(r)
    if coupling == "standalone":
        maps = {"m2_3": _M23, "m2_4": _M24}
        v = maps[outer](maps[inner](f, g), h)
        return _strip(v, p + q + r)
    if coupling != "theta":
        raise ValueError(f"unknown coupling {coupling!r}")
    if outer == "m2_3":
        v = _theta_m23(_M24(f, g), h)
    else:
        v = _M24(_theta_m23(f, g), h)
    body = _strip(v, p + q + r)
    return body.dxi(body.sig.context.index("theta"))


def _set_r_zero(f):
    """Substitute ``t = 0`` and ``gamma = 0``."""
    sig = f.sig
    tnames = [n for n in sig.params if n[0] == "t"]
    gmask = sig.context.mask_of([g for g in sig.aux if g.startswith("gamma")])
    comps = {}
    for m, c in f.comps.items():
        if m & gmask:
            continue
        for name in tnames:
            c = c.substitute_zero(sig.n + sig.params.index(name))
        if not c.is_zero():
            comps[m] = c
    return SuperFunction(sig, comps)


def p4(sig=None, coupling="theta"):
    """``[m2_3(m2_4(p,q),r) + m2_4(m2_3(p,q),r) + cyclic] at r = 0`` computed from the cocycles."""
    sig = sig or momentum_signature(1)
    p, q, r = (Momentum.named(sig, i) for i in range(3))
    total = sig.zero()
    for a, b, c in ((p, q, r), (q, r, p), (r, p, q)):
        total = total + composite("m2_3", "m2_4", a, b, c, coupling) + composite("m2_4", "m2_3", a, b, c, coupling)
    return _set_r_zero(total)


def printed_p4(sig=None):
    """The displayed eight-term polynomial, transcribed term by term (``n = 1``)."""
    sig = sig or momentum_signature(1)
    u, v = sig.param("u"), sig.param("v")
    al, be = sig.gen("alpha"), sig.gen("beta")
    xi = sig.xi()
    xa, xb = xi * al, xi * be
    return (
        -(u * al) - v * be + (u * al) * xb + (v * be) * xa - (u * be) * xb - (v * al) * xa
        + (u * be) * xa * xb + (v * al) * xa * xb
    )


def printed_composites(sig=None):
    """The two displayed composite expressions ``(m2_3 after m2_4, m2_4 after m2_3)``, transcribed literally."""
    sig = sig or momentum_signature(1)
    p, q, r = (Momentum.named(sig, i) for i in range(3))
    u, v = sig.param("u"), sig.param("v")
    al, be, ga = sig.gen("alpha"), sig.gen("beta"), sig.gen("gamma")
    xi = sig.xi()
    xa, xb, xg = xi * al, xi * be, xi * ga
    one = sig.one()
    half = mpq(1, 2)
    pp, qq, rr = angle_bracket(p, p), angle_bracket(q, q), angle_bracket(r, r)
    zp, zq, zr = p.zp(), q.zp(), r.zp()
    first = (
        ((pp * (one - zq.scale(half)) + qq * (one - zp.scale(half))) * (one - xa - xb)
         + (pp * xb).scale(half) + (qq * xa).scale(half))
        * (one - xg)
    ).scale(-half)
    second = (xa * (xb - one) * (u * al + v * al) + xb * (xa - one) * (u * be + v * be)) * (one - zr.scale(half)) + (
        one - xa.scale(half) - xb.scale(half) - ((one - xa) * (one - xb) * (zp + zq)).scale(half)
    ).scale(half) * rr
    return first, second


def momentum_degree_part(f, k):
    """Terms of total degree ``k`` in the momenta (even parameters plus odd momenta)."""
    sig = f.sig
    pvars = range(sig.n, sig.nvars)
    am = sig.aux_mask
    comps = {}
    for m, c in f.comps.items():
        d_odd = bin(m & am).count("1")
        for d, part in c.split_by_degree(pvars).items():
            if d + d_odd == k:
                comps[m] = part
    return SuperFunction(sig, comps)


def reduce_at_r_zero(F, c, sig=None):
    """``Phi(z|p,q)<p,q> - [F(z|p), zq] - [F(z|q), zp] - c P4(p,q)``.

    ``F(p, q)`` returns the symbol of a local 2-form for momenta ``p, q``;
    ``Phi(z|p,q) = F(p+q, 0) - F(p, 0) - F(q, 0)``.
    """
    sig = sig or momentum_signature(1)
    p, q = Momentum.named(sig, 0), Momentum.named(sig, 1)
    o = Momentum.zero(sig)
    phi = F(p + q, o) - F(p, o) - F(q, o)
    out = phi * angle_bracket(p, q) - antibracket(F(p, o), q.zp()) - antibracket(F(q, o), p.zp())
    if c:
        out = out - p4(sig).scale(c)
    return out


@dataclass
class SecondOrderAnsatz:
    """``F(z|p,q) = m00(z) + m^A(z) (p_A + q_A)`` with coefficient polynomials of degree ``<= degree``.

    With ``parity_restricted`` the coefficients respect the parity rule of the
    symbol (``m00`` and ``m^x`` even, ``m^xi`` odd); otherwise every
    coefficient ranges over all monomials.
    """

    degree: int = 2
    parity_restricted: bool = False

    def slots(self, sig):
        from .local_forms import coefficient_monomials

        mons = coefficient_monomials(sig, self.degree)
        out = []
        for slot in ("m00", "mx", "mxi"):
            want = {"m00": 0, "mx": 0, "mxi": 1}[slot]
            for m in mons:
                if self.parity_restricted and m.parity() != want:
                    continue
                out.append((slot, m))
        return out


def _symbol_from(slot, coef):
    def F(p, q):
        s = p + q
        if slot == "m00":
            return coef
        if slot == "mx":
            return coef * s.even_function(0)
        return coef * s.odd[0]

    return F


def _vectorize(f, index):
    vec = {}
    for m, c in f.comps.items():
        for e, v in c.terms.items():
            key = (m, e)
            if key not in index:
                index[key] = len(index)
            vec[index[key]] = v
    return vec


def solve_second_order(ansatz=None, sig=None):
    """Nullspace of the second-order slice, with ``c`` as an extra unknown.

    Returns ``(basis, c_position)``: every nullspace vector; the entry at
    ``c_position`` is the coefficient ``c``.
    """
    ansatz = ansatz or SecondOrderAnsatz()
    sig = sig or momentum_signature(1)
    slots = ansatz.slots(sig)
    index = {}
    cols = []
    for slot, coef in slots:
        res = momentum_degree_part(reduce_at_r_zero(_symbol_from(slot, coef), 0, sig), 2)
        cols.append(_vectorize(res, index))
    cpart = momentum_degree_part(-p4(sig), 2)
    cols.append(_vectorize(cpart, index))
    rows = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    basis = nullspace(list(rows.values()), len(cols))
    return basis, len(cols) - 1
