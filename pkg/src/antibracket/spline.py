"""Exact piecewise polynomials on the real line (rational knots, two unbounded tails)."""

import json
from bisect import bisect_right

from ._kernels import upoly_mul
from .errors import DivergenceError, SmoothnessError
from .scalars import is_scalar, mpq, q_to_str, to_q

__all__ = ["PiecewisePolynomial", "SupportSet"]


def _trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _padd(a, b, s=1):
    n = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else 0) + s * (b[i] if i < len(b) else 0) for i in range(n)
    )


def _pdiff(a):
    return _trim(a[k] * k for k in range(1, len(a)))


def _pint(a):
    return _trim([0] + [a[k] / mpq(k + 1) for k in range(len(a))])


def _peval(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


class SupportSet:
    """A finite union of closed intervals; ``None`` endpoints mean unbounded."""

    __slots__ = ("intervals",)

    def __init__(self, intervals=()):
        merged = []
        key = lambda iv: (iv[0] is not None, iv[0] if iv[0] is not None else 0)
        for lo, hi in sorted(intervals, key=key):
            if merged and (merged[-1][1] is None or (lo is not None and lo <= merged[-1][1])):
                plo, phi = merged[-1]
                merged[-1] = (plo, None if (phi is None or hi is None) else max(phi, hi))
            else:
                merged.append((lo, hi))
        self.intervals = tuple(merged)

    def __or__(self, other):
        return SupportSet(self.intervals + other.intervals)

    def __eq__(self, other):
        return isinstance(other, SupportSet) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def is_empty(self):
        return not self.intervals

    def is_bounded(self):
        return all(lo is not None and hi is not None for lo, hi in self.intervals)

    def __repr__(self):
        def s(v, inf):
            return inf if v is None else q_to_str(v)

        body = " u ".join(f"[{s(lo, '-inf')}, {s(hi, 'inf')}]" for lo, hi in self.intervals)
        return f"SupportSet({body or 'empty'})"


class PiecewisePolynomial:
    """Univariate piecewise polynomial in canonical form.

    ``pieces[0]`` lives on ``(-inf, b_0)``, ``pieces[i]`` on ``(b_{i-1}, b_i)``
    and ``pieces[-1]`` on ``(b_last, inf)``. Adjacent equal pieces are merged,
    so equality is structural.
    """

    __slots__ = ("breakpoints", "pieces", "_hash")

    def __init__(self, breakpoints=(), pieces=((),)):
        bps = tuple(to_q(b) for b in breakpoints)
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        ps = [_trim(to_q(c) for c in p) for p in pieces]
        if len(ps) != len(bps) + 1:
            raise ValueError("need exactly one more piece than breakpoints")
        kb, kp = [], [ps[0]]
        for b, p in zip(bps, ps[1:]):
            if p == kp[-1]:
                continue
            kb.append(b)
            kp.append(p)
        self.breakpoints = tuple(kb)
        self.pieces = tuple(kp)
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def constant(cls, c):
        return cls((), ((to_q(c),),))

    @classmethod
    def polynomial(cls, coeffs):
        return cls((), (tuple(coeffs),))

    @classmethod
    def bump(cls, a, b, order=5, scale=1):
        """``scale*(x-a)^order*(b-x)^order`` on ``[a, b]``, zero elsewhere; class C^(order-1)."""
        a, b = to_q(a), to_q(b)
        p = (1,)
        for _ in range(order):
            p = tuple(upoly_mul(list(p), [-a, 1]))
            p = tuple(upoly_mul(list(p), [b, -1]))
        return cls((a, b), ((), tuple(c * to_q(scale) for c in p), ()))

    # algebra --------------------------------------------------------------
    def _refined(self, bps):
        out = []
        for j in range(len(bps) + 1):
            k = 0 if j == 0 else bisect_right(self.breakpoints, bps[j - 1])
            out.append(self.pieces[k])
        return out

    def _combine(self, other, op):
        bps = tuple(sorted(set(self.breakpoints) | set(other.breakpoints)))
        a = self._refined(bps)
        b = other._refined(bps)
        return PiecewisePolynomial(bps, [op(x, y) for x, y in zip(a, b)])

    def __add__(self, other):
        if is_scalar(other):
            other = PiecewisePolynomial.constant(other)
        return self._combine(other, _padd)

    __radd__ = __add__

    def __sub__(self, other):
        if is_scalar(other):
            other = PiecewisePolynomial.constant(other)
        return self._combine(other, lambda x, y: _padd(x, y, -1))

    def __rsub__(self, other):
        return PiecewisePolynomial.constant(other) - self

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return self._combine(other, lambda x, y: tuple(upoly_mul(list(x), list(y))))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = to_q(c)
        return PiecewisePolynomial(self.breakpoints, [tuple(v * c for v in p) for p in self.pieces])

    def __eq__(self, other):
        if is_scalar(other):
            other = PiecewisePolynomial.constant(other)
        if not isinstance(other, PiecewisePolynomial):
            return NotImplemented
        return self.breakpoints == other.breakpoints and self.pieces == other.pieces

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.breakpoints, self.pieces))
        return self._hash

    def is_zero(self):
        return not self.breakpoints and not self.pieces[0]

    def __bool__(self):
        return not self.is_zero()

    # calculus -------------------------------------------------------------
    def jumps(self, k=0):
        """Jumps of the k-th derivative at each breakpoint."""
        out = []
        for i, b in enumerate(self.breakpoints):
            left, right = self.pieces[i], self.pieces[i + 1]
            for _ in range(k):
                left, right = _pdiff(left), _pdiff(right)
            out.append(_peval(right, b) - _peval(left, b))
        return out

    def smoothness(self):
        """Largest k with the function C^k; -1 if discontinuous, ``None`` for a global polynomial."""
        if not self.breakpoints:
            return None
        k = 0
        while True:
            if any(self.jumps(k)):
                return k - 1
            k += 1

    def diff(self):
        if any(self.jumps(0)):
            raise SmoothnessError("derivative of a discontinuous spline is not a function")
        return PiecewisePolynomial(self.breakpoints, [_pdiff(p) for p in self.pieces])

    def mul_var(self):
        return PiecewisePolynomial(self.breakpoints, [(0,) + p if p else () for p in self.pieces])

    def evaluate(self, x):
        x = to_q(x)
        return _peval(self.pieces[bisect_right(self.breakpoints, x)], x)

    def left_tail(self):
        return self.pieces[0]

    def right_tail(self):
        return self.pieces[-1]

    def is_compact(self):
        return not self.pieces[0] and not self.pieces[-1]

    def support(self):
        ivs = []
        bps = (None,) + self.breakpoints + (None,)
        for i, p in enumerate(self.pieces):
            if p:
                ivs.append((bps[i], bps[i + 1]))
        return SupportSet(ivs)

    def cumulative(self):
        """``x -> int_{-inf}^x f``; constant right tail, zero left tail."""
        if not self.is_compact():
            raise DivergenceError("cumulative integral of a non-compact spline")
        out = [()]
        acc = 0
        for i, b in enumerate(self.breakpoints):
            if i > 0:
                prev = _pint(self.pieces[i])
                acc += _peval(prev, b) - _peval(prev, self.breakpoints[i - 1])
            anti = _pint(self.pieces[i + 1])
            out.append(_padd(anti, (acc - _peval(anti, b),)))
        return PiecewisePolynomial(self.breakpoints, out)

    def integral(self):
        """Integral over the real line."""
        c = self.cumulative()
        return c.pieces[-1][0] if c.pieces[-1] else 0

    # serialisation --------------------------------------------------------
    def to_dict(self, smoothness=None):
        k = self.smoothness() if smoothness is None else smoothness
        return {
            "breakpoints": [q_to_str(b) for b in self.breakpoints],
            "pieces": [[q_to_str(c) for c in p] for p in self.pieces],
            "smoothness": k,
        }

    @classmethod
    def from_dict(cls, data):
        pp = cls(
            [to_q(b) for b in data["breakpoints"]],
            [[to_q(c) for c in p] for p in data["pieces"]],
        )
        declared = data.get("smoothness")
        actual = pp.smoothness()
        if declared is not None and actual is not None and actual < declared:
            raise ValueError(f"spline is only C^{actual}, declared C^{declared}")
        return pp

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def format(self, var="x"):
        def poly(p):
            if not p:
                return "0"
            return " + ".join(
                q_to_str(c) + ("" if k == 0 else f"*{var}" + ("" if k == 1 else f"^{k}"))
                for k, c in enumerate(p)
                if c
            ).replace("+ -", "- ")

        if not self.breakpoints:
            return poly(self.pieces[0])
        segs = []
        bps = ["-inf"] + [q_to_str(b) for b in self.breakpoints] + ["inf"]
        for i, p in enumerate(self.pieces):
            segs.append(f"({bps[i]},{bps[i + 1]}): {poly(p)}")
        return "{" + "; ".join(segs) + "}"

    def __repr__(self):
        return f"PiecewisePolynomial({self.format()})"
