"""Bounded-order brute-force cohomology of the antibracket on local forms.

A local 2-form of order ``Q`` with coefficient degree ``D`` is
``sum c(z) [(D1 f)(D2 g) - (-1)^{e(f)e(g)} (D1 g)(D2 f)]`` with ``c`` a monomial
``x^a xi^m`` (``|a| <= D``) and ``D1, D2`` derivative monomials of order at
most ``Q``. Forms are compared through their values on pairs of test
monomials; cocycle conditions are imposed on triples of test monomials. Both
probe sets are complete: a multilinear differential operator of order at most
``K`` in each argument with polynomial coefficients vanishes identically iff
it vanishes on all monomial arguments of degree at most ``K`` (monomials of
degree ``<= K`` span a translation-invariant space that separates the
derivative jets of order ``<= K``).
"""

import itertools
import json
from dataclasses import dataclass, field

from .catalogue import entry as catalogue_entry
from .cohomology import ADJOINT, Cochain, differential, local_1_cochain
from .errors import SizeGuardError
from .linalg import RowSpace, nullspace
from .local_forms import LocalBilinear, derivative_monomials
from .operators import LocalOperator
from .poly import Poly
from .scalars import mpq, to_q
from .superfunction import Signature, SuperFunction

__all__ = [
    "BasisForm",
    "LocalFormAnsatz",
    "LinearSystem",
    "CohomologyResult",
    "test_monomials",
    "flatten",
    "evaluation_vector",
    "enumerate_local_basis",
    "solve_cocycle_system",
    "coboundary_span",
    "quotient_by_coboundaries",
    "independence_check",
    "local_cohomology",
    "momentum_pattern",
    "highest_order_factor",
    "DEFAULT_SIZE_LIMIT",
]

# Maximal number of ansatz elements (2-forms or 1-forms) a single call may enumerate.
DEFAULT_SIZE_LIMIT = 4000


def _monomial(sig, a, mask, coef=1):
    e = tuple(a) + (0,) * len(sig.params)
    return SuperFunction(sig, {mask: Poly(sig.nvars, {e: coef})})


def _coef_label(sig, a, mask):
    parts = [f"{x}^{k}" if k > 1 else x for x, k in zip(sig.x_names, a) if k]
    parts += [sig.xi_names[i] for i in range(sig.n) if mask >> i & 1]
    return "*".join(parts) or "1"


def _der_label(sig, d):
    xs, mask = d
    parts = [f"d{x}^{k}" if k > 1 else f"d{x}" for x, k in zip(sig.x_names, xs) if k]
    parts += [f"d{sig.xi_names[i]}" for i in range(sig.n) if mask >> i & 1]
    return "*".join(parts) or "id"


def test_monomials(sig, degree):
    """All ``x^a xi^m`` with total x-degree at most ``degree``, deterministic order."""
    out = []
    for total in range(degree + 1):
        for a in itertools.product(range(total + 1), repeat=sig.n):
            if sum(a) != total:
                continue
            for mask in range(1 << sig.n):
                out.append(_monomial(sig, a, mask))
    return out


def flatten(value, prefix=(), points=()):
    """Sparse rational vector of a superfunction value.

    Polynomial components contribute their exact coefficients. Spline
    components contribute their values at ``points`` together with both
    constant tails: enough to certify independence, not dependence.
    """
    out = {}
    for mask, comp in value.comps.items():
        if isinstance(comp, Poly):
            for e, c in comp.terms.items():
                out[prefix + (mask, e)] = c
        else:
            for i, x in enumerate(points):
                v = comp.evaluate(x)
                if v:
                    out[prefix + (mask, "at", i)] = v
            for side, tail in (("left", comp.left_tail()), ("right", comp.right_tail())):
                for k, c in enumerate(tail):
                    if c:
                        out[prefix + (mask, side, k)] = c
    return out


def evaluation_vector(form, pairs, points=()):
    """Concatenated values of a bilinear map on the probe pairs."""
    vec = {}
    for k, (f, g) in enumerate(pairs):
        vec.update(flatten(form(f, g), (k,), points))
    return vec


def _pairs(monos):
    return [(monos[i], monos[j]) for i in range(len(monos)) for j in range(i, len(monos))]


@dataclass(frozen=True)
class BasisForm:
    """One ansatz element ``c(z) [(D1 f)(D2 g) - sign (D1 g)(D2 f)]``."""

    coef_x: tuple
    coef_mask: int
    d1: tuple
    d2: tuple

    def shift(self):
        """Grassmann parity by which the form shifts its arguments."""
        return (bin(self.coef_mask).count("1") + bin(self.d1[1]).count("1") + bin(self.d2[1]).count("1")) % 2

    def form(self, sig):
        return LocalBilinear([(_monomial(sig, self.coef_x, self.coef_mask), self.d1, self.d2)])

    def label(self, sig):
        return f"{_coef_label(sig, self.coef_x, self.coef_mask)} ; {_der_label(sig, self.d1)} ; {_der_label(sig, self.d2)}"


@dataclass
class LocalFormAnsatz:
    """Independent local 2-forms of order ``<= Q`` and coefficient degree ``<= D``."""

    sig: Signature
    Q: int
    D: int
    elements: list

    def __len__(self):
        return len(self.elements)

    def shifts(self):
        return sorted({b.shift() for b in self.elements})

    def of_shift(self, s):
        return [b for b in self.elements if b.shift() == s]

    def combination(self, coeffs, elements=None):
        """The 2-cochain ``sum coeffs[k] elements[k]`` (one shift only)."""
        elements = self.elements if elements is None else elements
        terms = []
        for k, c in coeffs.items():
            b = elements[k]
            terms.append((_monomial(self.sig, b.coef_x, b.coef_mask, c), b.d1, b.d2))
        bil = LocalBilinear(terms)
        return Cochain(2, (bil.grassmann_shift() + 1) % 2, bil, "linear-combination", "local-cocycle")


def _guard(count, limit, what):
    if count > limit:
        raise SizeGuardError(f"{what}: {count} elements exceed the size guard {limit}")


def enumerate_local_basis(n, Q, D, size_limit=DEFAULT_SIZE_LIMIT):
    """Spanning list of local 2-forms after removing forms that vanish or repeat.

    Every ordered pair of derivative monomials is enumerated; elements whose
    values on the complete pair probe set are linearly dependent on earlier
    ones are dropped (this is where the superantisymmetry reduction happens).
    """
    if Q < 0 or D < 0:
        raise ValueError("Q and D must be non-negative")
    sig = Signature(n)
    ders = derivative_monomials(n, Q)
    coefs = [
        (a, mask)
        for total in range(D + 1)
        for a in itertools.product(range(total + 1), repeat=n)
        if sum(a) == total
        for mask in range(1 << n)
    ]
    _guard(len(coefs) * len(ders) ** 2, size_limit * 4, "raw local 2-form enumeration")
    pairs = _pairs(test_monomials(sig, Q))
    spaces = {0: RowSpace(), 1: RowSpace()}
    kept = []
    for a, mask in coefs:
        for d1 in ders:
            for d2 in ders:
                b = BasisForm(a, mask, d1, d2)
                if spaces[b.shift()].add(evaluation_vector(b.form(sig), pairs)):
                    kept.append(b)
    _guard(len(kept), size_limit, "local 2-form basis")
    return LocalFormAnsatz(sig, Q, D, kept)


@dataclass
class LinearSystem:
    """Homogeneous exact system ``rows . v = 0`` with row provenance ``(triple, column)``."""

    ncols: int
    rows: list = field(default_factory=list)
    provenance: list = field(default_factory=list)

    def add(self, row, tag):
        if row:
            self.rows.append(row)
            self.provenance.append(tag)

    def solve(self):
        return nullspace(self.rows, self.ncols)


class _Memo:
    """Cache of a bilinear map's values keyed by its arguments."""

    def __init__(self, fn):
        self.fn = fn
        self.cache = {}

    def __call__(self, f, g):
        key = (f, g)
        v = self.cache.get(key)
        if v is None:
            v = self.cache[key] = self.fn(f, g)
        return v


def _cocycle_system(ansatz, elements, degree):
    sig = ansatz.sig
    monos = test_monomials(sig, degree)
    system = LinearSystem(len(elements))
    cochains = []
    for b in elements:
        c = Cochain(2, (b.shift() + 1) % 2, _Memo(b.form(sig)), "local-ansatz")
        cochains.append(c)
    for i, j, k in itertools.combinations_with_replacement(range(len(monos)), 3):
        rows = {}
        for idx, c in enumerate(cochains):
            v = differential(c, ADJOINT, monos[i], monos[j], monos[k])
            for col, val in flatten(v).items():
                rows.setdefault(col, {})[idx] = val
        for col, row in rows.items():
            system.add(row, ((i, j, k), col))
    return system


def solve_cocycle_system(n, Q, D, degree=None, size_limit=DEFAULT_SIZE_LIMIT, ansatz=None):
    """Basis of the local 2-cocycles of order ``<= Q`` and coefficient degree ``<= D``.

    ``d_2 M`` has order at most ``Q + 1`` in each argument, so triples of
    test monomials of degree ``Q + 1`` already span the constraints; the
    default bound ``Q + D + 2`` is larger and therefore also complete.
    Returns ``(ansatz, [(shift, coefficient dict), ...])``.
    """
    ansatz = ansatz or enumerate_local_basis(n, Q, D, size_limit)
    degree = Q + D + 2 if degree is None else degree
    if degree < Q + 1:
        raise ValueError(f"test degree {degree} is below the complete bound {Q + 1}")
    solutions = []
    for s in (0, 1):
        elements = ansatz.of_shift(s)
        if not elements:
            continue
        index = {b: k for k, b in enumerate(ansatz.elements)}
        system = _cocycle_system(ansatz, elements, degree)
        for v in system.solve():
            solutions.append((s, {index[elements[k]]: c for k, c in v.items()}))
    return ansatz, solutions


def _local_1_forms(sig, Q, D):
    out = []
    for total in range(D + 1):
        for a in itertools.product(range(total + 1), repeat=sig.n):
            if sum(a) != total:
                continue
            for mask in range(1 << sig.n):
                for xs, dmask in derivative_monomials(sig.n, Q):
                    op = LocalOperator(((_monomial(sig, a, mask), xs, dmask),))
                    out.append(local_1_cochain(op))
    return out


def coboundary_span(sig, Q, D, pairs, size_limit=DEFAULT_SIZE_LIMIT):
    """Row space of ``d_1 M1`` for all local 1-forms of order ``<= Q``, degree ``<= D``."""
    forms = _local_1_forms(sig, Q, D)
    _guard(len(forms), size_limit, "local 1-form enumeration")
    space = RowSpace()
    for m in forms:
        space.add(evaluation_vector(lambda f, g: differential(m, ADJOINT, f, g), pairs))
    return space


@dataclass
class CohomologyResult:
    n: int
    Q: int
    D: int
    Qp: int
    Dp: int
    dimension: int
    cocycle_count: int
    representatives: list
    matches: dict

    def to_dict(self):
        return {
            "n": self.n,
            "Q": self.Q,
            "D": self.D,
            "Q_prime": self.Qp,
            "D_prime": self.Dp,
            "dimension": self.dimension,
            "cocycles": self.cocycle_count,
            "representatives": self.representatives,
            "matches": self.matches,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def quotient_by_coboundaries(ansatz, solutions, Qp, Dp, named=None, size_limit=DEFAULT_SIZE_LIMIT):
    """Dimension of ``span(cocycles) / (span(cocycles) & coboundaries)`` and representatives.

    ``named`` maps labels to extra 2-cochains (for instance catalogue
    entries); the result records whether they lie in ``cocycles + coboundaries``
    and whether they span the same quotient.
    """
    if Qp < ansatz.Q + 1 or Dp < ansatz.D + 1:
        raise ValueError("need Q' >= Q + 1 and D' >= D + 1")
    sig = ansatz.sig
    pairs = _pairs(test_monomials(sig, Qp + 1))
    bspace = coboundary_span(sig, Qp, Dp, pairs, size_limit)
    base = bspace.rank
    full = bspace.copy()
    reps = []
    for s, coeffs in solutions:
        vec = evaluation_vector(ansatz.combination(coeffs), pairs)
        if full.add(vec):
            reps.append(
                {
                    "shift": s,
                    "coefficients": {ansatz.elements[k].label(sig): str(to_q(c)) for k, c in sorted(coeffs.items())},
                }
            )
    matches = {}
    if named:
        named_space = bspace.copy()
        for label, m in named.items():
            vec = evaluation_vector(m, pairs)
            matches[label] = {"in_cocycles_plus_coboundaries": full.contains(vec), "nontrivial": not bspace.contains(vec)}
            named_space.add(vec)
        matches["same_quotient"] = named_space.rank == full.rank and all(
            v["in_cocycles_plus_coboundaries"] for v in matches.values() if isinstance(v, dict)
        )
    return full.rank - base, reps, matches


def local_cohomology(n=1, Q=3, D=3, Qp=None, Dp=None, degree=None, size_limit=DEFAULT_SIZE_LIMIT):
    """Bounded local second cohomology of the adjoint representation, compared with ``m2_3, m2_4``."""
    Qp = Q + 1 if Qp is None else Qp
    Dp = D + 1 if Dp is None else Dp
    ansatz, solutions = solve_cocycle_system(n, Q, D, degree, size_limit)
    named = {name: catalogue_entry(name) for name in ("m2_3", "m2_4")}
    dim, reps, matches = quotient_by_coboundaries(ansatz, solutions, Qp, Dp, named, size_limit)
    return CohomologyResult(n, Q, D, Qp, Dp, dim, len(solutions), reps, matches)


def independence_check(entries, n=1, Qp=4, Dp=4, probes=None, points=(), size_limit=DEFAULT_SIZE_LIMIT):
    """Are the 2-cochains ``entries`` independent modulo local coboundaries?

    Local entries are compared with exact coefficient vectors on the complete
    pair probe set, modulo the bounded coboundary span. Nonlocal entries are
    compared on explicit spline ``probes`` (pairs) through their values at
    ``points`` and their tails; independence found this way is certain.
    Returns ``(independent, rank)``.
    """
    sig = Signature(n)
    if probes is None:
        pairs = _pairs(test_monomials(sig, Qp + 1))
        space = coboundary_span(sig, Qp, Dp, pairs, size_limit)
    else:
        pairs = list(probes)
        space = RowSpace()
    base = space.rank
    for m in entries:
        space.add(evaluation_vector(m, pairs, points))
    rank = space.rank - base
    return rank == len(entries), rank


# Highest-order momentum pattern ---------------------------------------------


def _expand(q, shift):
    """``(d + shift)^q`` as ``{(a, b, j): c}``: powers of ``p``, ``k`` and ``d``."""
    sp, sk = shift
    out = {(0, 0, 0): mpq(1)}
    for _ in range(q):
        nxt = {}
        for (a, b, j), c in out.items():
            for key, w in (((a, b, j + 1), 1), ((a + 1, b, j), sp), ((a, b + 1, j), sk)):
                if w:
                    nxt[key] = nxt.get(key, 0) + c * w
        out = nxt
    return out


def _mul(x, y):
    out = {}
    for (a1, b1, j1), c1 in x.items():
        for (a2, b2, j2), c2 in y.items():
            key = (a1 + a2, b1 + b2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def _sub(x, y):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) - v
    return out


def _plane_wave_equations(orders):
    dp = {(0, 0, 1): mpq(1), (1, 0, 0): mpq(1)}
    columns = {}
    equations = {}
    for q in orders:
        expr = _sub(_mul(_expand(q, (1, 1)), dp), _mul(_expand(q, (0, -1)), dp))
        expr = _sub(expr, _mul({(1, 0, 0): mpq(1), (0, 1, 0): mpq(2)}, _expand(q, (1, 0))))
        for (a, b, j), c in expr.items():
            if c:
                col = columns.setdefault((q, j), len(columns))
                equations.setdefault((a, b), {})[col] = c
    return columns, list(equations.values())


def _forced_zero(columns, equations, key):
    basis = nullspace(equations, len(columns))
    return not any(v.get(columns[key]) for v in basis)


def momentum_pattern(Q, exclude_one=True):
    """Orders ``q`` of a nonlocal functional ansatz that survive the highest-order argument.

    The ansatz is ``sum_{q <= Q} M^q({d^q phi} chi)``; the constraint is
    ``sum_q M^q({d^q (d phi . chi)} omega - {d^q (d phi . omega)} chi - {d^q phi}(d chi . omega - chi . d omega)) = 0``.
    With ``phi -> e^{px} phi``, ``chi = e^{kx}``, ``omega = e^{-(p+k)x}`` it becomes
    ``sum_q M^q([(d+p+k)^q (d+p) - (d-k)^q (d+p) - (p+2k)(d+p)^q] phi) = 0``
    and every coefficient of ``p^a k^b`` is a linear equation in the unknowns
    ``L[q, j] = M^q(d^j phi)``. Starting from the top order, ``M^q`` is
    discarded whenever the exact nullspace forces ``L[q, 0] = 0`` (then every
    ``L[q, j]`` vanishes with it); the descent stops at the first order that
    is not forced. Returns the surviving orders, sorted.
    """
    active = [q for q in range(Q + 1) if not (exclude_one and q == 1)]
    while active:
        top = active[-1]
        columns, equations = _plane_wave_equations(active)
        if (top, 0) not in columns or not _forced_zero(columns, equations, (top, 0)):
            break
        active.pop()
    return active


def highest_order_factor(q):
    """``p (p+k)^q - p (-k)^q - (p+2k) p^q`` as ``{(a, b): c}``."""
    expr = _sub(_mul({(1, 0, 0): mpq(1)}, _expand(q, (1, 1))), _mul({(1, 0, 0): mpq(1)}, _expand(q, (0, -1))))
    expr = _sub(expr, _mul({(1, 0, 0): mpq(1), (0, 1, 0): mpq(2)}, _expand(q, (1, 0))))
    return {(a, b): c for (a, b, j), c in expr.items() if c and j == 0 and a + b == q + 1}
