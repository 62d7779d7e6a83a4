"""Verification suites: every check returns a :class:`CheckResult`.

Each suite corresponds to one acceptance criterion; the CLI and the
acceptance tests run the same functions. All checks are exact and seeded.
"""

import math
import random
import time
from dataclasses import dataclass, field

from . import catalogue as cat
from .brackets import (
    antibracket,
    antibracket_divergence_form,
    classical,
    even_deformed,
    even_deformed_bracket,
    jacobiator,
    mixed_bracket,
    odd_deformed_bracket,
)
from .cohomology import ADJOINT, Cochain, coboundary, constant_cochain, differential, local_1_cochain, shifted_parity
from .errors import AntibracketError
from .local_forms import random_local_2form, random_local_operator
from .operators import delta_op
from .oracle import independence_check, momentum_pattern, quotient_by_coboundaries, solve_cocycle_system
from .sampling import SamplingPlan, parity_patterns, random_bump_spline, random_poly_function, random_rational
from .sampling import random_spline_function
from .scalars import mpq
from .series import HbarSeries
from .spline import PiecewisePolynomial
from .superfunction import Signature, SuperFunction, integrate_full
from .symbols import composite, momentum_signature, p4, printed_composites, printed_p4, solve_second_order
from .symbols import Momentum, SecondOrderAnsatz

__all__ = [
    "RunConfig",
    "CheckResult",
    "SUITES",
    "CRITERIA",
    "run_suite",
    "describe",
    "jacobi_mixed",
]


@dataclass
class RunConfig:
    """Knobs shared by all suites. ``None`` selects the acceptance default."""

    n: int = None
    order: int = 6
    seed: int = 7
    trials: int = None
    smoothness: int = 4
    Q: int = 3
    D: int = 3

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise ValueError("n must be positive")
        if self.order < 1 or self.smoothness < 3 or self.Q < 0 or self.D < 0:
            raise ValueError("order >= 1, smoothness >= 3 and Q, D >= 0 are required")
        if self.trials is not None and self.trials < 1:
            raise ValueError("trials must be positive")

    def count(self, default):
        return default if self.trials is None else self.trials

    def dims(self, default):
        return default if self.n is None else (self.n,)


@dataclass
class CheckResult:
    name: str
    anchor: str
    passed: bool
    checked: int = 0
    witness: object = None
    seconds: float = 0.0
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "witness": self.witness,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


def describe(value):
    """Deterministic text for a witness value."""
    if isinstance(value, HbarSeries):
        return {f"hbar^{k}": describe(c) for k, c in enumerate(value.coeffs) if not _zero(c)}
    if hasattr(value, "format"):
        return value.format()
    return str(value)


def _zero(v):
    return v == 0 if isinstance(v, (int, type(mpq(0)))) else v.is_zero()


def _timed(name, anchor, fn):
    t = time.perf_counter()
    try:
        passed, checked, witness, details = fn()
    except AntibracketError as exc:
        passed, checked, witness, details = False, 0, {"error": f"{type(exc).__name__}: {exc}"}, {}
    return CheckResult(name, anchor, passed, checked, witness, time.perf_counter() - t, details)


def _per_pattern(total, arity):
    return max(1, math.ceil(total / len(parity_patterns(arity))))


def _first_failure(cases, evaluate):
    """Run ``evaluate`` on every case; stop at the first nonzero value."""
    count = 0
    for label, args in cases:
        value = evaluate(*args)
        count += 1
        if not _zero(value):
            return False, count, {"case": label, "args": [describe(a) for a in args], "value": describe(value)}
    return True, count, None


def _plan_cases(plan, arity, tag):
    for pattern, args in plan.tuples(arity):
        yield {"sampling": tag, "pattern": list(pattern)}, args


# 1. Jacobi identity of the antibracket -------------------------------------------


def jacobi_classical(cfg):
    B = classical()
    out = []
    for n in cfg.dims((1, 2, 3)):
        plan = SamplingPlan(cfg.seed + n, _per_pattern(cfg.count(200), 3), n, degree=6)
        out.append(
            _timed(
                f"jacobi-classical-poly-n{n}",
                "Jacobi identity of the antibracket",
                lambda: _first_failure(_plan_cases(plan, 3, "poly"), lambda f, g, h: jacobiator(B, f, g, h))
                + ({"n": n},),
            )
        )
    if 1 in cfg.dims((1,)):
        plan = SamplingPlan(cfg.seed, _per_pattern(cfg.count(50), 3), 1, kind="spline", smoothness=cfg.smoothness)
        out.append(
            _timed(
                "jacobi-classical-spline-n1",
                "Jacobi identity of the antibracket",
                lambda: _first_failure(_plan_cases(plan, 3, "spline"), lambda f, g, h: jacobiator(B, f, g, h))
                + ({"n": 1},),
            )
        )
    return out


# 2. Nilpotency of the differential ------------------------------------------------


def _dd(M):
    return coboundary(coboundary(M, ADJOINT), ADJOINT)


def _catalogue_probes(rng, sig, smoothness):
    """Two fixed spline arguments of each shifted parity."""
    return {e: random_spline_function(sig, rng, e, smoothness, span=(-1, 1)) for e in (0, 1)}


def _nilpotency_cases(M, plan):
    dd = _dd(M)
    return _first_failure(_plan_cases(plan, M.arity + 2, plan.kind), lambda *a: dd(*a))


def nilpotency(cfg):
    rng = random.Random(cfg.seed)
    out = []
    tuples = cfg.count(50)
    sig1 = Signature(1)
    spline_plan = lambda arity, seed: SamplingPlan(
        seed, _per_pattern(tuples, arity), 1, kind="spline", smoothness=cfg.smoothness
    )

    # catalogue-derived 0- and 1-cochains: M0 = m(a, b), M1(f) = m(a, f)
    probes = _catalogue_probes(rng, sig1, cfg.smoothness)
    for name in sorted(cat.CATALOGUE):
        m = cat.cochain(name)
        for ea in (0, 1):
            a = probes[ea]
            b = probes[1 - ea]
            m0 = constant_cochain(m(a, b)) if not m(a, b).is_zero() else constant_cochain(m(a, a))
            m1 = Cochain(1, m.eps + shifted_parity(a), lambda f, m=m, a=a: m(a, f), "catalogue", f"{name}(a,.)")
            for p, M in ((0, m0), (1, m1)):
                plan = spline_plan(p + 2, cfg.seed + 17 * p + ea)
                out.append(
                    _timed(
                        f"nilpotency-p{p}-{name}-e{ea}",
                        "the differential squares to zero",
                        lambda M=M, plan=plan: _nilpotency_cases(M, plan) + ({"p": p, "cochain": M.name},),
                    )
                )

    # random local ansatze: constants for p = 0, local operators for p = 1
    for k in range(20):
        n = 1 + k % 2
        sig = Signature(n)
        plan0 = SamplingPlan(cfg.seed + 100 + k, _per_pattern(tuples, 2), n, degree=4)
        plan1 = SamplingPlan(cfg.seed + 200 + k, _per_pattern(tuples, 3), n, degree=4)
        h = random_poly_function(sig, rng, k % 2)
        op = random_local_operator(sig, rng, k % 2)
        for p, M, plan in ((0, constant_cochain(h), plan0), (1, local_1_cochain(op), plan1)):
            out.append(
                _timed(
                    f"nilpotency-p{p}-local-{k}",
                    "the differential squares to zero",
                    lambda M=M, plan=plan, n=n, p=p: _nilpotency_cases(M, plan) + ({"p": p, "n": n},),
                )
            )
    return out


def nilpotency_p2(cfg, forms=4, tuples=16):
    """``d_3 d_2 = 0`` on random local 2-forms (which are not cocycles)."""
    rng = random.Random(cfg.seed + 3)
    out = []
    for k in range(forms):
        n = 1 + k % 2
        sig = Signature(n)
        M = random_local_2form(sig, rng, k % 2).cochain(f"local2-{k}")
        plan = SamplingPlan(cfg.seed + 300 + k, _per_pattern(tuples, 4), n, degree=3, terms=2)
        out.append(
            _timed(
                f"nilpotency-p2-local-{k}",
                "the differential squares to zero",
                lambda M=M, plan=plan, n=n: _nilpotency_cases(M, plan) + ({"p": 2, "n": n},),
            )
        )
    return out


# 3. Cocycle conditions --------------------------------------------------------------


def cocycles(cfg, names=None):
    out = []
    trials = cfg.count(50)
    for name in names or sorted(cat.CATALOGUE):
        e = cat.entry(name)
        ns = cfg.dims((1, 2)) if e.local else (1,)
        for n in ns:
            if not e.applies_to(n):
                continue
            kind = "both" if n == 1 and e.local else ("poly" if e.local else "spline")
            plan = SamplingPlan(cfg.seed + n, trials, n, kind=kind, smoothness=cfg.smoothness)
            M = cat.cochain(name)
            out.append(
                _timed(
                    f"cocycle-{name}-n{n}",
                    "the listed 2-forms are nontrivial cocycles",
                    lambda M=M, plan=plan, n=n: _first_failure(
                        _plan_cases(plan, 3, plan.kind), lambda *a: differential(M, ADJOINT, *a)
                    )
                    + ({"n": n, "kind": plan.kind},),
                )
            )
    return out


# 4. Even deformation ------------------------------------------------------------------


def _random_series(rng, order):
    return HbarSeries([random_rational(rng) for _ in range(order + 1)], order)


def even_deformation(cfg):
    rng = random.Random(cfg.seed + 4)
    out = []
    series = [_random_series(rng, cfg.order) for _ in range(5)]
    triples = cfg.count(50)
    for n in cfg.dims((1, 2)):
        for k, c in enumerate(series):
            B = even_deformed_bracket(c, cfg.order)
            plan = SamplingPlan(cfg.seed + 10 * n + k, _per_pattern(triples, 3), n, degree=3, terms=2)
            out.append(
                _timed(
                    f"jacobi-even-n{n}-c{k}",
                    "Jacobi identity of the even deformation",
                    lambda B=B, plan=plan, n=n, c=c: _first_failure(
                        _plan_cases(plan, 3, "poly"), lambda f, g, h: jacobiator(B, f, g, h)
                    )
                    + ({"n": n, "order": cfg.order, "c": [str(a) for a in c.coeffs]},),
                )
            )
        m24 = cat.entry("m2_4")
        plan = SamplingPlan(cfg.seed + 50 + n, _per_pattern(triples, 2), n, degree=4)

        def first_order(plan=plan, n=n):
            def residual(f, g):
                c = series[0]
                return even_deformed(f, g, c, cfg.order).coeff(1) - m24(f, g).scale(c.coeff(0))

            return _first_failure(_plan_cases(plan, 2, "poly"), residual) + ({"n": n},)

        out.append(_timed(f"even-first-order-n{n}", "first-order term of the even deformation", first_order))
    return out


# 5. Odd deformation and the mixed obstruction ---------------------------------------------


def _theta_sig(n):
    return Signature(n, aux=("theta",))


def _theta_cases(sig, rng, count, theta_args):
    th = sig.gen("theta")
    for t in range(count):
        args = []
        pattern = []
        for _ in range(3):
            e = rng.randint(0, 1)
            f = random_poly_function(sig, rng, e, degree=4)
            if theta_args:
                f = f + th * random_poly_function(sig, rng, 1 - e, degree=4)
            args.append(f)
            pattern.append(e)
        yield {"trial": t, "pattern": pattern, "theta_dependent": theta_args}, tuple(args)


def odd_deformation(cfg):
    out = []
    count = cfg.count(50)
    for n in cfg.dims((1, 2)):
        sig = _theta_sig(n)
        for term, theta_args in (("m2_4", False), ("m2_3", False), ("m2_3", True)):
            B = odd_deformed_bracket(term)
            rng = random.Random(cfg.seed + 7 * n + (term == "m2_3") + 2 * theta_args)
            label = f"jacobi-odd-{term}-n{n}" + ("-theta-args" if theta_args else "")
            out.append(
                _timed(
                    label,
                    "Jacobi identity of the odd deformation",
                    lambda B=B, sig=sig, rng=rng, theta_args=theta_args, n=n, term=term: _first_failure(
                        _theta_cases(sig, rng, count, theta_args), lambda f, g, h: jacobiator(B, f, g, h)
                    )
                    + ({"n": n, "term": term},),
                )
            )
    out.extend(mixed_obstruction(cfg))
    return out


def _theta_part(value, sig):
    """The coefficient of ``theta`` in a superfunction."""
    return value.split_aux().get(1 << sig.context.index("theta"), sig.zero())


def mixed_obstruction(cfg):
    """With the even term the mixed bracket fails Jacobi at order ``hbar*theta``; without it, it holds."""
    n = 1 if cfg.n is None else cfg.n
    sig = _theta_sig(n)
    x, xi = sig.x(), sig.xi()
    # a fixed triple on which the hbar*theta component is nonzero
    triple = (sig.one(), x, x * x * xi)

    def run(with_even):
        B = mixed_bracket([1], order=1, with_even_term=with_even)
        J = jacobiator(B, *triple)
        j0, j1 = (sig.zero() if _zero(J.coeff(k)) else J.coeff(k) for k in (0, 1))
        parts = {
            "hbar^0": j0,
            "hbar^1 theta^0": j1 - sig.gen("theta") * _theta_part(j1, sig),
            "hbar^1 theta^1": _theta_part(j1, sig),
        }
        return {k: describe(v) for k, v in parts.items()}, {k: not v.is_zero() for k, v in parts.items()}

    def with_term():
        text, nonzero = run(True)
        passed = nonzero["hbar^1 theta^1"] and not nonzero["hbar^0"] and not nonzero["hbar^1 theta^0"]
        return passed, 1, {"args": [describe(a) for a in triple], "components": text}, {"n": n}

    def without_term():
        text, nonzero = run(False)
        return not any(nonzero.values()), 1, None if not any(nonzero.values()) else text, {"n": n}

    return [
        _timed("mixed-obstruction-witness", "no deformation with both even and odd parameters", with_term),
        _timed("mixed-without-even-term", "no deformation with both even and odd parameters", without_term),
    ]


def jacobi_mixed(cfg, with_even_term=False):
    """Jacobi identity of ``[,] + theta m2_3 (+ even terms)`` on a fixed and on random triples.

    Without the even term this is a genuine deformation; with it the first
    failure is reported together with its ``hbar*theta`` component.
    """
    n = 1 if cfg.n is None else cfg.n
    sig = _theta_sig(n)
    order = min(cfg.order, 2)
    B = mixed_bracket([1] * (order + 1), order=order, with_even_term=with_even_term)
    x, xi = sig.x(), sig.xi()
    rng = random.Random(cfg.seed + 5)

    def cases():
        yield {"fixed": True}, (sig.one(), x, x * x * xi)
        yield from _theta_cases(sig, rng, cfg.count(20), False)

    def run():
        count = 0
        for label, args in cases():
            J = jacobiator(B, *args)
            count += 1
            if not J.is_zero():
                j1 = sig.zero() if _zero(J.coeff(1)) else J.coeff(1)
                return False, count, {
                    "case": label,
                    "args": [describe(a) for a in args],
                    "value": describe(J),
                    "hbar^1 theta^1": describe(_theta_part(j1, sig)),
                }, {"n": n}
        return True, count, None, {"n": n}

    name = "jacobi-mixed" + ("-with-even-term" if with_even_term else "")
    return [_timed(name, "Jacobi identity of the mixed bracket", run)]


# 6. The generating-function reduction ----------------------------------------------------


def prop2(cfg):
    sig = momentum_signature(1)

    def p4_check():
        computed, printed = p4(sig), printed_p4(sig)
        witness = None if computed == printed else {"computed": computed.format(), "printed": printed.format()}
        return computed == printed, 1, witness, {"computed": computed.format()}

    def composites_check():
        p, q, r = (Momentum.named(sig, i) for i in range(3))
        first, second = printed_composites(sig)
        c1, c2 = composite("m2_3", "m2_4", p, q, r), composite("m2_4", "m2_3", p, q, r)
        ok = c1 == first and c2 == second
        witness = None if ok else {"first": [c1.format(), first.format()], "second": [c2.format(), second.format()]}
        return ok, 2, witness, {}

    def second_order():
        details = {}
        ok = True
        for restricted in (True, False):
            basis, cpos = solve_second_order(SecondOrderAnsatz(degree=2, parity_restricted=restricted), sig)
            forced = all(not v.get(cpos) for v in basis)
            details["parity_restricted" if restricted else "general"] = {"solutions": len(basis), "c_forced_zero": forced}
            ok = ok and forced and bool(basis)
        return ok, 2, None if ok else details, details

    return [
        _timed("prop2-p4-printed", "printed polynomial of the obstruction", p4_check),
        _timed("prop2-composites-printed", "printed composites of the two local cocycles", composites_check),
        _timed("prop2-second-order-c-zero", "second-order slice forces c = 0", second_order),
    ]


# 7. Bounded local cohomology -------------------------------------------------------------


def cohomology_local(cfg):
    n = 1 if cfg.n is None else cfg.n
    Q, D = cfg.Q, cfg.D

    def quotient():
        ansatz, sols = solve_cocycle_system(n, Q, D)
        named = {name: cat.entry(name) for name in ("m2_3", "m2_4")}
        dims = {}
        ok = True
        for step in (1, 2):
            dim, reps, matches = quotient_by_coboundaries(ansatz, sols, Q + step, D + step, named)
            dims[f"({Q + step},{D + step})"] = {"dimension": dim, "matches": matches, "representatives": reps}
            ok = ok and dim == 2 and matches.get("same_quotient", False)
        details = {"n": n, "Q": Q, "D": D, "cocycles": len(sols), "quotients": dims}
        return ok, 2, None if ok else details, details

    def nonlocal_independence():
        sig = Signature(1)
        rng = random.Random(cfg.seed + 9)
        probes = []
        for _ in range(6):
            a = random_bump_spline(rng, cfg.smoothness, span=(-1, 1))
            b = random_bump_spline(rng, cfg.smoothness, span=(-1, 1))
            xi = sig.xi()
            fa, fb = SuperFunction(sig, {0: a}), SuperFunction(sig, {0: b})
            probes.extend([(fa, fb), (fa, xi * fb), (xi * fa, xi * fb)])
        entries = [cat.entry(name) for name in ("m2_1", "m2_2", "m2_5", "m2_6")]
        points = [mpq(k, 4) for k in range(-4, 5)]
        independent, rank = independence_check(entries, 1, probes=probes, points=points)
        return independent, len(probes), None if independent else {"rank": rank}, {"rank": rank}

    def momenta():
        survivors = momentum_pattern(max(Q + 3, 6))
        return survivors == [0, 2], 1, None if survivors == [0, 2] else {"survivors": survivors}, {
            "survivors": survivors
        }

    return [
        _timed("oracle-local-quotient", "local second cohomology is two-dimensional", quotient),
        _timed("oracle-nonlocal-independence", "nonlocal cocycles are independent", nonlocal_independence),
        _timed("oracle-momentum-pattern", "highest-order momentum argument", momenta),
    ]


# 8. Component round trip ---------------------------------------------------------------------


def decomposition(cfg):
    sig = Signature(1)
    rng = random.Random(cfg.seed + 8)
    forms = cfg.count(20)

    def run():
        probes = []
        for _ in range(4):
            a = random_bump_spline(rng, cfg.smoothness, span=(-1, 1))
            b = random_bump_spline(rng, cfg.smoothness, span=(-1, 1))
            probes.append((SuperFunction(sig, {0: a}), SuperFunction(sig, {0: b})))
        for k in range(forms):
            op = random_local_operator(sig, rng, k % 2, order=3, degree=2)
            M1 = local_1_cochain(op)
            direct = cat.decompose_n1(coboundary(M1, ADJOINT), probes)
            formula = cat.coboundary_components(*cat.decompose_1form_n1(M1), probes)
            fourth_zero = all(v.is_zero() for v in direct.values[4])
            if direct != formula or not fourth_zero:
                bad = direct.mismatches(formula)[:3]
                return False, k + 1, {"form": k, "mismatched_components": [c for c, _ in bad], "fourth_zero": fourth_zero}, {}
        return True, forms, None, {"probes": len(probes)}

    return [_timed("decomposition-round-trip", "coboundary components of a 1-form", run)]


# 9. Compactness witnesses ------------------------------------------------------------------


def _witness_pair():
    """``phi``, ``psi``: explicit ``C^4`` bumps with ``int phi''' psi != 0``."""
    phi = PiecewisePolynomial.bump(0, 1, order=5)
    psi = PiecewisePolynomial.bump(mpq(1, 2), 2, order=5)
    return phi, psi


def compactness(cfg):
    sig = Signature(1)
    phi, psi = _witness_pair()
    xi = sig.xi()
    f, g = SuperFunction(sig, {1: phi}), SuperFunction(sig, {1: psi})
    moment = (phi.diff().diff().diff() * psi).integral()

    def m21():
        v = cat.m2_1(f, g)
        comp = v.comps.get(0)
        const = comp is not None and comp.breakpoints == () and len(comp.pieces[0]) == 1
        ok = bool(moment) and const and comp.pieces[0][0] in (moment, -moment) and not v.is_compact()
        details = {"moment": str(moment), "value": describe(v)}
        return ok, 1, None if ok else details, details

    def tails(name, args):
        v = cat.entry(name)(*args)
        comp = v.comps.get(0)
        left, right = comp.left_tail(), comp.right_tail()
        details = {"left_tail": [str(c) for c in left], "right_tail": [str(c) for c in right]}
        return left != right, 1, None if left != right else details, details

    even = SuperFunction(sig, {0: phi})
    return [
        _timed("compactness-m2_1-constant", "nonlocal cocycles are not compactly supported", m21),
        _timed("compactness-m2_2-tails", "nonlocal cocycles are not compactly supported", lambda: tails("m2_2", (f, g))),
        _timed(
            "compactness-m2_6-tails", "nonlocal cocycles are not compactly supported", lambda: tails("m2_6", (f, even))
        ),
    ]


# 10. Cross-form identities -------------------------------------------------------------------


def cross_forms(cfg):
    out = []
    pairs = cfg.count(200)
    for n in cfg.dims((1, 2)):
        plan = SamplingPlan(cfg.seed + 20 + n, _per_pattern(pairs, 2), n, degree=5, kind="both" if n == 1 else "poly")
        out.append(
            _timed(
                f"divergence-form-n{n}",
                "antibracket in divergence form",
                lambda plan=plan, n=n: _first_failure(
                    _plan_cases(plan, 2, plan.kind), lambda f, g: antibracket(f, g) - antibracket_divergence_form(f, g)
                )
                + ({"n": n},),
            )
        )

    def ibp():
        sig = Signature(1)
        rng = random.Random(cfg.seed + 10)
        nontrivial = 0
        total = cfg.count(100)
        for t in range(total):
            ps = [rng.randint(0, 1) for _ in range(3)]
            f, g, h = (random_spline_function(sig, rng, p, cfg.smoothness, span=(-1, 1)) for p in ps)
            left = integrate_full(f * antibracket(g, h))
            if ps[1]:
                left = -left
            right = integrate_full(antibracket(f, g) * h) + integrate_full(f * delta_op(g) * h) * 2
            nontrivial += not left.is_zero()
            if left != right:
                return False, t + 1, {"pattern": ps, "left": str(left), "right": str(right)}, {}
        return True, total, None, {"nontrivial": nontrivial}

    out.append(_timed("integration-by-parts", "integration by parts for the antibracket", ibp))
    return out


# registry ---------------------------------------------------------------------------------------

SUITES = {
    "jacobi-classical": jacobi_classical,
    "nilpotency": lambda cfg: nilpotency(cfg) + nilpotency_p2(cfg),
    "cocycles": cocycles,
    "even-deformation": even_deformation,
    "odd-deformation": odd_deformation,
    "prop2": prop2,
    "cohomology-local": cohomology_local,
    "decomposition": decomposition,
    "compactness": compactness,
    "cross-forms": cross_forms,
}

# acceptance criterion number -> (suite name, one-line description)
CRITERIA = {
    1: ("jacobi-classical", "Jacobi identity of the classical antibracket"),
    2: ("nilpotency", "d o d = 0"),
    3: ("cocycles", "catalogue 2-cocycles"),
    4: ("even-deformation", "even deformation: Jacobi through the truncation order and first-order term"),
    5: ("odd-deformation", "odd deformation and the mixed hbar*theta obstruction"),
    6: ("prop2", "printed obstruction polynomial and c = 0"),
    7: ("cohomology-local", "bounded local cohomology of dimension 2"),
    8: ("decomposition", "component round trip of 1-form coboundaries"),
    9: ("compactness", "compactness witnesses for nonlocal cocycles"),
    10: ("cross-forms", "divergence form and integration by parts"),
}


def run_suite(name, cfg=None):
    cfg = cfg or RunConfig()
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](cfg)
