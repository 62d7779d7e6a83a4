"""Cochains of the antibracket algebra and the Chevalley-Eilenberg differential."""

from dataclasses import dataclass

from .brackets import antibracket
from .errors import ParityError
from .grassmann import MIXED
from .sampling import SamplingPlan

__all__ = [
    "Cochain",
    "Representation",
    "ADJOINT",
    "E_REP",
    "shifted_parity",
    "differential",
    "coboundary",
    "coboundary_1",
    "constant_cochain",
    "local_1_cochain",
    "is_cocycle",
    "Verdict",
]


def shifted_parity(f):
    p = f.parity()
    if p == MIXED:
        raise ParityError("cochain arguments must have definite parity")
    return 1 - p


class Cochain:
    """A ``p``-linear superantisymmetric map with shifted parity ``eps``.

    ``eps`` is the shifted parity of the cochain: the output of ``M(f_1..f_p)``
    has shifted parity ``eps + sum shifted(f_j)``. Its Grassmann parity is
    ``eps + p + 1``.
    """

    def __init__(self, arity, eps, evaluator, tag="custom", name=None):
        self.arity = arity
        self.eps = eps % 2
        self.evaluator = evaluator
        self.tag = tag
        self.name = name or tag

    @property
    def grassmann_parity(self):
        return (self.eps + self.arity + 1) % 2

    def __call__(self, *args):
        if len(args) != self.arity:
            raise TypeError(f"{self.name} takes {self.arity} arguments, got {len(args)}")
        return self.evaluator(*args)

    def __add__(self, other):
        if other.arity != self.arity or other.eps != self.eps:
            raise ParityError("cochains of different arity or parity")
        return Cochain(self.arity, self.eps, lambda *a: self(*a) + other(*a), "linear-combination")

    def scale(self, c):
        return Cochain(self.arity, self.eps, lambda *a: self(*a).scale(c), "linear-combination", self.name)

    def __repr__(self):
        return f"Cochain({self.name}, p={self.arity}, eps={self.eps})"


@dataclass(frozen=True)
class Representation:
    """The algebra acting on itself (``adjoint``) or on smooth functions (``E``), by the bracket."""

    tag: str

    def act(self, f, v):
        return antibracket(f, v)


ADJOINT = Representation("adjoint")
E_REP = Representation("E")


def differential(M, rep, *fs):
    """Evaluate ``d_p M (f_1, ..., f_{p+1})`` term by term from the defining formula.

    ``-sum_j (-1)^{j + e_j (e_1+..+e_{j-1}) + e_j e_M} f_j . M(.. f_j omitted ..)
      - sum_{i<j} (-1)^{j + e_j (e_{i+1}+..+e_{j-1})} M(.., [f_i,f_j] in slot i, .., f_j omitted, ..)``
    with ``e`` the shifted parities and 1-based ``i, j``.
    """
    p = M.arity
    if len(fs) != p + 1:
        raise TypeError(f"d_{p} takes {p + 1} arguments")
    e = [shifted_parity(f) for f in fs]
    out = None

    def acc(term, exponent):
        nonlocal out
        # every term enters with an overall minus sign
        if not exponent & 1:
            term = -term
        out = term if out is None else out + term

    for j in range(1, p + 2):
        ej = e[j - 1]
        exponent = j + ej * sum(e[: j - 1]) + ej * M.eps
        rest = fs[: j - 1] + fs[j:]
        acc(rep.act(fs[j - 1], M(*rest)), exponent)
    for i in range(1, p + 2):
        for j in range(i + 1, p + 2):
            ej = e[j - 1]
            exponent = j + ej * sum(e[i : j - 1])
            args = list(fs)
            args[i - 1] = antibracket(fs[i - 1], fs[j - 1])
            del args[j - 1]
            acc(M(*args), exponent)
    return out


def coboundary(M, rep=ADJOINT):
    """``d M`` packaged as a cochain of arity ``p + 1`` and the same shifted parity."""
    return Cochain(
        M.arity + 1,
        M.eps,
        lambda *fs: differential(M, rep, *fs),
        "coboundary-of",
        f"d({M.name})",
    )


def coboundary_1(M1, rep=ADJOINT):
    if M1.arity != 1:
        raise TypeError("coboundary_1 needs a 1-cochain")
    return coboundary(M1, rep)


def constant_cochain(h):
    """The 0-cochain with value ``h``."""
    return Cochain(0, shifted_parity(h), lambda: h, "constant", "const")


def local_1_cochain(op, name="local"):
    """Wrap a parity-homogeneous :class:`LocalOperator` as a 1-cochain."""
    d = op.parity()
    if d is None:
        raise ParityError("local operator does not have definite parity")
    return Cochain(1, d, op, "local-ansatz", name)


@dataclass
class Verdict:
    passed: bool
    checked: int
    witness: object = None

    def __bool__(self):
        return self.passed


def is_cocycle(M2, plan=None, rep=ADJOINT, sig=None):
    """Evaluate ``d_2 M2`` on every sampled triple; fail on the first nonzero value."""
    plan = plan or SamplingPlan()
    count = 0
    for pattern, args in plan.tuples(3, sig):
        value = differential(M2, rep, *args)
        count += 1
        if not value.is_zero():
            return Verdict(False, count, {"pattern": pattern, "args": args, "value": value})
    return Verdict(True, count)
