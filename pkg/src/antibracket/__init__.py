"""Exact computer algebra for the antibracket superalgebra of Grassmann-valued functions.

Superfunctions with polynomial or spline coefficients, the antibracket and
its deformations, the Chevalley-Eilenberg differential, explicit 2-cocycles,
the exponential-symbol calculus and a bounded local cohomology solver. All
arithmetic is exact over the rationals.
"""

from ._kernels import BACKEND
from .brackets import (
    Bracket,
    SimilarityOperator,
    antibracket,
    antibracket_divergence_form,
    classical,
    even_deformed,
    even_deformed_bracket,
    jacobiator,
    mixed_bracket,
    odd_deformed,
    odd_deformed_bracket,
    similarity_transform,
)
from .catalogue import CATALOGUE, cochain, decompose_n1, coboundary_components
from .cohomology import ADJOINT, E_REP, Cochain, coboundary, differential, is_cocycle
from .errors import (
    AntibracketError,
    ContextError,
    DivergenceError,
    ParityError,
    RepresentationError,
    SizeGuardError,
    SmoothnessError,
)
from .sampling import SamplingPlan
from .scalars import mpq
from .series import HbarSeries
from .spline import PiecewisePolynomial
from .superfunction import Signature, SuperFunction

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Bracket",
    "SimilarityOperator",
    "antibracket",
    "antibracket_divergence_form",
    "classical",
    "even_deformed",
    "even_deformed_bracket",
    "jacobiator",
    "mixed_bracket",
    "odd_deformed",
    "odd_deformed_bracket",
    "similarity_transform",
    "CATALOGUE",
    "cochain",
    "decompose_n1",
    "coboundary_components",
    "ADJOINT",
    "E_REP",
    "Cochain",
    "coboundary",
    "differential",
    "is_cocycle",
    "AntibracketError",
    "ContextError",
    "DivergenceError",
    "ParityError",
    "RepresentationError",
    "SizeGuardError",
    "SmoothnessError",
    "SamplingPlan",
    "mpq",
    "HbarSeries",
    "PiecewisePolynomial",
    "Signature",
    "SuperFunction",
]
