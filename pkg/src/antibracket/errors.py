class AntibracketError(Exception):
    """Base class for all library errors."""


class ContextError(AntibracketError):
    """Operands live over different generator contexts or signatures."""


class SmoothnessError(AntibracketError):
    """A spline was differentiated across a jump."""


class DivergenceError(AntibracketError):
    """An integral over the real line was requested for a non-compact integrand."""


class RepresentationError(AntibracketError):
    """The operation needs a representation the input does not have."""


class ParityError(AntibracketError):
    """An argument that must be parity-homogeneous is not."""


class SizeGuardError(AntibracketError):
    """A brute-force enumeration would exceed its configured size limit."""
