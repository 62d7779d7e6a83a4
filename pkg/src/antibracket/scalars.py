"""Exact rational scalars.

All arithmetic is over ``gmpy2.mpq``; plain ints are accepted wherever a
scalar is expected and stay ints until a division forces a rational.
"""

from fractions import Fraction

from gmpy2 import mpq

__all__ = ["mpq", "to_q", "q_to_str", "is_scalar"]

_SCALAR_TYPES = (int, Fraction, type(mpq(0)))


def is_scalar(value):
    return isinstance(value, _SCALAR_TYPES) and not isinstance(value, bool)


def to_q(value):
    """Convert an int, Fraction, mpq or ``"p/q"`` string to an exact scalar."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else mpq(value.numerator, value.denominator)
    if isinstance(value, type(mpq(0))):
        return int(value) if value.denominator == 1 else value
    raise TypeError(f"not an exact scalar: {value!r}")


def q_to_str(value):
    """Bit-exact ``"p/q"`` (or ``"p"``) string for a scalar."""
    value = mpq(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
