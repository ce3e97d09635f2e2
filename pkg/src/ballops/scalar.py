"""Exact rational scalars.

All coordinates, radii and gauge values are exact rationals.  The default
backend is ``gmpy2.mpq``; setting ``BALLOPS_RATIONAL=fraction`` switches to
the pure-Python :class:`fractions.Fraction` (slower, no C dependency).  The
choice is made once, at import time.
"""

import os
from fractions import Fraction

_requested = os.environ.get("BALLOPS_RATIONAL", "gmpy2").strip().lower()

if _requested == "fraction":
    Q = Fraction
    BACKEND = "fraction"
else:
    try:
        from gmpy2 import mpq as Q
        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
        Q = Fraction
        BACKEND = "fraction"

ZERO = Q(0)
ONE = Q(1)
HALF = Q(1, 2)


def as_scalar(value):
    """Convert ints, rationals and ``"p/q"`` / decimal strings exactly.

    Floats are rejected: they would silently smuggle rounding into the
    predicates.
    """
    if type(value) is Q:
        return value
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a string or rational")
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty scalar string")
        # Fraction parses both "p/q" and decimal/scientific notation exactly.
        value = Fraction(text)
    if isinstance(value, Fraction) and Q is not Fraction:
        return Q(value.numerator, value.denominator)
    return Q(value)


def scalar_str(value):
    """Canonical text form: ``"p/q"`` or an integer."""
    value = as_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_float(value):
    return value.numerator / value.denominator
