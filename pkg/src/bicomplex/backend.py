"""Real-scalar backend helpers.

Every real quantity in the library is either an exact rational
(:class:`fractions.Fraction`, with plain ``int`` accepted as exact) or a
binary ``float``.  Exact values compare exactly; as soon as a float is
involved, comparisons become tolerance-based with the module constant
:data:`EPSILON`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Real = Union[int, Fraction, float]

#: comparison tolerance for the float backend
EPSILON = 1e-9

EXACT = "exact"
FLOAT = "float"
BACKENDS = (EXACT, FLOAT)


def is_exact(x: Real) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def as_real(value, backend: str = EXACT) -> Real:
    """Coerce ``value`` (number or ``"p/q"`` string) into the given backend."""
    if backend == EXACT:
        if isinstance(value, str):
            return Fraction(value)
        return Fraction(value)
    if backend == FLOAT:
        if isinstance(value, str):
            return float(Fraction(value))
        return float(value)
    raise ValueError(f"unknown backend {backend!r}")


def req(a: Real, b: Real) -> bool:
    """Equality: exact when both operands are exact, ε-tolerant otherwise."""
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= EPSILON


def rle(a: Real, b: Real) -> bool:
    """a ≤ b, treating ε-close floats as equal."""
    if is_exact(a) and is_exact(b):
        return a <= b
    return a <= b + EPSILON


def rlt(a: Real, b: Real) -> bool:
    """a < b strictly; ε-close float values do not count as strict."""
    if is_exact(a) and is_exact(b):
        return a < b
    return a < b - EPSILON


def rdiv(a: Real, b: Real) -> Real:
    """a / b, staying exact when both operands are exact.

    Plain ``int / int`` would produce a float; this keeps rationals rational.
    """
    if is_exact(a) and is_exact(b):
        return Fraction(a) / Fraction(b)
    return a / b


def rsqrt(x: Real) -> Real:
    """Square root, exact when ``x`` is a perfect rational square.

    Exact inputs whose numerator and denominator are perfect squares come
    back as Fractions (so e.g. one-dimensional Euclidean norms stay exact);
    anything else falls to ``math.sqrt``.
    """
    if x < 0:
        raise ValueError("negative radicand")
    if is_exact(x):
        frac = Fraction(x)
        rn = math.isqrt(frac.numerator)
        rd = math.isqrt(frac.denominator)
        if rn * rn == frac.numerator and rd * rd == frac.denominator:
            return Fraction(rn, rd)
        return math.sqrt(frac)
    return math.sqrt(x)


def encode_real(x: Real):
    """JSON-friendly form: Fractions become "p/q" strings in lowest terms."""
    if isinstance(x, Fraction):
        return str(x)
    return x


def decode_real(obj, backend: str = EXACT) -> Real:
    if not isinstance(obj, (int, float, str)) or isinstance(obj, bool):
        raise TypeError(f"not a real-number encoding: {obj!r}")
    return as_real(obj, backend)
