"""Exact rational coercion and rendering.

Every numeric value in ghspace is a :class:`fractions.Fraction`. Inputs may be
ints, Fractions, finite floats (read through their shortest repr, so ``0.1``
becomes ``1/10``) or strings such as ``"3"``, ``"-3/2"`` or ``"0.25"``.
"""
from __future__ import annotations

import math
import re
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import ParseError

MAX_DIGITS = 60

_INT_OR_RATIO = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_DECIMAL = re.compile(r"^[+-]?(?:\d+\.\d*|\.\d+)$")


def to_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction or raise :class:`ParseError`."""
    if isinstance(value, bool):
        raise ParseError(f"booleans are not distances: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ParseError(f"non-finite value {value!r}")
        return to_rational(repr(value))
    if isinstance(value, str):
        text = value.strip()
        digits = sum(ch.isdigit() for ch in text)
        if digits > MAX_DIGITS:
            raise ParseError(f"{text[:20]}... exceeds {MAX_DIGITS} digits")
        if _INT_OR_RATIO.match(text):
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den) if den else 1)
        if _DECIMAL.match(text):
            return Fraction(text)
        raise ParseError(f"not an exact rational: {value!r}")
    raise ParseError(f"unsupported numeric type {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """``"a/b"``, or ``"a"`` when the denominator is 1."""
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_decimal(q: Fraction, precision: int = 6) -> str:
    """Human-readable fixed-point rendering; never used for stored values."""
    with localcontext() as ctx:
        ctx.prec = max(precision + len(str(abs(q.numerator) // q.denominator)) + 5, 28)
        value = Decimal(q.numerator) / Decimal(q.denominator)
        return str(value.quantize(Decimal(1).scaleb(-precision)))
