# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import math
from fractions import Fraction

from ..exceptions import UserError

Rational = Fraction


def to_rational(value):
    """Convert ``value`` to an exact rational.

    Accepts integers, fractions and strings such as ``"3"``, ``"-7/4"`` or
    ``"0.8684"``. Floats are refused: every exact quantity has to enter the
    library without rounding.
    """
    if isinstance(value, bool):
        raise UserError("A boolean is not a rational number.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise UserError(
                "%r is not a rational number; expected an integer, p/q or a "
                "decimal string." % value
            ) from err
    raise UserError("Cannot use %r as an exact rational." % (value,))


def rational_str(value):
    """Serialise as ``"num/den"``, the certificate wire form."""
    value = Fraction(value)
    return "%d/%d" % (value.numerator, value.denominator)


def floor_to(value, digits):
    scale = 10 ** digits
    return Fraction(math.floor(value * scale), scale)


def ceil_to(value, digits):
    scale = 10 ** digits
    return Fraction(math.ceil(value * scale), scale)


def display(value, digits=4):
    """Human readable rounding used by reports only."""
    return "%.*f" % (digits, float(value))


def coefficient_bits(value):
    return max(value.numerator.bit_length(), value.denominator.bit_length())
