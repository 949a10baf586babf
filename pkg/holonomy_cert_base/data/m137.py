# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""Built-in data for the census manifold m137.

Generators of the fundamental group are ``l`` (the homological longitude)
and ``b``. Every polynomial is kept in the text format and parsed on first
use.
"""

from functools import lru_cache

from ..models.group_word import GroupWord
from ..models.text_format import parse_poly

CURVE = "(s-2)*(s+1)^2*t^4 - (s-2)*(s+2)*(s+1)*t^2 - 1"
CURVE_EXPANDED = "(-2 - 3*s + s^3)*t^4 + (4 + 4*s - s^2 - s^3)*t^2 - 1"

# w = t - 1/(t(s+1)), cleared by t(s+1)
W_RELATION = "w*t*(s+1) - t^2*(s+1) + 1"

GENERATORS = (
    "s*t*w - t^2 - w^2 - s + 2",
    "t^3 - w^3 + s*t - s*w - 2*t + w",
    "s*t^2 - t*w - w^2 - s + 1",
    "s*w^3 - s^2*t + s^2*w - t^2*w - t*w^2 + s*t - s*w + t",
)

CUBIC = "s^3 + 2*s^2 - 4*s - 4"
DISCRIMINANT = "(s+1)^2*(s-2)*(s^3 + 2*s^2 - 4*s - 4)"

A = "-1 - 2*z - 3*z^2 - z^3 + z^4 + 3*z^5 + 2*z^6 + z^7"
A_FACTORED = "(z-1)*(z^2+z+1)^3"
B = (
    "1 + 3*z + 2*z^2 + z^3 - 2*z^4 - 4*z^5 - z^6 - 4*z^7 - z^8 - 4*z^9"
    " - 2*z^10 + z^11 + 2*z^12 + 3*z^13 + z^14"
)

A_POLYNOMIAL_PRINTED = (
    "(z^4 + 2*z^5 + 3*z^6 + z^7 - z^8 - 3*z^9 - 2*z^10 - z^11)"
    " + m^2*(-1 - 3*z - 2*z^2 - z^3 + 2*z^4 + 4*z^5 + z^6 + 4*z^7 + z^8"
    " + 4*z^9 + 2*z^10 - z^11 - 2*z^12 - 3*z^13 - z^14)"
    " + m^4*(-z^3 - 2*z^4 - 3*z^5 - z^6 + z^7 + 3*z^8 + 2*z^9 + z^10)"
)

RELATOR_LHS = "b^-1*l^-1*b^-1*l^-1*b^2*l"
RELATOR_RHS = "l*b^-2*l^-1*b^2"
MERIDIAN = "b^2*l^-1*b^-3*l^-1*b^2"
LONGITUDE = "l"

# printed four-digit values, used as oracles only
CUBIC_ROOTS_PRINTED = ("-2.9032", "-0.8061", "1.7093")
B_ROOTS_PRINTED = ("-2.3396", "-1.4121", "-0.7082", "-0.4274", "0.8684", "1.1516")
V_ENDPOINTS_PRINTED = ("-2.5038", "-0.3994")

ALEXANDER_M137 = (1,)
# lowest degree first
ALEXANDER_8_20 = (1, -2, 3, -2, 1)

L_SPACE_NOTE = (
    "The (1,-3) filling of m137 is the (2,3) filling of m011, i.e. a surgery on"
    " the knot 8_20; a (1,p) L-space filling with homological framing forces"
    " Alexander coefficients +-1, which 8_20 violates. These identifications"
    " are recorded, not computed."
)


@lru_cache(maxsize=None)
def curve():
    return parse_poly(CURVE, variables=("s", "t"))


@lru_cache(maxsize=None)
def w_relation():
    return parse_poly(W_RELATION, variables=("s", "t", "w"))


@lru_cache(maxsize=None)
def generators():
    return tuple(parse_poly(g, variables=("s", "t", "w")) for g in GENERATORS)


@lru_cache(maxsize=None)
def cubic():
    return parse_poly(CUBIC, variables=("s",))


@lru_cache(maxsize=None)
def discriminant():
    return parse_poly(DISCRIMINANT, variables=("s",))


@lru_cache(maxsize=None)
def poly_a():
    return parse_poly(A, variables=("z",))


@lru_cache(maxsize=None)
def poly_b():
    return parse_poly(B, variables=("z",))


@lru_cache(maxsize=None)
def a_polynomial_printed():
    return parse_poly(A_POLYNOMIAL_PRINTED, variables=("z", "m"))


def relator():
    return GroupWord.parse(RELATOR_LHS), GroupWord.parse(RELATOR_RHS)


def meridian():
    return GroupWord.parse(MERIDIAN)


def longitude():
    return GroupWord.parse(LONGITUDE)
