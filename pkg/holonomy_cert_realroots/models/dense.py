# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""Dense univariate integer polynomials.

Coefficient lists are tuples of Python ints, highest degree first (the
``dup`` convention of sympy's dense polynomial layer, which supplies gcd,
square-free part and pseudo-remainders).
"""

import math
from fractions import Fraction

from holonomy_cert_base.exceptions import UserError
from holonomy_cert_base.models.poly import MultiPoly

try:
    from sympy.polys.densearith import dup_prem, dup_quo
    from sympy.polys.densetools import dup_diff
    from sympy.polys.domains import ZZ
    from sympy.polys.euclidtools import dup_gcd
    from sympy.polys.sqfreetools import dup_sqf_part
except ImportError:  # pragma: no cover
    pass


def _ints(coefficients):
    coefficients = [int(c) for c in coefficients]
    while coefficients and not coefficients[0]:
        coefficients.pop(0)
    return tuple(coefficients)


def from_poly(poly, variable=None):
    """Positive integer multiple of a univariate :class:`MultiPoly`."""
    try:
        low_first = poly.univariate_coefficients(variable)
    except ValueError as err:
        raise UserError(str(err)) from err
    if not low_first:
        return ()
    denominator = math.lcm(*(Fraction(c).denominator for c in low_first))
    return primitive(tuple(int(c * denominator) for c in reversed(low_first)))


def to_poly(dense, variable):
    return MultiPoly.from_dense(list(reversed(dense)), variable)


def degree(dense):
    return len(dense) - 1


def content(dense):
    return math.gcd(*dense) if dense else 0


def primitive(dense):
    """Divide by the positive content; the sign is kept."""
    dense = _ints(dense)
    c = content(dense)
    if c in (0, 1):
        return dense
    return tuple(a // c for a in dense)


def derivative(dense):
    return _ints(dup_diff(list(dense), 1, ZZ)) if len(dense) > 1 else ()


def gcd(a, b):
    if not a:
        return b
    if not b:
        return a
    return _ints(dup_gcd(list(a), list(b), ZZ))


def squarefree(dense):
    if len(dense) <= 1:
        return dense
    return _ints(dup_sqf_part(list(dense), ZZ))


def exact_quotient(a, b):
    return _ints(dup_quo(list(a), list(b), ZZ))


def pseudo_remainder(a, b):
    return _ints(dup_prem(list(a), list(b), ZZ))


def homogeneous_value(dense, point):
    """``den**deg * p(num/den)`` for ``point = num/den``; same sign as p."""
    point = Fraction(point)
    return _homogeneous(dense, point.numerator, point.denominator)


def _homogeneous(dense, num, den):
    value = 0
    power = 1
    for coeff in dense:
        value = value * num + coeff * power
        power = power * den
    # value = sum c_i num^(d-i) den^i with c_0 the leading coefficient
    return value


def sign_at(dense, point):
    value = homogeneous_value(dense, point)
    return (value > 0) - (value < 0)


def value_at(dense, point):
    point = Fraction(point)
    value = Fraction(0)
    for coeff in dense:
        value = value * point + coeff
    return value


def sign_at_infinity(dense, direction):
    """Sign of p at +oo (direction 1) or -oo (direction -1)."""
    if not dense:
        return 0
    lead = (dense[0] > 0) - (dense[0] < 0)
    if direction < 0 and degree(dense) % 2:
        return -lead
    return lead


def cauchy_bound(dense):
    """Rational ``M`` with every real root strictly inside ``(-M, M)``."""
    lead = abs(dense[0])
    return 1 + Fraction(max((abs(c) for c in dense[1:]), default=0), lead)


def sign_variations(values):
    signs = [v for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))
