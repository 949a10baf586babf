# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import heapq
import logging
from fractions import Fraction

from holonomy_cert_base.exceptions import DomainError

from .interval import RationalInterval, enclosure

_logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = Fraction(1, 10 ** 4)


def _value(coefficients, point):
    value = Fraction(0)
    for coeff in reversed(coefficients):
        value = value * point + coeff
    return value


def _extreme(coefficients, derivative, box, tolerance, sign):
    """Branch and bound for ``sign * max(sign * p)`` on ``box``.

    Returns a certified bound ``B`` (``sign * p <= sign * B`` on the box)
    whose distance to the true extreme is at most ``tolerance``.
    """

    def upper(piece):
        bounds = enclosure(coefficients, derivative, piece)
        return bounds.hi if sign > 0 else -bounds.lo

    best = max(sign * _value(coefficients, x) for x in (box.lo, box.midpoint, box.hi))
    heap = [(-upper(box), 0, box)]
    counter = 1
    while True:
        top, _, piece = heap[0]
        bound = -top
        if bound - best <= tolerance:
            _logger.debug("Bound certified after %d boxes", counter)
            return sign * bound
        heapq.heappop(heap)
        for half in piece.split():
            best = max(best, sign * _value(coefficients, half.midpoint))
            heapq.heappush(heap, (-upper(half), counter, half))
            counter += 1


def bound_on_interval(poly, lo, hi, tolerance=DEFAULT_TOLERANCE):
    """Certified ``(lower, upper)`` with ``lower <= p(x) <= upper`` on
    ``[lo, hi]``, each within ``tolerance`` of the true extreme."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise DomainError("Empty interval [%s, %s]." % (lo, hi))
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise DomainError("Bound tolerance must be positive.")
    variable = (poly.used_variables() or ("z",))[0]
    coefficients = poly.univariate_coefficients(variable) or [Fraction(0)]
    derivative = poly.derivative(variable).univariate_coefficients(variable) or [
        Fraction(0)
    ]
    box = RationalInterval(lo, hi)
    lower = _extreme(coefficients, derivative, box, tolerance, -1)
    upper = _extreme(coefficients, derivative, box, tolerance, 1)
    return lower, upper
