# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""Filling polynomials of the (1, n) Dehn fillings.

The filling adds the relation ``mu * lambda^n = 1``; on the boundary
characters this is ``m = z^(-n)``, which turns the A-polynomial into a
Laurent polynomial in z alone.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import DomainError
from holonomy_cert_base.models.poly import LaurentPoly, MultiPoly
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_variety.models.a_polynomial import a_polynomial_form

_logger = logging.getLogger(__name__)


def _z(exponent=1):
    return LaurentPoly.gen("z", ("z",)) ** exponent


@dataclass(frozen=True)
class Slope:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise DomainError("The slope must be an integer, got %r." % (self.n,))
        if self.n == 0:
            raise DomainError("The (1, 0) filling is not a slope of this family; n must be nonzero.")

    @property
    def is_negative(self):
        return self.n < 0

    def __str__(self):
        return "(1, %d)" % self.n


@dataclass(frozen=True)
class FillingPolynomial:
    """``poly = z^clearing_shift * laurent_form``, with nonzero constant term.

    ``laurent_form`` is ``F = A(z^(4n'-1) - 1) - B z^(2n'-4)`` for
    ``n = -n' < 0`` and ``G = A(z^(4n+1) - 1) + B z^(2n-3)`` for ``n > 0``;
    the shift is negative when F itself vanishes at 0.
    """

    n: int
    poly: MultiPoly
    clearing_shift: int
    laurent_form: LaurentPoly

    def value_at_one(self):
        return self.poly.evaluate({"z": 1})

    def to_json(self):
        return {
            "n": self.n,
            "poly": str(self.poly),
            "clearing_shift": self.clearing_shift,
            "laurent_form": str(self.laurent_form),
        }


def substitute_slope(n):
    """The A-polynomial at ``m = z^(-n)``, as a Laurent polynomial in z."""
    expanded = a_polynomial_form().expanded.embed(("z", "m"))
    terms = {}
    for (i, j), coeff in expanded.terms.items():
        key = (i - n * j,)
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(terms, ("z",))


def displayed_form(n):
    """F or G written directly in A and B."""
    Slope(n)
    A, B = m137.poly_a(), m137.poly_b()
    if n < 0:
        k = -n
        return A * _z(4 * k - 1) - B * _z(2 * k - 4) - A
    return A * _z(4 * n + 1) + B * _z(2 * n - 3) - A


@lru_cache(maxsize=256)
def filling_polynomial(n):
    slope = Slope(n)
    substituted = substitute_slope(n)
    if slope.is_negative:
        laurent_form = substituted * _z(-4)
    else:
        laurent_form = -substituted * _z(4 * n - 3)
    shift = -laurent_form.min_degree("z")
    poly = (laurent_form * _z(shift)).to_poly().embed(("z",))
    _logger.debug("Filling polynomial of %s: degree %d, shift %d", slope, poly.degree(), shift)
    return FillingPolynomial(n, poly, shift, laurent_form.embed(("z",)))


def symmetry_degree(n):
    """``d`` with ``z^d * laurent_form(1/z) = laurent_form(z)``."""
    Slope(n)
    return 4 * -n + 6 if n < 0 else 4 * n + 8


def verify_palindrome_symmetries(n):
    """The reciprocal symmetries of A and B and the one they induce on the
    filling polynomial of slope ``n``."""
    slope = Slope(n)
    record = ProofRecord("palindrome %s" % slope)
    A, B = LaurentPoly.from_poly(m137.poly_a()), LaurentPoly.from_poly(m137.poly_b())
    record.check(
        "z^7 A(1/z) = -A(z)",
        "exact Laurent identity",
        A.inverted("z") * _z(7) + A == 0,
    )
    record.check(
        "z^14 B(1/z) = B(z)",
        "exact Laurent identity",
        B.inverted("z") * _z(14) - B == 0,
    )
    filling = filling_polynomial(n)
    record.check(
        "the substitution m = z^(%d) reproduces the displayed filling equation" % -n,
        "exact Laurent expansion",
        filling.laurent_form == displayed_form(n),
        laurent_form=filling.laurent_form,
    )
    degree = symmetry_degree(n)
    form = filling.laurent_form
    record.check(
        "z^%d F(1/z) = F(z)" % degree,
        "exact Laurent identity",
        form.inverted("z") * _z(degree) == form,
        degree=degree,
    )
    record.check(
        "the cleared polynomial has a nonzero constant term",
        "coefficient inspection",
        filling.poly.constant_term() != 0,
        shift=filling.clearing_shift,
    )
    record.require()
    return record
