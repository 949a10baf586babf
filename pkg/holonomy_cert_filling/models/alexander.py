# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging
from dataclasses import dataclass

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import DomainError, UserError
from holonomy_cert_base.models.poly import MultiPoly

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlexanderPoly:
    """Integer coefficients, lowest degree first; trailing zeros dropped."""

    coefficients: tuple

    def __post_init__(self):
        coefficients = list(self.coefficients)
        if any(isinstance(c, bool) or int(c) != c for c in coefficients):
            raise UserError("Alexander coefficients must be integers, got %r." % (coefficients,))
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if not coefficients:
            raise DomainError("An Alexander polynomial needs a nonzero coefficient.")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coefficients))

    @classmethod
    def parse(cls, text):
        poly = MultiPoly.parse(text)
        used = poly.used_variables()
        if len(used) > 1:
            raise UserError("%r has more than one variable." % text)
        return cls(tuple(poly.univariate_coefficients(used[0] if used else None)))

    def shifted(self, power, sign=1):
        """``sign * x^power * self`` for ``power >= 0``."""
        return AlexanderPoly((0,) * power + tuple(sign * c for c in self.coefficients))

    def __str__(self):
        return str(MultiPoly.from_dense(self.coefficients, "x"))


def alexander_coefficient_check(poly):
    """Whether every nonzero coefficient is 1 or -1."""
    if not isinstance(poly, AlexanderPoly):
        poly = AlexanderPoly(tuple(poly))
    holds = all(c in (1, -1) for c in poly.coefficients if c)
    _logger.debug("Alexander coefficients of %s all +-1: %s", poly, holds)
    return holds


def l_space_report(poly):
    """The raw coefficient check with the recorded provenance of the
    L-space argument."""
    if not isinstance(poly, AlexanderPoly):
        poly = AlexanderPoly(tuple(poly))
    return {
        "poly": str(poly),
        "coefficients": list(poly.coefficients),
        "all_coefficients_unit": alexander_coefficient_check(poly),
        "note": m137.L_SPACE_NOTE,
    }


def known_alexander_polynomials():
    return {
        "m137": AlexanderPoly(m137.ALEXANDER_M137),
        "8_20": AlexanderPoly(m137.ALEXANDER_8_20),
    }
