# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""The A-polynomial ``-z^4 A - B m^2 + z^3 A m^4`` of m137."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import ResourceCapError
from holonomy_cert_base.models.poly import MultiPoly
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_ideal.models.groebner import (
    IdealBasis,
    eliminate,
    normal_form,
    resultant,
)
from holonomy_cert_ideal.models.monomial_order import MonomialOrder
from holonomy_cert_realroots.models.sturm import count_real_roots

from .character_curve import (
    COMPONENTS,
    in_curve_ideal,
    sample_character_points,
    substitute_w,
    w_substitution,
)
from .presentation import m137_presentation
from .reconstruction import GUARD_DIGITS, PRECISE_DIGITS, reconstruct_precise
from .reconstruction import RESIDUAL_THRESHOLD as RELATOR_THRESHOLD
from .trace_algebra import word_element

_logger = logging.getLogger(__name__)

RESIDUAL_THRESHOLD = 1e-8
# s-windows where |z| stays moderate, per piece of U
SAMPLE_WINDOWS = {
    0: (Fraction(-16, 5), Fraction(-2)),
    1: None,
    2: (Fraction(2), Fraction(16, 5)),
}
DERIVATION_ORDER = MonomialOrder("lex", ("t", "m", "z"))


@dataclass(frozen=True)
class APolynomialForm:
    A: MultiPoly
    B: MultiPoly
    expanded: MultiPoly

    def residual(self, z, m, digits=PRECISE_DIGITS):
        """``(relative, absolute)`` size of ``expanded(z, m)``, the relative
        one against the sum of the term moduli; evaluated with ``digits``
        significant digits."""
        with mpmath.workdps(digits + GUARD_DIGITS):
            z, m = mpmath.mpc(z), mpmath.mpc(m)
            value = mpmath.mpc(0)
            scale = mpmath.mpf(0)
            for (i, j), coeff in self.expanded.embed(("z", "m")).terms.items():
                term = mpmath.mpf(coeff.numerator) / coeff.denominator * z ** i * m ** j
                value += term
                scale += abs(term)
            return float(abs(value) / max(1, scale)), float(abs(value))

    def to_json(self):
        return {"A": str(self.A), "B": str(self.B), "expanded": str(self.expanded)}


@lru_cache(maxsize=None)
def a_polynomial_form():
    z, m = MultiPoly.gen("z", ("z", "m")), MultiPoly.gen("m", ("z", "m"))
    A, B = m137.poly_a(), m137.poly_b()
    expanded = -(z ** 4) * A - B * m ** 2 + z ** 3 * A * m ** 4
    return APolynomialForm(A, B, expanded)


def _numeric_samples(record, form, samples, seed):
    per_component = max(1, -(-samples // len(COMPONENTS)))
    worst = worst_relative = worst_relator = 0.0
    checked = 0
    for component, (piece, _) in enumerate(COMPONENTS):
        points = sample_character_points(
            component, per_component, seed=seed + component, window=SAMPLE_WINDOWS[piece]
        )
        for point in points:
            params = reconstruct_precise(point)
            relative, absolute = form.residual(params.z, params.m)
            worst = max(worst, absolute)
            worst_relative = max(worst_relative, relative)
            worst_relator = max(worst_relator, params.residual)
            checked += 1
            if absolute >= RESIDUAL_THRESHOLD or not params.certified:
                _logger.warning(
                    "A-polynomial residual %.3g, relator residual %.3g at s=%.6f",
                    absolute,
                    params.residual,
                    float(point.s),
                )
    record.check(
        "the relator holds at every reconstructed sample point",
        "%d-digit complex reconstruction, relator residual below %g"
        % (PRECISE_DIGITS, RELATOR_THRESHOLD),
        worst_relator < RELATOR_THRESHOLD,
        worst_relator_residual=worst_relator,
    )
    record.check(
        "sampled boundary characters (z, m) are zeros of the A-polynomial",
        "%d-digit complex reconstruction at %d on-curve points, absolute residual below %g"
        % (PRECISE_DIGITS, checked, RESIDUAL_THRESHOLD),
        checked >= samples and worst < RESIDUAL_THRESHOLD,
        samples=checked,
        worst_residual=worst,
        worst_relative_residual=worst_relative,
    )


def _in_z(poly):
    """``poly`` with ``s = z + 1/z``, cleared by a power of z."""
    z = MultiPoly.gen("z")
    result, _ = poly.substitute("s", z ** 2 + 1, z)
    return result.drop_unused()


def meridian_relation():
    """``(relation, c2, c3)`` for the meridian ``c0 I + c1 A + c2 B + c3 AB``
    of the trace algebra.

    Where ``c2 = c3 = 0`` the meridian lies in the span of I and the
    longitude, so its upper-left entry in the normal form is
    ``m = c0 + c1 z``; ``relation`` is that equation with w and s
    eliminated through the w-relation and ``s = z + 1/z``.
    """
    c0, c1, c2, c3 = word_element(m137_presentation().meridian).coefficients
    numerator, denominator = w_substitution()
    k = max(c0.degree("w"), c1.degree("w"), 0)
    cleared = []
    for c in (c0, c1):
        value, power = c.substitute("w", numerator, denominator)
        cleared.append(value * denominator ** (k - power))
    z, m = MultiPoly.gen("z"), MultiPoly.gen("m")
    relation = denominator ** k * m - cleared[0] - cleared[1] * z
    return _in_z(relation), c2, c3


def _derive(record, form, caps):
    """Eliminate t from the curve and the meridian relation, both in
    (z, t, m); the resultant in t stands in when the lex basis exceeds
    ``caps``."""
    relation, c2, c3 = meridian_relation()
    record.check(
        "on the curve the meridian lies in the span of I and the longitude",
        "the B and AB coefficients of the meridian reduce to zero modulo P",
        all(in_curve_ideal(substitute_w(c)) for c in (c2, c3)),
    )
    curve = _in_z(m137.curve())
    try:
        eliminated = eliminate(
            [curve, relation], {"t"}, order=DERIVATION_ORDER, caps=caps
        )
        method = "lex elimination of t"
    except ResourceCapError as err:
        _logger.warning(
            "A-polynomial elimination stopped (%s); using the resultant in t instead.",
            err,
        )
        eliminated = [resultant(curve, relation, "t")]
        method = "resultant in t"
    target = IdealBasis((form.expanded,), MonomialOrder("grevlex", ("z", "m")), is_groebner=True)
    record.check(
        "every generator of the eliminated ideal is a multiple of the A-polynomial",
        "%s and division" % method,
        bool(eliminated)
        and all(g and normal_form(g, target).is_zero for g in eliminated),
        generators=eliminated,
    )


def validate_a_polynomial(samples=24, seed=0, derive=False, caps=None):
    """Identities and numerics behind the printed A-polynomial.

    ``derive`` additionally re-derives it by elimination under ``caps``.
    """
    record = ProofRecord("a-polynomial")
    form = a_polynomial_form()
    z = MultiPoly.gen("z")
    record.check(
        "-z^4 A - B m^2 + z^3 A m^4 reproduces the printed A-polynomial",
        "exact expansion, term by term",
        form.expanded == m137.a_polynomial_printed(),
        expanded=form.expanded,
    )
    record.check(
        "A = (z-1)(z^2+z+1)^3",
        "exact expansion",
        form.A == (z - 1) * (z ** 2 + z + 1) ** 3,
    )
    record.check(
        "A(1) = 0 and A has no other real root",
        "exact evaluation and Sturm count",
        form.A.evaluate({"z": 1}) == 0 and count_real_roots(form.A) == 1,
    )
    _numeric_samples(record, form, samples, seed)
    if derive:
        _derive(record, form, caps)
    record.require()
    _logger.info("A-polynomial validated on %d facts", len(record.facts))
    return record
