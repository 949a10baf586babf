# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""SU(2) versus SL(2, R) on the real points of the curve."""

import enum
import logging
from fractions import Fraction

import numpy as np

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import DomainError, ValidationError
from holonomy_cert_base.models.poly import MultiPoly
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_realroots.models.domain import compute_s_domain
from holonomy_cert_realroots.models.sturm import IsolatingInterval

from .character_curve import EXCLUDED_S, in_curve_ideal, w_coordinate

_logger = logging.getLogger(__name__)


class Classification(enum.Enum):
    SU2 = "SU2"
    SL2R = "SL2R"
    BOUNDARY = "BOUNDARY"

    def to_json(self):
        return self.value


def su2_triangle_criterion(t1, t2, t3):
    """``(2 t3 - t1 t2)^2 <= (4 - t1^2)(4 - t2^2)``: traces of A, B and AB
    with |tr A|, |tr B| < 2 come from SU(2) exactly when this holds.

    Exact for rationals; floats are compared as given.
    """
    if abs(t1) >= 2 or abs(t2) >= 2:
        raise DomainError(
            "The triangle criterion needs |t1| < 2 and |t2| < 2, got %s and %s." % (t1, t2)
        )
    if all(isinstance(v, (int, Fraction)) for v in (t1, t2, t3)):
        t1, t2, t3 = Fraction(t1), Fraction(t2), Fraction(t3)
    return (2 * t3 - t1 * t2) ** 2 <= (4 - t1 ** 2) * (4 - t2 ** 2)


def triangle_gap(t1, t2, t3):
    """``(4 - t1^2)(4 - t2^2) - (2 t3 - t1 t2)^2``; symmetric in its
    arguments."""
    return (4 - t1 ** 2) * (4 - t2 ** 2) - (2 * t3 - t1 * t2) ** 2


def _on_curve_t(s):
    """Real roots t of P(s, t) for a float ``s``."""
    roots = np.roots(
        [
            float(c)
            for c in reversed(
                m137.curve().specialize({"s": Fraction(s)}).univariate_coefficients("t")
            )
        ]
    )
    return [r.real for r in roots if abs(r.imag) < 1e-12]


def verify_unitarity_reduction():
    """On the curve the triangle criterion for (s, t, w) reduces to
    ``(s+1)^3 (s-2) t^2 <= 0``."""
    record = ProofRecord("unitarity-reduction")
    s, t, w = (MultiPoly.gen(v) for v in ("s", "t", "w"))
    poly = m137.curve()
    gap = triangle_gap(s, t, w)
    cleared, power = gap.substitute("w", t ** 2 * (s + 1) - 1, t * (s + 1))
    reduction = 4 * (s + 1) ** 3 * (s - 2) * t ** 2
    record.check(
        "t^2 (s+1)^2 [(4-s^2)(4-t^2) - (2w-st)^2] with w from the w-relation equals 4P - 4(s+1)^3 (s-2) t^2",
        "exact expansion",
        power == 2 and cleared == 4 * poly - reduction,
        cleared=cleared,
    )
    record.check(
        "t^2 (s+1)^2 [...] + 4(s+1)^3 (s-2) t^2 lies in <P>",
        "division by P",
        in_curve_ideal(cleared + reduction, poly),
    )
    record.check(
        "on the curve the gap equals 4(s+1)(2-s)",
        "exact division by t^2 (s+1)^2",
        (-reduction) == 4 * (s + 1) * (2 - s) * t ** 2 * (s + 1) ** 2,
    )
    for sample, expected in ((0, True), (3, False)):
        t_value = max(_on_curve_t(sample))
        w_value = w_coordinate(float(sample), t_value)
        value = triangle_gap(float(sample), t_value, w_value)
        record.check(
            "at s = %s the triangle gap is %s" % (sample, "non-negative" if expected else "negative"),
            "numeric evaluation at a root of P(%s, t)" % sample,
            (value >= 0) == expected and abs(value - 4 * (sample + 1) * (2 - sample)) < 1e-9,
            t=t_value,
            gap=value,
        )
    record.require()
    return record


def classify_character_point(point, width=None):
    """SU2 on (p2, p3), SL2R for s < p1 or s > 2, BOUNDARY at p1, p2, p3.

    ``point`` must be on the curve; its s may be rational or an isolated
    root of the cubic.
    """
    kwargs = {} if width is None else {"width": width}
    if not point.is_on_curve(**kwargs):
        raise ValidationError(
            "(s, t) = (%s, %s) is not on the character curve." % (point.s, point.t)
        )
    s = point.s
    if not isinstance(s, IsolatingInterval) and Fraction(s) in EXCLUDED_S:
        raise ValidationError("There is no point of the curve above s = %s." % s)
    domain = compute_s_domain()
    for name, root in domain.points.items():
        equal = s.compare_root(root) == 0 if isinstance(s, IsolatingInterval) else False
        if equal:
            _logger.debug("s is the endpoint %s of U", name)
            return Classification.BOUNDARY
    piece = domain.piece_of(s)
    if piece is None:
        raise ValidationError(
            "s = %s lies in a gap of U where the curve has no real point." % float(s)
        )
    result = Classification.SU2 if piece == 1 else Classification.SL2R
    s_value, t_value, w_value = point.numeric()
    if abs(s_value) < 2 and abs(t_value) < 2:
        criterion = su2_triangle_criterion(s_value, t_value, w_value)
        if criterion != (result is Classification.SU2):
            raise ValidationError(
                "Triangle criterion disagrees with the classification at s = %s." % s_value
            )
    return result
