# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from holonomy_cert_base.exceptions import DomainError, UserError
from holonomy_cert_base.models.group_word import word_matrix_numeric
from holonomy_cert_realroots.models.sturm import IsolatingInterval

from .presentation import m137_presentation, numeric_normal_form, relator_residual

_logger = logging.getLogger(__name__)

MODES = ("real", "complex")
RESIDUAL_THRESHOLD = 1e-9
PRECISE_DIGITS = 40
GUARD_DIGITS = 10


@dataclass(frozen=True)
class RepresentationParams:
    """Numeric representation.

    ``x`` and ``y`` parametrise the image of ``b``: the normal-form values
    in complex mode, the entries ``a`` and ``ad - 1`` in real mode. ``m`` is
    the eigenvalue of the meridian on the eigenvector of ``z``.
    """

    z: complex
    x: complex
    y: complex
    m: complex
    mode: str
    residual: float
    images: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def certified(self):
        return self.residual < RESIDUAL_THRESHOLD

    def to_json(self):
        def number(value):
            value = complex(value)
            return [value.real, value.imag]

        return {
            "mode": self.mode,
            "z": number(self.z),
            "x": number(self.x),
            "y": number(self.y),
            "m": number(self.m),
            "residual": self.residual,
            "images": {
                name: [[number(v) for v in row] for row in matrix.tolist()]
                for name, matrix in self.images.items()
            },
        }


def _larger_root(trace):
    """Root of ``X^2 - trace*X + 1`` of modulus at least one."""
    roots = np.roots([1.0, -trace, 1.0])
    return complex(max(roots, key=lambda r: (abs(r), r.imag)))


def _meridian_eigenvalue(images):
    return complex(word_matrix_numeric(m137_presentation().meridian, images)[0, 0])


def reconstruct_representation(point, mode="complex"):
    """Representation with the traces of ``point``.

    ``complex`` uses ``l -> [[z, 1], [0, 1/z]]``, ``b -> [[x, 0], [y, 1/x]]``;
    ``real`` needs s^2 > 4 and uses ``l -> diag(z, 1/z)``,
    ``b -> [[a, 1], [ad - 1, d]]`` with real a, d.
    """
    if mode not in MODES:
        raise UserError("Unknown reconstruction mode %r; expected real or complex." % mode)
    s, t, w = point.numeric()
    if t == 0:
        raise DomainError("Cannot reconstruct a representation at t = 0.")
    if mode == "real":
        if s * s <= 4:
            raise DomainError(
                "Real reconstruction needs s^2 > 4; s = %.6f gives no real eigenvalue." % s
            )
        z = _larger_root(s).real
        a = (w - t / z) / (z - 1 / z)
        d = t - a
        images = {
            "l": np.array([[z, 0], [0, 1 / z]], dtype=float),
            "b": np.array([[a, 1], [a * d - 1, d]], dtype=float),
        }
        x, y = a, a * d - 1
    else:
        z = _larger_root(s)
        x = _larger_root(t)
        y = w - z * x - 1 / (z * x)
        images = numeric_normal_form(z, x, y)
    residual = relator_residual(images)
    m = _meridian_eigenvalue(images)
    _logger.debug("Reconstructed %s representation at s=%.6f: residual %.3g", mode, s, residual)
    return RepresentationParams(z, x, y, m, mode, residual, images)


def _mp_rational(value):
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator


def _mp_coordinate(value, digits):
    if isinstance(value, IsolatingInterval):
        value = value.refine(Fraction(1, 10 ** digits)).midpoint
    return _mp_rational(value)


def _mp_larger_root(trace):
    root = mpmath.sqrt(mpmath.mpc(trace) ** 2 - 4)
    return max(((trace + root) / 2, (trace - root) / 2), key=lambda r: (abs(r), r.imag))


def _mp_word(word, images):
    result = mpmath.eye(2)
    for gen, exponent in word.letters:
        matrix = images[gen]
        if exponent < 0:
            matrix = mpmath.matrix(
                [[matrix[1, 1], -matrix[0, 1]], [-matrix[1, 0], matrix[0, 0]]]
            )
        for _ in range(abs(exponent)):
            result = result * matrix
    return result


def reconstruct_precise(point, digits=PRECISE_DIGITS):
    """Complex-mode reconstruction carried out with ``digits`` significant
    digits; ``s`` and ``t`` are refined exactly before rounding."""
    with mpmath.workdps(digits + GUARD_DIGITS):
        s, t = _mp_coordinate(point.s, digits), _mp_coordinate(point.t, digits)
        if not t or s == -1:
            raise DomainError("Cannot reconstruct a representation at s = %s, t = %s." % (s, t))
        w = t - 1 / (t * (s + 1))
        z, x = _mp_larger_root(s), _mp_larger_root(t)
        y = w - z * x - 1 / (z * x)
        images = {
            "l": mpmath.matrix([[z, 1], [0, 1 / z]]),
            "b": mpmath.matrix([[x, 0], [y, 1 / x]]),
        }
        presentation = m137_presentation()
        lhs, rhs = presentation.relator
        difference = _mp_word(lhs, images) - _mp_word(rhs, images)
        residual = float(max(abs(difference[i, j]) for i in range(2) for j in range(2)))
        m = _mp_word(presentation.meridian, images)[0, 0]
    _logger.debug("Reconstructed at %d digits: relator residual %.3g", digits, residual)
    return RepresentationParams(z, x, y, m, "complex", residual, images)
