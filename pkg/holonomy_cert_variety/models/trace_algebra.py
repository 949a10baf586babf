# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""The 2x2 trace algebra of a two-generator group.

An element ``c0*I + c1*A + c2*B + c3*AB`` has coefficients in Q[s, t, w]
with ``s = tr A``, ``t = tr B`` and ``w = tr AB``. Products follow from
Cayley-Hamilton (``A^2 = sA - I``) and its polarisation
``AB + BA = tA + sB + (w - st)I``. When ``A`` and ``B`` generate an
irreducible representation, ``I, A, B, AB`` is a basis of the matrix
algebra, so a word identity holds exactly when its coefficients agree.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import UserError
from holonomy_cert_base.models.poly import MultiPoly

_logger = logging.getLogger(__name__)

VARIABLES = ("s", "t", "w")


def _gen(name):
    return MultiPoly.gen(name, VARIABLES)


def _const(value):
    return MultiPoly.constant(value, VARIABLES)


@lru_cache(maxsize=None)
def _table():
    """``_table()[i][j]`` is ``e_i * e_j`` for the basis ``(I, A, B, AB)``,
    as a coefficient 4-tuple; row and column 0 (the unit) are implicit."""
    s, t, w = _gen("s"), _gen("t"), _gen("w")
    zero, one = _const(0), _const(1)
    return {
        (1, 1): (-one, s, zero, zero),
        (1, 2): (zero, zero, zero, one),
        (1, 3): (zero, zero, -one, s),
        (2, 1): (w - s * t, t, s, -one),
        (2, 2): (-one, zero, t, zero),
        (2, 3): (-s, one, w, zero),
        (3, 1): (-t, w, one, zero),
        (3, 2): (zero, -one, zero, t),
        (3, 3): (-one, zero, zero, w),
    }


@dataclass(frozen=True)
class TraceAlgebraElement:
    coefficients: tuple

    def __post_init__(self):
        coefficients = tuple(
            c.embed(VARIABLES) if isinstance(c, MultiPoly) else _const(c)
            for c in self.coefficients
        )
        if len(coefficients) != 4:
            raise UserError("A trace algebra element has 4 coefficients.")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def unit(cls):
        return cls((1, 0, 0, 0))

    @classmethod
    def basis(cls, index):
        return cls(tuple(1 if k == index else 0 for k in range(4)))

    def __add__(self, other):
        return TraceAlgebraElement(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other):
        return TraceAlgebraElement(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def scale(self, factor):
        return TraceAlgebraElement(tuple(factor * c for c in self.coefficients))

    def __mul__(self, other):
        table = _table()
        left, right = self.coefficients, other.coefficients
        result = [left[0] * c for c in right]
        for i in range(1, 4):
            if not left[i]:
                continue
            result[i] = result[i] + left[i] * right[0]
            for j in range(1, 4):
                if not right[j]:
                    continue
                factor = left[i] * right[j]
                for k, c in enumerate(table[(i, j)]):
                    if c:
                        result[k] = result[k] + factor * c
        return TraceAlgebraElement(tuple(result))

    def inverse(self):
        """``X^-1 = tr(X) I - X`` (Cayley-Hamilton); valid for determinant-one
        elements, which every word element is."""
        c0, c1, c2, c3 = self.coefficients
        return TraceAlgebraElement((self.trace() - c0, -c1, -c2, -c3))

    def power(self, exponent):
        base = self if exponent >= 0 else self.inverse()
        result = TraceAlgebraElement.unit()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def trace(self):
        c0, c1, c2, c3 = self.coefficients
        return 2 * c0 + _gen("s") * c1 + _gen("t") * c2 + _gen("w") * c3

    def __str__(self):
        return "(%s)*I + (%s)*A + (%s)*B + (%s)*AB" % self.coefficients


GENERATOR_IMAGES = {"l": 1, "b": 2}


def word_element(word, images=None):
    """The element of ``word``, generators mapped through ``images``
    (default: ``l -> A``, ``b -> B``)."""
    images = images or GENERATOR_IMAGES
    missing = [g for g in word.generators() if g not in images]
    if missing:
        raise UserError("No trace algebra image for generator(s) %s." % ", ".join(missing))
    result = TraceAlgebraElement.unit()
    for gen, exponent in word.letters:
        result = result * TraceAlgebraElement.basis(images[gen]).power(exponent)
    return result


def word_trace(word):
    """Trace polynomial of ``word`` in (s, t, w)."""
    return word_element(word).trace()


def kappa():
    """``tr[A, B] - 2 = s^2 + t^2 + w^2 - stw - 4``; it vanishes exactly on
    the reducible characters."""
    s, t, w = _gen("s"), _gen("t"), _gen("w")
    return s ** 2 + t ** 2 + w ** 2 - s * t * w - 4


@lru_cache(maxsize=None)
def relator_trace_equations():
    """Coefficient differences of the two sides of the relator."""
    lhs, rhs = m137.relator()
    difference = word_element(lhs) - word_element(rhs)
    equations = tuple(c for c in difference.coefficients)
    _logger.debug(
        "Relator trace equations of total degrees %s",
        [e.degree() for e in equations],
    )
    return equations
