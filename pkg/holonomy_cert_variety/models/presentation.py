# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from holonomy_cert_base.data import m137
from holonomy_cert_base.models.group_word import (
    GroupWord,
    word_matrix,
    word_matrix_numeric,
)
from holonomy_cert_base.models.poly import LaurentPoly
from holonomy_cert_base.models.sym_matrix import SymMatrix2

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Presentation:
    """Two-generator, one-relator presentation with its peripheral words."""

    generators: tuple
    relator: tuple
    meridian: GroupWord
    longitude: GroupWord

    def relator_word(self):
        """The relator as a single word equal to the identity."""
        lhs, rhs = self.relator
        return lhs * rhs.inverse()

    def to_json(self):
        return {
            "generators": list(self.generators),
            "relator": [str(w) for w in self.relator],
            "meridian": str(self.meridian),
            "longitude": str(self.longitude),
        }


@lru_cache(maxsize=None)
def m137_presentation():
    return Presentation(("l", "b"), m137.relator(), m137.meridian(), m137.longitude())


def normal_form_images():
    """Symbolic ``l -> [[z, 1], [0, 1/z]]`` and ``b -> [[x, 0], [y, 1/x]]``."""
    variables = ("z", "x", "y")
    z = LaurentPoly.gen("z", variables)
    x = LaurentPoly.gen("x", variables)
    y = LaurentPoly.gen("y", variables)
    return {
        "l": SymMatrix2(z, 1, 0, z ** -1),
        "b": SymMatrix2(x, 0, y, x ** -1),
    }


def numeric_normal_form(z, x, y):
    z, x, y = complex(z), complex(x), complex(y)
    return {
        "l": np.array([[z, 1], [0, 1 / z]], dtype=complex),
        "b": np.array([[x, 0], [y, 1 / x]], dtype=complex),
    }


@lru_cache(maxsize=None)
def relator_entry_equations():
    """The four entries of ``rho(LHS) - rho(RHS)`` in the normal form,
    cleared of negative powers; polynomials in (z, x, y)."""
    presentation = m137_presentation()
    images = normal_form_images()
    lhs, rhs = presentation.relator
    difference = word_matrix(lhs, images) - word_matrix(rhs, images)
    equations = tuple(
        poly.embed(("z", "x", "y")) for poly, _ in difference.cleared()
    )
    _logger.debug(
        "Relator entry equations of total degrees %s",
        [e.degree() for e in equations],
    )
    return equations


def matrix_difference_norm(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def relator_residual(images):
    """``max |rho(LHS) - rho(RHS)|`` for numeric generator images."""
    lhs, rhs = m137_presentation().relator
    return matrix_difference_norm(
        word_matrix_numeric(lhs, images), word_matrix_numeric(rhs, images)
    )
