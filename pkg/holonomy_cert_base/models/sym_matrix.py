# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from dataclasses import dataclass

from ..exceptions import DomainError
from .poly import LaurentPoly, MultiPoly, _SparsePoly


def _as_entry(value):
    if isinstance(value, _SparsePoly):
        return LaurentPoly.from_poly(value)
    return LaurentPoly.constant(value)


@dataclass(frozen=True)
class SymMatrix2:
    """2x2 matrix over Laurent polynomials with rational coefficients.

    Entries are stored as :class:`LaurentPoly` so that the adjugate of
    ``[[z, 1], [0, 1/z]]`` stays exact; :meth:`cleared` gives the polynomial
    numerators and clearing exponents.
    """

    e11: LaurentPoly
    e12: LaurentPoly
    e21: LaurentPoly
    e22: LaurentPoly

    def __post_init__(self):
        for name in ("e11", "e12", "e21", "e22"):
            object.__setattr__(self, name, _as_entry(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows):
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @property
    def entries(self):
        return (self.e11, self.e12, self.e21, self.e22)

    def rows(self):
        return ((self.e11, self.e12), (self.e21, self.e22))

    def __mul__(self, other):
        if not isinstance(other, SymMatrix2):
            return NotImplemented
        return SymMatrix2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def __sub__(self, other):
        return SymMatrix2(*(a - b for a, b in zip(self.entries, other.entries)))

    def __add__(self, other):
        return SymMatrix2(*(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, factor):
        return SymMatrix2(*(factor * e for e in self.entries))

    def det(self):
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self):
        return self.e11 + self.e22

    def adjugate(self):
        return SymMatrix2(self.e22, -self.e12, -self.e21, self.e11)

    def inverse(self):
        """Adjugate, valid because generator images have determinant 1."""
        if self.det() != 1:
            raise DomainError(
                "Matrix with determinant %s has no polynomial inverse." % self.det()
            )
        return self.adjugate()

    def power(self, exponent):
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = SymMatrix2.identity()
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def is_identity(self):
        return self == SymMatrix2.identity()

    def cleared(self):
        """Entries as ``(MultiPoly, {variable: shift})`` pairs."""
        return tuple(entry.clear_denominators() for entry in self.entries)

    def evaluate(self, values):
        """Numeric 2x2 nested list at ``values``."""
        return [
            [self.e11.evaluate(values), self.e12.evaluate(values)],
            [self.e21.evaluate(values), self.e22.evaluate(values)],
        ]

    def specialize(self, values):
        return SymMatrix2(*(e.specialize(values) for e in self.entries))

    def __str__(self):
        return "[[%s, %s], [%s, %s]]" % tuple(str(e) for e in self.entries)


def to_multi(entry):
    """Entry as a :class:`MultiPoly`; refuses negative exponents."""
    if isinstance(entry, LaurentPoly):
        return entry.to_poly()
    if isinstance(entry, MultiPoly):
        return entry
    return MultiPoly.constant(entry)
