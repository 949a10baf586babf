# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from dataclasses import dataclass
from fractions import Fraction

from holonomy_cert_base.exceptions import DomainError
from holonomy_cert_base.models.rational import rational_str


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise DomainError("Empty interval [%s, %s]." % (self.lo, self.hi))

    @classmethod
    def point(cls, value):
        return cls(value, value)

    @classmethod
    def hull(cls, *values):
        return cls(min(values), max(values))

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __contains__(self, value):
        return self.lo <= value <= self.hi

    def _coerce(self, other):
        if isinstance(other, RationalInterval):
            return other
        return RationalInterval.point(other)

    def __add__(self, other):
        other = self._coerce(other)
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        other = self._coerce(other)
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise DomainError("Negative interval powers are not supported.")
        if exponent == 0:
            return RationalInterval.point(1)
        lo, hi = self.lo ** exponent, self.hi ** exponent
        if exponent % 2:
            return RationalInterval(lo, hi)
        if self.lo >= 0:
            return RationalInterval(lo, hi)
        if self.hi <= 0:
            return RationalInterval(hi, lo)
        return RationalInterval(0, max(lo, hi))

    def abs(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RationalInterval(0, max(-self.lo, self.hi))

    def intersect(self, other):
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return None
        return RationalInterval(lo, hi)

    def split(self, at=None):
        at = self.midpoint if at is None else Fraction(at)
        return RationalInterval(self.lo, at), RationalInterval(at, self.hi)

    def to_json(self):
        return [rational_str(self.lo), rational_str(self.hi)]

    def __str__(self):
        return "[%s, %s]" % (self.lo, self.hi)


def horner_enclosure(dense_low_first, box):
    """Natural interval extension of Horner's scheme on ``box``.

    ``dense_low_first`` lists rational coefficients lowest degree first.
    """
    result = RationalInterval.point(0)
    for coeff in reversed(dense_low_first):
        result = result * box + coeff
    return result


def mean_value_enclosure(dense_low_first, derivative_low_first, box):
    """``p(m) + p'(box) * (box - m)`` with ``m`` the midpoint."""
    m = box.midpoint
    value = Fraction(0)
    for coeff in reversed(dense_low_first):
        value = value * m + coeff
    slope = horner_enclosure(derivative_low_first, box)
    return slope * (box - m) + value


def enclosure(dense_low_first, derivative_low_first, box):
    natural = horner_enclosure(dense_low_first, box)
    centred = mean_value_enclosure(dense_low_first, derivative_low_first, box)
    # both are sound, so is their intersection
    return natural.intersect(centred) or natural
