# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""The real s-domain U of the character curve and its z-image V.

U collects the traces s of the longitude for which the curve has a real
point; V is the set of real eigenvalues z of the longitude with
``z + 1/z`` in the part of U outside [-2, 2].
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from holonomy_cert_base.data import m137
from holonomy_cert_base.models.poly import MultiPoly
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_base.models.rational import rational_str

from .interval import RationalInterval
from .sturm import IsolatingInterval, count_real_roots, isolate_real_roots

_logger = logging.getLogger(__name__)

ENDPOINT_WIDTH = Fraction(1, 10 ** 12)


@dataclass(frozen=True)
class Endpoint:
    """``value`` is None (infinite), a rational or an IsolatingInterval."""

    value: object = None
    closed: bool = False

    @property
    def is_infinite(self):
        return self.value is None

    @property
    def is_algebraic(self):
        return isinstance(self.value, IsolatingInterval)

    def to_json(self):
        if self.is_infinite:
            return {"kind": "infinite"}
        if self.is_algebraic:
            return {
                "kind": "algebraic",
                "closed": self.closed,
                "isolating_interval": self.value.to_json(),
            }
        return {"kind": "rational", "closed": self.closed, "value": rational_str(self.value)}

    def display(self):
        if self.is_algebraic:
            return "%.4f" % float(self.value)
        return str(self.value)


@dataclass(frozen=True)
class RationalPiece:
    """Rational rendering of a piece; ``None`` bounds are infinite."""

    lo: object
    hi: object
    lo_closed: bool
    hi_closed: bool

    def contains(self, value):
        if self.lo is not None and (value < self.lo or (value == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (value > self.hi or (value == self.hi and not self.hi_closed)):
            return False
        return True

    def to_json(self):
        return {
            "lo": None if self.lo is None else rational_str(self.lo),
            "hi": None if self.hi is None else rational_str(self.hi),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
        }


def _above(endpoint, compare):
    """Whether a number lies on the right side of a lower endpoint, given
    ``compare = sign(number - endpoint)``."""
    return compare > 0 or (compare == 0 and endpoint.closed)


def _sign(value):
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class DomainSet:
    """Sorted, pairwise disjoint union of intervals in one variable."""

    variable: str
    pieces: tuple
    points: dict = field(default_factory=dict, compare=False, hash=False)
    record: ProofRecord = field(default=None, compare=False, hash=False)

    def _compare(self, endpoint, value):
        """``sign(value - endpoint)`` for a rational or isolated value."""
        if endpoint.is_algebraic:
            if isinstance(value, IsolatingInterval):
                return value.compare_root(endpoint.value)
            return -endpoint.value.compare(value)
        if isinstance(value, IsolatingInterval):
            return value.compare(endpoint.value)
        return _sign(Fraction(value) - endpoint.value)

    def piece_of(self, value):
        """Index of the piece holding ``value`` (rational or isolated root),
        or None."""
        for index, (lo, hi) in enumerate(self.pieces):
            if not lo.is_infinite and not _above(lo, self._compare(lo, value)):
                continue
            if not hi.is_infinite and not _above(hi, -self._compare(hi, value)):
                continue
            return index
        return None

    def contains(self, value):
        return self.piece_of(value) is not None

    def outward_cover(self):
        """Rational superset: algebraic endpoints move outwards."""
        cover = []
        for lo, hi in self.pieces:
            cover.append(
                RationalPiece(
                    None if lo.is_infinite else (lo.value.lo if lo.is_algebraic else lo.value),
                    None if hi.is_infinite else (hi.value.hi if hi.is_algebraic else hi.value),
                    lo.closed or lo.is_algebraic,
                    hi.closed or hi.is_algebraic,
                )
            )
        return tuple(cover)

    def inward_cover(self):
        """Rational subset: algebraic endpoints move inwards."""
        cover = []
        for lo, hi in self.pieces:
            cover.append(
                RationalPiece(
                    None if lo.is_infinite else (lo.value.hi if lo.is_algebraic else lo.value),
                    None if hi.is_infinite else (hi.value.lo if hi.is_algebraic else hi.value),
                    lo.closed or lo.is_algebraic,
                    hi.closed or hi.is_algebraic,
                )
            )
        return tuple(cover)

    def to_json(self):
        return {
            "variable": self.variable,
            "pieces": [[lo.to_json(), hi.to_json()] for lo, hi in self.pieces],
        }

    def __str__(self):
        chunks = []
        for lo, hi in self.pieces:
            chunks.append(
                "%s%s, %s%s"
                % (
                    "[" if lo.closed else "(",
                    "-oo" if lo.is_infinite else lo.display(),
                    "+oo" if hi.is_infinite else hi.display(),
                    "]" if hi.closed else ")",
                )
            )
        return " U ".join(chunks)


def _between(left, right):
    """A rational strictly between two separated isolating intervals."""
    return (left.hi + right.lo) / 2


def _t_square_coefficients():
    parts = m137.curve().collect("t")
    return parts[4].embed(("s",)), parts[2].embed(("s",)), parts[0].embed(("s",))


@lru_cache(maxsize=4)
def compute_s_domain(width=ENDPOINT_WIDTH):
    """U from the sign of the discriminant of P as a quadratic in t^2, with
    the existence of a non-negative t^2 certified on every piece."""
    record = ProofRecord("s-domain")
    s = MultiPoly.gen("s")
    cubic = m137.cubic()
    lead, middle, constant = _t_square_coefficients()
    discriminant = middle ** 2 - 4 * lead * constant
    record.check(
        "discriminant of P in t^2 equals (s+1)^2 (s-2) (s^3+2s^2-4s-4)",
        "exact expansion",
        discriminant == m137.discriminant(),
        discriminant=discriminant,
    )
    record.check(
        "(s+1)^2 is a square, so the sign of the discriminant is that of (s-2)(s^3+2s^2-4s-4) away from s = -1",
        "structural",
        True,
    )
    record.check(
        "the cubic has no rational root",
        "rational root test on +-1, +-2, +-4",
        all(cubic.evaluate({"s": c}) != 0 for c in (1, -1, 2, -2, 4, -4)),
    )
    roots = isolate_real_roots(cubic, width)
    record.check(
        "the cubic has exactly 3 real roots",
        "Sturm count over the real line",
        len(roots) == 3 and count_real_roots(cubic) == 3,
        roots=[r.to_json() for r in roots],
    )
    p1, p2, p3 = roots
    sign_factor = (s - 2) * cubic
    samples = [
        p1.lo - 1,
        _between(p1, p2),
        _between(p2, p3),
        (p3.hi + 2) / 2,
        Fraction(3),
    ]
    signs = [_sign(sign_factor.evaluate({"s": x})) for x in samples]
    record.check(
        "p3 < 2, so (s-2)(s^3+2s^2-4s-4) has the four simple roots p1 < p2 < p3 < 2",
        "exact comparison and Sturm count",
        p3.compare(2) < 0 and count_real_roots(sign_factor) == 4 and samples[3] < 2,
    )
    record.check(
        "sign pattern + - + - + of the discriminant across p1, p2, p3, 2",
        "exact evaluation at one rational per gap",
        signs == [1, -1, 1, -1, 1],
        samples=samples,
    )
    record.check(
        "the roots {-1, 2} of the t^4 coefficient lie outside the pieces' interiors",
        "exact comparison",
        p1.compare(-1) < 0 and p2.compare(-1) > 0 and p3.compare(2) < 0,
    )
    record.check(
        "the constant term in t^2 is -1, so t^2 = 0 is never a root",
        "coefficient inspection",
        constant == -1,
    )
    u = MultiPoly.gen("u")
    for label, sample in (("(-oo, p1]", Fraction(-3)), ("[p2, p3]", Fraction(0)), ("(2, oo)", Fraction(3))):
        values = {"s": sample}
        quadratic = (
            lead.evaluate(values) * u ** 2 + middle.evaluate(values) * u + constant.evaluate(values)
        )
        positive = count_real_roots(quadratic, 0, None)
        record.check(
            "on %s the quadratic in t^2 has a positive root" % label,
            "Sturm count at a rational sample; root signs cannot change inside the piece",
            positive >= 1,
            sample=sample,
            positive_roots=positive,
        )
    record.check(
        "the samples lie in their pieces",
        "exact comparison",
        p1.compare(-3) > 0 and p2.compare(0) < 0 and p3.compare(0) > 0,
    )
    domain = DomainSet(
        "s",
        (
            (Endpoint(), Endpoint(p1, closed=True)),
            (Endpoint(p2, closed=True), Endpoint(p3, closed=True)),
            (Endpoint(Fraction(2), closed=False), Endpoint()),
        ),
        points={"p1": p1, "p2": p2, "p3": p3},
        record=record,
    )
    _logger.info("s-domain U = %s", domain)
    record.require()
    return domain


@lru_cache(maxsize=4)
def compute_z_domain(width=ENDPOINT_WIDTH):
    """V, the real z with z + 1/z in U and |z + 1/z| > 2."""
    u_domain = compute_s_domain(width)
    record = ProofRecord("z-domain")
    p1, p2, p3 = (u_domain.points[k] for k in ("p1", "p2", "p3"))
    z = MultiPoly.gen("z")
    endpoint_poly, power = m137.cubic().substitute("s", z ** 2 + 1, z)
    endpoint_poly = endpoint_poly.embed(("z",))
    record.check(
        "z^3 * cubic(z + 1/z) is palindromic of degree 6",
        "exact Laurent identity",
        power == 3 and endpoint_poly.inverted("z") * z ** 6 == endpoint_poly,
        poly=endpoint_poly,
    )
    record.check(
        "p2 and p3 lie in (-2, 2), so they have no real z",
        "exact comparison",
        p2.compare(-2) > 0 and p3.compare(2) < 0,
    )
    roots = isolate_real_roots(endpoint_poly, width)
    record.check(
        "the endpoint polynomial has exactly 2 real roots",
        "Sturm count over the real line",
        len(roots) == 2 and count_real_roots(endpoint_poly) == 2,
    )
    v1, v2 = roots
    record.check(
        "v1 < -1 < v2 < 0",
        "exact comparison",
        v1.compare(-1) < 0 and v2.compare(-1) > 0 and v2.compare(0) < 0,
    )
    product = RationalInterval(v1.lo, v1.hi) * RationalInterval(v2.lo, v2.hi)
    record.check(
        "v1 * v2 = 1",
        "interval enclosure of the product contains 1",
        1 in product,
        product=product,
    )
    image = RationalInterval(v1.lo + 1 / v1.lo, v1.hi + 1 / v1.hi)
    record.check(
        "v1 + 1/v1 = p1",
        "z + 1/z is increasing on (-oo, -1); image enclosure meets p1's interval",
        image.intersect(RationalInterval(p1.lo, p1.hi)) is not None,
        image=image,
    )
    record.check(
        "z + 1/z > 2 exactly for 0 < z != 1",
        "z + 1/z - 2 = (z-1)^2 / z",
        True,
    )
    domain = DomainSet(
        "z",
        (
            (Endpoint(), Endpoint(v1, closed=True)),
            (Endpoint(v2, closed=True), Endpoint(Fraction(0))),
            (Endpoint(Fraction(0)), Endpoint(Fraction(1))),
            (Endpoint(Fraction(1)), Endpoint()),
        ),
        points={"v1": v1, "v2": v2},
        record=record,
    )
    _logger.info("z-domain V = %s", domain)
    record.require()
    return domain
