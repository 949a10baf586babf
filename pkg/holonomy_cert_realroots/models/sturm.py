# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from holonomy_cert_base.exceptions import DomainError
from holonomy_cert_base.models.rational import rational_str

from . import dense as dup

_logger = logging.getLogger(__name__)

# split points tried, in order, when the midpoint is a root
_SPLITS = tuple(
    Fraction(k, d) for d in range(2, 9) for k in range(1, d) if Fraction(k, d).denominator == d
)


def _chain(p):
    """Signed pseudo-remainder sequence of ``p``; every element is a
    positive multiple of the corresponding rational Sturm element."""
    chain = [p, dup.primitive(dup.derivative(p))] if len(p) > 1 else [p]
    while len(chain) > 1 and chain[-1]:
        a, b = chain[-2], chain[-1]
        r = dup.pseudo_remainder(a, b)
        if not r:
            break
        delta = dup.degree(a) - dup.degree(b) + 1
        if b[0] > 0 or delta % 2 == 0:
            r = tuple(-c for c in r)
        chain.append(dup.primitive(r))
    return tuple(c for c in chain if c)


@lru_cache(maxsize=512)
def _squarefree_chain(p):
    return _chain(dup.squarefree(p))


def _variations(chain, point):
    if point is None:
        return 0
    if isinstance(point, str):
        direction = 1 if point == "+oo" else -1
        return dup.sign_variations([dup.sign_at_infinity(q, direction) for q in chain])
    return dup.sign_variations([dup.homogeneous_value(q, point) for q in chain])


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence ``(p, p', -rem, ...)`` of a univariate polynomial.

    ``polys`` keeps the first two elements exactly as given; later elements
    are primitive integer polynomials with the sign of the rational Sturm
    element.
    """

    polys: tuple
    variable: str
    _dense: tuple = field(repr=False, compare=False, default=())

    def variations(self, point):
        """Sign variations at a rational, ``"-oo"`` or ``"+oo"``."""
        return _variations(self._dense, point)

    def count(self, lo, hi):
        """Distinct roots in ``(lo, hi]`` for a square-free first element."""
        return self.variations(lo) - self.variations(hi)

    def __len__(self):
        return len(self.polys)


def sturm_chain(poly, variable=None):
    """Sturm chain of a nonzero univariate :class:`MultiPoly`."""
    if poly.is_zero:
        raise DomainError("The zero polynomial has no Sturm chain.")
    variable = variable or (poly.used_variables() or poly.variables or ("z",))[0]
    p = dup.from_poly(poly, variable)
    chain = _chain(p)
    polys = [poly]
    if len(chain) > 1:
        polys.append(poly.derivative(variable))
        polys.extend(dup.to_poly(c, variable) for c in chain[2:])
    _logger.debug("Sturm chain of degree %d has %d elements", dup.degree(p), len(chain))
    return SturmChain(tuple(polys), variable, chain)


def _as_endpoint(value, default):
    if value is None:
        return default
    return Fraction(value)


def _count_dense(p, lo=None, hi=None, lo_open=True, hi_open=True):
    if not p or dup.degree(p) < 1:
        return 0
    chain = _squarefree_chain(p)
    lo_point = _as_endpoint(lo, "-oo")
    hi_point = _as_endpoint(hi, "+oo")
    if not isinstance(lo_point, str) and not isinstance(hi_point, str):
        if lo_point > hi_point:
            return 0
        if lo_point == hi_point:
            closed = not (lo_open or hi_open)
            return int(closed and dup.sign_at(p, lo_point) == 0)
    count = _variations(chain, lo_point) - _variations(chain, hi_point)
    if not isinstance(hi_point, str) and hi_open and dup.sign_at(p, hi_point) == 0:
        count -= 1
    if not isinstance(lo_point, str) and not lo_open and dup.sign_at(p, lo_point) == 0:
        count += 1
    return count


def count_real_roots(poly, lo=None, hi=None, lo_open=True, hi_open=True):
    """Exact number of distinct real roots between ``lo`` and ``hi``.

    ``None`` stands for an infinite endpoint. Endpoints may be roots; the
    open/closed flags decide whether they count.
    """
    return _count_dense(dup.from_poly(poly), lo, hi, lo_open, hi_open)


@dataclass(frozen=True)
class IsolatingInterval:
    """Open interval ``(lo, hi)`` holding exactly one real root of ``poly``.

    Neither endpoint is a root, so the square-free part changes sign across
    the interval.
    """

    poly: object
    lo: Fraction
    hi: Fraction
    _dense: tuple = field(repr=False, compare=False, default=())

    @classmethod
    def _make(cls, poly, dense, lo, hi):
        return cls(poly, Fraction(lo), Fraction(hi), dense)

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)

    def _sign(self, point):
        return dup.sign_at(self._dense, point)

    def bisect(self):
        """One bisection step; an exact rational root collapses to a
        narrow interval around it."""
        mid = self.midpoint
        sign_mid = self._sign(mid)
        if sign_mid == 0:
            quarter = self.width / 4
            return self._make(self.poly, self._dense, mid - quarter, mid + quarter)
        if sign_mid != self._sign(self.lo):
            return self._make(self.poly, self._dense, self.lo, mid)
        return self._make(self.poly, self._dense, mid, self.hi)

    def refine(self, width):
        interval = self
        width = Fraction(width)
        while interval.width > width:
            interval = interval.bisect()
        return interval

    def contains(self, value):
        return self.lo < value < self.hi

    def compare(self, value):
        """Sign of ``root - value``, decided exactly."""
        value = Fraction(value)
        if value <= self.lo:
            return 1
        if value >= self.hi:
            return -1
        sign_value = self._sign(value)
        if sign_value == 0:
            return 0
        return -1 if sign_value != self._sign(self.lo) else 1

    def compare_root(self, other):
        """Sign of ``self.root - other.root``."""
        a, b = self, other
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if lo < hi:
            common = dup.gcd(a._dense, b._dense)
            if dup.degree(common) >= 1 and _count_dense(common, lo, hi) > 0:
                return 0
        while True:
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            a, b = a.bisect(), b.bisect()

    def to_json(self):
        return {
            "poly": str(self.poly),
            "lo": rational_str(self.lo),
            "hi": rational_str(self.hi),
        }

    def __str__(self):
        return "root of %s in (%s, %s)" % (self.poly, self.lo, self.hi)


def _isolate_dense(p, lo, hi):
    """Open intervals with one root each; ``lo``/``hi`` are not roots."""
    pending = [(lo, hi, _count_dense(p, lo, hi))]
    found = []
    while pending:
        a, b, count = pending.pop()
        if count == 0:
            continue
        if count == 1:
            found.append((a, b))
            continue
        for fraction in _SPLITS:
            cut = a + (b - a) * fraction
            if dup.sign_at(p, cut) != 0:
                break
        left = _count_dense(p, a, cut)
        pending.append((cut, b, count - left))
        pending.append((a, cut, left))
    return sorted(found)


def isolate_real_roots(poly, width=Fraction(1, 10 ** 4), lo=None, hi=None):
    """One :class:`IsolatingInterval` per distinct real root, sorted.

    ``lo``/``hi`` restrict the search to the open interval between them; a
    finite bound must not be a root.
    """
    if poly.is_zero:
        raise DomainError("The zero polynomial has no isolated roots.")
    p = dup.squarefree(dup.from_poly(poly))
    if dup.degree(p) < 1:
        return []
    bound = dup.cauchy_bound(p)
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    if dup.sign_at(p, lo) == 0 or dup.sign_at(p, hi) == 0:
        raise DomainError("Isolation bounds must not be roots.")
    intervals = [
        IsolatingInterval._make(poly, p, a, b).refine(width)
        for a, b in _isolate_dense(p, lo, hi)
    ]
    _logger.debug("Isolated %d real roots of a degree %d polynomial", len(intervals), dup.degree(p))
    return intervals


def descartes_bound(poly, lo, hi):
    """Descartes rule-of-signs bound on the roots in ``(lo, hi)``.

    Maps ``(lo, hi)`` onto ``(0, oo)`` by ``x -> (lo + hi*x) / (1 + x)`` and
    counts coefficient sign variations; the bound has the parity of the
    true count.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    p = dup.from_poly(poly)
    d = dup.degree(p)
    if d < 1:
        return 0
    # coefficients of sum c_i (lo + hi x)^i (1 + x)^(d - i), lowest first
    total = [Fraction(0)] * (d + 1)
    for i, coeff in enumerate(reversed(p)):
        term = [Fraction(coeff)]
        for _ in range(i):
            term = _mul_linear(term, lo, hi)
        for _ in range(d - i):
            term = _mul_linear(term, 1, 1)
        for k, c in enumerate(term):
            total[k] += c
    return dup.sign_variations(total)


def _mul_linear(coefficients, constant, slope):
    result = [Fraction(0)] * (len(coefficients) + 1)
    for k, c in enumerate(coefficients):
        result[k] += c * constant
        result[k + 1] += c * slope
    return result
