# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""Exact certificates for the real solutions of one filling equation."""

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, partial

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import DomainError, UserError, ValidationError
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_realroots.models.domain import compute_z_domain
from holonomy_cert_realroots.models.sturm import count_real_roots, isolate_real_roots

from .slope import Slope, filling_polynomial

_logger = logging.getLogger(__name__)

WITNESS_WIDTH = Fraction(1, 10 ** 6)


class Verdict(enum.Enum):
    NO_REAL_SOLUTIONS = "NO_REAL_SOLUTIONS"
    REAL_SOLUTION_FOUND = "REAL_SOLUTION_FOUND"

    def to_json(self):
        return self.value


@dataclass(frozen=True)
class SlopeCertificate:
    """``root_count_in_V`` is the Sturm count over the outward cover of V
    (for :func:`positive_slope_witness`, over the sign-change interval);
    every witness lies in V exactly."""

    n: int
    domain: object
    root_count_in_V: int
    witnesses: tuple
    verdict: Verdict
    record: ProofRecord = field(default=None, compare=False)
    sign_change: tuple = None

    @property
    def witness_interval(self):
        if not self.witnesses:
            return None
        return self.witnesses[0].lo, self.witnesses[0].hi

    def to_json(self):
        data = {
            "n": self.n,
            "domain": self.domain.to_json(),
            "root_count_in_V": self.root_count_in_V,
            "witnesses": [w.to_json() for w in self.witnesses],
            "verdict": self.verdict.to_json(),
        }
        if self.sign_change is not None:
            data["sign_change"] = ["%d/%d" % (v.numerator, v.denominator) for v in self.sign_change]
        return data


def _count_in_piece(poly, piece):
    return count_real_roots(
        poly, piece.lo, piece.hi, lo_open=not piece.lo_closed, hi_open=not piece.hi_closed
    )


def _root_in_piece(root, piece):
    if piece.lo is not None:
        side = root.compare(piece.lo)
        if side < 0 or (side == 0 and not piece.lo_closed):
            return False
    if piece.hi is not None:
        side = root.compare(piece.hi)
        if side > 0 or (side == 0 and not piece.hi_closed):
            return False
    return True


def _record_basics(record, filling):
    expected = 4 if filling.n < 0 else -4
    record.check(
        "the filling polynomial at z = 1 equals %d, so 1 is never a root" % expected,
        "exact evaluation; A(1) = 0 and B(1) = -4",
        filling.value_at_one() == expected and m137.poly_b().evaluate({"z": 1}) == -4,
    )
    record.check(
        "the filling polynomial has a nonzero constant term, so 0 is never a root",
        "coefficient inspection",
        filling.poly.constant_term() != 0,
        clearing_shift=filling.clearing_shift,
    )


def _record_reciprocal_pairs(record, witnesses):
    inside = sum(1 for w in witnesses if w.compare(-1) > 0 and w.compare(1) < 0)
    record.check(
        "the roots in V pair up under z -> 1/z",
        "exact comparison with -1 and 1",
        2 * inside == len(witnesses),
        inside_unit_interval=inside,
        total=len(witnesses),
    )


@lru_cache(maxsize=512)
def certify_slope(n, width=WITNESS_WIDTH):
    """Sturm count of the roots of the filling polynomial in V.

    The count runs over the outward rational cover of V, so a zero count is
    a proof; when it is positive every real root is isolated and compared
    with the endpoints of V exactly.
    """
    slope = Slope(n)
    domain = compute_z_domain()
    filling = filling_polynomial(n)
    record = ProofRecord("slope %s" % slope)
    _record_basics(record, filling)
    cover = domain.outward_cover()
    counts = [_count_in_piece(filling.poly, piece) for piece in cover]
    total = sum(counts)
    record.check(
        "Sturm counts over the outward cover of V",
        "Sturm chain sign variations at the rational cover endpoints",
        True,
        counts=counts,
        pieces=[piece.to_json() for piece in cover],
    )
    witnesses = ()
    in_domain = 0
    if total:
        roots = isolate_real_roots(filling.poly, width)
        in_cover = [r for r in roots if any(_root_in_piece(r, piece) for piece in cover)]
        if len(in_cover) != total:
            raise ValidationError(
                "Slope %s: Sturm counts %d roots in the outward cover of V, isolation finds %d."
                % (slope, total, len(in_cover))
            )
        witnesses = tuple(r for r in in_cover if domain.contains(r))
        in_domain = len(witnesses)
        if in_domain != total:
            _logger.info(
                "Slope %s: %d roots in the outward cover, %d in V itself",
                slope,
                total,
                in_domain,
            )
        record.check(
            "%d of the %d real roots in the outward cover lie in V" % (in_domain, total),
            "isolation to width %s and exact comparison with the endpoints of V" % width,
            True,
            witnesses=[w.to_json() for w in witnesses],
        )
        _record_reciprocal_pairs(record, witnesses)
    verdict = Verdict.REAL_SOLUTION_FOUND if in_domain else Verdict.NO_REAL_SOLUTIONS
    record.require()
    _logger.debug("Slope %s: %s", slope, verdict.value)
    return SlopeCertificate(n, domain, total, witnesses, verdict, record)


def scan_slopes(start, stop, executor=None, width=WITNESS_WIDTH):
    """One certificate per nonzero n in ``[start, stop]``, ordered by n.

    ``executor`` (anything with ``map``) distributes the slopes; the
    certificates do not depend on the order they finish in.
    """
    if start > stop:
        raise UserError("Empty slope range: %d > %d." % (start, stop))
    slopes = [n for n in range(start, stop + 1) if n != 0]
    if executor is None:
        certificates = [certify_slope(n, width) for n in slopes]
    else:
        certificates = list(executor.map(partial(certify_slope, width=width), slopes))
    certificates.sort(key=lambda c: c.n)
    found = sum(1 for c in certificates if c.verdict is Verdict.REAL_SOLUTION_FOUND)
    _logger.info(
        "Scanned %d slopes in [%d, %d]: %d with real solutions",
        len(certificates),
        start,
        stop,
        found,
    )
    return certificates


def b_root(index, width=WITNESS_WIDTH):
    """``index``-th real root of B (1-based, increasing)."""
    roots = isolate_real_roots(m137.poly_b(), width)
    if len(roots) != 6:
        raise ValidationError("B should have six real roots, found %d." % len(roots))
    return roots[index - 1]


def positive_slope_witness(n, width=WITNESS_WIDTH):
    """A certified root of G in (r5, 1), r5 the fifth root of B.

    ``G(1) = -4`` while both terms of G are positive just below r5, where
    A < 0 and B > 0.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError("Positive-slope witnesses need n >= 1, got %r." % (n,))
    domain = compute_z_domain()
    filling = filling_polynomial(n)
    record = ProofRecord("positive witness (1, %d)" % n)
    g_one = filling.laurent_form.evaluate({"z": 1})
    record.check("G(1) = -4", "exact evaluation", g_one == -4, value=g_one)
    r5 = b_root(5, width)
    left = r5.lo
    value_left = filling.poly.evaluate({"z": left})
    if left > 0 and value_left > 0:
        record.check(
            "G changes sign on (%s, 1)" % left,
            "exact evaluation at the left end of B's fifth isolating interval",
            True,
            left=left,
            value=value_left,
        )
        lo, hi = left, Fraction(1)
    else:
        _logger.warning(
            "No sign change certified from z = %s for n = %d; counting roots on (0, 1).",
            left,
            n,
        )
        lo, hi = Fraction(0), Fraction(1)
    count = count_real_roots(filling.poly, lo, hi)
    record.check(
        "the filling polynomial has a root in (%s, %s)" % (lo, hi),
        "Sturm count",
        count >= 1,
        count=count,
    )
    record.require()
    witness = isolate_real_roots(filling.poly, width, lo, hi)[0]
    record.check(
        "the witness lies in V",
        "exact comparison with the pieces of V",
        domain.contains(witness),
        witness=witness.to_json(),
    )
    record.require()
    _logger.info("Slope (1, %d): witness root near %.6f", n, float(witness))
    return SlopeCertificate(
        n,
        domain,
        count,
        (witness,),
        Verdict.REAL_SOLUTION_FOUND,
        record,
        sign_change=(lo, hi),
    )
