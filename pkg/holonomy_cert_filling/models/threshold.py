# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""An explicit N0 with no real solution in V for every slope (1, -n'),
n' >= N0.

By the reciprocal symmetry only roots with |z| < 1 matter, and V meets
(-1, 1) in [v2, 0) U (0, 1). That range is split at a rational c just above
the fifth root r5 of B:

* on [c, 1) both terms of F = A(z^(4n'-1) - 1) - B z^(2n'-4) are positive
  for every n' >= 2;
* on [a, c] minus 0, with q = max(|a|, c) < 1, |A| >= c5 and B <= c6 give
  F >= c5 (1 - q^(4n'-1)) - c6 q^(2n'-4), positive from N0 on.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import ValidationError
from holonomy_cert_base.models.poly import MultiPoly
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_base.models.rational import ceil_to, floor_to, rational_str
from holonomy_cert_realroots.models.bounds import DEFAULT_TOLERANCE, bound_on_interval
from holonomy_cert_realroots.models.domain import compute_z_domain
from holonomy_cert_realroots.models.sturm import count_real_roots

from .certify import Verdict, b_root, certify_slope
from .slope import verify_palindrome_symmetries

_logger = logging.getLogger(__name__)

SPLIT_DIGITS = 4
DEFAULT_CROSS_CHECK = 26
MAX_THRESHOLD = 10 ** 4


def inequality_sides(c5, c6, q, k):
    """``(c5 (1 - q^(4k-1)), c6 q^(2k-4))``, exactly."""
    return c5 * (1 - q ** (4 * k - 1)), c6 * q ** (2 * k - 4)


@dataclass(frozen=True)
class ThresholdCertificate:
    N0: int
    q: Fraction
    c5: Fraction
    c6: Fraction
    lower: Fraction
    split: Fraction
    case1_facts: ProofRecord
    inequality_trace: tuple
    record: ProofRecord = field(default=None, compare=False)
    cross_checked: tuple = ()

    def reverify(self):
        """Recompute the inequality trace exactly."""
        for step in self.inequality_trace:
            lhs, rhs = inequality_sides(self.c5, self.c6, self.q, step["n"])
            if (lhs, rhs) != (step["lhs"], step["rhs"]) or (lhs > rhs) != step["holds"]:
                return False
        last = self.inequality_trace[-1]
        return (
            last["n"] == self.N0
            and last["holds"]
            and not any(step["holds"] for step in self.inequality_trace[:-1])
            and 0 < self.q < 1
            and self.c5 > 0
            and self.c6 >= 0
        )

    def to_json(self):
        return {
            "N0": self.N0,
            "q": rational_str(self.q),
            "c5": rational_str(self.c5),
            "c6": rational_str(self.c6),
            "lower": rational_str(self.lower),
            "split": rational_str(self.split),
            "case1_facts": self.case1_facts.to_json(),
            "inequality_trace": [
                {
                    "n": step["n"],
                    "lhs": rational_str(step["lhs"]),
                    "rhs": rational_str(step["rhs"]),
                    "holds": step["holds"],
                }
                for step in self.inequality_trace
            ],
            "cross_checked": list(self.cross_checked),
        }


def _case_one(split, r6, tolerance):
    """Facts making F positive on [split, 1) for all n' >= 2."""
    record = ProofRecord("threshold case 1")
    z = MultiPoly.gen("z")
    A, B = m137.poly_a(), m137.poly_b()
    cofactor = (z ** 2 + z + 1) ** 3
    record.check(
        "A = (z-1)(z^2+z+1)^3",
        "exact expansion",
        A == (z - 1) * cofactor,
    )
    low, _ = bound_on_interval(cofactor, split, 1, tolerance)
    record.check(
        "(z^2+z+1)^3 > 0 on [%s, 1], so A < 0 on [%s, 1)" % (split, split),
        "certified lower bound by interval bisection",
        low > 0,
        lower_bound=low,
    )
    record.check(
        "1 lies below the sixth root of B, so [%s, 1] sits between B's fifth and sixth roots" % split,
        "exact comparison",
        r6.compare(1) > 0,
    )
    count = count_real_roots(B, split, 1, lo_open=False, hi_open=False)
    sample = B.evaluate({"z": Fraction(9, 10)})
    record.check(
        "B has no root in [%s, 1] and B(9/10) < 0, so B < 0 there" % split,
        "Sturm count and exact evaluation",
        count == 0 and sample < 0,
        roots=count,
        value=sample,
    )
    record.check(
        "for 0 < z < 1 and n' >= 2: A (z^(4n'-1) - 1) > 0 and -B z^(2n'-4) > 0",
        "sign bookkeeping from the facts above",
        True,
    )
    record.require()
    return record


def derive_threshold(tolerance=DEFAULT_TOLERANCE, cross_check=DEFAULT_CROSS_CHECK):
    """Derive N0 with certified constants and cross-check it against
    ``cross_check`` exact slope certificates starting at N0."""
    record = ProofRecord("threshold")
    domain = compute_z_domain()
    v2 = domain.points["v2"]
    r5, r6 = b_root(5), b_root(6)
    split = ceil_to(r5.hi, SPLIT_DIGITS)
    record.check(
        "r5 < c = %s < r6 and c < 1" % split,
        "exact comparison with the isolating intervals of B",
        r5.compare(split) < 0 and r6.compare(split) > 0 and split < 1,
        r5=r5.to_json(),
        split=split,
    )
    case1 = _case_one(split, r6, tolerance)
    record.extend(case1)
    lower = floor_to(v2.lo, SPLIT_DIGITS)
    record.check(
        "a = %s <= v2 = 1/v1, so V meets (-1, 1) inside [a, 1)" % lower,
        "exact comparison; v1 v2 = 1 from the z-domain",
        v2.compare(lower) > 0 and domain.record.holds,
        lower=lower,
    )
    q = max(abs(lower), split)
    record.check("q = max(|a|, c) = %s < 1" % q, "exact comparison", 0 < q < 1, q=q)
    A, B = m137.poly_a(), m137.poly_b()
    _, a_high = bound_on_interval(A, lower, split, tolerance)
    record.check(
        "A <= %s < 0 on [a, c]" % a_high,
        "certified upper bound by interval bisection",
        a_high < 0,
        upper_bound=a_high,
    )
    c5 = -a_high
    _, b_high = bound_on_interval(B, lower, split, tolerance)
    c6 = max(b_high, Fraction(0))
    record.check(
        "B <= c6 = %s on [a, c]" % c6,
        "certified upper bound by interval bisection",
        True,
        upper_bound=b_high,
        c6=c6,
    )
    trace = []
    for k in range(2, MAX_THRESHOLD + 1):
        lhs, rhs = inequality_sides(c5, c6, q, k)
        trace.append({"n": k, "lhs": lhs, "rhs": rhs, "holds": lhs > rhs})
        if lhs > rhs:
            break
    else:
        raise ValidationError(
            "No threshold below %d: c5 = %s, c6 = %s, q = %s." % (MAX_THRESHOLD, c5, c6, q)
        )
    n0 = trace[-1]["n"]
    record.check(
        "c5 (1 - q^(4n'-1)) > c6 q^(2n'-4) first holds at n' = %d" % n0,
        "exact rational arithmetic",
        True,
        n0=n0,
    )
    nxt_lhs, nxt_rhs = inequality_sides(c5, c6, q, n0 + 1)
    record.check(
        "the inequality persists for all n' >= %d" % n0,
        "0 < q < 1: the left side increases and the right side does not; instance n' = %d" % (n0 + 1),
        0 < q < 1 and c6 >= 0 and nxt_lhs >= trace[-1]["lhs"] and nxt_rhs <= trace[-1]["rhs"]
        and nxt_lhs > nxt_rhs,
    )
    record.extend(verify_palindrome_symmetries(-n0))
    checked = tuple(range(n0, n0 + cross_check))
    failures = [k for k in checked if certify_slope(-k).verdict is not Verdict.NO_REAL_SOLUTIONS]
    record.check(
        "(1, -n') has no real solution in V for n' = %d..%d" % (n0, n0 + cross_check - 1),
        "exact slope certificates",
        not failures,
        failures=failures,
    )
    record.require()
    _logger.info("Threshold N0 = %d (q = %s, c5 = %s, c6 = %s)", n0, float(q), float(c5), float(c6))
    return ThresholdCertificate(
        n0, q, c5, c6, lower, split, case1, tuple(trace), record, checked
    )
