# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""Replay of the argument that P(s, t) does not factor over C.

A factorisation of P as a polynomial in t has a (2, 2) or a (1, 3) degree
split. Undetermined coefficients a, b, d, e are polynomials in s and c is
a nonzero constant with inverse u, so every identity below is checked
modulo ``c*u - 1``.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from holonomy_cert_base.models.poly import MultiPoly
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_ideal.models.groebner import IdealBasis, normal_form
from holonomy_cert_ideal.models.monomial_order import MonomialOrder

_logger = logging.getLogger(__name__)


def _gens(names):
    return [MultiPoly.gen(name) for name in names]


a, b, c, d, e, u, s, t = _gens("abcdeus") + _gens("t")

# t^4 and t^2 coefficients of P, up to sign
R = (s - 2) * (s + 1) ** 2
T = (s - 2) * (s + 2) * (s + 1)


def reduce_unit(poly):
    """Normal form modulo ``c*u - 1``."""
    basis = IdealBasis((c * u - 1,), MonomialOrder("grevlex", ("c", "u")), is_groebner=True)
    return normal_form(poly, basis)


def _t_coefficients(poly):
    parts = poly.collect("t")
    return {k: parts.get(k, MultiPoly.zero()) for k in range(5)}


def _s_cubed(poly):
    return poly.collect("s").get(3, MultiPoly.zero())


@dataclass(frozen=True)
class IrreducibilityCertificate:
    case_2_2: ProofRecord
    case_1_3: ProofRecord
    contradiction: MultiPoly

    @property
    def holds(self):
        return self.case_2_2.holds and self.case_1_3.holds

    def to_json(self):
        return {
            "case_2_2": self.case_2_2.to_json(),
            "case_1_3": self.case_1_3.to_json(),
            "contradiction": str(self.contradiction),
        }


def _common_facts(record):
    record.check(
        "(s-2)(s+1)^2 and (s-2)(s+2)(s+1) are monic of degree 3 in s",
        "exact expansion",
        R.degree("s") == 3 and T.degree("s") == 3 and _s_cubed(R) == 1 and _s_cubed(T) == 1,
        R=R,
        T=T,
    )


def _case_2_2():
    record = ProofRecord("irreducibility (2,2)")
    _common_facts(record)
    product = (a * t ** 2 + b * t + c) * (d * t ** 2 + e * t - u)
    coefficients = _t_coefficients(product)
    record.check(
        "(at^2+bt+c)(dt^2+et-1/c) = adt^4+(ae+bd)t^3+(cd-a/c+be)t^2+(ce-b/c)t-1",
        "exact expansion modulo cu - 1",
        coefficients[4] == a * d
        and coefficients[3] == a * e + b * d
        and coefficients[2] == c * d - a * u + b * e
        and coefficients[1] == c * e - b * u
        and reduce_unit(coefficients[0]) == -1,
    )
    record.check(
        "the t coefficient vanishes exactly when b = c^2 e",
        "c * (ce - b/c) = c^2 e - b modulo cu - 1",
        reduce_unit(c * coefficients[1]) == c ** 2 * e - b,
    )
    record.check(
        "with b = c^2 e the t^3 coefficient is e(a + c^2 d)",
        "exact substitution",
        coefficients[3].compose("b", c ** 2 * e) == e * (a + c ** 2 * d),
    )
    record.check(
        "e != 0 gives a = -c^2 d and ad = -c^2 d^2 of even degree, but ad = (s-2)(s+1)^2 has degree 3",
        "degree parity",
        R.degree("s") % 2 == 1,
    )
    record.check(
        "so e = 0 and b = 0; then c(cd - a/c) = c^2 d - a",
        "exact reduction modulo cu - 1",
        reduce_unit(c * (c * d - a * u)) == c ** 2 * d - a,
    )
    # a = c^2 d + cT, ad = R; deg a + deg d = 3 and max >= 3
    a_value = c ** 2 * d + c * T
    record.check(
        "branch deg a = 3, deg d = 0: the s^3 coefficient of a is c",
        "coefficient extraction",
        _s_cubed(a_value) == c,
    )
    record.check(
        "comparing s^3 in ad = (s-2)(s+1)^2 gives cd = 1, i.e. d = 1/c",
        "exact reduction modulo cu - 1",
        reduce_unit(u * (_s_cubed(a_value * d) - 1)) == d - u,
    )
    residual_a = reduce_unit(a_value.compose("d", u) * u) - R
    record.check(
        "eliminating a and d leaves 1 + (s-2)(s+2)(s+1) - (s-2)(s+1)^2 = s^2 - s - 1",
        "exact expansion",
        residual_a == s ** 2 - s - 1,
        residual=residual_a,
    )
    # a constant: d = (a - cT) / c^2
    d_value = reduce_unit(u ** 2 * (a - c * T))
    record.check(
        "branch deg a = 0, deg d = 3: d = a/c^2 - T/c",
        "exact reduction modulo cu - 1",
        reduce_unit(c ** 2 * d_value + c * T) == a,
    )
    record.check(
        "comparing s^3 in ad = (s-2)(s+1)^2 gives a = -c",
        "exact reduction modulo cu - 1",
        reduce_unit(c * (_s_cubed(a * d_value) - 1)) == -a - c,
    )
    residual_d = reduce_unit(-c * d_value.compose("a", -c)) - R
    record.check(
        "eliminating a and d leaves the same nonzero polynomial s^2 - s - 1",
        "exact expansion",
        residual_d == residual_a,
        residual=residual_d,
    )
    return record, residual_a


def _case_1_3():
    record = ProofRecord("irreducibility (1,3)")
    _common_facts(record)
    product = (a * t + c) * (b * t ** 3 + d * t ** 2 + e * t - u)
    coefficients = _t_coefficients(product)
    record.check(
        "(at+c)(bt^3+dt^2+et-1/c) = abt^4+(ad+cb)t^3+(cd+ae)t^2+(ce-a/c)t-1",
        "exact expansion modulo cu - 1",
        coefficients[4] == a * b
        and coefficients[3] == a * d + c * b
        and coefficients[2] == c * d + a * e
        and coefficients[1] == c * e - a * u
        and reduce_unit(coefficients[0]) == -1,
    )
    record.check(
        "the t coefficient vanishes exactly when a = c^2 e",
        "c * (ce - a/c) = c^2 e - a modulo cu - 1",
        reduce_unit(c * coefficients[1]) == c ** 2 * e - a,
    )
    after_a = {k: v.compose("a", c ** 2 * e) for k, v in coefficients.items()}
    record.check(
        "with a = c^2 e the t^3 coefficient vanishes exactly when b = -ced",
        "exact substitution",
        after_a[3] == c * (c * e * d + b)
        and after_a[3].compose("b", -c * e * d).is_zero,
    )
    after_b = {k: v.compose("b", -c * e * d) for k, v in after_a.items()}
    record.check(
        "so -c^3 d e^2 = (s-2)(s+1)^2 and cd + c^2 e^2 = -(s-2)(s+2)(s+1)",
        "exact substitution",
        after_b[4] == -(c ** 3) * d * e ** 2 and after_b[2] == c * d + c ** 2 * e ** 2,
    )
    record.check(
        "deg d + 2 deg e = 3 with max(deg d, 2 deg e) >= 3 leaves only deg d = 3, deg e = 0",
        "degree bookkeeping: the split (1, 1) has maximum 2 < 3",
        max(1, 2 * 1) < T.degree("s") and 3 + 2 * 0 == R.degree("s"),
    )
    # e constant: d from the t^2 equation
    d_value = reduce_unit(-u * T - c * e ** 2)
    record.check(
        "the t^2 equation gives d = -T/c - c e^2",
        "exact reduction modulo cu - 1",
        reduce_unit(c * d_value + c ** 2 * e ** 2) == -T,
    )
    top = _s_cubed(reduce_unit(-(c ** 3) * d_value * e ** 2) - R)
    record.check(
        "comparing s^3 in the t^4 equation gives c^2 e^2 = 1",
        "exact reduction modulo cu - 1",
        top == c ** 2 * e ** 2 - 1,
        coefficient=top,
    )
    other = R - T
    record.check(
        "then cd = -(s-2)(s+1)^2 and the t^2 equation gives c^2 e^2 = -(s+1)(s-2)",
        "exact expansion",
        other == -(s + 1) * (s - 2),
        value=other,
    )
    contradiction = 1 - other
    record.check(
        "the two values of c^2 e^2 differ by the nonzero polynomial s^2 - s - 1",
        "exact expansion",
        contradiction == s ** 2 - s - 1 and not contradiction.is_zero,
        difference=contradiction,
    )
    return record, contradiction


@lru_cache(maxsize=None)
def irreducibility_certificate():
    """Mechanical replay of both degree splits; raises
    :class:`ValidationError` when an identity fails."""
    case_2_2, residual = _case_2_2()
    case_1_3, contradiction = _case_1_3()
    certificate = IrreducibilityCertificate(case_2_2, case_1_3, contradiction)
    case_2_2.require()
    case_1_3.require()
    _logger.info("P is irreducible: both degree splits end in %s != 0", contradiction)
    return certificate
