# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).
"""The character curve P(s, t) = 0 of the irreducible component.

``s`` is the trace of the longitude ``l``, ``t`` the trace of ``b`` and
``w`` the trace of ``l*b``, which the curve determines rationally.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import DomainError, ResourceCapError, UserError
from holonomy_cert_base.models.poly import MultiPoly
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_base.models.rational import rational_str
from holonomy_cert_ideal.models.groebner import (
    GroebnerCaps,
    IdealBasis,
    eliminate,
    groebner_basis,
    inverse_variables,
    normal_form,
    saturate_units,
)
from holonomy_cert_ideal.models.monomial_order import MonomialOrder
from holonomy_cert_realroots.models.domain import ENDPOINT_WIDTH, compute_s_domain
from holonomy_cert_realroots.models.interval import RationalInterval
from holonomy_cert_realroots.models.sturm import IsolatingInterval, isolate_real_roots

from .irreducibility import irreducibility_certificate
from .presentation import relator_entry_equations
from .trace_algebra import kappa, relator_trace_equations

_logger = logging.getLogger(__name__)

EXCLUDED_S = (Fraction(-1), Fraction(2))
CURVE_ORDER = MonomialOrder("grevlex", ("t", "s"))
MAX_RADICAL_POWER = 4

# six real components: a piece of U and the sign of t
COMPONENTS = tuple((piece, sign) for piece in range(3) for sign in (1, -1))


@dataclass(frozen=True)
class CharacterCurve:
    poly: MultiPoly
    excluded_s: tuple = EXCLUDED_S
    method: str = "elimination"
    record: ProofRecord = field(default=None, compare=False)

    def __call__(self, s, t):
        return self.poly.evaluate({"s": s, "t": t})

    def to_json(self):
        return {
            "poly": str(self.poly),
            "excluded_s": [rational_str(s) for s in self.excluded_s],
            "method": self.method,
        }


def _is_exact(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def w_coordinate(s, t):
    """``w = t - 1/(t(s+1))``; exact for rationals."""
    if t == 0:
        raise DomainError("w is undefined at t = 0.")
    if s == -1:
        raise DomainError("w is undefined at s = -1.")
    if _is_exact(s) and _is_exact(t):
        s, t = Fraction(s), Fraction(t)
    return t - 1 / (t * (s + 1))


def w_substitution():
    """``(numerator, denominator)`` of w as a rational function of (s, t)."""
    s, t = MultiPoly.gen("s"), MultiPoly.gen("t")
    return t ** 2 * (s + 1) - 1, t * (s + 1)


def substitute_w(poly):
    """``poly`` with w replaced by the w-relation, cleared by ``(t(s+1))^k``."""
    numerator, denominator = w_substitution()
    result, _ = poly.substitute("w", numerator, denominator)
    return result


def in_curve_ideal(poly, curve_poly=None):
    """Membership in the principal ideal of the curve (a one-element Groebner
    basis)."""
    basis = IdealBasis((curve_poly or m137.curve(),), CURVE_ORDER, is_groebner=True)
    return normal_form(poly, basis).is_zero


def same_up_to_unit(a, b):
    """Whether ``a`` is a nonzero rational multiple of ``b``."""
    a, b = a.primitive()[1], b.primitive()[1]
    return a == b or a == -b


def _radical_power(poly, basis, max_power=MAX_RADICAL_POWER):
    """Least ``k <= max_power`` with ``poly**k`` reducing to zero, or None."""
    power = poly
    for k in range(1, max_power + 1):
        if normal_form(power, basis).is_zero:
            return k
        power = power * poly
    return None


def record_curve_facts(record, poly):
    """Structural facts about P and the generators of its ideal."""
    s, t = MultiPoly.gen("s"), MultiPoly.gen("t")
    g1, g2, g3, g4 = m137.generators()
    record.check(
        "generator (1) - generator (3) = t(s+1)(w-t) + 1",
        "exact expansion",
        g1 - g3 == m137.w_relation(),
    )
    for index, generator in enumerate((g1, g2, g3, g4), start=1):
        record.check(
            "generator (%d) vanishes on the curve once w is eliminated" % index,
            "substitution of the w-relation and division by P",
            in_curve_ideal(substitute_w(generator), poly),
        )
    record.check(
        "P(-1, t) = -1 and P(2, t) = -1",
        "exact specialisation",
        poly.specialize({"s": -1}) == -1 and poly.specialize({"s": 2}) == -1,
    )
    record.check(
        "P is even in t",
        "exact substitution t -> -t",
        poly.compose("t", -t) == poly,
    )
    record.check(
        "P(0, t) = -2t^4 + 4t^2 - 1",
        "exact specialisation",
        poly.specialize({"s": 0}) == -2 * t ** 4 + 4 * t ** 2 - 1,
    )
    record.check(
        "the expanded and factored forms of P agree",
        "exact expansion",
        MultiPoly.parse(m137.CURVE_EXPANDED) == poly,
    )
    return record


def _trace_system():
    return saturate_units(relator_trace_equations(), [kappa()])


def _trace_elimination(caps):
    gens = _trace_system()
    inverses = inverse_variables(gens)
    order = MonomialOrder("lex", inverses + ("w", "t", "s"))
    return eliminate(gens, set(inverses) | {"w"}, order=order, caps=caps), order


def _entry_system():
    z, x, y = (MultiPoly.gen(v) for v in ("z", "x", "y"))
    s, t, w = (MultiPoly.gen(v) for v in ("s", "t", "w"))
    relations = [
        s * z - z ** 2 - 1,
        t * x - x ** 2 - 1,
        w * z * x - z ** 2 * x ** 2 - 1 - y * z * x,
    ]
    return saturate_units(
        list(relator_entry_equations()) + relations, ["z", "x", "t", s + 1, kappa()]
    )


def _entry_elimination(caps):
    gens = _entry_system()
    inverses = inverse_variables(gens)
    drop = set(inverses) | {"z", "x", "y", "w"}
    order = MonomialOrder("lex", inverses + ("z", "x", "y", "w", "t", "s"))
    return eliminate(gens, drop, order=order, caps=caps), order


def _check_elimination(record, eliminated, poly):
    record.check(
        "the elimination ideal is nonzero",
        "lex Groebner basis",
        bool(eliminated),
        generators=list(eliminated),
    )
    record.check(
        "every generator of the elimination ideal lies in <P>",
        "division by P",
        all(in_curve_ideal(g, poly) for g in eliminated),
    )
    basis = IdealBasis(tuple(eliminated), MonomialOrder("lex", ("t", "s")), is_groebner=True)
    power = _radical_power(poly, basis) if eliminated else None
    record.check(
        "a power of P lies in the elimination ideal",
        "normal form of P^k modulo the eliminated basis",
        power is not None,
        power=power,
    )


def _membership_fallback(record, poly, caps):
    equations = relator_trace_equations()
    record.check(
        "every relator trace equation vanishes on the curve once w is eliminated",
        "substitution of the w-relation and division by P",
        all(in_curve_ideal(substitute_w(e), poly) for e in equations),
    )
    record.check(
        "the reducibility locus kappa does not contain the curve",
        "substitution of the w-relation and division by P",
        not in_curve_ideal(substitute_w(kappa()), poly),
    )
    gens = _trace_system()
    order = MonomialOrder("grevlex", inverse_variables(gens) + ("w", "t", "s"))
    basis = groebner_basis(gens, order, caps=caps)
    power = _radical_power(poly, basis)
    record.check(
        "a power of P lies in the relator ideal saturated at kappa",
        "grevlex Groebner basis and normal form of P^k",
        power is not None,
        power=power,
    )
    certificate = irreducibility_certificate()
    record.check(
        "P is irreducible over C",
        "replayed undetermined-coefficient certificate",
        certificate.holds,
    )


def derive_character_curve(caps=None, full_elimination=False, fallback_caps=None):
    """Derive P from the relator and certify it.

    The default route eliminates w from the relator trace equations
    saturated at kappa; ``full_elimination`` starts from the matrix entry
    equations in (z, x, y) instead. When the elimination exceeds ``caps``
    the curve is certified by ideal membership in both directions.
    """
    poly = m137.curve()
    record = record_curve_facts(ProofRecord("character-curve"), poly)
    try:
        if full_elimination:
            eliminated, order = _entry_elimination(caps)
        else:
            eliminated, order = _trace_elimination(caps)
        _logger.info("Eliminated under %s: %d generators", order, len(eliminated))
        _check_elimination(record, eliminated, poly)
        method = "elimination"
    except ResourceCapError as err:
        _logger.warning(
            "Curve elimination stopped (%s); verifying by ideal membership instead.",
            err,
        )
        _membership_fallback(record, poly, fallback_caps or GroebnerCaps())
        method = "membership"
    record.require()
    _logger.info("Character curve certified by %s: %s = 0", method, poly)
    return CharacterCurve(poly, method=method, record=record)


def verify_generators(caps=None):
    """Facts tying the published generators (1)-(4) to P and the relator."""
    record = ProofRecord("generators")
    generators = m137.generators()
    poly = m137.curve()
    order = MonomialOrder("grevlex", ("w", "t", "s"))
    basis = groebner_basis(generators, order, caps=caps)
    record.check(
        "P lies in <(1)-(4)>",
        "grevlex Groebner basis and normal form",
        normal_form(poly, basis).is_zero,
    )
    record.check(
        "the relator trace equations lie in <(1)-(4)>",
        "grevlex Groebner basis and normal form",
        all(normal_form(e, basis).is_zero for e in relator_trace_equations()),
    )
    eliminated = eliminate(generators, {"w"}, MonomialOrder("lex", ("w", "t", "s")), caps)
    record.check(
        "the elimination of w from <(1)-(4)> is <P>",
        "lex Groebner basis",
        len(eliminated) == 1 and same_up_to_unit(eliminated[0], poly),
        generators=eliminated,
    )
    return record


# points on the curve


def _box(value, width):
    if isinstance(value, IsolatingInterval):
        refined = value.refine(width)
        return RationalInterval(refined.lo, refined.hi)
    return RationalInterval.point(Fraction(value))


@dataclass(frozen=True)
class CharacterPoint:
    """A real point of the curve; ``s`` and ``t`` are rationals or isolated
    algebraic numbers."""

    s: object
    t: object

    def numeric(self, width=Fraction(1, 10 ** 16)):
        s, t = (
            float(v.refine(width)) if isinstance(v, IsolatingInterval) else float(v)
            for v in (self.s, self.t)
        )
        return s, t, float(w_coordinate(s, t))

    def enclosure(self, width=ENDPOINT_WIDTH):
        """Interval enclosure of P over the boxes of s and t."""
        s_box, t_box = _box(self.s, width), _box(self.t, width)
        total = RationalInterval.point(0)
        for exponents, coeff in m137.curve().terms.items():
            i, j = exponents
            total = total + (s_box ** i) * (t_box ** j) * coeff
        return total

    def is_on_curve(self, width=ENDPOINT_WIDTH):
        curve = m137.curve()
        if _is_exact(self.s):
            section = curve.specialize({"s": self.s})
            if _is_exact(self.t):
                return section.evaluate({"t": self.t}) == 0
            if same_up_to_unit(section, self.t.poly):
                return True
        return 0 in self.enclosure(width)

    def to_json(self):
        def value(v):
            return v.to_json() if isinstance(v, IsolatingInterval) else rational_str(v)

        s, t, w = self.numeric()
        return {"s": value(self.s), "t": value(self.t), "approx": [s, t, w]}


def section_roots(s, sign=None, width=ENDPOINT_WIDTH):
    """Isolated roots t of P(s, t) for rational ``s``, optionally of one
    sign."""
    if Fraction(s) in EXCLUDED_S:
        raise DomainError("P(%s, t) is constant; there is no point above it." % s)
    section = m137.curve().specialize({"s": Fraction(s)})
    roots = isolate_real_roots(section, width)
    if sign is not None:
        roots = [r for r in roots if r.compare(0) == sign]
    return roots


def _window(piece, window):
    domain = compute_s_domain()
    inner = domain.inward_cover()[piece]
    lo = inner.lo if inner.lo is not None else inner.hi - 3
    hi = inner.hi if inner.hi is not None else inner.lo + 3
    if window is not None:
        lo, hi = max(lo, Fraction(window[0])), min(hi, Fraction(window[1]))
    if lo >= hi:
        raise UserError("The sampling window misses piece %d of U." % piece)
    return lo, hi


def sample_character_points(component, count, seed=0, window=None):
    """``count`` on-curve points on one of the six real components.

    ``component`` indexes :data:`COMPONENTS` (piece of U, sign of t);
    ``window`` optionally restricts s.
    """
    if not 0 <= component < len(COMPONENTS):
        raise UserError(
            "Component must be between 0 and %d, got %r." % (len(COMPONENTS) - 1, component)
        )
    piece, sign = COMPONENTS[component]
    lo, hi = _window(piece, window)
    domain = compute_s_domain()
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        s = Fraction(float(rng.uniform(float(lo), float(hi)))).limit_denominator(10 ** 6)
        if not lo < s < hi or domain.piece_of(s) != piece or s in EXCLUDED_S:
            continue
        roots = section_roots(s, sign)
        if not roots:
            continue
        t = roots[int(rng.integers(len(roots)))]
        points.append(CharacterPoint(s, t))
    _logger.debug("Sampled %d points on component %d", count, component)
    return points


def boundary_points(width=ENDPOINT_WIDTH):
    """The six points above the roots p1, p2, p3 of the cubic, where the two
    values of t^2 meet at ``t^2 = (s+2) / (2(s+1))``."""
    domain = compute_s_domain(width)
    t = MultiPoly.gen("t")
    sextic, _ = m137.cubic().substitute("s", 2 - 2 * t ** 2, 2 * t ** 2 - 1)
    sextic = sextic.embed(("t",))
    points = []
    roots = [domain.points[k] for k in ("p1", "p2", "p3")]
    for t_root in isolate_real_roots(sextic, width):
        t_value = float(t_root)
        s_value = (2 - 2 * t_value ** 2) / (2 * t_value ** 2 - 1)
        p = min(roots, key=lambda r: abs(float(r) - s_value))
        points.append(CharacterPoint(p, t_root))
    return points
