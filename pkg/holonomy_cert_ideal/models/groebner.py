# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from holonomy_cert_base.exceptions import ResourceCapError, UserError
from holonomy_cert_base.models.poly import MultiPoly, merge_variables
from holonomy_cert_base.models.text_format import format_basis

from .monomial_order import MonomialOrder

_logger = logging.getLogger(__name__)

try:
    from sympy import QQ
    from sympy.polys.densebasic import dmp_to_dict
    from sympy.polys.euclidtools import dmp_resultant
except ImportError:  # pragma: no cover
    _logger.warning(
        "sympy library not found, please install it "
        "from https://pypi.org/project/sympy/"
    )

INVERSE_PREFIX = "_inv"


@dataclass(frozen=True)
class GroebnerCaps:
    """Limits on one Buchberger run; exceeding one raises ResourceCapError."""

    max_pairs: int = 2000
    max_coefficient_bits: int = 65536

    def __post_init__(self):
        for name in ("max_pairs", "max_coefficient_bits"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise UserError(
                    "Groebner cap %s must be a positive integer, got %r."
                    % (name, value)
                )


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple
    order: MonomialOrder
    is_groebner: bool = False
    stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "generators",
            tuple(g.embed(self.order.variables) for g in self.generators),
        )

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def is_unit(self):
        return any(g.is_constant and g for g in self.generators)

    def to_text(self):
        return format_basis(self.generators)


# conversion to and from sympy ring elements


def _to_ring(poly, R, variables):
    terms = {
        exponents: QQ(coeff.numerator, coeff.denominator)
        for exponents, coeff in poly.embed(variables).terms.items()
    }
    return R.from_dict(terms) if terms else R.zero


def _from_ring(element, variables):
    terms = {
        monom: Fraction(int(coeff.numerator), int(coeff.denominator))
        for monom, coeff in element.terms()
    }
    return MultiPoly(terms=terms, variables=variables)


def _coefficient_bits(element):
    return max(
        (
            max(int(c.numerator).bit_length(), int(c.denominator).bit_length())
            for c in element.coeffs()
        ),
        default=0,
    )


def _context(polys, order):
    used = merge_variables(*(p.used_variables() for p in polys))
    missing = [v for v in used if v not in order.variables]
    return order.extended(missing) if missing else order


# Buchberger steps on sympy ring elements


def _spoly(f, g, lmf, lmg):
    R = f.ring
    lcm = R.monomial_lcm(lmf, lmg)
    s1 = f.mul_monom(R.monomial_div(lcm, lmf))
    s2 = g.mul_monom(R.monomial_div(lcm, lmg))
    return s1 * g.LC - s2 * f.LC


def _select(R, lmG, sugar, P):
    lcm = R.monomial_lcm

    def key(pair):
        i, j = pair
        m = lcm(lmG[i], lmG[j])
        degree = sum(m)
        pair_sugar = max(
            sugar[i] + degree - sum(lmG[i]), sugar[j] + degree - sum(lmG[j])
        )
        return pair_sugar, R.order(m), pair

    return min(P, key=key)


def _update(R, G, lmG, P, f):
    """Gebauer-Moeller installation of ``f``: product and chain criteria."""
    lmf = f.LM
    lcm = R.monomial_lcm
    mul = R.monomial_mul
    div = R.monomial_div
    P = {
        p
        for p in P
        if (
            not div(lcm(lmG[p[0]], lmG[p[1]]), lmf)
            or lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf)
            or lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf)
        )
    }
    lcm_groups = {}
    for i in range(len(G)):
        lcm_groups.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal = []
    for L in sorted(lcm_groups, key=R.order):
        if all(not div(L, other) for other in minimal):
            minimal.append(L)
    new_pairs = set()
    for L in minimal:
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in lcm_groups[L]):
            new_pairs.add((min(lcm_groups[L]), len(G)))
    return G + [f], lmG + [lmf], P | new_pairs


def _minimalize(R, G):
    minimal = []
    for f in sorted(G, key=lambda h: R.order(h.LM)):
        if all(not R.monomial_div(f.LM, g.LM) for g in minimal):
            minimal.append(f)
    return minimal


def _interreduce(G):
    reduced = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1 :]
        reduced.append((g.rem(others) if others else g).monic())
    return reduced


def _total_degree(element):
    return max(sum(m) for m in element.monoms())


def _run_buchberger(F, caps):
    R = F[0].ring
    G, lmG, sugar, P = [], [], [], set()
    for f in F:
        f = f.monic()
        G, lmG, P = _update(R, G, lmG, P, f)
        sugar.append(_total_degree(f))
    pairs = 0
    while P:
        i, j = _select(R, lmG, sugar, P)
        P.remove((i, j))
        pairs += 1
        if pairs > caps.max_pairs:
            raise ResourceCapError("max_pairs", caps.max_pairs, pairs)
        m = R.monomial_lcm(lmG[i], lmG[j])
        pair_sugar = max(
            sugar[i] + sum(m) - sum(lmG[i]), sugar[j] + sum(m) - sum(lmG[j])
        )
        r = _spoly(G[i], G[j], lmG[i], lmG[j]).rem(G)
        if not r:
            continue
        bits = _coefficient_bits(r)
        if bits > caps.max_coefficient_bits:
            raise ResourceCapError(
                "max_coefficient_bits", caps.max_coefficient_bits, bits
            )
        if r.is_ground:
            _logger.debug("Unit ideal after %d pairs", pairs)
            return [R.one], pairs
        G, lmG, P = _update(R, G, lmG, P, r.monic())
        sugar.append(pair_sugar)
        _logger.debug(
            "Pair %d: basis size %d, %d pairs pending, sugar %d",
            pairs,
            len(G),
            len(P),
            pair_sugar,
        )
    return _interreduce(_minimalize(R, G)), pairs


# public operations


def groebner_basis(gens, order, caps=None):
    """Reduced Groebner basis of ``gens`` under ``order``.

    The result is canonical: monic generators sorted by decreasing leading
    monomial. Raises :class:`ResourceCapError` when a cap is exceeded.
    """
    caps = caps or GroebnerCaps()
    gens = [g for g in gens if g]
    order = _context(gens, order)
    if not gens:
        return IdealBasis((), order, is_groebner=True)
    if not order.variables or any(g.is_constant for g in gens):
        one = MultiPoly.constant(1, order.variables)
        return IdealBasis((one,), order, is_groebner=True, stats={"pairs": 0})
    R = order.ring()
    F = [_to_ring(g, R, order.variables) for g in gens]
    basis, pairs = _run_buchberger(F, caps)
    basis = sorted(basis, key=lambda g: R.order(g.LM), reverse=True)
    _logger.debug(
        "Groebner basis under %s: %d generators after %d pairs",
        order,
        len(basis),
        pairs,
    )
    return IdealBasis(
        tuple(_from_ring(g, order.variables) for g in basis),
        order,
        is_groebner=True,
        stats={"pairs": pairs},
    )


def normal_form(poly, basis):
    """Remainder of ``poly`` on division by the generators of ``basis``."""
    order = _context([poly, *basis.generators], basis.order)
    if not basis.generators or not poly:
        return poly.embed(merge_variables(poly.variables, order.variables))
    if not order.variables:
        return MultiPoly.zero()
    R = order.ring()
    G = [_to_ring(g, R, order.variables) for g in basis.generators]
    return _from_ring(_to_ring(poly, R, order.variables).rem(G), order.variables)


def leading_exponents(poly, order):
    return max(poly.embed(order.variables).terms, key=order.key)


def s_polynomial(f, g, order):
    """S-polynomial ``lcm/lt(f) * f - lcm/lt(g) * g`` under ``order``."""
    order = _context([f, g], order)
    R = order.ring()
    a = _to_ring(f, R, order.variables)
    b = _to_ring(g, R, order.variables)
    return _from_ring(_spoly(a.monic(), b.monic(), a.LM, b.LM), order.variables)


def verify_groebner(basis):
    """Pairs ``(i, j)`` whose S-polynomial does not reduce to zero."""
    failing = []
    generators = basis.generators
    for i in range(len(generators)):
        for j in range(i + 1, len(generators)):
            s = s_polynomial(generators[i], generators[j], basis.order)
            if normal_form(s, basis):
                failing.append((i, j))
    return failing


def eliminate(gens, drop, order=None, caps=None):
    """Generators of the elimination ideal ``<gens>`` intersected with the
    ring of the remaining variables."""
    drop = set(drop)
    variables = merge_variables(*(g.variables for g in gens))
    if order is None:
        order = MonomialOrder.elimination(drop, variables)
    if not order.is_elimination_order(drop):
        raise UserError(
            "%s is not an elimination order for %s." % (order, ", ".join(sorted(drop)))
        )
    basis = groebner_basis(gens, order, caps=caps)
    keep = tuple(v for v in basis.order.variables if v not in drop)
    result = [
        g.embed(keep)
        for g in basis.generators
        if not drop.intersection(g.used_variables())
    ]
    _logger.debug(
        "Eliminated %s: %d of %d generators remain",
        ", ".join(sorted(drop)),
        len(result),
        len(basis),
    )
    return result


def inverse_variable(unit, index=0):
    if isinstance(unit, str):
        return "%s_%s" % (INVERSE_PREFIX, unit)
    return "%s%d" % (INVERSE_PREFIX, index)


def inverse_variables(polys):
    names = merge_variables(*(p.used_variables() for p in polys))
    return tuple(v for v in names if v.startswith(INVERSE_PREFIX))


def saturate_units(gens, units):
    """Extend ``gens`` by ``u * _inv_u - 1`` for every unit.

    Units are variable names or polynomials; a polynomial unit gets the
    fresh variable ``_inv<k>``.
    """
    relations = []
    for index, unit in enumerate(units):
        name = inverse_variable(unit, index)
        unit_poly = MultiPoly.gen(unit) if isinstance(unit, str) else unit
        relations.append(unit_poly * MultiPoly.gen(name) - 1)
    polys = list(gens) + relations
    context = merge_variables(*(p.variables for p in polys))
    return [p.embed(context) for p in polys]


def ideal_member(poly, gens, order=None, caps=None):
    """Whether ``poly`` lies in the ideal generated by ``gens``."""
    if not poly:
        return True
    if order is None:
        variables = merge_variables(poly.variables, *(g.variables for g in gens))
        order = MonomialOrder("grevlex", variables)
    basis = groebner_basis(gens, order, caps=caps)
    return normal_form(poly, basis).is_zero


def resultant(f, g, variable):
    """Resultant of ``f`` and ``g`` in ``variable``, a polynomial in the
    remaining variables that lies in ``<f, g>``."""
    variables = merge_variables(f.used_variables(), g.used_variables(), (variable,))
    rest = tuple(v for v in variables if v != variable)
    if not rest:
        raise UserError("The resultant in %s needs a second variable." % variable)
    context = (variable,) + rest
    R = MonomialOrder("lex", context).ring()
    level = len(rest)
    dense = dmp_resultant(
        _to_ring(f, R, context).to_dense(), _to_ring(g, R, context).to_dense(), level, QQ
    )
    terms = {
        monom: Fraction(int(coeff.numerator), int(coeff.denominator))
        for monom, coeff in dmp_to_dict(dense, level - 1, QQ).items()
    }
    _logger.debug("Resultant in %s: %d terms", variable, len(terms))
    return MultiPoly(terms=terms, variables=rest)
