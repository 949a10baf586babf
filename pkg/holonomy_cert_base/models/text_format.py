# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import logging
import re
import tokenize
from fractions import Fraction

from ..exceptions import UserError
from .poly import MultiPoly, merge_variables, order_variables

_logger = logging.getLogger(__name__)

try:
    import sympy
    from sympy.parsing.sympy_parser import (
        convert_xor,
        parse_expr,
        standard_transformations,
    )
except ImportError:  # pragma: no cover
    _logger.warning(
        "sympy library not found, please install it "
        "from https://pypi.org/project/sympy/"
    )

_ALLOWED = re.compile(r"^[0-9a-z+\-*/^()\s]*$")
_IDENTIFIER = re.compile(r"[a-z]+")


def _variables_in(text):
    names = set()
    for identifier in _IDENTIFIER.findall(text):
        if len(identifier) > 1:
            raise UserError(
                "Unknown identifier %r: variables are single lowercase letters."
                % identifier
            )
        names.add(identifier)
    return names


def parse_poly(text, variables=None):
    """Read a polynomial written as ``(s-2)*(s+1)^2*t^4 - 1``.

    Coefficients are integers or ``p/q`` rationals; ``^`` and ``**`` both mean
    power. Without ``variables`` the context is the canonical ordering of the
    letters that occur.
    """
    if not isinstance(text, str) or not text.strip():
        raise UserError("Empty polynomial text.")
    if not _ALLOWED.match(text):
        raise UserError(
            "Polynomial %r contains characters outside 0-9 a-z + - * / ^ ( )."
            % text
        )
    names = _variables_in(text)
    if variables is None:
        variables = order_variables(names)
    else:
        variables = tuple(variables)
        missing = names.difference(variables)
        if missing:
            raise UserError(
                "Polynomial %r uses %s outside the context %s."
                % (text, ", ".join(sorted(missing)), ", ".join(variables))
            )
    symbols = {name: sympy.Symbol(name) for name in variables}
    try:
        expr = parse_expr(
            text,
            local_dict=dict(symbols),
            transformations=standard_transformations + (convert_xor,),
            evaluate=True,
        )
        if not variables:
            if not expr.is_Rational:
                raise UserError("%r is not a rational constant." % text)
            return MultiPoly.constant(Fraction(int(expr.p), int(expr.q)))
        poly = sympy.Poly(expr, *[symbols[v] for v in variables], domain=sympy.QQ)
    except UserError:
        raise
    except (
        SyntaxError,
        TypeError,
        ZeroDivisionError,
        tokenize.TokenError,
        sympy.SympifyError,
        sympy.PolynomialError,
    ) as err:
        raise UserError("Cannot read %r as a polynomial: %s" % (text, err)) from err
    terms = {
        monom: Fraction(int(coeff.p), int(coeff.q)) for monom, coeff in poly.terms()
    }
    return MultiPoly(terms=terms, variables=variables)


def parse_basis(text, variables=None):
    """One generator per line; blank lines and ``#`` comments are skipped.

    All generators are returned over one merged context.
    """
    polys = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            polys.append(parse_poly(line, variables=variables))
        except UserError as err:
            raise UserError("Line %d: %s" % (number, err)) from err
    if not polys:
        raise UserError("No polynomial found in the input.")
    context = merge_variables(*(p.variables for p in polys))
    return [p.embed(context) for p in polys]


def _format_coefficient(coeff):
    if coeff.denominator == 1:
        return str(coeff.numerator)
    return "%d/%d" % (coeff.numerator, coeff.denominator)


def _format_monomial(variables, exponents):
    factors = []
    for name, e in zip(variables, exponents):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append("%s^%d" % (name, e))
    return "*".join(factors)


def format_poly(poly):
    """Inverse of :func:`parse_poly` up to the canonical term order."""
    if poly.is_zero:
        return "0"
    chunks = []
    for exponents, coeff in poly.sorted_terms():
        monomial = _format_monomial(poly.variables, exponents)
        magnitude = abs(coeff)
        if not monomial:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = "%s*%s" % (_format_coefficient(magnitude), monomial)
        if not chunks:
            chunks.append("-" + body if coeff < 0 else body)
        else:
            chunks.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(chunks)


def format_basis(polys):
    return "\n".join(format_poly(p) for p in polys)
