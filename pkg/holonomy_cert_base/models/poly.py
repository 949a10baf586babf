# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import math
import operator
from fractions import Fraction
from types import MappingProxyType

CONTEXT = ("z", "x", "y", "m", "s", "t", "w")


def _variable_rank(name):
    if name in CONTEXT:
        return (0, CONTEXT.index(name), name)
    if name.startswith("_"):
        return (2, 0, name)
    return (1, 0, name)


def order_variables(names):
    """Canonical ordering: the built-in context first, then other letters,
    then internal (underscore) names."""
    return tuple(sorted(set(names), key=_variable_rank))


def merge_variables(*groups):
    names = []
    for group in groups:
        for name in group:
            if name not in names:
                names.append(name)
    return order_variables(names)


class _SparsePoly:
    __slots__ = ("_variables", "_terms")

    _negative_exponents = False

    def __init__(self, terms=None, variables=()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("Duplicate variable names in %r." % (variables,))
        clean = {}
        for exponents, coeff in dict(terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != len(variables):
                raise ValueError(
                    "Exponent vector %r does not match variables %r."
                    % (exponents, variables)
                )
            if not self._negative_exponents and any(e < 0 for e in exponents):
                raise ValueError(
                    "Negative exponent in %r; use LaurentPoly." % (exponents,)
                )
            coeff = Fraction(coeff)
            if coeff:
                clean[exponents] = coeff
        self._variables = variables
        self._terms = clean

    @classmethod
    def _make(cls, terms, variables):
        poly = object.__new__(cls)
        poly._variables = variables
        poly._terms = terms
        return poly

    # constructors

    @classmethod
    def zero(cls, variables=()):
        return cls._make({}, tuple(variables))

    @classmethod
    def constant(cls, value, variables=()):
        variables = tuple(variables)
        value = Fraction(value)
        terms = {(0,) * len(variables): value} if value else {}
        return cls._make(terms, variables)

    @classmethod
    def gen(cls, name, variables=None):
        variables = (name,) if variables is None else tuple(variables)
        exponents = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError("%r is not one of %r." % (name, variables))
        return cls._make({exponents: Fraction(1)}, variables)

    @classmethod
    def monomial(cls, powers, coeff=1, variables=None):
        """Monomial ``coeff * prod(v**e)`` from a ``{name: exponent}`` map."""
        variables = (
            order_variables(powers) if variables is None else tuple(variables)
        )
        exponents = tuple(powers.get(v, 0) for v in variables)
        return cls(terms={exponents: coeff}, variables=variables)

    @classmethod
    def from_dense(cls, coefficients, variable):
        """Univariate polynomial from coefficients listed lowest degree first."""
        terms = {(k,): c for k, c in enumerate(coefficients) if c}
        return cls(terms=terms, variables=(variable,))

    # read access

    @property
    def variables(self):
        return self._variables

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    @property
    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def used_variables(self):
        used = set()
        for exponents in self._terms:
            used.update(v for v, e in zip(self._variables, exponents) if e)
        return tuple(v for v in self._variables if v in used)

    def _index(self, name):
        try:
            return self._variables.index(name)
        except ValueError:
            return None

    def degree(self, variable=None):
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if variable is None:
            return max(sum(e) for e in self._terms)
        index = self._index(variable)
        if index is None:
            return 0
        return max(e[index] for e in self._terms)

    def min_degree(self, variable):
        index = self._index(variable)
        if index is None or not self._terms:
            return 0
        return min(e[index] for e in self._terms)

    def coefficient(self, powers):
        exponents = tuple(powers.get(v, 0) for v in self._variables)
        return self._terms.get(exponents, Fraction(0))

    def constant_term(self):
        return self._terms.get((0,) * len(self._variables), Fraction(0))

    def coefficients(self):
        return list(self._terms.values())

    def collect(self, variable):
        """Split into ``{k: coefficient of variable**k}``; coefficients keep
        the context with the exponent of ``variable`` set to zero."""
        index = self._index(variable)
        if index is None:
            return {0: self} if self._terms else {}
        parts = {}
        for exponents, coeff in self._terms.items():
            k = exponents[index]
            rest = exponents[:index] + (0,) + exponents[index + 1 :]
            parts.setdefault(k, {})[rest] = coeff
        cls = type(self)
        return {k: cls._make(t, self._variables) for k, t in parts.items()}

    def leading_coefficient(self, variable):
        parts = self.collect(variable)
        if not parts:
            return type(self).zero(self._variables)
        return parts[max(parts)]

    def univariate_coefficients(self, variable=None):
        """Dense coefficient list, lowest degree first."""
        used = self.used_variables()
        if variable is None:
            if len(used) > 1:
                raise ValueError("%s is not univariate." % self)
            variable = used[0] if used else None
        elif any(v != variable for v in used):
            raise ValueError("%s is not a polynomial in %s alone." % (self, variable))
        if not self._terms:
            return []
        index = self._index(variable) if variable is not None else None
        degree = 0 if index is None else self.degree(variable)
        dense = [Fraction(0)] * (degree + 1)
        for exponents, coeff in self._terms.items():
            dense[0 if index is None else exponents[index]] = coeff
        return dense

    # context handling

    def embed(self, variables):
        variables = tuple(variables)
        if variables == self._variables:
            return self
        used = set(self.used_variables())
        missing = used.difference(variables)
        if missing:
            raise ValueError(
                "Cannot embed %s into %r: %s missing."
                % (self, variables, ", ".join(sorted(missing)))
            )
        positions = [
            (i, variables.index(v))
            for i, v in enumerate(self._variables)
            if v in variables
        ]
        size = len(variables)
        terms = {}
        for exponents, coeff in self._terms.items():
            target = [0] * size
            for i, j in positions:
                target[j] = exponents[i]
            terms[tuple(target)] = coeff
        return type(self)._make(terms, variables)

    def drop_unused(self):
        return self.embed(self.used_variables())

    def _coerce(self, other):
        if isinstance(other, _SparsePoly):
            pass
        elif isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = type(self).constant(other, self._variables)
        else:
            return None
        if self._variables == other._variables:
            return self, other
        variables = merge_variables(self._variables, other._variables)
        return self.embed(variables), other.embed(variables)

    @staticmethod
    def _result_class(a, b):
        if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
            return LaurentPoly
        return MultiPoly

    # arithmetic

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        terms = dict(a._terms)
        for exponents, coeff in b._terms.items():
            value = terms.get(exponents, 0) + coeff
            if value:
                terms[exponents] = value
            else:
                terms.pop(exponents, None)
        return self._result_class(a, b)._make(terms, a._variables)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._make(
            {e: -c for e, c in self._terms.items()}, self._variables
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, _SparsePoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, factor):
        factor = Fraction(factor)
        if not factor:
            return type(self).zero(self._variables)
        return type(self)._make(
            {e: c * factor for e, c in self._terms.items()}, self._variables
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._scale(other)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        terms = {}
        add = operator.add
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                exponents = tuple(map(add, e1, e2))
                value = terms.get(exponents, 0) + c1 * c2
                if value:
                    terms[exponents] = value
                else:
                    terms.pop(exponents, None)
        return self._result_class(a, b)._make(terms, a._variables)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            return NotImplemented
        if exponent < 0:
            return self._inverse_monomial() ** (-exponent)
        result = type(self).constant(1, self._variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def _inverse_monomial(self):
        raise ValueError("Only Laurent monomials have inverses, not %s." % self)

    # comparison

    def _named_exponents(self, exponents):
        """``((name, e), ...)`` sorted by name, zero exponents left out."""
        return tuple(sorted((v, e) for v, e in zip(self._variables, exponents) if e))

    def _canonical(self):
        return frozenset(
            (self._named_exponents(exps), coeff) for exps, coeff in self._terms.items()
        )

    def _leading_exponents(self):
        """Exponent vector of the largest term, read over the used variables
        in name order so that it does not depend on the context."""
        names = sorted(self.used_variables())
        indices = [self._variables.index(v) for v in names]
        return max(self._terms, key=lambda exps: tuple(exps[i] for i in indices))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = MultiPoly.constant(other)
        if not isinstance(other, _SparsePoly):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    # evaluation and substitution

    def evaluate(self, values):
        """Value at a point given as ``{name: number}``.

        Exact for rationals; ints, floats and complex numbers (numpy scalars
        included) follow ordinary numeric promotion.
        """
        used = self.used_variables()
        missing = [v for v in used if v not in values]
        if missing:
            raise ValueError("No value for %s." % ", ".join(missing))
        point = [values.get(v, 0) for v in self._variables]
        total = 0
        for exponents, coeff in self._terms.items():
            term = coeff
            for value, e in zip(point, exponents):
                if e:
                    term = term * value ** e
            total = total + term
        return total

    def __call__(self, *args, **kwargs):
        if args:
            used = self.used_variables() or self._variables[:1]
            if len(args) != len(used):
                raise TypeError("Expected %d positional values." % len(used))
            kwargs = dict(zip(used, args), **kwargs)
        return self.evaluate(kwargs)

    def specialize(self, values):
        """Partial evaluation at rationals; the specialised variables leave
        the context."""
        keep = tuple(v for v in self._variables if v not in values)
        keep_index = [i for i, v in enumerate(self._variables) if v not in values]
        fixed = [
            (i, Fraction(values[v])) for i, v in enumerate(self._variables) if v in values
        ]
        terms = {}
        for exponents, coeff in self._terms.items():
            value = coeff
            for i, point in fixed:
                if exponents[i]:
                    value *= point ** exponents[i]
            target = tuple(exponents[i] for i in keep_index)
            total = terms.get(target, 0) + value
            if total:
                terms[target] = total
            else:
                terms.pop(target, None)
        return type(self)._make(terms, keep)

    def derivative(self, variable):
        index = self._index(variable)
        if index is None:
            return type(self).zero(self._variables)
        terms = {}
        for exponents, coeff in self._terms.items():
            e = exponents[index]
            if e:
                target = exponents[:index] + (e - 1,) + exponents[index + 1 :]
                terms[target] = coeff * e
        return type(self)._make(terms, self._variables)

    def compose(self, variable, replacement):
        """Replace ``variable`` by the polynomial ``replacement``."""
        parts = self.collect(variable)
        if variable not in self.used_variables():
            return self
        variables = merge_variables(self._variables, replacement.variables)
        replacement = replacement.embed(variables)
        result = type(self).zero(variables)
        for k in range(max(parts), -1, -1):
            result = result * replacement
            if k in parts:
                result = result + parts[k].embed(variables)
        return result

    def substitute(self, variable, numerator, denominator=None):
        """Replace ``variable`` by ``numerator / denominator`` and clear.

        Returns ``(poly, power)`` where ``poly = denominator**power * self``
        after substitution and ``power`` is the degree of ``self`` in
        ``variable`` (0, with ``self`` unchanged, when it does not occur).
        """
        if variable not in self.used_variables():
            return self, 0
        if denominator is None:
            denominator = MultiPoly.constant(1)
        if denominator.is_zero:
            raise ZeroDivisionError("Substituted denominator is zero.")
        parts = self.collect(variable)
        power = max(parts)
        variables = merge_variables(
            self._variables, numerator.variables, denominator.variables
        )
        numerator = numerator.embed(variables)
        denominator = denominator.embed(variables)
        num_powers = [type(self).constant(1, variables)]
        den_powers = [type(self).constant(1, variables)]
        for _ in range(power):
            num_powers.append(num_powers[-1] * numerator)
            den_powers.append(den_powers[-1] * denominator)
        result = type(self).zero(variables)
        for k, part in parts.items():
            result = result + part.embed(variables) * num_powers[k] * den_powers[
                power - k
            ]
        return result, power

    def primitive(self):
        """``(content, poly)`` with integer coprime coefficients and a
        positive leading coefficient, the term with the largest exponents
        over the variable names in alphabetical order."""
        if not self._terms:
            return Fraction(0), self
        denominators = 1
        for coeff in self._terms.values():
            denominators = denominators * coeff.denominator // math.gcd(
                denominators, coeff.denominator
            )
        numerators = [int(c * denominators) for c in self._terms.values()]
        content = Fraction(math.gcd(*numerators), denominators)
        if self._terms[self._leading_exponents()] < 0:
            content = -content
        return content, self._scale(1 / content)

    def inverted(self, variable):
        """Laurent polynomial obtained by ``variable -> 1/variable``."""
        index = self._index(variable)
        terms = {}
        for exponents, coeff in self._terms.items():
            if index is not None:
                exponents = (
                    exponents[:index] + (-exponents[index],) + exponents[index + 1 :]
                )
            terms[exponents] = coeff
        return LaurentPoly._make(terms, self._variables)

    def sorted_terms(self):
        """Terms by decreasing total degree, then decreasing exponent vector."""
        return sorted(
            self._terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )

    def __str__(self):
        from .text_format import format_poly

        return format_poly(self)

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, str(self))

    def to_json(self):
        return str(self)


class MultiPoly(_SparsePoly):
    """Sparse multivariate polynomial with exact rational coefficients.

    Exponent vectors are dense over ``variables``. Values are immutable;
    arithmetic between polynomials over different contexts embeds both into
    the merged context.
    """

    __slots__ = ()

    @classmethod
    def parse(cls, text, variables=None):
        from .text_format import parse_poly

        return parse_poly(text, variables=variables)


class LaurentPoly(_SparsePoly):
    """Polynomial whose exponents may be negative; carries the entries of
    inverse matrices and the substitution ``m = z**(-n)``."""

    __slots__ = ()

    _negative_exponents = True

    @classmethod
    def from_poly(cls, poly):
        return cls._make(dict(poly._terms), poly.variables)

    def _inverse_monomial(self):
        if len(self._terms) != 1:
            raise ValueError("%s is not a monomial." % self)
        ((exponents, coeff),) = self._terms.items()
        return LaurentPoly._make(
            {tuple(-e for e in exponents): 1 / coeff}, self._variables
        )

    def to_poly(self):
        if any(e < 0 for exponents in self._terms for e in exponents):
            raise ValueError("%s has negative exponents." % self)
        return MultiPoly._make(dict(self._terms), self._variables)

    def clear_denominators(self):
        """``(poly, shifts)`` with ``self = poly * prod(v**-shifts[v])`` and
        ``poly`` free of negative exponents; shifts are minimal."""
        shifts = {}
        for index, name in enumerate(self._variables):
            lowest = min((e[index] for e in self._terms), default=0)
            if lowest < 0:
                shifts[name] = -lowest
        if not shifts:
            return self.to_poly(), {}
        delta = tuple(shifts.get(v, 0) for v in self._variables)
        terms = {
            tuple(map(operator.add, exponents, delta)): coeff
            for exponents, coeff in self._terms.items()
        }
        return MultiPoly._make(terms, self._variables), shifts


def laurent_normalize(poly, variable=None):
    """Clear the negative powers of a one-variable Laurent expression.

    Returns ``(result, shift)`` with ``poly = variable**(-shift) * result``,
    ``shift >= 0`` and ``result`` a polynomial. The zero expression gives
    ``(0, 0)``.
    """
    if poly.is_zero:
        return MultiPoly.zero(poly.variables), 0
    if variable is None:
        used = poly.used_variables()
        if len(used) > 1:
            raise ValueError("%s involves more than one variable." % poly)
        if not used:
            return MultiPoly._make(dict(poly._terms), poly.variables), 0
        variable = used[0]
    shift = max(0, -poly.min_degree(variable))
    scaled = LaurentPoly.from_poly(poly) * LaurentPoly.monomial(
        {variable: shift}, variables=poly.variables
    )
    return scaled.to_poly(), shift


def poly_arith(a, b, op):
    """Exact ``a op b`` for ``op`` in ``{"add", "sub", "mul"}``."""
    try:
        function = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}[op]
    except KeyError as err:
        raise ValueError("Unknown polynomial operation %r." % op) from err
    return function(a, b)
