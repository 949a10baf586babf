# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from fractions import Fraction
from unittest import TestCase

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ..data import m137
from ..exceptions import UserError
from ..models.poly import (
    LaurentPoly,
    MultiPoly,
    laurent_normalize,
    merge_variables,
    poly_arith,
)
from ..models.rational import ceil_to, floor_to, rational_str, to_rational
from ..models.text_format import parse_poly


def to_sympy(poly):
    symbols = [sympy.Symbol(v) for v in poly.variables]
    total = sympy.Integer(0)
    for exponents, coeff in poly.terms.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for symbol, e in zip(symbols, exponents):
            term *= symbol**e
        total += term
    return total


def small_polys(variables=("s", "t"), max_terms=4, max_degree=3):
    exponents = st.tuples(*[st.integers(0, max_degree) for _ in variables])
    coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(exponents, coefficients, max_size=max_terms).map(
        lambda terms: MultiPoly(terms=terms, variables=variables)
    )


class TestMultiPoly(TestCase):
    def setUp(self):
        super().setUp()
        self.s = MultiPoly.gen("s")
        self.z = MultiPoly.gen("z")

    def test_difference_of_squares(self):
        self.assertEqual(
            poly_arith(self.s + 1, self.s - 1, "mul"), parse_poly("s^2 - 1")
        )

    def test_self_subtraction_is_zero(self):
        p = m137.curve()
        self.assertTrue(poly_arith(p, p, "sub").is_zero)

    def test_factored_a_matches_expanded(self):
        z = self.z
        self.assertEqual((z - 1) * (z ** 2 + z + 1) ** 3, m137.poly_a())

    def test_unknown_operation(self):
        with self.assertRaises(ValueError):
            poly_arith(self.s, self.s, "div")

    def test_zero_coefficients_are_dropped(self):
        p = MultiPoly(terms={(1,): 0, (0,): 3}, variables=("s",))
        self.assertEqual(len(p), 1)
        self.assertEqual(p.constant_term(), 3)

    def test_negative_exponent_refused(self):
        with self.assertRaises(ValueError):
            MultiPoly(terms={(-1,): 1}, variables=("z",))

    def test_equality_ignores_context(self):
        wide = self.s.embed(("z", "s", "t"))
        self.assertEqual(wide, self.s)
        self.assertEqual(hash(wide), hash(self.s))
        self.assertEqual(MultiPoly.constant(3, ("s",)), 3)

    def test_equality_ignores_variable_order(self):
        curve = m137.curve()
        swapped = curve.embed(("t", "s"))
        self.assertEqual(swapped.variables, ("t", "s"))
        self.assertEqual(swapped, curve)
        self.assertEqual(hash(swapped), hash(curve))
        self.assertEqual(
            MultiPoly.monomial({"s": 3, "t": 4}, variables=("t", "s")),
            MultiPoly.monomial({"s": 3, "t": 4}, variables=("s", "t")),
        )
        self.assertNotEqual(
            MultiPoly.monomial({"s": 4, "t": 3}, variables=("t", "s")),
            MultiPoly.monomial({"s": 3, "t": 4}, variables=("s", "t")),
        )

    def test_primitive_sign_ignores_variable_order(self):
        poly = parse_poly("-s^3*t + 2*t^4")
        content, prim = poly.primitive()
        swapped_content, swapped_prim = poly.embed(("t", "s")).primitive()
        self.assertEqual(content, swapped_content)
        self.assertEqual(prim, swapped_prim)
        self.assertEqual(content, -1)

    def test_merge_variables_uses_canonical_order(self):
        self.assertEqual(merge_variables(("t", "s"), ("z", "a")), ("z", "s", "t", "a"))

    def test_degree_and_collect(self):
        p = m137.curve()
        self.assertEqual(p.degree("t"), 4)
        self.assertEqual(p.degree("s"), 3)
        self.assertEqual(p.degree(), 7)
        parts = p.collect("t")
        self.assertEqual(sorted(parts), [0, 2, 4])
        self.assertEqual(parts[0], -1)
        self.assertEqual(parts[4], parse_poly("(s-2)*(s+1)^2"))

    def test_curve_at_special_values(self):
        p = m137.curve()
        self.assertEqual(p.specialize({"s": 2}), -1)
        self.assertEqual(p.specialize({"s": -1}), -1)
        self.assertEqual(p.specialize({"s": 0}), parse_poly("-2*t^4 + 4*t^2 - 1"))

    def test_evaluate_exact_and_numeric(self):
        p = m137.curve()
        self.assertEqual(p.evaluate({"s": Fraction(1, 2), "t": 2}), Fraction(-65, 2))
        self.assertAlmostEqual(p.evaluate({"s": 0.5, "t": 2.0}), -32.5)

    def test_univariate_coefficients(self):
        self.assertEqual(
            m137.cubic().univariate_coefficients(), [-4, -4, 2, 1]
        )
        with self.assertRaises(ValueError):
            m137.curve().univariate_coefficients()

    def test_derivative(self):
        self.assertEqual(m137.cubic().derivative("s"), parse_poly("3*s^2 + 4*s - 4"))

    def test_primitive(self):
        content, prim = parse_poly("-3/2*s^2 + 3").primitive()
        self.assertEqual(content, Fraction(-3, 2))
        self.assertEqual(prim, parse_poly("s^2 - 2"))

    def test_compose(self):
        result = m137.cubic().compose("s", parse_poly("z + 1"))
        self.assertEqual(result, parse_poly("(z+1)^3 + 2*(z+1)^2 - 4*(z+1) - 4"))

    @settings(max_examples=40, deadline=None)
    @given(small_polys(), small_polys(), small_polys())
    def test_ring_axioms(self, a, b, c):
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual(a + b, b + a)
        self.assertTrue((a - a).is_zero)

    @settings(max_examples=40, deadline=None)
    @given(small_polys(), small_polys())
    def test_product_matches_sympy(self, a, b):
        product = to_sympy(a) * to_sympy(b)
        self.assertEqual(sympy.expand(product - to_sympy(a * b)), 0)


class TestSubstitution(TestCase):
    def test_w_relation_into_first_generator_gives_curve(self):
        s, t = MultiPoly.gen("s"), MultiPoly.gen("t")
        numerator = t ** 2 * (s + 1) - 1
        denominator = t * (s + 1)
        result, power = m137.generators()[0].substitute("w", numerator, denominator)
        self.assertEqual(power, 2)
        self.assertEqual(result, m137.curve())

    def test_identity_substitution(self):
        p = m137.curve()
        result, power = p.substitute("s", MultiPoly.gen("s"))
        self.assertEqual(result, p)
        self.assertEqual(power, 3)

    def test_absent_variable(self):
        p = m137.curve()
        result, power = p.substitute("w", MultiPoly.gen("s"))
        self.assertIs(result, p)
        self.assertEqual(power, 0)

    def test_zero_denominator(self):
        with self.assertRaises(ZeroDivisionError):
            m137.curve().substitute("s", MultiPoly.gen("t"), MultiPoly.zero())

    def test_meridian_power_in_compact_a_polynomial(self):
        z, m = MultiPoly.gen("z"), MultiPoly.gen("m")
        a, b = m137.poly_a(), m137.poly_b()
        compact = -(z ** 4) * a - b * m ** 2 + z ** 3 * a * m ** 4
        result, _ = compact.substitute("m", z ** 3)
        self.assertEqual(result, z ** 4 * (a * z ** 11 - b * z ** 2 - a))


class TestLaurent(TestCase):
    def setUp(self):
        super().setUp()
        self.z = LaurentPoly.gen("z")

    def test_z_plus_inverse(self):
        result, shift = laurent_normalize(self.z + self.z ** -1)
        self.assertEqual(result, parse_poly("z^2 + 1"))
        self.assertEqual(shift, 1)

    def test_polynomial_input(self):
        result, shift = laurent_normalize(self.z ** 5)
        self.assertEqual(result, parse_poly("z^5"))
        self.assertEqual(shift, 0)

    def test_zero(self):
        result, shift = laurent_normalize(LaurentPoly.zero(("z",)))
        self.assertTrue(result.is_zero)
        self.assertEqual(shift, 0)

    def test_filling_polynomial_reflection(self):
        z = MultiPoly.gen("z")
        a, b = m137.poly_a(), m137.poly_b()
        f = a * (z ** 11 - 1) - b * z ** 2
        result, shift = laurent_normalize(f.inverted("z"))
        self.assertEqual(shift, 18)
        self.assertEqual(result, f)

    def test_clear_denominators(self):
        p = LaurentPoly.gen("z") ** -2 + LaurentPoly.gen("x")
        poly, shifts = p.clear_denominators()
        self.assertEqual(shifts, {"z": 2})
        self.assertEqual(poly, parse_poly("1 + x*z^2"))

    @settings(max_examples=30, deadline=None)
    @given(
        st.dictionaries(
            st.tuples(st.integers(-6, 6)),
            st.integers(-9, 9).filter(bool),
            min_size=1,
            max_size=5,
        )
    )
    def test_round_trip(self, terms):
        p = LaurentPoly(terms=terms, variables=("z",))
        result, shift = laurent_normalize(p)
        self.assertEqual(LaurentPoly.from_poly(result) * self.z ** -shift, p)
        if shift:
            self.assertNotEqual(result.constant_term(), 0)


class TestRational(TestCase):
    def test_to_rational(self):
        self.assertEqual(to_rational("-7/4"), Fraction(-7, 4))
        self.assertEqual(to_rational(" 0.8684 "), Fraction(2171, 2500))
        self.assertEqual(to_rational(3), 3)

    def test_to_rational_refuses_floats_and_garbage(self):
        for value in (0.5, True, "x", "1/0"):
            with self.assertRaises(UserError):
                to_rational(value)

    def test_wire_form_and_rounding(self):
        self.assertEqual(rational_str(Fraction(6, 4)), "3/2")
        self.assertEqual(rational_str(2), "2/1")
        self.assertEqual(floor_to(Fraction(-39941, 100000), 4), Fraction(-3995, 10000))
        self.assertEqual(ceil_to(Fraction(86841, 100000), 4), Fraction(8685, 10000))
