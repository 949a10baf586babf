# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from unittest import TestCase

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import ResourceCapError, UserError
from holonomy_cert_base.models.poly import MultiPoly
from holonomy_cert_base.models.text_format import parse_poly

from ..models.groebner import (
    GroebnerCaps,
    IdealBasis,
    eliminate,
    groebner_basis,
    ideal_member,
    inverse_variables,
    normal_form,
    resultant,
    s_polynomial,
    saturate_units,
    verify_groebner,
)
from ..models.monomial_order import MonomialOrder

LEX_XY = MonomialOrder("lex", ("x", "y"))

generator_lists = st.lists(
    st.dictionaries(
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
        st.integers(-3, 3),
        min_size=1,
        max_size=3,
    ).map(lambda terms: MultiPoly(terms=terms, variables=("x", "y"))),
    min_size=1,
    max_size=3,
)


class TestMonomialOrder(TestCase):
    def test_keys(self):
        lex = MonomialOrder("lex", ("x", "y"))
        grevlex = MonomialOrder("grevlex", ("x", "y", "z"))
        self.assertGreater(lex.key((1, 0)), lex.key((0, 5)))
        self.assertGreater(grevlex.key((0, 0, 3)), grevlex.key((2, 0, 0)))
        self.assertGreater(grevlex.key((1, 1, 0)), grevlex.key((1, 0, 1)))

    def test_elimination_order(self):
        order = MonomialOrder.elimination({"y"}, ("s", "t", "y"))
        self.assertEqual(order.variables, ("y", "s", "t"))
        self.assertTrue(order.is_elimination_order({"y"}))
        self.assertFalse(order.is_elimination_order({"s"}))
        self.assertFalse(MonomialOrder("grevlex", ("y", "s")).is_elimination_order({"y"}))

    def test_bad_kind(self):
        with self.assertRaises(UserError):
            MonomialOrder("deglex", ("x",))

    def test_parse(self):
        self.assertEqual(
            MonomialOrder.parse("grevlex", "z, x,y").variables, ("z", "x", "y")
        )


class TestGroebnerBasis(TestCase):
    def setUp(self):
        super().setUp()
        self.x = MultiPoly.gen("x")
        self.y = MultiPoly.gen("y")

    def test_single_generator(self):
        basis = groebner_basis([self.x], LEX_XY)
        self.assertEqual(basis.generators, (self.x,))
        self.assertTrue(basis.is_groebner)

    def test_linear_system(self):
        basis = groebner_basis([self.x + self.y, self.y], LEX_XY)
        self.assertEqual(basis.generators, (self.x, self.y))

    def test_matches_sympy(self):
        gens = [parse_poly("x^2 + y^2 - 1"), parse_poly("x - y")]
        basis = groebner_basis(gens, LEX_XY)
        x, y = sympy.symbols("x y")
        expected = sympy.groebner(
            [x**2 + y**2 - 1, x - y], x, y, order="lex", domain=sympy.QQ
        )
        self.assertEqual(
            set(basis.generators),
            {parse_poly(str(g).replace("**", "^")) for g in expected.exprs},
        )
        self.assertIn(parse_poly("y^2 - 1/2"), basis.generators)

    def test_unit_ideal(self):
        basis = groebner_basis([self.x, self.x + 1], LEX_XY)
        self.assertTrue(basis.is_unit)
        self.assertEqual(basis.generators, (MultiPoly.constant(1),))

    def test_pair_cap(self):
        gens = [
            parse_poly("x + y + z"),
            parse_poly("x*y + y*z + z*x"),
            parse_poly("x*y*z - 1"),
        ]
        with self.assertRaises(ResourceCapError) as caught:
            groebner_basis(
                gens,
                MonomialOrder("grevlex", ("x", "y", "z")),
                caps=GroebnerCaps(max_pairs=1),
            )
        self.assertEqual(caught.exception.cap, "max_pairs")

    def test_bad_caps(self):
        with self.assertRaises(UserError):
            GroebnerCaps(max_pairs=0)

    def test_verify_groebner_detects_failure(self):
        gens = (parse_poly("x^2 + y"), parse_poly("x*y - 1"))
        self.assertEqual(verify_groebner(IdealBasis(gens, LEX_XY)), [(0, 1)])
        self.assertEqual(verify_groebner(groebner_basis(gens, LEX_XY)), [])

    def test_s_polynomial(self):
        s = s_polynomial(parse_poly("x^2 + y"), parse_poly("x*y - 1"), LEX_XY)
        self.assertEqual(s, parse_poly("y^2 + x"))

    def test_published_generators_form_consistent_ideal(self):
        gens = list(m137.generators())
        order = MonomialOrder("grevlex", ("w", "t", "s"))
        basis = groebner_basis(gens, order)
        self.assertEqual(verify_groebner(basis), [])
        self.assertFalse(basis.is_unit)
        for g in gens:
            self.assertTrue(normal_form(g, basis).is_zero)

    @settings(max_examples=20, deadline=None)
    @given(generator_lists)
    def test_random_bases(self, gens):
        basis = groebner_basis(gens, LEX_XY)
        self.assertEqual(verify_groebner(basis), [])
        for g in gens:
            self.assertTrue(ideal_member(g, gens))
        target = parse_poly("x^3*y + 2*x - y^2", ("x", "y"))
        once = normal_form(target, basis)
        self.assertEqual(normal_form(once, basis), once)


class TestNormalForm(TestCase):
    def test_self_reduction(self):
        p = m137.curve()
        basis = groebner_basis([p], MonomialOrder("lex", ("t", "s")))
        self.assertTrue(normal_form(p, basis).is_zero)

    def test_zero(self):
        basis = groebner_basis([m137.curve()], MonomialOrder("lex", ("t", "s")))
        self.assertTrue(normal_form(MultiPoly.zero(), basis).is_zero)

    def test_extra_variable(self):
        basis = groebner_basis([parse_poly("x - 1")], MonomialOrder("lex", ("x",)))
        self.assertEqual(normal_form(parse_poly("x*y"), basis), parse_poly("y"))


class TestElimination(TestCase):
    def test_linear_elimination(self):
        result = eliminate([parse_poly("y - s"), parse_poly("y - t")], {"y"})
        self.assertEqual(result, [parse_poly("s - t")])

    def test_unit_ideal(self):
        self.assertEqual(eliminate([MultiPoly.constant(1)], {"x"}), [1])

    def test_rejects_non_elimination_order(self):
        with self.assertRaises(UserError):
            eliminate([parse_poly("y - s")], {"y"}, order=MonomialOrder("lex", ("s", "y")))

    def test_curve_from_first_generator_and_w_relation(self):
        gens = [m137.generators()[0], m137.w_relation()]
        units = saturate_units(gens, ["t", parse_poly("s + 1")])
        drop = {"w", *inverse_variables(units)}
        result = eliminate(units, drop)
        self.assertEqual(len(result), 1)
        _, primitive = result[0].primitive()
        self.assertEqual(primitive, m137.curve().primitive()[1])


class TestResultant(TestCase):
    def test_circle_and_diagonal(self):
        result = resultant(parse_poly("x^2 + y^2 - 1"), parse_poly("x - y"), "x")
        self.assertEqual(result.used_variables(), ("y",))
        self.assertEqual(result.primitive()[1], parse_poly("2*y^2 - 1"))

    def test_needs_a_second_variable(self):
        with self.assertRaises(UserError):
            resultant(parse_poly("x^2 - 1"), parse_poly("x - 1"), "x")


class TestSaturation(TestCase):
    def test_invertible_variable_kills_power(self):
        gens = saturate_units([parse_poly("z^2")], ["z"])
        self.assertEqual(eliminate(gens, {"_inv_z"}), [1])

    def test_empty_generators(self):
        self.assertEqual(saturate_units([], ["z"]), [parse_poly("z") * MultiPoly.gen("_inv_z") - 1])

    def test_polynomial_unit_names(self):
        gens = saturate_units([parse_poly("s")], [parse_poly("s + 1")])
        self.assertEqual(inverse_variables(gens), ("_inv0",))


class TestIdealMember(TestCase):
    def test_principal(self):
        p = m137.curve()
        self.assertTrue(ideal_member(p, [p]))
        self.assertTrue(ideal_member(p * parse_poly("s - t"), [p]))
        self.assertFalse(ideal_member(parse_poly("s"), [p]))

    def test_curve_lies_in_published_ideal(self):
        self.assertTrue(ideal_member(m137.curve(), list(m137.generators())))

    def test_published_ideal_is_proper(self):
        self.assertFalse(ideal_member(MultiPoly.constant(1), list(m137.generators())))
