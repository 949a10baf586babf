# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from fractions import Fraction
from unittest import TestCase

from ..data import m137
from ..exceptions import UserError
from ..models.poly import MultiPoly
from ..models.text_format import format_basis, format_poly, parse_basis, parse_poly


class TestTextFormat(TestCase):
    def test_curve_forms_agree(self):
        self.assertEqual(
            parse_poly(m137.CURVE), parse_poly(m137.CURVE_EXPANDED)
        )

    def test_rational_coefficients(self):
        p = parse_poly("3/2*s - 1/3")
        self.assertEqual(p.coefficient({"s": 1}), Fraction(3, 2))
        self.assertEqual(p.constant_term(), Fraction(-1, 3))

    def test_power_spellings(self):
        self.assertEqual(parse_poly("z^3"), parse_poly("z**3"))

    def test_whitespace_is_insignificant(self):
        self.assertEqual(parse_poly(" s *  t+1 "), parse_poly("s*t+1"))

    def test_constant(self):
        self.assertEqual(parse_poly("-7/2"), MultiPoly.constant(Fraction(-7, 2)))
        self.assertTrue(parse_poly("0").is_zero)

    def test_explicit_context(self):
        p = parse_poly("t", variables=("s", "t", "w"))
        self.assertEqual(p.variables, ("s", "t", "w"))
        with self.assertRaises(UserError):
            parse_poly("x", variables=("s", "t"))

    def test_rejections(self):
        for text in ("", "beta + 1", "1.5*s", "1/s", "s^(1/2)", "(s+1", "s @ t"):
            with self.assertRaises(UserError, msg=text):
                parse_poly(text)

    def test_format_is_readable_and_parses_back(self):
        p = parse_poly("-(s-2)*(s+1)^2 + 3/4*t")
        text = format_poly(p)
        self.assertEqual(text, "-s^3 + 3*s + 3/4*t + 2")
        self.assertEqual(parse_poly(text), p)
        self.assertEqual(format_poly(MultiPoly.zero()), "0")

    def test_parse_basis(self):
        text = "# generators\nx + y\n\n  y   # second\n"
        basis = parse_basis(text)
        self.assertEqual(len(basis), 2)
        self.assertEqual(basis[1].variables, ("x", "y"))
        self.assertEqual(format_basis(basis), "x + y\ny")

    def test_parse_basis_reports_line(self):
        with self.assertRaisesRegex(UserError, "Line 2"):
            parse_basis("x\nfoo\n")
        with self.assertRaises(UserError):
            parse_basis("# only a comment\n")
