# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from fractions import Fraction
from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st

from holonomy_cert_base.data import m137

from ..models.domain import compute_s_domain, compute_z_domain


class TestSDomain(TestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.domain = compute_s_domain()

    def test_endpoints(self):
        points = self.domain.points
        for name, printed in zip(("p1", "p2", "p3"), m137.CUBIC_ROOTS_PRINTED):
            self.assertAlmostEqual(float(points[name]), float(printed), delta=1.5e-4)
        self.assertEqual(len(self.domain.pieces), 3)

    def test_record_holds(self):
        self.assertTrue(self.domain.record.holds)
        self.assertGreaterEqual(len(self.domain.record.facts), 10)

    def test_membership(self):
        domain = self.domain
        self.assertTrue(domain.contains(-3))
        self.assertTrue(domain.contains(0))
        self.assertTrue(domain.contains(3))
        self.assertFalse(domain.contains(-1))
        self.assertFalse(domain.contains(2))
        self.assertFalse(domain.contains(Fraction(19, 10)))
        self.assertEqual(domain.piece_of(Fraction(5, 2)), 2)

    def test_endpoints_belong_to_closed_pieces(self):
        points = self.domain.points
        self.assertEqual(self.domain.piece_of(points["p1"]), 0)
        self.assertEqual(self.domain.piece_of(points["p3"]), 1)

    def test_covers_are_nested(self):
        for outer, inner in zip(self.domain.outward_cover(), self.domain.inward_cover()):
            if inner.lo is not None:
                self.assertLessEqual(outer.lo, inner.lo)
            if inner.hi is not None:
                self.assertGreaterEqual(outer.hi, inner.hi)
        (_, middle, last) = self.domain.outward_cover()
        self.assertFalse(last.contains(2))
        self.assertTrue(middle.contains(0))

    def test_json(self):
        data = self.domain.to_json()
        self.assertEqual(data["variable"], "s")
        self.assertEqual(data["pieces"][0][0], {"kind": "infinite"})
        self.assertEqual(data["pieces"][2][0]["value"], "2/1")


class TestZDomain(TestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.domain = compute_z_domain()
        cls.s_domain = compute_s_domain()

    def test_endpoints(self):
        points = self.domain.points
        for name, printed in zip(("v1", "v2"), m137.V_ENDPOINTS_PRINTED):
            self.assertAlmostEqual(float(points[name]), float(printed), delta=1.5e-4)
        self.assertAlmostEqual(float(points["v1"]) * float(points["v2"]), 1, places=8)

    def test_membership(self):
        domain = self.domain
        self.assertTrue(domain.contains(-3))
        self.assertTrue(domain.contains(Fraction(-1, 3)))
        self.assertTrue(domain.contains(Fraction(1, 2)))
        self.assertTrue(domain.contains(5))
        for excluded in (-1, Fraction(-1, 2), 0, 1, -2):
            self.assertFalse(domain.contains(excluded))
        self.assertTrue(domain.record.holds)

    @settings(max_examples=60, deadline=None)
    @given(st.fractions(min_value=-6, max_value=6, max_denominator=12))
    def test_image_of_z_domain(self, z):
        if z == 0:
            return
        s = z + 1 / z
        self.assertEqual(
            self.domain.contains(z), self.s_domain.contains(s) and abs(s) > 2
        )
