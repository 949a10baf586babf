# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from fractions import Fraction
from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st

from holonomy_cert_base.data import m137
from holonomy_cert_base.exceptions import DomainError, UserError
from holonomy_cert_base.models.proof import ProofRecord
from holonomy_cert_ideal.models.groebner import GroebnerCaps
from holonomy_cert_realroots.models.domain import compute_s_domain

from ..models.character_curve import (
    COMPONENTS,
    CharacterPoint,
    boundary_points,
    derive_character_curve,
    in_curve_ideal,
    record_curve_facts,
    same_up_to_unit,
    sample_character_points,
    section_roots,
    substitute_w,
    verify_generators,
    w_coordinate,
)
from ..models.trace_algebra import kappa, relator_trace_equations


class TestCurveFacts(TestCase):
    def test_w_coordinate(self):
        self.assertEqual(w_coordinate(0, 1), 0)
        self.assertEqual(w_coordinate(2, 1), Fraction(2, 3))
        self.assertIsInstance(w_coordinate(Fraction(1, 2), 3), Fraction)
        with self.assertRaises(DomainError):
            w_coordinate(-1, 1)
        with self.assertRaises(DomainError):
            w_coordinate(0, 0)

    def test_record_curve_facts(self):
        record = record_curve_facts(ProofRecord("curve"), m137.curve())
        self.assertTrue(record.holds, record.failures())

    def test_trace_equations_on_curve(self):
        for equation in relator_trace_equations():
            self.assertTrue(in_curve_ideal(substitute_w(equation)))
        self.assertFalse(in_curve_ideal(substitute_w(kappa())))

    def test_same_up_to_unit(self):
        poly = m137.curve()
        self.assertTrue(same_up_to_unit(-3 * poly, poly))
        self.assertFalse(same_up_to_unit(poly + 1, poly))

    def test_verify_generators(self):
        record = verify_generators()
        self.assertTrue(record.holds, record.failures())


class TestDeriveCurve(TestCase):
    def test_default_route(self):
        curve = derive_character_curve()
        self.assertTrue(curve.record.holds, curve.record.failures())
        self.assertIn(curve.method, ("elimination", "membership"))
        self.assertEqual(curve.poly, m137.curve())
        self.assertTrue(verify_generators().holds)

    def test_capped_elimination_falls_back_to_membership(self):
        with self.assertLogs("holonomy_cert_variety.models.character_curve", "WARNING"):
            curve = derive_character_curve(caps=GroebnerCaps(max_pairs=1))
        self.assertEqual(curve.method, "membership")
        self.assertEqual(curve.poly, m137.curve())
        self.assertTrue(curve.record.holds)
        self.assertEqual(curve(0, 0), -1)
        self.assertEqual(curve.to_json()["excluded_s"], ["-1/1", "2/1"])

    def test_capped_full_elimination(self):
        curve = derive_character_curve(
            caps=GroebnerCaps(max_pairs=1), full_elimination=True
        )
        self.assertEqual(curve.method, "membership")


class TestCharacterPoints(TestCase):
    def test_rational_points(self):
        self.assertFalse(CharacterPoint(0, 1).is_on_curve())
        roots = section_roots(0)
        self.assertEqual(len(roots), 4)
        self.assertEqual(sorted(r.compare(0) for r in roots), [-1, -1, 1, 1])
        for root in roots:
            self.assertTrue(CharacterPoint(0, root).is_on_curve())
        with self.assertRaises(DomainError):
            section_roots(2)

    def test_point_json(self):
        point = CharacterPoint(3, section_roots(3, sign=1)[0])
        data = point.to_json()
        self.assertEqual(data["s"], "3/1")
        s, t, w = data["approx"]
        self.assertAlmostEqual(w, t - 1 / (4 * t))

    def test_sampled_points(self):
        domain = compute_s_domain()
        for component, (piece, sign) in enumerate(COMPONENTS):
            points = sample_character_points(component, 2, seed=component)
            self.assertEqual(len(points), 2)
            for point in points:
                self.assertEqual(domain.piece_of(point.s), piece)
                self.assertEqual(point.t.compare(0), sign)
                self.assertTrue(point.is_on_curve())

    def test_sampling_is_seeded(self):
        first = sample_character_points(2, 3, seed=11)
        second = sample_character_points(2, 3, seed=11)
        self.assertEqual([p.s for p in first], [p.s for p in second])

    def test_sampling_errors(self):
        with self.assertRaises(UserError):
            sample_character_points(6, 1)
        with self.assertRaises(UserError):
            sample_character_points(2, 1, window=(-10, -5))

    def test_boundary_points(self):
        points = boundary_points()
        self.assertEqual(len(points), 6)
        domain = compute_s_domain()
        names = []
        for point in points:
            self.assertTrue(point.is_on_curve())
            s, t, _ = point.numeric()
            self.assertAlmostEqual(t * t, (s + 2) / (2 * (s + 1)), places=9)
            names.extend(
                name for name, root in domain.points.items() if point.s.compare_root(root) == 0
            )
        self.assertEqual(sorted(names), ["p1", "p1", "p2", "p2", "p3", "p3"])
        magnitudes = sorted({round(abs(p.numeric()[1]), 3) for p in points})
        self.assertEqual(magnitudes, [0.487, 0.827, 1.754])

    @settings(max_examples=25, deadline=None)
    @given(st.fractions(min_value=-10, max_value=10, max_denominator=50))
    def test_curve_is_even_in_t(self, t):
        poly = m137.curve()
        for s in (Fraction(-3), Fraction(1, 2), Fraction(5)):
            self.assertEqual(poly.evaluate({"s": s, "t": t}), poly.evaluate({"s": s, "t": -t}))
        self.assertEqual(poly.evaluate({"s": -1, "t": t}), -1)
        self.assertEqual(poly.evaluate({"s": 2, "t": t}), -1)
