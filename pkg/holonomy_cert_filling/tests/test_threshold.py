# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import dataclasses
from fractions import Fraction
from unittest import TestCase

from ..models.certify import Verdict, certify_slope
from ..models.threshold import derive_threshold, inequality_sides


class TestThreshold(TestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.certificate = derive_threshold(cross_check=2)

    def test_constants(self):
        cert = self.certificate
        self.assertGreaterEqual(cert.N0, 2)
        self.assertTrue(0 < cert.q < 1)
        self.assertGreater(cert.c5, 0)
        self.assertGreaterEqual(cert.c6, 0)
        self.assertTrue(Fraction(8684, 10000) <= cert.split <= Fraction(8685, 10000))
        self.assertTrue(Fraction(-3995, 10000) <= cert.lower <= Fraction(-3994, 10000))
        self.assertEqual(cert.q, cert.split)

    def test_records(self):
        cert = self.certificate
        self.assertTrue(cert.case1_facts.holds)
        self.assertTrue(cert.record.holds, cert.record.failures())
        self.assertTrue(cert.reverify())

    def test_inequality_trace(self):
        cert = self.certificate
        self.assertEqual([s["n"] for s in cert.inequality_trace], list(range(2, cert.N0 + 1)))
        lhs, rhs = inequality_sides(cert.c5, cert.c6, cert.q, cert.N0 + 5)
        self.assertGreater(lhs, rhs)

    def test_tampered_constants_fail(self):
        tampered = dataclasses.replace(self.certificate, c5=self.certificate.c5 / 2)
        self.assertFalse(tampered.reverify())

    def test_cross_check(self):
        cert = self.certificate
        self.assertEqual(cert.cross_checked, (cert.N0, cert.N0 + 1))
        for k in cert.cross_checked:
            self.assertIs(certify_slope(-k).verdict, Verdict.NO_REAL_SOLUTIONS)

    def test_json(self):
        data = self.certificate.to_json()
        self.assertEqual(data["N0"], self.certificate.N0)
        self.assertIn("/", data["q"])
        self.assertEqual(len(data["inequality_trace"]), len(self.certificate.inequality_trace))
