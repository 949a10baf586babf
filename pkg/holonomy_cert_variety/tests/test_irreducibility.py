# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from unittest import TestCase

from holonomy_cert_base.models.poly import MultiPoly

from ..models.irreducibility import (
    R,
    T,
    irreducibility_certificate,
    reduce_unit,
)


class TestIrreducibility(TestCase):
    def test_certificate(self):
        certificate = irreducibility_certificate()
        self.assertTrue(certificate.holds)
        self.assertEqual(certificate.contradiction, MultiPoly.parse("s^2 - s - 1"))
        self.assertGreaterEqual(len(certificate.case_2_2.facts), 8)
        self.assertGreaterEqual(len(certificate.case_1_3.facts), 8)
        self.assertEqual(
            set(certificate.to_json()), {"case_2_2", "case_1_3", "contradiction"}
        )

    def test_coefficients_match_curve(self):
        self.assertEqual(R, MultiPoly.parse("s^3 - 3*s - 2"))
        self.assertEqual(T, MultiPoly.parse("s^3 + s^2 - 4*s - 4"))
        self.assertEqual(1 + T - R, MultiPoly.parse("s^2 - s - 1"))

    def test_reduce_unit(self):
        self.assertEqual(reduce_unit(MultiPoly.parse("c^2*u^2*s + c*u")), MultiPoly.parse("s + 1"))
        self.assertEqual(reduce_unit(MultiPoly.parse("c^3*u")), MultiPoly.parse("c^2"))
