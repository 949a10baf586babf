# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import json
from fractions import Fraction
from unittest import TestCase

from holonomy_cert_base.exceptions import UserError
from holonomy_cert_base.models.proof import ProofRecord

from ..models.certificate import (
    SCHEMA,
    Certificate,
    dump_certificates,
    load_certificates,
    tool_version,
)


class TestCertificate(TestCase):
    def setUp(self):
        record = ProofRecord("demo")
        record.check("1/2 + 1/2 = 1", "exact arithmetic", True, total=Fraction(1))
        self.certificate = Certificate.from_records(
            "demo", {"width": Fraction(1, 10)}, [record], "VERIFIED", result={"q": Fraction(2, 3)}
        )

    def test_from_records_serializes_rationals(self):
        self.assertEqual(self.certificate.inputs, {"width": "1/10"})
        self.assertEqual(self.certificate.facts[0]["exact_values"], {"total": "1/1"})
        self.assertEqual(self.certificate.result, {"q": "2/3"})
        self.assertTrue(self.certificate.holds)

    def test_json_shape(self):
        data = self.certificate.to_json()
        self.assertEqual(data["schema"], SCHEMA)
        self.assertEqual(data["tool_version"], tool_version())
        self.assertEqual(data["deterministic_seed"], 0)
        self.assertEqual(
            set(data),
            {"schema", "kind", "inputs", "facts", "verdict", "result", "tool_version",
             "deterministic_seed"},
        )

    def test_dump_and_load(self):
        text = dump_certificates([self.certificate])
        self.assertIsInstance(json.loads(text), dict)
        (loaded,) = load_certificates(text)
        self.assertEqual(loaded, self.certificate)
        self.assertTrue(loaded.same_outcome(self.certificate))
        two = load_certificates(dump_certificates([self.certificate, self.certificate]))
        self.assertEqual(len(two), 2)

    def test_tool_version(self):
        self.assertEqual(tool_version(), "1.0.0")

    def test_failed_fact(self):
        record = ProofRecord("demo")
        record.check("1 = 2", "exact arithmetic", False)
        certificate = Certificate.from_records("demo", {}, [record], "FAIL")
        self.assertFalse(certificate.holds)
        self.assertFalse(certificate.same_outcome(self.certificate))

    def test_bad_documents(self):
        data = self.certificate.to_json()
        with self.assertRaises(UserError):
            load_certificates("{not json")
        with self.assertRaises(UserError):
            load_certificates(json.dumps(dict(data, schema=2)))
        with self.assertRaises(UserError):
            load_certificates(json.dumps({k: v for k, v in data.items() if k != "facts"}))
        with self.assertRaises(UserError):
            load_certificates(json.dumps([1, 2]))
        with self.assertRaises(UserError):
            load_certificates(json.dumps(dict(data, facts={})))
