# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import contextlib
import io
import json
import os
import tempfile
from unittest import TestCase, mock

from ..cli import EXIT_BAD_INPUT, EXIT_FAILED, EXIT_OK, main

POLY_8_20 = "x^4-2*x^3+3*x^2-2*x+1"


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        code = main(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


class TestCli(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def path(self, name):
        return os.path.join(self.directory.name, name)

    def test_alexander(self):
        code, out, _ = run("--format", "json", "alexander", "--poly", POLY_8_20)
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["kind"], "alexander")
        self.assertEqual(data["verdict"], "false")
        self.assertEqual(data["result"]["coefficients"], [1, -2, 3, -2, 1])
        code, out, _ = run("alexander", "--poly", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("true", out)

    def test_certify_negative_slope(self):
        code, out, _ = run("--format", "json", "certify", "--n", "-50")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["verdict"], "NO_REAL_SOLUTIONS")
        self.assertEqual(data["inputs"], {"n": -50, "width": "1/1000000"})
        self.assertTrue(all(fact["holds"] for fact in data["facts"]))

    def test_certificate_round_trip(self):
        output = self.path("cert.json")
        code, _, _ = run("--format", "json", "--output", output, "certify", "--n", "1")
        self.assertEqual(code, EXIT_OK)
        code, out, _ = run("reverify", "--input", output)
        self.assertEqual(code, EXIT_OK)
        self.assertIn("REAL_SOLUTION_FOUND", out)

    def test_tampered_certificate_fails(self):
        output = self.path("cert.json")
        run("--format", "json", "--output", output, "alexander", "--poly", POLY_8_20)
        with open(output, encoding="utf-8") as handle:
            data = json.load(handle)
        data["verdict"] = "true"
        with open(output, "w", encoding="utf-8") as handle:
            json.dump(data, handle)
        code, _, err = run("reverify", "--input", output)
        self.assertEqual(code, EXIT_FAILED)
        self.assertIn("verdict", err)

    def test_classify(self):
        code, out, _ = run("--format", "json", "classify", "--s", "3")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["verdict"], "SL2R")
        self.assertEqual(len(data["result"]["points"]), 2)
        code, out, _ = run("--format", "json", "classify", "--s", "0")
        self.assertEqual(json.loads(out)["verdict"], "SU2")

    def test_classify_in_a_gap_fails(self):
        for s in ("-2", "9/5"):
            code, _, err = run("classify", "--s", s)
            self.assertEqual(code, EXIT_FAILED, s)
            self.assertIn("gap of U", err)

    def test_derive_curve(self):
        code, out, _ = run("--format", "json", "derive-curve")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["kind"], "derive-curve")
        self.assertTrue(all(fact["holds"] for fact in data["facts"]))

    def test_classify_outside_the_domain(self):
        self.assertEqual(run("classify", "--s", "2")[0], EXIT_BAD_INPUT)
        self.assertEqual(run("classify", "--s", "3", "--t", "100")[0], EXIT_BAD_INPUT)

    def test_groebner_file(self):
        basis = self.path("basis.txt")
        with open(basis, "w", encoding="utf-8") as handle:
            handle.write("# circle and diagonal\nx^2 + y^2 - 1\n\nx - y\n")
        code, out, _ = run(
            "--format", "json", "groebner", "--input", basis, "--order", "lex",
            "--vars", "x,y", "--member", "2*y^2 - 1",
        )
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["verdict"], "MEMBER")
        self.assertEqual(data["inputs"]["basis"], ["x^2 + y^2 - 1", "x - y"])
        self.assertEqual(len(data["result"]["basis"]), 2)

    def test_groebner_missing_file(self):
        code, _, err = run("groebner", "--input", self.path("missing.txt"))
        self.assertEqual(code, EXIT_BAD_INPUT)
        self.assertIn("Cannot read", err)

    def test_scan_csv(self):
        code, out, _ = run("--format", "csv", "scan", "--from", "1", "--to", "5")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[0], "n,verdict,root_count,witness_lo,witness_hi")
        self.assertEqual(len(lines), 6)

    def test_selftest_single_check(self):
        code, out, _ = run("selftest", "--quick", "--check", "alexander")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("PASS", out)

    def test_bad_input_exit_codes(self):
        self.assertEqual(run("--tolerance", "speed=1", "alexander", "--poly", "1")[0], EXIT_BAD_INPUT)
        self.assertEqual(run("certify", "--n", "0")[0], EXIT_BAD_INPUT)
        self.assertEqual(run("alexander", "--poly", "x^2 + y")[0], EXIT_BAD_INPUT)
        with mock.patch.dict(os.environ, {"HOLONOMY_CERT_MAX_PAIRS": "lots"}):
            code, _, err = run("alexander", "--poly", "1")
        self.assertEqual(code, EXIT_BAD_INPUT)
        self.assertIn("HOLONOMY_CERT_MAX_PAIRS", err)

    def test_argparse_errors(self):
        for argv in (["--frobnicate", "domains"], [], ["certify"], ["--format", "xml", "domains"]):
            with contextlib.redirect_stderr(io.StringIO()) as stderr:
                with self.assertRaises(SystemExit) as ctx:
                    main(argv)
            self.assertEqual(ctx.exception.code, 2)
            self.assertIn("usage", stderr.getvalue())
