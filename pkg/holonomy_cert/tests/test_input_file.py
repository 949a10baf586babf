# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

import os
import tempfile
from unittest import TestCase

from holonomy_cert_base.exceptions import UserError

from ..models.input_file import decode_input, read_input


class TestInputFile(TestCase):
    def test_utf8(self):
        self.assertEqual(decode_input("s^2 - 1\n".encode("utf-8")), "s^2 - 1\n")

    def test_explicit_encoding(self):
        self.assertEqual(decode_input("x - 1".encode("utf-16"), "utf-16"), "x - 1")

    def test_detected_encoding(self):
        text = "# g\xe9n\xe9rateurs de l'id\xe9al, ann\xe9e derni\xe8re\nx^2 - y\nx*y - 1\n" * 4
        decoded = decode_input(text.encode("latin-1"))
        self.assertIn("x^2 - y", decoded)
        self.assertIn("x*y - 1", decoded)

    def test_read_input(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "basis.txt")
            with open(path, "wb") as handle:
                handle.write(b"x - y\n")
            self.assertEqual(read_input(path), "x - y\n")
            with self.assertRaises(UserError):
                read_input(os.path.join(directory, "missing.txt"))
