# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from unittest import TestCase

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from ..data import m137
from ..exceptions import DomainError, UserError
from ..models.group_word import GroupWord, word_matrix, word_matrix_numeric
from ..models.poly import LaurentPoly
from ..models.sym_matrix import SymMatrix2

words = st.lists(
    st.tuples(st.sampled_from(["l", "b"]), st.integers(-2, 2)), max_size=4
).map(lambda letters: GroupWord(tuple(letters)))


class TestWordMatrix(TestCase):
    def setUp(self):
        super().setUp()
        z = LaurentPoly.gen("z")
        x = LaurentPoly.gen("x")
        y = LaurentPoly.gen("y")
        self.longitude = SymMatrix2(z, 1, 0, z ** -1)
        self.images = {
            "l": self.longitude,
            "b": SymMatrix2(x, 0, y, x ** -1),
        }

    def test_empty_word_is_identity(self):
        self.assertTrue(word_matrix(GroupWord(), self.images).is_identity())
        self.assertEqual(str(GroupWord.parse("1")), "1")

    def test_longitude_image(self):
        self.assertEqual(word_matrix(m137.longitude(), self.images), self.longitude)

    def test_inverse_uses_adjugate(self):
        inverse = word_matrix(GroupWord.parse("l^-1"), self.images)
        self.assertEqual(inverse, SymMatrix2(LaurentPoly.gen("z") ** -1, -1, 0, LaurentPoly.gen("z")))
        self.assertTrue((inverse * self.longitude).is_identity())

    def test_relator_under_identity_images(self):
        images = {"l": SymMatrix2.identity(), "b": SymMatrix2.identity()}
        lhs, rhs = m137.relator()
        self.assertTrue(word_matrix(lhs, images).is_identity())
        self.assertTrue(word_matrix(rhs, images).is_identity())

    def test_missing_image(self):
        with self.assertRaises(UserError):
            word_matrix(GroupWord.parse("a"), self.images)

    def test_singular_matrix_has_no_inverse(self):
        with self.assertRaises(DomainError):
            SymMatrix2(2, 0, 0, 1).inverse()

    def test_cleared_entries(self):
        (e11, _), _, _, (e22, shifts) = self.longitude.cleared()
        self.assertEqual(str(e11), "z")
        self.assertEqual((str(e22), shifts), ("1", {"z": 1}))

    @settings(max_examples=25, deadline=None)
    @given(words)
    def test_determinant_is_one(self, word):
        self.assertEqual(word_matrix(word, self.images).det(), 1)

    @settings(max_examples=25, deadline=None)
    @given(words, words)
    def test_homomorphism(self, first, second):
        self.assertEqual(
            word_matrix(first * second, self.images),
            word_matrix(first, self.images) * word_matrix(second, self.images),
        )

    def test_numeric_product_matches_symbolic(self):
        point = {"z": 2.0, "x": 0.5, "y": 3.0}
        numeric = {
            name: np.array(image.evaluate(point), dtype=complex)
            for name, image in self.images.items()
        }
        word = m137.meridian()
        expected = np.array(word_matrix(word, self.images).evaluate(point), dtype=complex)
        np.testing.assert_allclose(word_matrix_numeric(word, numeric), expected)


class TestGroupWord(TestCase):
    def test_parse_and_print(self):
        word = GroupWord.parse(m137.RELATOR_LHS)
        self.assertEqual(str(word), m137.RELATOR_LHS)
        self.assertEqual(len(word), 7)

    def test_free_reduction(self):
        word = GroupWord.parse("b^2*b^-2*l*l")
        self.assertEqual(word.letters, (("l", 2),))
        self.assertEqual(len(word * word.inverse()), 0)

    def test_bad_letter(self):
        with self.assertRaises(UserError):
            GroupWord.parse("b^x")
