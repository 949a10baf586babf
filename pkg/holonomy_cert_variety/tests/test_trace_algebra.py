# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

from unittest import TestCase

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from holonomy_cert_base.exceptions import UserError
from holonomy_cert_base.models.group_word import GroupWord, word_matrix_numeric
from holonomy_cert_base.models.poly import MultiPoly

from ..models.trace_algebra import (
    TraceAlgebraElement,
    kappa,
    relator_trace_equations,
    word_element,
    word_trace,
)


def _random_sl2(rng):
    while True:
        m = rng.normal(size=(2, 2))
        det = np.linalg.det(m)
        if det > 0.1:
            return m / np.sqrt(det)


def _traces(a, b):
    return {"s": np.trace(a), "t": np.trace(b), "w": np.trace(a @ b)}


class TestTraceAlgebra(TestCase):
    def test_generator_traces(self):
        self.assertEqual(word_trace(GroupWord.parse("l")), MultiPoly.parse("s"))
        self.assertEqual(word_trace(GroupWord.parse("b")), MultiPoly.parse("t"))
        self.assertEqual(word_trace(GroupWord.parse("l*b")), MultiPoly.parse("w"))
        self.assertEqual(word_trace(GroupWord.parse("l^-1")), MultiPoly.parse("s"))
        self.assertEqual(word_trace(GroupWord.parse("l^2")), MultiPoly.parse("s^2 - 2"))
        self.assertEqual(word_trace(GroupWord.parse("l*b^-1")), MultiPoly.parse("s*t - w"))
        self.assertEqual(word_trace(GroupWord.parse("1")), 2)

    def test_commutator_trace(self):
        commutator = GroupWord.parse("l*b*l^-1*b^-1")
        self.assertEqual(word_trace(commutator) - 2, kappa())

    def test_inverse(self):
        for word in ("l*b", "b^2*l^-1", "l^-1*b^-1*l"):
            element = word_element(GroupWord.parse(word))
            self.assertEqual(element * element.inverse(), TraceAlgebraElement.unit())

    def test_inverse_of_mixed_word_matches_inverse_word(self):
        word = GroupWord.parse("l*b*l*b")
        element = word_element(word)
        self.assertTrue(element.coefficients[3])
        self.assertEqual(element.inverse(), word_element(word.inverse()))
        self.assertEqual(element.inverse() * element, TraceAlgebraElement.unit())

    def test_table_against_matrices(self):
        rng = np.random.default_rng(7)
        for _ in range(5):
            a, b = _random_sl2(rng), _random_sl2(rng)
            basis = [np.eye(2), a, b, a @ b]
            values = _traces(a, b)
            for i in range(1, 4):
                for j in range(1, 4):
                    product = TraceAlgebraElement.basis(i) * TraceAlgebraElement.basis(j)
                    expected = sum(
                        float(c.evaluate(values)) * e
                        for c, e in zip(product.coefficients, basis)
                    )
                    np.testing.assert_allclose(basis[i] @ basis[j], expected, atol=1e-9)

    @settings(max_examples=30, deadline=None)
    @given(
        st.lists(
            st.tuples(st.sampled_from("lb"), st.integers(-3, 3)), min_size=1, max_size=6
        ),
        st.integers(0, 2 ** 16),
    )
    def test_word_trace_matches_matrices(self, letters, seed):
        rng = np.random.default_rng(seed)
        a, b = _random_sl2(rng), _random_sl2(rng)
        word = GroupWord(tuple(letters))
        numeric = word_matrix_numeric(word, {"l": a, "b": b})
        value = complex(word_trace(word).evaluate(_traces(a, b)))
        self.assertAlmostEqual(value.real, np.trace(numeric).real, delta=1e-6 * (1 + abs(value)))

    def test_unknown_generator(self):
        with self.assertRaises(UserError):
            word_element(GroupWord.parse("c"))

    def test_relator_equations(self):
        equations = relator_trace_equations()
        self.assertEqual(len(equations), 4)
        self.assertTrue(any(not e.is_zero for e in equations))
