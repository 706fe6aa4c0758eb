"""
Unit tests for the chars module.
"""
import unittest

from src.chars import (AddChar, MultChar, ParamSet, cubic_chars, default_psi,
                       delta_char, eval_mult, nth_root_chars, parse_char,
                       parse_paramset, quadratic_char, trivial_char)
from src.cyclo import CycloNum, root_of_unity
from src.errors import FieldMismatchError, NoSuchCharacterError, ParseError
from src.gf import field_from_q


class TestMultiplicativeCharacters(unittest.TestCase):
    """χ_j on k*, extended by zero."""

    def setUp(self):
        self.f5 = field_from_q(5)
        self.f7 = field_from_q(7)

    def test_index_is_reduced(self):
        self.assertEqual(MultChar(self.f5, 5).index, 1)
        self.assertEqual(MultChar(self.f5, -1).index, 3)

    def test_values(self):
        chi = MultChar(self.f5, 1)
        # generator 2 maps to ζ_4
        self.assertEqual(chi(2), root_of_unity(4, 1))
        self.assertEqual(chi(4), -1)
        self.assertTrue(chi(0).is_zero())
        self.assertTrue(trivial_char(self.f5)(0).is_zero())
        self.assertEqual(trivial_char(self.f5)(3), 1)

    def test_sign_matches_value_at_minus_one(self):
        for q in (3, 4, 5, 7, 8, 9):
            field = field_from_q(q)
            minus_one = field.neg(1)
            for j in range(field.unit_order):
                chi = MultChar(field, j)
                self.assertEqual(chi(minus_one), chi.sign(), f"q={q}, j={j}")

    def test_orthogonality(self):
        for q in (4, 7, 9):
            field = field_from_q(q)
            for j in range(field.unit_order):
                total = sum((eval_mult(MultChar(field, j), x) for x in range(q)),
                            CycloNum.zero())
                expected = field.unit_order if j == 0 else 0
                self.assertEqual(total, expected)

    def test_group_operations(self):
        a, b = MultChar(self.f7, 2), MultChar(self.f7, 5)
        self.assertEqual((a * b).index, 1)
        self.assertEqual((a / b).index, 3)
        self.assertEqual((a ** 3).index, 0)
        self.assertEqual(a.conj().index, 4)
        self.assertEqual(a.order(), 3)
        self.assertEqual(str(trivial_char(self.f7)), "eps")
        self.assertEqual(delta_char(a ** 3), 1)

    def test_field_mismatch(self):
        with self.assertRaises(FieldMismatchError):
            MultChar(self.f5, 1) * MultChar(self.f7, 1)

    def test_special_characters(self):
        self.assertEqual(quadratic_char(self.f7).index, 3)
        self.assertEqual(tuple(c.index for c in cubic_chars(self.f7)), (2, 4))
        with self.assertRaises(NoSuchCharacterError):
            quadratic_char(field_from_q(4))
        with self.assertRaises(NoSuchCharacterError):
            cubic_chars(self.f5)

    def test_nth_root_chars(self):
        self.assertEqual([c.index for c in nth_root_chars(self.f7, 3)], [0, 2, 4])
        self.assertEqual([c.index for c in nth_root_chars(self.f7, 4)], [0, 3])
        self.assertEqual(len(nth_root_chars(field_from_q(8), 7)), 7)
        with self.assertRaises(ValueError):
            nth_root_chars(self.f7, 0)


class TestAdditiveCharacters(unittest.TestCase):
    """ψ_a(x) = ζ_p^{Tr(ax)}."""

    def test_values(self):
        field = field_from_q(5)
        psi = default_psi(field)
        self.assertEqual(psi(0), 1)
        self.assertEqual(psi(1), root_of_unity(5, 1))
        self.assertEqual(AddChar(field, 2)(1), root_of_unity(5, 2))

    def test_sum_vanishes(self):
        for q in (4, 8, 9):
            field = field_from_q(q)
            psi = default_psi(field)
            total = sum((psi(x) for x in range(q)), CycloNum.zero())
            self.assertTrue(total.is_zero())

    def test_zero_shift(self):
        with self.assertRaises(NoSuchCharacterError):
            AddChar(field_from_q(5), 0)


class TestParamSet(unittest.TestCase):
    """Multisets of characters."""

    def setUp(self):
        self.field = field_from_q(7)

    def test_normalization(self):
        a = ParamSet.of(self.field, [2, 1, 1, 8])
        self.assertEqual(a.degree, 4)
        self.assertEqual(len(a), 4)
        self.assertEqual(a.multiplicity(1), 2)
        self.assertEqual(a.multiplicity(2), 2)
        self.assertEqual(a, ParamSet.of(self.field, [1, 2, 2, 1]))
        self.assertEqual(a.indices, (1, 1, 2, 2))

    def test_pairing(self):
        a = ParamSet.of(self.field, [1, 1, 2])
        b = ParamSet.of(self.field, [1, 3])
        self.assertEqual(a.pairing(b), 2)
        self.assertEqual(a.pairing(ParamSet(self.field)), 0)

    def test_shift_conj_union(self):
        a = ParamSet.of(self.field, [0, 5])
        self.assertEqual(a.shift(MultChar(self.field, 1)).indices, (0, 1))
        self.assertEqual(a.conj().indices, (0, 1))
        self.assertEqual((a + a).degree, 4)
        self.assertEqual(str(a), "eps,chi:5")

    def test_field_mismatch(self):
        with self.assertRaises(FieldMismatchError):
            ParamSet.of(self.field, [1]).pairing(ParamSet.of(field_from_q(5), [1]))


class TestParsing(unittest.TestCase):
    """Character and parameter-set syntax."""

    def setUp(self):
        self.field = field_from_q(7)

    def test_tokens(self):
        self.assertEqual(parse_char(self.field, "eps").index, 0)
        self.assertEqual(parse_char(self.field, "phi").index, 3)
        self.assertEqual(parse_char(self.field, "rho").index, 2)
        self.assertEqual(parse_char(self.field, "chi:-1").index, 5)
        self.assertEqual(parse_char(self.field, "4").index, 4)

    def test_paramset(self):
        a = parse_paramset(self.field, "eps, chi:2,phi")
        self.assertEqual(a.indices, (0, 2, 3))
        self.assertEqual(parse_paramset(self.field, "  ").degree, 0)

    def test_error_position(self):
        with self.assertRaises(ParseError) as ctx:
            parse_paramset(self.field, "eps,chi:x")
        self.assertEqual(ctx.exception.position, 4)
        self.assertEqual(ctx.exception.text, "eps,chi:x")

    def test_missing_character(self):
        with self.assertRaises(NoSuchCharacterError):
            parse_char(field_from_q(5), "rho")


if __name__ == '__main__':
    unittest.main(argv=['first-arg-is-ignored'], exit=False)
