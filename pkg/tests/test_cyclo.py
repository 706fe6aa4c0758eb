"""
Unit tests for the cyclo module.
"""
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from src.cyclo import (CycloNum, group_ring_product, lies_in_subfield,
                       root_of_unity, sum_twisted)
from src.errors import (CycloDivisionByZero, NotCoprimeError, NotDivisorError,
                        NotInSubfieldError)

small_coeffs = st.lists(st.integers(-5, 5), min_size=0, max_size=12)


class TestCycloArithmetic(unittest.TestCase):
    """Field operations in Q(ζ_m)."""

    def test_cube_roots_sum_to_zero(self):
        total = root_of_unity(3, 1) + root_of_unity(3, 2) + 1
        self.assertTrue(total.is_zero())

    def test_i_squared(self):
        i = CycloNum(4, [0, 1])
        self.assertEqual(i * i, -1)
        self.assertEqual(i ** 4, 1)
        self.assertEqual(i ** -1, -i)

    def test_reduction_past_phi(self):
        # ζ_3^2 = -1 - ζ_3
        self.assertEqual(CycloNum(3, [0, 0, 1]), CycloNum(3, [-1, -1]))
        self.assertEqual(root_of_unity(5, 7), root_of_unity(5, 2))

    def test_cross_conductor_equality_and_hash(self):
        self.assertEqual(root_of_unity(2, 1), -1)
        self.assertEqual(root_of_unity(6, 2), root_of_unity(3, 1))
        self.assertEqual(hash(root_of_unity(6, 2)), hash(root_of_unity(3, 1)))
        self.assertEqual(hash(CycloNum.rational(Fraction(3, 2), 12)), hash(Fraction(3, 2)))
        self.assertNotEqual(root_of_unity(12, 1), root_of_unity(3, 1))

    def test_inverse(self):
        x = CycloNum(5, [1, 2, 0, 3])
        self.assertEqual(x * x.inverse(), 1)
        self.assertEqual(1 / x, x.inverse())
        self.assertEqual((x / x), 1)

    def test_division_by_zero(self):
        with self.assertRaises(CycloDivisionByZero):
            CycloNum.zero(7).inverse()
        with self.assertRaises(ZeroDivisionError):
            root_of_unity(3) / 0

    def test_galois_and_conjugation(self):
        self.assertEqual(root_of_unity(8, 3).conj(), root_of_unity(8, 5))
        self.assertEqual(root_of_unity(7, 1).galois(3), root_of_unity(7, 3))
        with self.assertRaises(NotCoprimeError):
            root_of_unity(4, 1).galois(2)

    def test_norm(self):
        self.assertEqual(CycloNum(4, [1, 1]).norm(), 2)
        # ζ_5 is a unit
        self.assertEqual(root_of_unity(5, 1).norm(), 1)

    def test_rational_detection(self):
        sqrt_minus3 = root_of_unity(3, 1) - root_of_unity(3, 2)
        self.assertFalse(sqrt_minus3.is_rational())
        self.assertEqual((sqrt_minus3 * sqrt_minus3).to_rational(), -3)
        with self.assertRaises(NotInSubfieldError):
            sqrt_minus3.to_rational()

    def test_complex_embedding(self):
        z = root_of_unity(4, 1).to_complex()
        self.assertAlmostEqual(z.real, 0.0)
        self.assertAlmostEqual(z.imag, 1.0)
        self.assertIn("i", root_of_unity(6, 1).approx())

    def test_json_round_trip(self):
        x = CycloNum(12, [Fraction(1, 3), 0, -2, 5])
        self.assertEqual(CycloNum.from_json(x.to_json()), x)
        self.assertEqual(x.to_json()["m"], 12)

    def test_str(self):
        self.assertEqual(str(CycloNum.zero()), "0")
        self.assertEqual(str(root_of_unity(12, 3)), "z12^3")

    @settings(max_examples=60, deadline=None)
    @given(small_coeffs, small_coeffs, small_coeffs)
    def test_ring_axioms(self, a, b, c):
        x, y, z = CycloNum(12, a), CycloNum(12, b), CycloNum(12, c)
        self.assertEqual(x * y, y * x)
        self.assertEqual((x + y) * z, x * z + y * z)
        self.assertEqual((x - y) + y, x)


class TestConductorChanges(unittest.TestCase):
    """lift, lower and subfield membership."""

    def test_lift_and_lower(self):
        z = root_of_unity(3, 1)
        lifted = z.lift(12)
        self.assertEqual(lifted.m, 12)
        self.assertEqual(lifted, z)
        lowered = lifted.lower(3)
        self.assertEqual(lowered.m, 3)
        self.assertEqual(lowered.to_json(), z.to_json())

    def test_lift_to_non_multiple(self):
        with self.assertRaises(NotDivisorError):
            root_of_unity(3, 1).lift(5)

    def test_lower_outside_subfield(self):
        with self.assertRaises(NotInSubfieldError):
            root_of_unity(12, 1).lower(3)

    def test_lies_in_subfield(self):
        self.assertTrue(lies_in_subfield(root_of_unity(3, 1).lift(12), 3))
        self.assertFalse(lies_in_subfield(root_of_unity(12, 1), 3))
        self.assertTrue(lies_in_subfield(CycloNum.rational(7, 15), 1))
        with self.assertRaises(NotDivisorError):
            lies_in_subfield(root_of_unity(12, 1), 5)

    def test_lies_in_subfield_rationals(self):
        self.assertTrue(lies_in_subfield(CycloNum.zero(), 6))
        self.assertTrue(lies_in_subfield(CycloNum.rational(3), 4, 12))
        with self.assertRaises(NotDivisorError):
            lies_in_subfield(CycloNum.rational(3), 5, 12)


class TestGroupRing(unittest.TestCase):
    """Sparse accumulation helpers."""

    def test_group_ring_product(self):
        # (1 + x)(1 - x) = 1 - x^2 in Z[x]/(x^4 - 1)
        vector = group_ring_product(4, [((0, 1), (1, 1)), ((0, 1), (1, -1))])
        self.assertEqual(vector, [1, 0, -1, 0])
        self.assertEqual(CycloNum.from_group_ring(4, vector), 2)

    def test_group_ring_product_wraps_and_stays_exact(self):
        big = 10 ** 30
        # x^2 * x^2 = x in Z[x]/(x^3 - 1)
        vector = group_ring_product(3, [((2, big),), ((2, big),)])
        self.assertEqual(vector, [0, big * big, 0])
        self.assertTrue(all(type(c) is int for c in vector))

    def test_product_with_large_coefficients(self):
        big = 10 ** 25
        a = CycloNum(5, [big, 1])
        self.assertEqual(a * a, CycloNum(5, [big * big, 2 * big, 1]))

    def test_sum_twisted(self):
        terms = [(CycloNum.rational(1), k) for k in range(5)]
        self.assertTrue(sum_twisted(terms, 5).is_zero())
        mixed = sum_twisted([(root_of_unity(3, 1), 0), (CycloNum.rational(2), 1)], 4)
        self.assertEqual(mixed, root_of_unity(3, 1) + 2 * root_of_unity(4, 1))


if __name__ == '__main__':
    unittest.main(argv=['first-arg-is-ignored'], exit=False)
