"""
Unit tests for the sums module.
"""
import unittest
from fractions import Fraction
from itertools import product

from src.chars import AddChar, MultChar, ParamSet, default_psi, trivial_char
from src.errors import FieldMismatchError, NotDivisorError
from src.gf import field_from_q
from src.sums import (check_davenport_hasse, check_pochhammer_multiplication,
                      gauss, gauss0, gauss_inverse, gauss_table, jacobi,
                      jacobi_gauss_sides, jacobi_pochhammer_bridge, pochhammer,
                      pochhammer0)

SMALL_Q = (3, 4, 5, 7, 8, 9)


def _chars(field):
    return [MultChar(field, j) for j in range(field.unit_order)]


class TestGaussSums(unittest.TestCase):
    """g(χ) = -Σ ψ(x)χ(x)."""

    def test_trivial_character(self):
        for q in SMALL_Q:
            field = field_from_q(q)
            self.assertEqual(gauss(trivial_char(field)), 1)
            self.assertEqual(gauss0(trivial_char(field)), q)

    def test_reflection(self):
        for q in SMALL_Q:
            field = field_from_q(q)
            for chi in _chars(field)[1:]:
                self.assertEqual(gauss(chi) * gauss(chi.conj()), chi.sign() * q,
                                 f"q={q}, {chi}")

    def test_quadratic_gauss_sum_squares(self):
        phi5 = MultChar(field_from_q(5), 2)
        self.assertEqual(gauss(phi5) ** 2, 5)
        phi3 = MultChar(field_from_q(3), 1)
        self.assertEqual(gauss(phi3) ** 2, -3)

    def test_inverse(self):
        for q in (4, 5, 7):
            for chi in _chars(field_from_q(q)):
                self.assertEqual(gauss(chi) * gauss_inverse(chi), 1)

    def test_change_of_additive_character(self):
        field = field_from_q(7)
        for a in range(2, 7):
            psi = AddChar(field, a)
            for chi in _chars(field):
                self.assertEqual(gauss(chi, psi), chi.conj()(a) * gauss(chi))

    def test_values_are_algebraic_integers(self):
        for q in (5, 8, 9):
            for chi in _chars(field_from_q(q)):
                self.assertTrue(all(c.denominator == 1 for c in gauss(chi).coeffs))

    def test_tables_are_shared(self):
        field = field_from_q(5)
        self.assertIs(gauss_table(field=field), gauss_table(default_psi(field)))
        self.assertIsNot(gauss_table(AddChar(field, 2)), gauss_table(field=field))

    def test_field_mismatch(self):
        with self.assertRaises(FieldMismatchError):
            gauss(MultChar(field_from_q(5), 1), default_psi(field_from_q(7)))


class TestJacobiSums(unittest.TestCase):
    """j(χ, χ') = -Σ_{x+y=1} χ(x)χ'(y)."""

    def test_trivial_pair(self):
        for q in SMALL_Q:
            field = field_from_q(q)
            self.assertEqual(jacobi(trivial_char(field), trivial_char(field)), 2 - q)

    def test_conjugate_pair(self):
        for q in SMALL_Q:
            for chi in _chars(field_from_q(q))[1:]:
                self.assertEqual(jacobi(chi, chi.conj()), chi.sign())

    def test_absolute_value(self):
        for q in (5, 7, 9):
            field = field_from_q(q)
            for chi, chi2 in product(_chars(field)[1:], repeat=2):
                if (chi * chi2).is_trivial():
                    continue
                j = jacobi(chi, chi2)
                self.assertEqual(j * j.conj(), q)

    def test_symmetry(self):
        field = field_from_q(9)
        for chi, chi2 in product(_chars(field), repeat=2):
            self.assertEqual(jacobi(chi, chi2), jacobi(chi2, chi))

    def test_gauss_sum_expression(self):
        for q in (4, 5, 7, 8):
            field = field_from_q(q)
            for chi, chi2 in product(_chars(field), repeat=2):
                lhs, rhs = jacobi_gauss_sides(chi, chi2)
                self.assertEqual(lhs, rhs, f"q={q}, {chi}, {chi2}")

    def test_field_mismatch(self):
        with self.assertRaises(FieldMismatchError):
            jacobi(MultChar(field_from_q(5), 1), MultChar(field_from_q(7), 1))


class TestDavenportHasse(unittest.TestCase):
    """Multiplication formula for Gauss sums."""

    def test_holds_for_every_divisor(self):
        for q, divisors in ((7, (1, 2, 3, 6)), (9, (2, 4)), (13, (3, 4))):
            field = field_from_q(q)
            for n in divisors:
                for chi in _chars(field):
                    self.assertTrue(check_davenport_hasse(chi, n), f"q={q}, n={n}, {chi}")

    def test_non_divisor(self):
        with self.assertRaises(NotDivisorError):
            check_davenport_hasse(MultChar(field_from_q(7), 1), 5)


class TestPochhammer(unittest.TestCase):
    """(A)_ν and (A)°_ν."""

    def setUp(self):
        self.field = field_from_q(7)
        self.eps = trivial_char(self.field)

    def test_trivial_step(self):
        a = ParamSet.of(self.field, [0, 2, 3])
        self.assertEqual(pochhammer(a, self.eps), 1)
        self.assertEqual(pochhammer0(a, self.eps), 1)

    def test_multiplicative_in_the_parameter_set(self):
        nu = MultChar(self.field, 5)
        a, b = MultChar(self.field, 1), MultChar(self.field, 2)
        self.assertEqual(pochhammer(ParamSet.of(self.field, [a, b]), nu),
                         pochhammer(a, nu) * pochhammer(b, nu))

    def test_single_values(self):
        nu = MultChar(self.field, 4)
        self.assertEqual(pochhammer(self.eps, nu), gauss(nu))
        self.assertEqual(pochhammer0(self.eps, nu), gauss(nu) * Fraction(1, 7))

    def test_multiplication_formula(self):
        for q, divisors in ((5, (2, 4)), (7, (2, 3))):
            field = field_from_q(q)
            for n in divisors:
                for alpha, nu in product(_chars(field), repeat=2):
                    self.assertTrue(check_pochhammer_multiplication(alpha, nu, n),
                                    f"q={q}, n={n}, {alpha}, {nu}")

    def test_jacobi_bridge(self):
        for q in (5, 7):
            field = field_from_q(q)
            for alpha, beta, nu in product(_chars(field), repeat=3):
                lhs, rhs = jacobi_pochhammer_bridge(alpha, beta, nu)
                self.assertEqual(lhs, rhs, f"q={q}, {alpha}, {beta}, {nu}")


if __name__ == '__main__':
    unittest.main(argv=['first-arg-is-ignored'], exit=False)
