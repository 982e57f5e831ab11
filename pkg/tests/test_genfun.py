import random
import unittest
from fractions import Fraction

import sympy

from modules.core.services.errors import NotExpandableError
from modules.genfun import (
    FIB_GF,
    LUCAS_GF,
    ZERO_GF,
    Poly,
    SYMBOL,
    RationalGF,
    decompose_sum_gf,
    decomposition_identities,
    geometric_gf,
    gf_add,
    gf_mul,
    gf_scale,
    gf_sub,
    gf_substitute,
    partial_fractions,
    poly_gcd,
    poly_xgcd,
    printed_decomposition_identities,
    series_coeffs,
    summation_gf,
)
from modules.sequences import fib, lucas


class PolyTests(unittest.TestCase):
    def test_normalisation(self):
        self.assertEqual(Poly.of(1, 2, 0, 0).coefficients, (1, 2))
        self.assertEqual(Poly.of(0, 0).degree, -1)
        self.assertTrue(Poly().is_zero)

    def test_arithmetic(self):
        p = Poly.of(1, -1)
        q = Poly.of(1, 1)
        self.assertEqual(p * q, Poly.of(1, 0, -1))
        self.assertEqual(p + q, Poly.of(2))
        self.assertEqual(p - p, Poly())
        self.assertEqual(p(3), -2)
        self.assertEqual(Poly.of(1, 2, 3).scale_variable(2), Poly.of(1, 4, 12))

    def test_divmod(self):
        quotient, remainder = divmod(Poly.of(1, 0, -1), Poly.of(1, 1))
        self.assertEqual(quotient, Poly.of(1, -1))
        self.assertTrue(remainder.is_zero)
        quotient, remainder = divmod(Poly.of(1, 2, 3), Poly.of(0, 2))
        self.assertEqual(quotient * Poly.of(0, 2) + remainder, Poly.of(1, 2, 3))
        self.assertLess(remainder.degree, 1)
        with self.assertRaises(ZeroDivisionError):
            divmod(Poly.of(1), Poly())

    def test_xgcd(self):
        a = Poly.of(1, -1) * Poly.of(2, 1)
        b = Poly.of(1, -1) * Poly.of(1, 0, 1)
        g, s, t = poly_xgcd(a, b)
        self.assertEqual(g, Poly.of(-1, 1))
        self.assertEqual(s * a + t * b, g)
        self.assertEqual(poly_gcd(Poly.of(1, 1), Poly.of(1, -1)), Poly.of(1))

    def test_sympy_round_trip(self):
        p = Poly.of(Fraction(1, 3), 0, -2)
        self.assertEqual(p.as_expr(), sympy.Rational(1, 3) - 2 * SYMBOL**2)
        self.assertEqual(Poly.from_expr(p.as_expr()), p)
        self.assertEqual(Poly.from_expr((1 - SYMBOL) * (1 + SYMBOL)), Poly.of(1, 0, -1))
        self.assertEqual(Poly().as_sympy.degree(), sympy.S.NegativeInfinity)

    def test_text(self):
        self.assertEqual(Poly.from_text("0, 1/2, -3"), Poly.of(0, Fraction(1, 2), -3))
        self.assertEqual(Poly.of(0, Fraction(1, 2)).to_text(), "0,1/2")
        self.assertEqual(Poly().to_text(), "0")
        for bad in ("", "1,,2", "a", "1/0"):
            with self.assertRaises(ValueError):
                Poly.from_text(bad)


class SeriesTests(unittest.TestCase):
    def test_known_expansions(self):
        self.assertEqual(series_coeffs(FIB_GF, 7), [0, 1, 1, 2, 3, 5, 8])
        self.assertEqual(series_coeffs(LUCAS_GF, 6), [2, 1, 3, 4, 7, 11])
        self.assertEqual(series_coeffs(geometric_gf(1), 4), [1, 1, 1, 1])

    def test_hundred_terms(self):
        self.assertEqual(series_coeffs(FIB_GF, 100), [fib(n) for n in range(100)])
        self.assertEqual(series_coeffs(LUCAS_GF, 100), [lucas(n) for n in range(100)])

    def test_not_expandable(self):
        with self.assertRaises(NotExpandableError):
            RationalGF(Poly.of(1), Poly.of(0, 1))

    def test_non_unit_constant_term(self):
        half_geometric = RationalGF(Poly.of(1), Poly.of(2, -1))
        self.assertEqual(series_coeffs(half_geometric, 4), [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)])

    def test_prefix_sum_law(self):
        for gf, term in ((FIB_GF, fib), (LUCAS_GF, lucas)):
            sums = series_coeffs(gf_mul(geometric_gf(1), gf), 101)
            running = 0
            for n in range(101):
                running += term(n)
                self.assertEqual(sums[n], running)
        self.assertEqual(series_coeffs(gf_mul(geometric_gf(1), FIB_GF), 6), [0, 1, 2, 4, 7, 12])

    def test_convolution_oracle(self):
        rng = random.Random(20240611)
        for _ in range(10):
            a = RationalGF(Poly.of(*[rng.randint(-3, 3) for _ in range(3)]), Poly.of(1, *[rng.randint(-2, 2) for _ in range(2)]))
            b = RationalGF(Poly.of(*[rng.randint(-3, 3) for _ in range(2)]), Poly.of(rng.choice([1, -1, 2]), rng.randint(-2, 2)))
            sa, sb = series_coeffs(a, 12), series_coeffs(b, 12)
            product = series_coeffs(gf_mul(a, b), 12)
            total = series_coeffs(gf_add(a, b), 12)
            for n in range(12):
                self.assertEqual(product[n], sum(sa[k] * sb[n - k] for k in range(n + 1)))
                self.assertEqual(total[n], sa[n] + sb[n])

    def test_identities_and_scaling(self):
        self.assertEqual(gf_add(FIB_GF, ZERO_GF), FIB_GF)
        self.assertEqual(gf_sub(FIB_GF, FIB_GF), ZERO_GF)
        self.assertEqual(series_coeffs(gf_scale(FIB_GF, 3), 5), [0, 3, 3, 6, 9])

    def test_substitution(self):
        self.assertEqual(series_coeffs(gf_substitute(FIB_GF, -1), 6), [0, -1, 1, -2, 3, -5])
        self.assertEqual(series_coeffs(gf_substitute(FIB_GF, 2), 6), [0, 2, 4, 16, 48, 160])
        self.assertEqual(gf_substitute(LUCAS_GF, 1), LUCAS_GF)

    def test_equality_by_cross_multiplication(self):
        self.assertEqual(RationalGF(Poly.of(0, 2), Poly.of(2, -2)), RationalGF(Poly.of(0, 1), Poly.of(1, -1)))
        reduced = gf_mul(FIB_GF, RationalGF(Poly.of(1, -1), Poly.of(1, -1))).reduced()
        self.assertEqual(reduced.den, FIB_GF.den)

    def test_expression_conversion(self):
        self.assertEqual(RationalGF.from_expr(SYMBOL / (1 - SYMBOL - SYMBOL**2)), FIB_GF)
        self.assertEqual(RationalGF.from_expr(LUCAS_GF.as_expr()), LUCAS_GF)
        with self.assertRaises(NotExpandableError):
            RationalGF.from_expr(1 / SYMBOL)

    def test_text_forms(self):
        self.assertEqual(RationalGF.from_text("0,1/1,-1,-1"), FIB_GF)
        self.assertEqual(RationalGF.from_text("1/2//1"), RationalGF(Poly.of(Fraction(1, 2)), Poly.of(1)))
        self.assertEqual(FIB_GF.to_text(), "0,1/1,-1,-1")
        self.assertEqual(RationalGF(Poly.of(Fraction(1, 2)), Poly.of(1)).to_text(), "1/2//1")
        for bad in ("0,1", "1/2/3", "0,1/0,1"):
            with self.assertRaises(ValueError):
                RationalGF.from_text(bad)


class PartialFractionTests(unittest.TestCase):
    def test_split_recombines(self):
        p = Poly.of(1, -1)
        q = Poly.of(1, -1, -1)
        a_part, b_part = partial_fractions(Poly.of(0, 1), p, q)
        self.assertEqual(gf_add(a_part, b_part), RationalGF(Poly.of(0, 1), p * q))
        self.assertLess(a_part.num.degree, p.degree)
        self.assertLess(b_part.num.degree, q.degree)

    def test_split_rejects_bad_input(self):
        with self.assertRaises(ValueError):
            partial_fractions(Poly.of(1, 1, 1), Poly.of(1, -1), Poly.of(1, 1))
        with self.assertRaises(ValueError):
            partial_fractions(Poly.of(1), Poly.of(1, -1), Poly.of(1, -1))

    def test_decompositions_hold_for_m_2_to_10(self):
        for m in range(2, 11):
            for identity in decomposition_identities(m):
                self.assertTrue(identity.holds, msg=f"{identity.label} m={m}")
                fibonacci_part, geometric_part = decompose_sum_gf(identity.label, m)
                self.assertEqual(gf_add(fibonacci_part, geometric_part), identity.rhs)

    def test_sum_fib_decomposition_shape(self):
        m = 3
        d = Fraction(1, m * m + m - 1)
        fibonacci_part, geometric_part = decompose_sum_gf("sum_fib", m)
        self.assertEqual(fibonacci_part, RationalGF(Poly.of(1, m * m) * (m * d), Poly.of(1, -m, -m * m)))
        self.assertEqual(geometric_part, RationalGF(Poly.of(-m * d), Poly.of(1, -1)))

    def test_vanishing_geometric_part(self):
        fibonacci_part, geometric_part = decompose_sum_gf("sum_lucas", 2)
        self.assertTrue(geometric_part.num.is_zero)
        self.assertEqual(geometric_part.den, Poly.of(1, -1))
        self.assertEqual(fibonacci_part, summation_gf("sum_lucas", 2))

    def test_parts_are_normalised(self):
        for label in ("sum_fib", "alt_lucas"):
            fibonacci_part, geometric_part = decompose_sum_gf(label, 5)
            self.assertEqual(fibonacci_part.den.coefficient(0), 1)
            self.assertEqual(geometric_part.den, Poly.of(1, -1 if label == "sum_fib" else -5))

    def test_printed_alternating_lucas_sign_fails(self):
        for m in range(2, 11):
            printed = {identity.label: identity.holds for identity in printed_decomposition_identities(m)}
            self.assertEqual(printed, {"sum_fib": True, "sum_lucas": True, "alt_fib": True, "alt_lucas": False})

    def test_unknown_label(self):
        with self.assertRaises(ValueError):
            decompose_sum_gf("sum_pell", 2)


if __name__ == "__main__":
    unittest.main()
