#!/usr/bin/env python
import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from rational_expanders.algebra.scalar import QuadraticScalar
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.utils.exceptions import GcdUndefinedException, \
    InputException


coefficients = st.lists(st.integers(-6, 6), min_size=1, max_size=6)
nonzero = coefficients.filter(lambda c: any(c))


class Test(unittest.TestCase):

    def setUp(self):
        self.x = UniPoly.x()

    def testCanonicalForm(self):
        self.assertEqual((Fraction(1),), UniPoly((1, 0, 0)).coefficients)
        self.assertEqual(0, UniPoly((1, 0, 0)).degree)
        self.assertEqual(float('-inf'), UniPoly.zero().degree)
        self.assertTrue(UniPoly((0, 0)).is_zero())
        self.assertEqual(UniPoly((-1, 0, 1)), self.x ** 2 - 1)
        self.assertEqual(Fraction(0), UniPoly((1, 2))[5])

    def testDivmod(self):
        quotient, remainder = (self.x ** 2 - 1).divmod(self.x - 1)
        self.assertEqual(self.x + 1, quotient)
        self.assertTrue(remainder.is_zero())
        quotient, remainder = (self.x ** 3 + 2).divmod(self.x ** 2)
        self.assertEqual(self.x, quotient)
        self.assertEqual(UniPoly.constant(2), remainder)
        self.assertRaises(InputException, (self.x ** 2).exact_div,
                          self.x + 1)

    def testGcd(self):
        p = self.x ** 2 - 1
        q = self.x ** 2 - 2 * self.x + 1
        self.assertEqual(self.x - 1, p.gcd(q))
        self.assertEqual(self.x - Fraction(1, 2),
                         (2 * self.x - 1).gcd(UniPoly.zero()))
        self.assertEqual(UniPoly.one(), self.x.gcd(self.x + 1))
        self.assertRaises(GcdUndefinedException, UniPoly.zero().gcd,
                          UniPoly.zero())

    def testSquareFreePart(self):
        p = (self.x - 1) ** 2 * (self.x + 2)
        self.assertEqual(self.x ** 2 + self.x - 2, p.square_free_part())
        self.assertFalse(p.is_square_free())
        self.assertTrue(p.square_free_part().is_square_free())

    def testQuadraticFieldCoefficients(self):
        sqrt2 = QuadraticScalar(0, 1, 2)
        p = (self.x - sqrt2) * (self.x - 1)
        q = (self.x - sqrt2) * (self.x + 1)
        self.assertFalse(p.is_rational())
        self.assertEqual(self.x - sqrt2, p.gcd(q))
        self.assertEqual(self.x ** 2 - 2, p.gcd(q) * (self.x + sqrt2))
        quotient, remainder = p.divmod(self.x - sqrt2)
        self.assertEqual(self.x - 1, quotient)
        self.assertTrue(remainder.is_zero())
        self.assertEqual(self.x - sqrt2,
                         ((self.x - sqrt2) ** 2).square_free_part())

    def testEvaluateAndCompose(self):
        p = self.x ** 2
        self.assertEqual(Fraction(9, 4), p(Fraction(3, 2)))
        self.assertEqual(self.x ** 2 + 2 * self.x + 1,
                         p.compose(self.x + 1))
        self.assertEqual(UniPoly((1, 2, 3)).reverse(3),
                         UniPoly((0, 3, 2, 1)))

    def testFromRoots(self):
        p = UniPoly.from_roots([1, -2])
        self.assertEqual(self.x ** 2 + self.x - 2, p)

    def testIntegerCoefficients(self):
        p = UniPoly((Fraction(1, 2), Fraction(-1, 3)))
        self.assertEqual([-3, 2], p.integer_coefficients())
        self.assertEqual([], UniPoly.zero().integer_coefficients())

    def testText(self):
        self.assertEqual("2*x^2 - 3*x + 1", UniPoly((1, -3, 2)).to_text())
        self.assertEqual("-t", UniPoly((0, -1)).to_text('t'))
        self.assertEqual("0", UniPoly.zero().to_text())

    @settings(derandomize=True, deadline=None)
    @given(coefficients, nonzero)
    def testDivisionIdentity(self, a, b):
        p = UniPoly(a)
        q = UniPoly(b)
        quotient, remainder = p.divmod(q)
        self.assertEqual(p, quotient * q + remainder)
        self.assertLess(remainder.degree, q.degree)
        self.assertEqual(p, (p * q).exact_div(q))

    @settings(derandomize=True, deadline=None)
    @given(nonzero, nonzero, nonzero)
    def testGcdDividesAndIsMonic(self, a, b, c):
        common = UniPoly(c)
        p = UniPoly(a) * common
        q = UniPoly(b) * common
        g = p.gcd(q)
        self.assertEqual(Fraction(1), g.leading_coefficient)
        self.assertTrue(g.divides(p))
        self.assertTrue(g.divides(q))
        self.assertTrue(common.monic().divides(g))

    @settings(derandomize=True, deadline=None)
    @given(coefficients, coefficients, st.fractions(-3, 3,
                                                    max_denominator=4))
    def testCompositionEvaluates(self, a, b, value):
        p = UniPoly(a)
        q = UniPoly(b)
        self.assertEqual(p(q(value)), p.compose(q)(value))


if __name__ == "__main__":
    unittest.main()
