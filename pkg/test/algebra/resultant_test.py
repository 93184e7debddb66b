#!/usr/bin/env python
import unittest
from fractions import Fraction

from rational_expanders.algebra.bivariate_polynomial import BiPoly, X1, X2
from rational_expanders.algebra.rational_function import UniRat
from rational_expanders.algebra.resultant import bareiss_determinant, \
    bilinear_coefficients, cross_poly, is_irreducible_bilinear, resultant, \
    resultant_univariate, sylvester_matrix
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.utils.exceptions import DegreeException


class Test(unittest.TestCase):

    def setUp(self):
        self.x = UniPoly.x()
        self.x1 = BiPoly.x1()
        self.x2 = BiPoly.x2()

    def testBivariateResultant(self):
        self.assertEqual(UniPoly((1, 0, -1)), resultant(
            self.x1 * self.x2 - 1, self.x1 - self.x2, X1))
        self.assertEqual(UniPoly((0, 0, 1)), resultant(
            self.x2 - self.x1 ** 2, self.x2, X2))
        self.assertRaises(DegreeException, resultant, self.x2,
                          self.x1 - 1, X1)

    def testUnivariateResultant(self):
        self.assertEqual(Fraction(-1),
                         resultant_univariate(self.x, self.x - 1))
        self.assertEqual(Fraction(0),
                         resultant_univariate(self.x ** 2 - 1, self.x - 1))
        self.assertEqual(Fraction(4), resultant_univariate(
            self.x ** 2 + 1, self.x ** 2 - 1))
        self.assertRaises(DegreeException, resultant_univariate,
                          UniPoly.constant(2), self.x)

    def testBareissMatchesCofactorExpansion(self):
        rows = [[UniPoly((2,)), UniPoly((0, 1)), UniPoly((1,))],
                [UniPoly((1, 1)), UniPoly((3,)), UniPoly((0,))],
                [UniPoly((0,)), UniPoly((1,)), UniPoly((0, 0, 1))]]

        def minor(i, j):
            return [[rows[a][b] for b in range(3) if b != j]
                    for a in range(3) if a != i]

        def det2(m):
            return m[0][0] * m[1][1] - m[0][1] * m[1][0]
        expected = UniPoly.zero()
        for j in range(3):
            sign = 1 if j % 2 == 0 else -1
            expected = expected + rows[0][j] * det2(minor(0, j)) * sign
        self.assertEqual(expected, bareiss_determinant(rows))

    def testSylvesterMatrixLayout(self):
        p = [UniPoly.constant(c) for c in (1, 2, 3)]
        q = [UniPoly.constant(c) for c in (4, 5)]
        matrix = sylvester_matrix(p, q)
        self.assertEqual(3, len(matrix))
        self.assertEqual([UniPoly.constant(1), UniPoly.constant(4),
                          UniPoly.zero()], matrix[0])

    def testCrossPoly(self):
        x = UniRat.identity()
        self.assertEqual(self.x1 - self.x2, cross_poly(x, x))
        self.assertEqual(self.x1 ** 2 - self.x2, cross_poly(x ** 2, x))
        f1 = (2 * x + 3) / (5 * x + 7)
        f2 = (11 * x + 13) / (17 * x + 19)
        expected = -21 * self.x1 * self.x2 - 27 * self.x1 - \
            26 * self.x2 - 34
        self.assertEqual(expected, cross_poly(f1, f2) * 85)

    def testBilinear(self):
        p = 2 * self.x1 * self.x2 + 3 * self.x1 - self.x2 + 5
        self.assertEqual((2, 3, -1, 5), bilinear_coefficients(p))
        self.assertRaises(DegreeException, bilinear_coefficients,
                          self.x1 ** 2)

    def testIrreducibleBilinear(self):
        self.assertTrue(is_irreducible_bilinear(self.x1 * self.x2 + 1))
        self.assertFalse(is_irreducible_bilinear(
            (self.x1 + 1) * (self.x2 + 1)))
        self.assertTrue(is_irreducible_bilinear(self.x1 - self.x2))
        self.assertTrue(is_irreducible_bilinear(self.x2 + 4))
        self.assertFalse(is_irreducible_bilinear(BiPoly.constant(3)))


if __name__ == "__main__":
    unittest.main()
