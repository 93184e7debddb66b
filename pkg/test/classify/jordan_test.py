#!/usr/bin/env python
import unittest
from fractions import Fraction

from rational_expanders.algebra.linear_algebra import inverse2, mat_mul
from rational_expanders.algebra.scalar import RATIONALS, WorkingField, \
    quadratic
from rational_expanders.classify.jordan import CASE_I, CASE_II, CASE_III, \
    COMPLEX, REAL, is_defective, jordan_2x2
from rational_expanders.utils.exceptions import InputException
from test.test_helper import TestHelper


def _matrix(a, b, c, d):
    return ((Fraction(a), Fraction(b)), (Fraction(c), Fraction(d)))


class Test(unittest.TestCase):

    def _assertDecomposes(self, z, data):
        self.assertEqual(z, mat_mul(mat_mul(data.h, data.j),
                                    inverse2(data.h)))

    def testNontrivialBlock(self):
        z = _matrix(1, 1, 0, 1)
        data = jordan_2x2(z)
        self.assertEqual(CASE_I, data.case)
        self.assertEqual(_matrix(1, 1, 0, 1), data.j)
        self.assertEqual(0, data.discriminant)
        self._assertDecomposes(z, data)

    def testNilpotent(self):
        data = jordan_2x2(_matrix(0, 1, 0, 0))
        self.assertEqual(CASE_I, data.case)
        self.assertEqual(_matrix(1, 0, 0, 1), data.h)

    def testScalarMatrix(self):
        data = jordan_2x2(_matrix(2, 0, 0, 2))
        self.assertEqual(CASE_II, data.case)
        self.assertEqual(_matrix(1, 0, 0, 1), data.h)
        self.assertEqual(_matrix(2, 0, 0, 2), data.j)

    def testRationalEigenvalues(self):
        data = jordan_2x2(_matrix(2, 0, 0, 3))
        self.assertEqual(CASE_II, data.case)
        self.assertEqual(RATIONALS, data.field)
        self.assertEqual(_matrix(3, 0, 0, 2), data.j)
        self.assertEqual(_matrix(0, 1, 1, 0), data.h)

    def testQuadraticEigenvalues(self):
        z = _matrix(0, 2, 1, 0)
        data = jordan_2x2(z)
        self.assertEqual(CASE_II, data.case)
        self.assertEqual(WorkingField(2), data.field)
        self.assertEqual(quadratic(0, 1, 2), data.j[0][0])
        self.assertEqual(quadratic(0, -1, 2), data.j[1][1])
        self._assertDecomposes(z, data)

    def testRotationBlock(self):
        z = _matrix(0, -1, 1, 0)
        data = jordan_2x2(z, REAL)
        self.assertEqual(CASE_III, data.case)
        self.assertEqual(_matrix(0, -1, 1, 0), data.j)
        self.assertEqual(_matrix(-1, 0, 0, -1), data.h)
        self.assertEqual(-4, data.discriminant)

    def testRotationOverGaussianRationals(self):
        z = _matrix(0, -1, 1, 0)
        data = jordan_2x2(z, COMPLEX)
        self.assertEqual(CASE_II, data.case)
        self.assertEqual(WorkingField(-1), data.field)
        self.assertEqual(quadratic(0, 1, -1), data.j[0][0])
        self.assertEqual(quadratic(0, -1, -1), data.j[1][1])
        self._assertDecomposes(z, data)

    def testRandomMatricesDecompose(self):
        rng = TestHelper.rng(5)
        for mode in (REAL, COMPLEX):
            for _ in range(25):
                z = _matrix(*[int(v) for v in rng.integers(-5, 6, size=4)])
                data = jordan_2x2(z, mode)
                self._assertDecomposes(z, data)
                if mode == COMPLEX:
                    self.assertNotEqual(CASE_III, data.case)

    def testDefectiveMatchesSympyJordanForm(self):
        self.assertTrue(is_defective(_matrix(1, 1, 0, 1)))
        self.assertTrue(is_defective(_matrix(2, -1, 1, 0)))
        self.assertFalse(is_defective(_matrix(2, 0, 0, 2)))
        self.assertFalse(is_defective(_matrix(0, 2, 1, 0)))
        self.assertFalse(is_defective(_matrix(0, -1, 1, 0)))

    def testUnknownMode(self):
        self.assertRaises(InputException, jordan_2x2,
                          _matrix(1, 0, 0, 1), 'quaternionic')


if __name__ == "__main__":
    unittest.main()
