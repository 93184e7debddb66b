#!/usr/bin/env python
import unittest

from rational_expanders.algebra.bivariate_polynomial import X2
from rational_expanders.algebra.rational_function import BiRat, UniRat
from rational_expanders.classify.pencil import extract_pencil, \
    shift_normalize
from rational_expanders.utils.exceptions import DegreeException
from test.test_helper import TestHelper


IDENTITY = ((1, 0), (0, 1))


class Test(unittest.TestCase):

    def setUp(self):
        self.x1 = BiRat.x1()
        self.x2 = BiRat.x2()

    def testSum(self):
        pencil = extract_pencil(self.x1 + self.x2)
        self.assertEqual(((0, 1), (0, 0)), pencil.x)
        self.assertEqual(IDENTITY, pencil.y)
        self.assertTrue(pencil.y_invertible())

    def testProductHasSingularY(self):
        pencil = extract_pencil(self.x1 * self.x2)
        self.assertEqual(((1, 0), (0, 0)), pencil.x)
        self.assertEqual(((0, 0), (0, 1)), pencil.y)
        self.assertFalse(pencil.y_invertible())

    def testTangentKernel(self):
        h = (self.x1 + self.x2) / (1 - self.x1 * self.x2)
        pencil = extract_pencil(h)
        self.assertEqual(((0, 1), (-1, 0)), pencil.x)
        self.assertEqual(IDENTITY, pencil.y)

    def testMemberIsTheRestriction(self):
        h = TestHelper.bilinear(2, 1, -1, 3, 1, 0, 4, 5)
        pencil = extract_pencil(h)
        for e in (0, 1, -2, 7):
            self.assertEqual(h.specialize(X2, e), pencil.member(e))

    def testRoundTrip(self):
        rng = TestHelper.rng(3)
        for _ in range(20):
            values = [int(v) for v in rng.integers(-4, 5, size=8)]
            if not any(values[4:]):
                continue
            h = TestHelper.bilinear(*values)
            self.assertEqual(h, extract_pencil(h).to_birat())

    def testNotBilinear(self):
        self.assertRaises(DegreeException, extract_pencil,
                          self.x1 * self.x1 + self.x2)

    def testShiftNormalize(self):
        self.assertEqual(0, shift_normalize(self.x1 + self.x2)[0])
        a, shifted, pencil = shift_normalize(self.x1 * self.x2)
        self.assertEqual(1, a)
        self.assertEqual(self.x1 * self.x2 + self.x1, shifted)
        self.assertTrue(pencil.y_invertible())
        self.assertEqual(
            0, shift_normalize(self.x1 * self.x2 + self.x1)[0])

    def testShiftNeedsFirstVariable(self):
        self.assertRaises(DegreeException, shift_normalize, self.x2)
        self.assertRaises(DegreeException, shift_normalize,
                          BiRat.from_unirat(UniRat.identity() ** 2))


if __name__ == "__main__":
    unittest.main()
