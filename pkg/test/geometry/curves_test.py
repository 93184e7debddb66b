#!/usr/bin/env python
import unittest

from rational_expanders.algebra.bivariate_polynomial import BiPoly
from rational_expanders.algebra.rational_function import BiRat
from rational_expanders.algebra.roots import solve_bivariate_system
from rational_expanders.algebra.scalar import WorkingField
from rational_expanders.geometry.curves import C1, C2, CurveSpec, \
    bezout_check, curve, curve_family, duality_check, max_curve_degree, \
    shares_component
from rational_expanders.utils.exceptions import DegreeException, \
    DomainException, InputException, PoleLineException
from test.test_helper import TestHelper


class Test(unittest.TestCase):

    def setUp(self):
        self.x1 = BiRat.x1()
        self.x2 = BiRat.x2()
        self.p1 = BiPoly.x1()
        self.p2 = BiPoly.x2()

    def testFirstVariantOfSum(self):
        c = curve(self.x1 + self.x2, C1, (0, 1))
        self.assertEqual(self.p1 - self.p2 - 1, c.defining)
        self.assertEqual(1, c.degree)
        self.assertEqual((0, 1), c.pair)
        self.assertEqual(C1, c.variant)
        self.assertTrue(c.contains(1, 0))
        self.assertFalse(c.contains(0, 1))

    def testFirstVariantOfProduct(self):
        c = curve(self.x1 * self.x2, C1, (1, 1))
        self.assertEqual(self.p1 - self.p2, c.defining)

    def testSecondVariant(self):
        c = curve(self.x1 + self.x2 * 2, C2, (0, 1))
        self.assertEqual(self.p1 * 2 - self.p2 * 2 - 1, c.defining)

    def testPoleLine(self):
        self.assertRaises(PoleLineException, curve, 1 / self.x2, C1, (0, 1))

    def testWholePlane(self):
        c = curve(self.x1 * self.x2, C1, (0, 0))
        self.assertTrue(c.whole_plane)
        self.assertIsNone(c.degree)
        self.assertTrue(c.contains(3, -7))
        self.assertEqual("whole plane", c.to_text())
        self.assertFalse(curve(self.x1 * self.x2, C1, (1, 1)).whole_plane)
        self.assertRaises(DegreeException, CurveSpec.from_defining,
                          BiPoly.zero())

    def testUnknownVariant(self):
        self.assertRaises(InputException, curve, self.x1, 'c3', (0, 1))

    def testFamilyKeepsWholePlane(self):
        family = curve_family(self.x1 * self.x2, C1, [0, 1, 2])
        self.assertEqual(9, len(family))
        whole = [c.pair for c in family if c.whole_plane]
        self.assertEqual([(0, 0)], whole)
        family = curve_family(self.x2, C1, [0, 1, 2])
        self.assertEqual([(0, 0), (1, 1), (2, 2)],
                         [c.pair for c in family if c.whole_plane])

    def testFamilySkipsPoleLines(self):
        family = curve_family(self.x1 / self.x2, C1, [0, 1, 2])
        self.assertEqual(4, len(family))

    def testCurveDegreeBound(self):
        rng = TestHelper.rng(2)
        for _ in range(10):
            exponents = rng.integers(0, 3, size=(5, 2))
            coefficients = rng.integers(-3, 4, size=5)
            f = BiRat(BiPoly({(int(i), int(j)): int(c) for (i, j), c in
                              zip(exponents, coefficients)}))
            if f.deg_x1 < 1:
                continue
            for pair in ((0, 1), (2, -1)):
                c = curve(f, C1, pair)
                if c.whole_plane:
                    continue
                self.assertLessEqual(c.degree, max_curve_degree(f))

    def testDuality(self):
        rng = TestHelper.rng(8)
        f = self.x1 * self.x1 * self.x2 + self.x1 * 3 - self.x2
        for _ in range(200):
            a1, a1b, a2, a2b = [int(v) for v in rng.integers(-4, 5, size=4)]
            self.assertTrue(duality_check(f, (a1, a1b), (a2, a2b)))
        self.assertTrue(duality_check(f, (1, -1), (0, 0)))

    def testDualityOutsideDomain(self):
        f = 1 / (self.x1 - self.x2)
        self.assertRaises(DomainException, duality_check, f, (1, 2), (1, 3))

    def testSharedComponents(self):
        a = CurveSpec.from_defining(self.p1 - self.p2)
        b = CurveSpec.from_defining((self.p1 - self.p2) * (self.p1 + self.p2))
        c = CurveSpec.from_defining(self.p1 + self.p2)
        self.assertTrue(shares_component(a, b))
        self.assertFalse(shares_component(a, c))
        self.assertTrue(bezout_check(a, b))
        self.assertTrue(bezout_check(a, c))
        whole = curve(self.x1 * self.x2, C1, (0, 0))
        self.assertTrue(shares_component(a, whole))
        self.assertTrue(bezout_check(whole, whole))

    def testBezoutOnConics(self):
        a = CurveSpec.from_defining(self.p1 ** 2 + self.p2 ** 2 - 2)
        b = CurveSpec.from_defining(self.p1 * self.p2 - 1)
        self.assertTrue(bezout_check(a, b))

    def testBezoutCountsWorkingFieldPoints(self):
        a = CurveSpec.from_defining(self.p1 ** 2 + self.p2 ** 2 - 3)
        b = CurveSpec.from_defining(self.p1 ** 2 - self.p2 ** 2 - 1)
        field = WorkingField(2)
        self.assertEqual([], solve_bivariate_system(a.defining, b.defining))
        points = solve_bivariate_system(a.defining, b.defining, field)
        self.assertEqual(4, len(points))
        self.assertEqual({2}, set(u * u for u, _ in points))
        self.assertTrue(bezout_check(a, b, field))
        self.assertTrue(bezout_check(a, b))

    @TestHelper.longRunningTest
    def testBezoutOnRandomConics(self):
        rng = TestHelper.rng(13)
        exponents = [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)]

        def conic():
            coefficients = [int(v) for v in rng.integers(-3, 4, size=6)]
            coefficients[0] = int(rng.integers(1, 4))
            return CurveSpec.from_defining(BiPoly(dict(zip(exponents,
                                                           coefficients))))
        for _ in range(50):
            a, b = conic(), conic()
            self.assertTrue(bezout_check(a, b))
            self.assertTrue(bezout_check(a, b, WorkingField(2)))
            if not shares_component(a, b):
                points = solve_bivariate_system(a.defining, b.defining)
                self.assertLessEqual(len(points), 4)
                for u, v in points:
                    self.assertTrue(a.contains(u, v))
                    self.assertTrue(b.contains(u, v))

    def testMaxCurveDegree(self):
        self.assertEqual(4, max_curve_degree(self.x1 * self.x2))


if __name__ == "__main__":
    unittest.main()
