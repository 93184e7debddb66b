#!/usr/bin/env python
import unittest

from rational_expanders.algebra.rational_function import UniRat, compose_uni
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.decompose.univariate import are_equivalent, \
    enumerate_decompositions, monic_divisors, right_components, \
    solve_left_component, solve_right_component, tidy_right_factor
from rational_expanders.utils.exceptions import CapExceededException, \
    DegreeException
from test.test_helper import TestHelper


class Test(unittest.TestCase):

    def setUp(self):
        self.x = UniRat.identity()

    def testSolveLeftComponent(self):
        dec = solve_left_component(self.x ** 4 + 1, self.x ** 2)
        self.assertEqual(self.x ** 2 + 1, dec.left)
        self.assertEqual(self.x ** 2, dec.right)
        self.assertTrue(dec.verify(self.x ** 4 + 1))

    def testSolveLeftComponentFails(self):
        self.assertIsNone(solve_left_component(self.x ** 3, self.x ** 2))
        self.assertIsNone(solve_left_component(self.x ** 4 + self.x,
                                               self.x ** 2))
        self.assertRaises(DegreeException, solve_left_component,
                          self.x ** 2, UniRat.constant(1))

    def testSolveLeftComponentRandomSweep(self):
        rng = TestHelper.rng(11)
        for _ in range(10):
            h = TestHelper.randomUniRat(rng, 2, 3)
            g = TestHelper.randomUniRat(rng, 2, 3)
            f = compose_uni(h, g)
            dec = solve_left_component(f, g)
            self.assertIsNotNone(dec)
            self.assertEqual(h, dec.left)

    def testRightComponentsOfSquare(self):
        components = right_components(self.x ** 4, self.x ** 2)
        self.assertEqual({self.x ** 2, -self.x ** 2}, set(components))

    def testRightComponentThroughMobius(self):
        g = (self.x * 2 + 1) / (self.x - 3)
        f = compose_uni(g, self.x ** 3)
        self.assertEqual([self.x ** 3], right_components(f, g))

    def testSolveRightComponent(self):
        f = (self.x ** 4 + self.x ** 2 * 2 + 1) / self.x ** 2
        dec = solve_right_component(f, self.x ** 2)
        self.assertIsNotNone(dec)
        self.assertEqual(self.x ** 2, dec.left)
        self.assertTrue(dec.verify(f))

    def testSolveRightComponentFails(self):
        self.assertIsNone(solve_right_component(self.x ** 3, self.x ** 2))
        self.assertRaises(DegreeException, right_components,
                          self.x ** 2, UniRat.constant(3))

    def testTidyRightFactor(self):
        self.assertEqual(self.x,
                         tidy_right_factor((self.x + 1) / (self.x - 1)))
        self.assertEqual(self.x ** 2 + self.x * 2,
                         tidy_right_factor(self.x ** 2 * 3 + self.x * 6 + 1))
        h = (self.x ** 2 + 1) / self.x
        self.assertEqual(h, tidy_right_factor(h))

    def testAreEquivalent(self):
        g1 = self.x ** 2 + self.x * 2 + 1
        m = are_equivalent(g1, self.x ** 2)
        self.assertIsNotNone(m)
        self.assertEqual(g1, compose_uni(self.x ** 2, m.as_unirat()))

    def testAreNotEquivalent(self):
        self.assertIsNone(are_equivalent(self.x ** 2, self.x ** 3))
        self.assertIsNone(are_equivalent(
            (self.x + 1) ** 2 / self.x, self.x ** 2))

    def testMonicDivisors(self):
        r = UniPoly.from_roots([1, 2, 3])
        self.assertEqual({UniPoly((-1, 1)), UniPoly((-2, 1)),
                          UniPoly((-3, 1))}, set(monic_divisors(r, 1)))
        self.assertEqual(3, len(monic_divisors(r, 2)))
        self.assertEqual([r.monic()], monic_divisors(r, 3))
        self.assertEqual([], monic_divisors(r, 4))

    def testEnumeratePowerOfX(self):
        found = enumerate_decompositions(self.x ** 4)
        self.assertEqual(1, len(found))
        self.assertEqual(self.x ** 2, found[0].left)
        self.assertEqual(self.x ** 2, found[0].right)

    def testEnumerateThreeClasses(self):
        # f is invariant under x -> -x and x -> 1/x: one class per
        # subgroup of order two, with right factors x^2, x + 1/x, x - 1/x
        f = (self.x ** 2 + 1) ** 2 / self.x ** 2
        found = enumerate_decompositions(f)
        self.assertEqual(3, len(found))
        for dec in found:
            self.assertTrue(dec.verify(f))
            self.assertEqual(2, dec.right.degree)
        self.assertTrue(any(dec.right == self.x ** 2 for dec in found))
        self.assertTrue(any(are_equivalent(dec.left, self.x ** 2)
                            is not None for dec in found))
        self.assertTrue(any(are_equivalent(dec.left, self.x ** 2 + 4)
                            is not None for dec in found))

    def testEnumerateIndecomposable(self):
        self.assertEqual([], enumerate_decompositions(self.x))
        self.assertEqual([], enumerate_decompositions(self.x ** 3 + self.x))

    @TestHelper.longRunningTest
    def testRandomCompositesRecompose(self):
        rng = TestHelper.rng(19)
        for i in range(50):
            if i % 2:
                f = TestHelper.randomUniRat(rng, int(rng.integers(2, 7)), 3)
            else:
                m, n = [(2, 2), (2, 3), (3, 2)][i % 3]
                f = compose_uni(TestHelper.randomUniRat(rng, m, 3),
                                TestHelper.randomUniRat(rng, n, 3))
            found = enumerate_decompositions(f)
            self.assertLessEqual(len(found), 2 ** f.degree)
            if i % 2 == 0 and f.degree == m * n:
                self.assertGreaterEqual(len(found), 1)
            for dec in found:
                self.assertEqual(f, compose_uni(dec.left, dec.right))
                self.assertGreaterEqual(dec.left.degree, 2)
                self.assertGreaterEqual(dec.right.degree, 2)

    def testEnumerateCap(self):
        self.assertRaises(CapExceededException, enumerate_decompositions,
                          self.x ** 9)


if __name__ == "__main__":
    unittest.main()
