#!/usr/bin/env python
import unittest
from fractions import Fraction

from rational_expanders.algebra.rational_function import BiRat, UniRat
from rational_expanders.algebra.scalar import quadratic
from rational_expanders.geometry.counting import EvalSet, GridEvaluator, \
    brute_force_quadruples, cs_bound_from_counter, cs_lower_bound, \
    image_size, incidences, quadruple_count, value_counter
from rational_expanders.geometry.curves import C1, CurveSpec, curve_family
from rational_expanders.utils.exceptions import DomainException, \
    InputException
from test.test_helper import TestHelper


class Test(unittest.TestCase):

    def setUp(self):
        self.x1 = BiRat.x1()
        self.x2 = BiRat.x2()
        self.bits = [0, 1]

    def testEvalSet(self):
        s = EvalSet([2, Fraction(1, 2), -1])
        self.assertEqual(3, len(s))
        self.assertEqual((Fraction(2), Fraction(1, 2), Fraction(-1)),
                         s.elements)
        self.assertTrue(s.is_rational())
        self.assertEqual(EvalSet([-1, Fraction(1, 2), 2]), s.sorted())
        self.assertIs(s, EvalSet.of(s))
        self.assertRaises(InputException, EvalSet, [1, 2, 1])
        self.assertRaises(InputException, EvalSet, [0.5])

    def testQuadruplesOfSum(self):
        f = self.x1 + self.x2
        self.assertEqual(6, quadruple_count(f, self.bits, self.bits))
        self.assertEqual(Fraction(8, 3),
                         cs_lower_bound(f, self.bits, self.bits))
        self.assertEqual(3, image_size(f, self.bits, self.bits))

    def testQuadruplesOfProjection(self):
        self.assertEqual(8, quadruple_count(self.x1, self.bits, self.bits))
        self.assertEqual(2, cs_lower_bound(self.x1, self.bits, self.bits))

    def testSingleton(self):
        self.assertEqual(1, quadruple_count(self.x1 * self.x2, [3], [5]))

    def testCounterAndBound(self):
        counter, skipped = value_counter(self.x1 + self.x2, self.bits,
                                         self.bits)
        self.assertEqual(0, skipped)
        # rational grids are keyed by the reduced (numerator, denominator)
        self.assertEqual({(0, 1): 1, (1, 1): 2, (2, 1): 1}, dict(counter))
        self.assertEqual(Fraction(8, 3), cs_bound_from_counter(counter))
        self.assertRaises(InputException, cs_bound_from_counter, {})

    def testQuadraticGrid(self):
        root = quadratic(0, 1, 2)
        grid = [0, root]
        self.assertFalse(EvalSet(grid).is_rational())
        self.assertEqual(6, quadruple_count(self.x1 + self.x2, grid, grid))

    def testGridOutsideDomain(self):
        f = 1 / (self.x1 - self.x2)
        self.assertRaises(DomainException, value_counter, f, self.bits,
                          self.bits)
        counter, skipped = value_counter(f, self.bits, self.bits,
                                         strict=False)
        self.assertEqual(2, skipped)
        self.assertEqual({(-1, 1): 1, (1, 1): 1}, dict(counter))

    def testIntegerPathMatchesExactEvaluation(self):
        rng = TestHelper.rng(4)
        f = (self.x1 * self.x1 * self.x2 + Fraction(1, 2)) / \
            (self.x1 + self.x2 * 3 + 7)
        first = [Fraction(int(p), int(q)) for p, q in
                 zip(rng.integers(-9, 10, size=6), rng.integers(1, 4, size=6))]
        first = list(dict.fromkeys(first))
        second = [0, 1, 5, Fraction(-2, 3)]
        counter, skipped = GridEvaluator(f).value_counter(first, second,
                                                          strict=False)
        expected = {}
        missing = 0
        for a1 in first:
            for a2 in second:
                if not f.in_domain(a1, a2):
                    missing += 1
                    continue
                value = f.evaluate(a1, a2)
                key = (value.numerator, value.denominator)
                expected[key] = expected.get(key, 0) + 1
        self.assertEqual(missing, skipped)
        self.assertEqual(expected, dict(counter))

    def testBruteForceAgrees(self):
        rng = TestHelper.rng(6)
        f = self.x1 * self.x1 - self.x2 * self.x2
        for _ in range(5):
            first = sorted(set(int(v) for v in rng.integers(-6, 7, size=6)))
            second = sorted(set(int(v) for v in rng.integers(-6, 7, size=6)))
            self.assertEqual(brute_force_quadruples(f, first, second),
                             quadruple_count(f, first, second))

    def testWorkersDoNotChangeTheCount(self):
        f = self.x1 * self.x2 + self.x1
        values = list(range(1, 13))
        self.assertEqual(value_counter(f, values, values),
                         value_counter(f, values, values, workers=2))

    def testIncidencesOfDiagonal(self):
        diagonal = CurveSpec.from_defining(
            (self.x1 - self.x2).numerator)
        self.assertEqual(2, incidences(self.bits, self.bits, [diagonal]))

    def testQuadruplesCountIncidences(self):
        f = self.x1 + self.x2
        curves = curve_family(f, C1, self.bits)
        self.assertEqual(4, len(curves))
        self.assertEqual(6, incidences(self.bits, self.bits, curves))

    def testQuadruplesCountIncidencesWithWholePlaneMembers(self):
        values = [0, 1, 2]
        for h in (self.x2, self.x1 * self.x2):
            curves = curve_family(h, C1, values)
            self.assertEqual(9, len(curves))
            self.assertTrue(any(c.whole_plane for c in curves))
            self.assertEqual(quadruple_count(h, values, values),
                             incidences(values, values, curves))
        self.assertEqual(27, quadruple_count(self.x2, values, values))

    def testQuadruplesCountIncidencesRandom(self):
        rng = TestHelper.rng(12)
        for i in range(50):
            d = int(rng.integers(2, 4))
            h = BiRat.from_unirat(UniRat(TestHelper.randomUniPoly(rng, d)))
            if i % 5 == 0:
                h = self.x2 * int(rng.integers(1, 3))
            h = h + self.x1 * self.x2 * int(rng.integers(-2, 3)) + \
                self.x2 * int(rng.integers(-2, 3))
            first = sorted(set(int(v) for v in rng.integers(-5, 6, size=5)))
            second = sorted(set(int(v) for v in rng.integers(-5, 6, size=4)))
            curves = curve_family(h, C1, second)
            self.assertEqual(len(second) ** 2, len(curves))
            q = quadruple_count(h, first, second)
            self.assertEqual(brute_force_quadruples(h, first, second), q)
            self.assertEqual(q, incidences(first, first, curves))

    def testImageUnderOuterComposition(self):
        rng = TestHelper.rng(21)
        values = list(range(6))
        inner = [self.x1 + self.x2 * 2, self.x1 * self.x2 + self.x1,
                 self.x1 * self.x1 + self.x2]
        for _ in range(10):
            d = int(rng.integers(2, 4))
            g = UniRat(TestHelper.randomUniPoly(rng, d))
            h = inner[int(rng.integers(0, len(inner)))]
            f = h.compose_outer(g)
            through_h = image_size(h, values, values)
            through_f = image_size(f, values, values)
            self.assertLessEqual(through_f, through_h)
            self.assertGreaterEqual(through_f * d, through_h)


if __name__ == "__main__":
    unittest.main()
