#!/usr/bin/env python
import unittest

from rational_expanders.algebra.rational_function import UniRat, compose_uni
from rational_expanders.decompose.luroth import common_left_pair, \
    luroth_generator
from rational_expanders.decompose.univariate import solve_left_component
from rational_expanders.utils.exceptions import InputException


class Test(unittest.TestCase):

    def setUp(self):
        self.x = UniRat.identity()

    def testCoprimeDegreesGiveTheWholeField(self):
        self.assertEqual(self.x, luroth_generator([self.x ** 2, self.x ** 3]))

    def testSingleInputIsTidied(self):
        self.assertEqual(self.x ** 2, luroth_generator([self.x ** 2]))
        self.assertEqual(self.x ** 2,
                         luroth_generator([self.x ** 2 * 3 + 1]))

    def testCommonSubfield(self):
        fs = [(self.x ** 2 + 1) / self.x ** 2, 1 / self.x ** 2]
        self.assertEqual(self.x ** 2, luroth_generator(fs))

    def testGeneratorOfComposites(self):
        h = (self.x ** 2 + 1) / self.x
        fs = [compose_uni(self.x ** 2, h), compose_uni(self.x ** 3 + 1, h)]
        generator = luroth_generator(fs)
        self.assertEqual(2, generator.degree)
        self.assertIsNotNone(solve_left_component(generator, h))
        for f in fs:
            self.assertIsNotNone(solve_left_component(f, generator))

    def testConstantsAreIgnored(self):
        self.assertEqual(self.x ** 2, luroth_generator(
            [UniRat.constant(5), self.x ** 2]))
        self.assertRaises(InputException, luroth_generator,
                          [UniRat.constant(1), UniRat.constant(2)])

    def testCommonLeftPair(self):
        f11, f12, f21, f22 = self.x, self.x ** 2, self.x, self.x ** 2
        pair = common_left_pair(f11, f12, f21, f22)
        self.assertEqual(self.x, pair.g1)
        self.assertEqual(self.x ** 2, pair.g2)
        self.assertEqual(self.x, pair.h1)
        self.assertEqual(self.x, pair.h2)
        self.assertTrue(pair.verify(f11, f12, f21, f22))

    def testNoCommonLeftPair(self):
        self.assertIsNone(common_left_pair(
            self.x, self.x ** 2, self.x ** 2, self.x))


if __name__ == "__main__":
    unittest.main()
