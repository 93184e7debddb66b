#!/usr/bin/env python
import unittest
from fractions import Fraction

from rational_expanders.harness.set_families import ArithmeticProgression, \
    GeometricProgression, RandomIntegers, TangentOrbit, gen_set, \
    parse_family
from rational_expanders.utils.exceptions import InputException, \
    SetGenerationException


class Test(unittest.TestCase):

    def testArithmeticProgression(self):
        self.assertEqual(tuple(range(5)),
                         gen_set('ap:0,1', 5).elements)
        self.assertEqual((Fraction(1, 2), Fraction(5, 6), Fraction(7, 6)),
                         ArithmeticProgression(Fraction(1, 2),
                                               Fraction(1, 3)).generate(3)
                         .elements)

    def testGeometricProgression(self):
        self.assertEqual((1, 2, 4, 8), gen_set('gp:1,2', 4).elements)
        self.assertEqual((3, Fraction(-3, 2), Fraction(3, 4)),
                         gen_set('gp:3,-1/2', 3).elements)

    def testTangentOrbit(self):
        self.assertEqual((Fraction(1, 2), Fraction(4, 3), Fraction(11, 2)),
                         gen_set('tan:1/2', 3).elements)

    def testTangentOrbitSkipsPoles(self):
        self.assertEqual((1, -1, 0), gen_set('tan:1', 3).elements)
        self.assertRaises(SetGenerationException, gen_set, 'tan:1', 4)

    def testEmptySet(self):
        self.assertEqual(0, len(gen_set('tan:1', 0)))
        self.assertEqual(0, len(gen_set('ap:0,1', 0)))

    def testRandomIsDeterministic(self):
        first = gen_set('random', 6, seed=3)
        self.assertEqual(first, gen_set('random', 6, seed=3))
        self.assertEqual(6, len(first))
        self.assertTrue(all(0 <= v < 6 ** 3 for v in first))

    def testRandomWithFixedSeedIgnoresTheRun(self):
        family = parse_family('random:1000,7')
        self.assertEqual(family.generate(8, 1), family.generate(8, 2))
        self.assertTrue(all(0 <= v < 1000 for v in family.generate(8, 1)))

    def testRandomBoundTooSmall(self):
        self.assertRaises(SetGenerationException,
                          RandomIntegers(3).generate, 5)
        self.assertEqual(5, len(RandomIntegers(10).generate(5, 0)))

    def testFamilyIds(self):
        for text in ('ap:0,1', 'gp:1,2', 'tan:1/2', 'random',
                     'random:50', 'random:1000,7', 'ap:-1/3,2'):
            self.assertEqual(text, parse_family(text).family_id())
        self.assertEqual('tan:1/2', TangentOrbit(Fraction(1, 2)).family_id())
        self.assertEqual('gp:2,3', GeometricProgression(2, 3).family_id())

    def testParseIsLenient(self):
        self.assertEqual('ap:0,1', parse_family(' AP: 0, 1 ').family_id())
        self.assertEqual('tan:2', parse_family('tan_orbit:2').family_id())

    def testBadFamilies(self):
        for text in ('line:0,1', 'ap:1', 'ap:0,0', 'ap:a,b', 'gp:1,1',
                     'gp:1,-1', 'gp:1,0', 'gp:0,2', 'tan:1,2',
                     'random:x', 'random:1,2,3'):
            self.assertRaises(InputException, parse_family, text)


if __name__ == "__main__":
    unittest.main()
