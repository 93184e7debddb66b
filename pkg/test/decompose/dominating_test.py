#!/usr/bin/env python
import unittest

from rational_expanders.algebra.rational_function import UniRat
from rational_expanders.decompose.dominating import dominating_function
from rational_expanders.utils.exceptions import CapExceededException, \
    DegreeException


class Test(unittest.TestCase):

    def setUp(self):
        self.x = UniRat.identity()

    def testSharedSquare(self):
        f1 = self.x ** 2
        f2 = (self.x + 1) ** 2
        d = dominating_function(f1, f2)
        self.assertEqual(self.x ** 2, d.g)
        self.assertEqual(self.x, d.h1)
        self.assertIn(d.h2, (self.x + 1, -self.x - 1))
        self.assertTrue(d.verify(f1, f2))

    def testOnlyIdentityIsShared(self):
        f1 = self.x ** 2
        f2 = self.x ** 3
        d = dominating_function(f1, f2)
        self.assertEqual(self.x, d.g)
        self.assertEqual(f1, d.h1)
        self.assertEqual(f2, d.h2)

    def testEqualFunctions(self):
        f = self.x ** 4
        d = dominating_function(f, f)
        self.assertEqual(4, d.g.degree)
        self.assertTrue(d.verify(f, f))

    def testAsDict(self):
        d = dominating_function(self.x ** 2, self.x ** 3)
        self.assertEqual({'g': 'x', 'h1': 'x^2', 'h2': 'x^3'}, d.as_dict())

    def testErrors(self):
        self.assertRaises(DegreeException, dominating_function,
                          UniRat.constant(3), self.x)
        self.assertRaises(CapExceededException, dominating_function,
                          self.x ** 4, self.x ** 2, 3)


if __name__ == "__main__":
    unittest.main()
