#!/usr/bin/env python
import unittest

from rational_expanders.algebra.rational_function import BiRat, UniRat
from rational_expanders.classify.special_form import ADDITIVE, KINDS, \
    MULTIPLICATIVE, TANGENT, SpecialForm, kernel, verify_form


class Test(unittest.TestCase):

    def setUp(self):
        self.x = UniRat.identity()
        self.x1 = BiRat.x1()
        self.x2 = BiRat.x2()

    def testKernels(self):
        self.assertEqual(self.x1 + self.x2,
                         kernel(ADDITIVE, self.x1, self.x2))
        self.assertEqual(self.x1 * self.x2,
                         kernel(MULTIPLICATIVE, self.x1, self.x2))
        self.assertEqual((self.x1 + self.x2) / (1 - self.x1 * self.x2),
                         kernel(TANGENT, self.x1, self.x2))
        self.assertEqual((ADDITIVE, MULTIPLICATIVE, TANGENT), KINDS)

    def testRecompose(self):
        form = SpecialForm(ADDITIVE, self.x ** 2, self.x, self.x ** 2)
        s = self.x1 + self.x2 * self.x2
        self.assertEqual(s * s, form.recompose())

    def testVerifyForm(self):
        form = SpecialForm(MULTIPLICATIVE, self.x + 1, self.x, 1 / self.x)
        f = self.x1 / self.x2 + 1
        self.assertTrue(verify_form(f, form))
        self.assertFalse(verify_form(self.x1 * self.x2 + 1, form))

    def testVerifyFormOnTangentKernel(self):
        form = SpecialForm(TANGENT, self.x, self.x, self.x)
        f = (self.x1 + self.x2) / (1 - self.x1 * self.x2)
        self.assertTrue(verify_form(f, form))
        self.assertFalse(verify_form(self.x1 + self.x2, form))

    def testAsDict(self):
        form = SpecialForm(ADDITIVE, self.x ** 2, self.x, self.x ** 2)
        self.assertEqual({'kind': 'additive', 'g': 'x^2', 'l1': 'x1',
                          'l2': 'x2^2'}, form.as_dict())
        self.assertIsNone(form.bounds)

    def testWithBounds(self):
        form = SpecialForm(ADDITIVE, self.x, self.x, self.x)
        bounded = form.with_bounds({'g_degree': 2})
        self.assertEqual({'g_degree': 2}, bounded.bounds)
        self.assertEqual({'g_degree': 2}, bounded.as_dict()['bounds'])
        self.assertEqual(form.kind, bounded.kind)
        self.assertIsNone(form.bounds)


if __name__ == "__main__":
    unittest.main()
