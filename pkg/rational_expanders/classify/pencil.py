from fractions import Fraction

from rational_expanders.algebra.bivariate_polynomial import BiPoly
from rational_expanders.algebra.linear_algebra import det2
from rational_expanders.algebra.rational_function import BiRat, UniRat
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.utils.exceptions import DegreeException


_SHIFT_LIMIT = 8


class BilinearPencil(object):
    '''
    h(x1, x2) = (a1 x1 x2 + a2 x2 + b1 x1 + b2)/(a3 x1 x2 + a4 x2 +
    b3 x1 + b4), read as the Mobius pencil x1 -> g_{x2 X + Y}(x1) with
    X = [[a1, a2], [a3, a4]] and Y = [[b1, b2], [b3, b4]].

    The overall scale is fixed by making the first nonzero of
    b4, b3, a4, a3 equal to one.
    '''

    def __init__(self, x, y):
        self._x = x
        self._y = y

    @property
    def x(self):
        return self._x

    @property
    def y(self):
        return self._y

    def at(self, e):
        '''The matrix e X + Y'''
        return tuple(tuple(e * self._x[i][j] + self._y[i][j]
                           for j in range(2)) for i in range(2))

    def member(self, e):
        '''g_{e X + Y} as a UniRat in x1'''
        m = self.at(e)
        return UniRat(UniPoly((m[0][1], m[0][0])), UniPoly((m[1][1], m[1][0])))

    def y_invertible(self):
        return det2(self._y) != 0

    def to_birat(self):
        (a1, a2), (a3, a4) = self._x
        (b1, b2), (b3, b4) = self._y
        num = BiPoly({(1, 1): a1, (0, 1): a2, (1, 0): b1, (0, 0): b2})
        den = BiPoly({(1, 1): a3, (0, 1): a4, (1, 0): b3, (0, 0): b4})
        return BiRat(num, den)

    def __repr__(self):
        return "BilinearPencil(X=%s, Y=%s)" % (self._x, self._y)


def extract_pencil(h):
    '''
    Raises
    ------
    DegreeException
        when h is not of bidegree at most (1, 1)
    '''
    if h.deg_x1 > 1 or h.deg_x2 > 1:
        raise DegreeException("%s is not of bidegree (1, 1)" % h)
    num, den = h.numerator, h.denominator
    a1, a2, b1, b2 = (num.coefficient(e) for e in
                      ((1, 1), (0, 1), (1, 0), (0, 0)))
    a3, a4, b3, b4 = (den.coefficient(e) for e in
                      ((1, 1), (0, 1), (1, 0), (0, 0)))
    scale = next(v for v in (b4, b3, a4, a3) if v != 0)
    inverse = Fraction(1) / scale
    x = ((a1 * inverse, a2 * inverse), (a3 * inverse, a4 * inverse))
    y = ((b1 * inverse, b2 * inverse), (b3 * inverse, b4 * inverse))
    return BilinearPencil(x, y)


def shift_normalize(h):
    '''
    Smallest integer a >= 0 making Y invertible for h(x1, x2 + a)

    Returns
    -------
    (a, shifted h, pencil of the shifted h)
    '''
    if h.deg_x1 != 1:
        raise DegreeException("%s must have degree one in x1" % h)
    identity = UniRat.identity()
    for a in range(_SHIFT_LIMIT):
        shifted = h if a == 0 else \
            h.substitute(identity, UniRat(UniPoly((a, 1))))
        pencil = extract_pencil(shifted)
        if pencil.y_invertible():
            return a, shifted, pencil
    raise DegreeException("%s: no shift makes the pencil regular" % h)
