from fractions import Fraction

from rational_expanders.algebra.linear_algebra import det2, inverse2, \
    mat_mul, nullspace
from rational_expanders.algebra.rational_function import UniRat, compose_uni
from rational_expanders.algebra.scalar import as_scalar
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.utils.exceptions import DegreeException, \
    InputException


class Mobius(object):
    '''
    The map x -> (a1 x + a2)/(a3 x + a4) attached to the matrix
    [[a1, a2], [a3, a4]]. Singular matrices give constant maps.

    Composition follows the matrix product: g_{XY} = g_X o g_Y.
    '''

    def __init__(self, a1, a2, a3, a4):
        entries = tuple(as_scalar(a) for a in (a1, a2, a3, a4))
        if entries[2] == 0 and entries[3] == 0:
            raise InputException("bottom row of a Mobius matrix is zero")
        self._entries = entries

    @classmethod
    def from_matrix(cls, matrix):
        return cls(matrix[0][0], matrix[0][1], matrix[1][0], matrix[1][1])

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def from_unirat(cls, f):
        if f.degree != 1:
            raise DegreeException("%s is not a Mobius map" % f)
        num, den = f.numerator, f.denominator
        return cls(num[1], num[0], den[1], den[0])

    @property
    def matrix(self):
        a1, a2, a3, a4 = self._entries
        return ((a1, a2), (a3, a4))

    @property
    def entries(self):
        return self._entries

    def determinant(self):
        return det2(self.matrix)

    def is_invertible(self):
        return self.determinant() != 0

    def compose(self, other):
        '''self o other'''
        return Mobius.from_matrix(mat_mul(self.matrix, other.matrix))

    def inverse(self):
        if not self.is_invertible():
            raise InputException("singular Mobius map has no inverse")
        return Mobius.from_matrix(inverse2(self.matrix))

    def as_unirat(self):
        a1, a2, a3, a4 = self._entries
        return UniRat(UniPoly((a2, a1)), UniPoly((a4, a3)))

    def apply(self, f):
        '''self o f for a UniRat f'''
        return compose_uni(self.as_unirat(), f)

    def __call__(self, value):
        a1, a2, a3, a4 = self._entries
        if value is None:
            return None if a3 == 0 else a1 / a3
        den = a3 * value + a4
        if den == 0:
            return None
        return (a1 * value + a2) / den

    def same_map(self, other):
        '''Equality as maps, i.e. of the matrices up to a scalar'''
        a = self._entries
        b = other._entries
        return all(a[i] * b[j] == a[j] * b[i]
                   for i in range(4) for j in range(4))

    def __eq__(self, other):
        return isinstance(other, Mobius) and self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return "Mobius(%s)" % ', '.join(str(a) for a in self._entries)


def mobius_compose(x, y):
    return x.compose(y)


def mobius_apply(x, f):
    return x.apply(f)


def mobius_through(points, images):
    '''
    The Mobius map sending three distinct points to three distinct
    images; None stands for infinity in both lists. Returns None when
    no invertible map fits.
    '''
    rows = []
    for x, y in zip(points, images):
        if x is None:
            # a1 - y a3 = 0, or a3 = 0 when y is infinite
            rows.append([Fraction(0), Fraction(0), Fraction(1), Fraction(0)]
                        if y is None else
                        [Fraction(1), Fraction(0), -y, Fraction(0)])
        elif y is None:
            rows.append([Fraction(0), Fraction(0), x, Fraction(1)])
        else:
            rows.append([x, Fraction(1), -y * x, -y])
    kernel = nullspace(rows, 4)
    if len(kernel) != 1:
        return None
    a1, a2, a3, a4 = kernel[0]
    if a3 == 0 and a4 == 0:
        return None
    m = Mobius(a1, a2, a3, a4)
    if not m.is_invertible():
        return None
    return m
