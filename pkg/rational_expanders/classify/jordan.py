from fractions import Fraction

from sympy import Matrix

from rational_expanders.algebra.linear_algebra import det2, inverse2, \
    is_scalar_matrix, mat_mul, trace2
from rational_expanders.algebra.qq import to_rational
from rational_expanders.algebra.scalar import WorkingField
from rational_expanders.utils.exceptions import InputException


REAL = 'real'
COMPLEX = 'complex'

CASE_I = 'I'
CASE_II = 'II'
CASE_III = 'III'


class JordanData(object):
    '''
    Z = H J H^-1 with J in one of three normal forms:

    - case I: [[l, 1], [0, l]]
    - case II: diag(a, b), possibly over Q(sqrt(delta))
    - case III: [[a, -b], [b, a]] with b > 0, real mode only
    '''

    def __init__(self, case, h, j, discriminant, field):
        self.case = case
        self.h = h
        self.j = j
        self.discriminant = discriminant
        self.field = field

    def __repr__(self):
        return "JordanData(case %s, H=%s, J=%s, over %s)" % (
            self.case, self.h, self.j, self.field)


def _column_matrix(u, v):
    return ((u[0], v[0]), (u[1], v[1]))


def _eigenvector(z, value):
    (p, q), (r, s) = z
    if q != 0:
        return (q, value - p)
    if r != 0:
        return (value - s, r)
    if value == p:
        return (Fraction(1), Fraction(0))
    return (Fraction(0), Fraction(1))


def is_defective(z):
    '''True when sympy's Jordan form of z has a nontrivial block'''
    _, j = Matrix([[to_rational(v) for v in row] for row in z]).jordan_form()
    return j[0, 1] != 0 or j[1, 0] != 0


def jordan_2x2(z, mode=REAL):
    '''
    Jordan data of a rational 2x2 matrix

    In real mode a negative discriminant gives case III, the rotation
    block; in complex mode it gives case II over Q(sqrt(discriminant)).
    '''
    if mode not in (REAL, COMPLEX):
        raise InputException("unknown mode '%s'" % mode)
    (p, q), (r, s) = z
    t = trace2(z)
    discriminant = t * t - 4 * det2(z)
    field = WorkingField()
    if discriminant == 0:
        value = t / 2
        if is_scalar_matrix(z):
            h = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
            result = JordanData(CASE_II, h, ((value, Fraction(0)),
                                             (Fraction(0), value)),
                                discriminant, field)
        else:
            shifted = ((p - value, q), (r, s - value))
            w = (Fraction(1), Fraction(0))
            if shifted[0][0] == 0 and shifted[1][0] == 0:
                w = (Fraction(0), Fraction(1))
            v = (shifted[0][0] * w[0] + shifted[0][1] * w[1],
                 shifted[1][0] * w[0] + shifted[1][1] * w[1])
            result = JordanData(CASE_I, _column_matrix(v, w),
                                ((value, Fraction(1)), (Fraction(0), value)),
                                discriminant, field)
    elif discriminant > 0 or mode == COMPLEX:
        field = WorkingField.splitting(discriminant)
        root = field.sqrt(discriminant)
        first = (t + root) / 2
        second = (t - root) / 2
        result = JordanData(
            CASE_II,
            _column_matrix(_eigenvector(z, first), _eigenvector(z, second)),
            ((first, Fraction(0)), (Fraction(0), second)),
            discriminant, field)
    else:
        field = WorkingField.splitting(-discriminant)
        a = t / 2
        b = field.sqrt(-discriminant) / 2
        result = JordanData(CASE_III, ((q, Fraction(0)), (a - p, -b)),
                            ((a, -b), (b, a)), discriminant, field)
    assert mat_mul(mat_mul(result.h, result.j), inverse2(result.h)) == \
        tuple(tuple(v for v in row) for row in z)
    assert is_defective(z) == (result.case == CASE_I)
    return result
