'''
Bridge between the Fraction coefficients used across the package and
sympy's polynomial rings and matrices over QQ.

Rational work (products, division, gcd, square-free parts,
factorization, kernels) goes through sympy; coefficients in
Q(sqrt(delta)) stay on the package's own routines.
'''
from fractions import Fraction
from functools import lru_cache

from sympy import Matrix, Poly, QQ, Rational, Symbol
from sympy.polys.rings import ring


UNIVARIATE = ('x',)

_X = Symbol('x')


def to_qq(value):
    return QQ(value.numerator, value.denominator)


def from_qq(value):
    return Fraction(int(value.numerator), int(value.denominator))


def to_rational(value):
    return Rational(value.numerator, value.denominator)


def from_rational(value):
    '''Fraction from a sympy Rational'''
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=None)
def qq_ring(variables):
    '''sympy PolyRing over QQ with generators named as ``variables``'''
    return ring(','.join(variables), QQ)[0]


def to_ring(terms, variables):
    '''PolyElement from a dict exponent tuple -> Fraction'''
    return qq_ring(tuple(variables)).from_dict(
        {tuple(e): to_qq(c) for e, c in terms.items() if c != 0})


def from_ring(element):
    return {tuple(e): from_qq(c) for e, c in element.items()}


def uni_to_ring(coefficients):
    '''PolyElement in x from rational coefficients, lowest degree first'''
    return to_ring({(i,): c for i, c in enumerate(coefficients)},
                   UNIVARIATE)


def uni_from_ring(element):
    terms = from_ring(element)
    if not terms:
        return []
    top = max(e[0] for e in terms)
    return [terms.get((i,), Fraction(0)) for i in range(top + 1)]


def to_poly(coefficients):
    '''sympy Poly in x over QQ, coefficients lowest degree first'''
    return Poly([to_rational(c) for c in reversed(coefficients)], _X,
                domain=QQ)


def from_poly(poly):
    '''Coefficients of a sympy Poly, lowest degree first'''
    return [from_rational(c) for c in reversed(poly.all_coeffs())]


def rational_nullspace(matrix, ncols):
    '''
    Kernel basis of a Fraction matrix, one vector per free column with
    that entry equal to 1
    '''
    m = Matrix(len(matrix), ncols,
               [to_rational(v) for row in matrix for v in row])
    return [[from_rational(v) for v in vector] for vector in m.nullspace()]
