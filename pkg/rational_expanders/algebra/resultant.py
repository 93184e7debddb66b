from rational_expanders.algebra.bivariate_polynomial import BiPoly, X1, X2, \
    variable_index
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.utils.exceptions import DegreeException


def sylvester_matrix(p_coefficients, q_coefficients):
    '''
    Sylvester matrix of two coefficient lists given highest power first.

    Column k holds the coefficients of p shifted down by k, for
    k < deg q, followed by the shifts of q; its determinant is the
    resultant Res(p, q).
    '''
    m = len(p_coefficients) - 1
    n = len(q_coefficients) - 1
    size = m + n
    zero = p_coefficients[0] * 0
    columns = []
    for k in range(n):
        columns.append([zero] * k + list(p_coefficients) +
                       [zero] * (size - m - 1 - k))
    for k in range(m):
        columns.append([zero] * k + list(q_coefficients) +
                       [zero] * (size - n - 1 - k))
    return [[columns[j][i] for j in range(size)] for i in range(size)]


def bareiss_determinant(matrix):
    '''
    Fraction-free determinant of a square matrix of UniPoly entries
    '''
    size = len(matrix)
    if size == 0:
        return UniPoly.one()
    m = [list(row) for row in matrix]
    sign = 1
    previous = UniPoly.one()
    for k in range(size - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, size)
                         if not m[i][k].is_zero()), None)
            if swap is None:
                return UniPoly.zero()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * pivot -
                           m[i][k] * m[k][j]).exact_div(previous)
        previous = pivot
    result = m[size - 1][size - 1]
    return -result if sign < 0 else result


def resultant(p, q, var=X1):
    '''
    Res(p, q) with respect to ``var`` for BiPoly p, q

    Returns
    -------
    UniPoly in the other variable
    '''
    p_list = p.coefficient_list(var)
    q_list = q.coefficient_list(var)
    if len(p_list) < 2 or len(q_list) < 2:
        raise DegreeException(
            "resultant needs positive degree in %s" % (var,))
    matrix = sylvester_matrix(list(reversed(p_list)),
                              list(reversed(q_list)))
    return bareiss_determinant(matrix)


def resultant_univariate(p, q):
    '''Res(p, q) of two UniPoly, as a scalar'''
    if p.degree < 1 or q.degree < 1:
        raise DegreeException("resultant needs positive degrees")
    matrix = sylvester_matrix(
        [UniPoly.constant(c) for c in reversed(p.coefficients)],
        [UniPoly.constant(c) for c in reversed(q.coefficients)])
    return bareiss_determinant(matrix)[0]


def cross_poly(f1, f2):
    '''
    p1(x1) q2(x2) - p2(x2) q1(x1) for f1 = p1/q1 and f2 = p2/q2

    f1(x1) = f2(x2) exactly on the zero set of this polynomial, away
    from the poles.
    '''
    p1 = BiPoly.from_univariate(f1.numerator, X1)
    q1 = BiPoly.from_univariate(f1.denominator, X1)
    p2 = BiPoly.from_univariate(f2.numerator, X2)
    q2 = BiPoly.from_univariate(f2.denominator, X2)
    return p1 * q2 - p2 * q1


def bilinear_coefficients(p):
    '''(a, b, c, d) of p = a x1 x2 + b x1 + c x2 + d'''
    if p.degree_in(0) > 1 or p.degree_in(1) > 1:
        raise DegreeException("%s is not of bidegree (1, 1)" % p)
    return (p.coefficient((1, 1)), p.coefficient((1, 0)),
            p.coefficient((0, 1)), p.coefficient((0, 0)))


def is_irreducible_bilinear(p):
    '''
    Irreducibility of a polynomial of bidegree at most (1, 1).

    a x1 x2 + b x1 + c x2 + d splits exactly when ad - bc = 0, unless
    it has degree one in a single variable.
    '''
    a, b, c, d = bilinear_coefficients(p)
    if p.is_constant():
        return False
    if a == 0 and (b == 0 or c == 0):
        return True
    return a * d - b * c != 0


def other_variable(var):
    return X2 if variable_index(var) == 0 else X1
