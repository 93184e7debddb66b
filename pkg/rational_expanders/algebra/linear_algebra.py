from fractions import Fraction
from numbers import Rational

from rational_expanders.algebra.qq import rational_nullspace


def row_reduce(matrix, one=Fraction(1)):
    '''
    Reduced row echelon form over any exact field

    Entries only need + - * / and comparison with 0, so Fraction,
    QuadraticScalar and UniRat all work.

    Returns
    -------
    (rows, pivots): reduced nonzero rows and their pivot columns
    '''
    rows = [list(r) for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0),
                     None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inverse = one / rows[r][c]
        rows[r] = [v * inverse for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(matrix, ncols=None, zero=Fraction(0), one=Fraction(1)):
    '''
    Basis of the right kernel, one vector per free column

    Parameters
    ----------
    matrix: list of lists
    ncols: int
        number of columns, needed when the matrix has no rows
    '''
    if ncols is None:
        ncols = len(matrix[0])
    if matrix and isinstance(one, Fraction) and all(
            isinstance(v, Rational) for row in matrix for v in row):
        return rational_nullspace(matrix, ncols)
    rows, pivots = row_reduce(matrix, one) if matrix else ([], [])
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vector = [zero] * ncols
        vector[free] = one
        for row, column in zip(rows, pivots):
            vector[column] = -row[free]
        basis.append(vector)
    return basis


def mat_mul(a, b):
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(len(b))),
                           Fraction(0))
                       for j in range(len(b[0])))
                 for i in range(len(a)))


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def inverse2(m):
    d = det2(m)
    if d == 0:
        raise ZeroDivisionError("singular 2x2 matrix")
    return ((m[1][1] / d, -m[0][1] / d), (-m[1][0] / d, m[0][0] / d))


def trace2(m):
    return m[0][0] + m[1][1]


def scalar_matrix(value):
    return ((value, Fraction(0)), (Fraction(0), value))


def is_scalar_matrix(m):
    return m[0][1] == 0 and m[1][0] == 0 and m[0][0] == m[1][1]


IDENTITY = scalar_matrix(Fraction(1))
