import itertools

from rational_expanders.algebra.bivariate_polynomial import X1, X2
from rational_expanders.algebra.rational_function import BiRat, \
    agree_on_lines
from rational_expanders.algebra.scalar import small_rationals
from rational_expanders.utils.exceptions import PoleLineException, \
    ZeroDenominatorException


ADDITIVE = 'additive'
MULTIPLICATIVE = 'multiplicative'
TANGENT = 'tangent'

KINDS = (ADDITIVE, MULTIPLICATIVE, TANGENT)


def kernel(kind, u, v):
    '''u + v, u v or (u + v)/(1 - u v) on BiRat arguments'''
    if kind == ADDITIVE:
        return u + v
    if kind == MULTIPLICATIVE:
        return u * v
    return (u + v) / (1 - u * v)


class SpecialForm(object):
    '''
    f(x1, x2) = g(l1(x1) + l2(x2)), g(l1(x1) l2(x2)) or
    g((l1(x1) + l2(x2))/(1 - l1(x1) l2(x2))) for univariate g, l1, l2
    '''

    def __init__(self, kind, g, l1, l2, bounds=None):
        self._kind = kind
        self._g = g
        self._l1 = l1
        self._l2 = l2
        self._bounds = bounds

    @property
    def kind(self):
        return self._kind

    @property
    def g(self):
        return self._g

    @property
    def l1(self):
        return self._l1

    @property
    def l2(self):
        return self._l2

    @property
    def bounds(self):
        '''Degree bounds of the search that found this form, if any'''
        return self._bounds

    def with_bounds(self, bounds):
        return SpecialForm(self._kind, self._g, self._l1, self._l2, bounds)

    def recompose(self):
        u = BiRat.from_unirat(self._l1, X1)
        v = BiRat.from_unirat(self._l2, X2)
        return kernel(self._kind, u, v).compose_outer(self._g)

    def as_dict(self):
        result = {'kind': self._kind, 'g': self._g.to_text(),
                  'l1': self._l1.to_text('x1'), 'l2': self._l2.to_text('x2')}
        if self._bounds is not None:
            result['bounds'] = dict(self._bounds)
        return result

    def __repr__(self):
        return "SpecialForm(%s, g=%s, l1=%s, l2=%s)" % (
            self._kind, self._g, self._l1.to_text('x1'),
            self._l2.to_text('x2'))


def verify_form(f, form):
    '''
    Exact check that the form recomposes to f, screened first on
    enough lines x2 = a to separate functions of the degrees involved
    '''
    try:
        recomposed = form.recompose()
    except (ZeroDenominatorException, PoleLineException):
        return False
    degree = max(f.total_degree(), recomposed.total_degree())
    lines = list(itertools.islice(small_rationals(), 2 * degree + 1))
    if not agree_on_lines(f, recomposed, lines, X2):
        return False
    return recomposed == f
