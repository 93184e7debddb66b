from rational_expanders.algebra.multivariate_polynomial import MultiPoly
from rational_expanders.utils.exceptions import DegreeException


def unknown_names(n):
    '''z0..zn for the numerator, w0..wn for the denominator'''
    return (tuple('z%d' % i for i in range(n + 1)),
            tuple('w%d' % i for i in range(n + 1)))


class LiftFamily(object):
    '''
    Polynomial coefficient families of a composition with a fixed g.

    The first variant lists, as polynomials in the coefficients
    (z, w) of h = p/q with deg p, deg q <= n, the coefficients of the
    numerator and denominator of g o h. The second variant does the
    same for h o g; it is linear in (z, w).

    Parameters
    ----------
    variant: int
        1 for g o h, 2 for h o g
    numerators, denominators: list of MultiPoly
        coefficient of x**j of the homogenized numerator / denominator
    '''

    def __init__(self, variant, g, n, numerators, denominators):
        self._variant = variant
        self._g = g
        self._n = n
        self._numerators = tuple(numerators)
        self._denominators = tuple(denominators)

    @property
    def variant(self):
        return self._variant

    @property
    def g(self):
        return self._g

    @property
    def n(self):
        return self._n

    @property
    def numerators(self):
        return self._numerators

    @property
    def denominators(self):
        return self._denominators

    @property
    def polys(self):
        return self._numerators + self._denominators

    @property
    def variables(self):
        return self._numerators[0].variables

    def evaluate(self, point):
        '''Coefficient vectors (numerator, denominator) at a point'''
        return ([p.evaluate(point) for p in self._numerators],
                [q.evaluate(point) for q in self._denominators])

    def is_homogeneous(self):
        return all(p.is_homogeneous() for p in self.polys)

    def linear_coefficient(self, poly_index, variable):
        '''Coefficient of one unknown in a member of the linear variant'''
        exponents = tuple(1 if v == variable else 0 for v in self.variables)
        return self.polys[poly_index].coefficient(exponents)


def _coefficients_in_x(poly, ring_size, degree):
    '''Split a polynomial in (unknowns, x) by the power of x'''
    by_power = poly.coefficients_in(ring_size)
    unknowns = poly.variables[:ring_size]
    result = []
    for j in range(degree + 1):
        if j in by_power:
            result.append(by_power[j].restrict(unknowns))
        else:
            result.append(MultiPoly.zero(unknowns))
    return result


def lift_family(g, n):
    '''
    Both coefficient families of compositions with g, for right or
    left factors of degree at most n

    Returns
    -------
    (LiftFamily, LiftFamily): the g o h and h o g variants
    '''
    m = g.degree
    if m < 1 or n < 1:
        raise DegreeException("lift families need deg g >= 1 and n >= 1")
    zs, ws = unknown_names(n)
    ring = zs + ws + ('x',)
    size = len(zs) + len(ws)
    x = MultiPoly.generator('x', ring)
    one = MultiPoly.constant(1, ring)

    p = MultiPoly.zero(ring)
    q = MultiPoly.zero(ring)
    for i in range(n + 1):
        p = p + MultiPoly.generator(zs[i], ring) * x ** i
        q = q + MultiPoly.generator(ws[i], ring) * x ** i
    p_powers = [one]
    q_powers = [one]
    for _ in range(m):
        p_powers.append(p_powers[-1] * p)
        q_powers.append(q_powers[-1] * q)
    num1 = MultiPoly.zero(ring)
    den1 = MultiPoly.zero(ring)
    for i in range(m + 1):
        basis = p_powers[i] * q_powers[m - i]
        num1 = num1 + basis * g.numerator[i]
        den1 = den1 + basis * g.denominator[i]
    first = LiftFamily(1, g, n, _coefficients_in_x(num1, size, n * m),
                       _coefficients_in_x(den1, size, n * m))

    gp = MultiPoly.from_univariate(g.numerator, 'x', ring)
    gq = MultiPoly.from_univariate(g.denominator, 'x', ring)
    num2 = MultiPoly.zero(ring)
    den2 = MultiPoly.zero(ring)
    for i in range(n + 1):
        basis = gp ** i * gq ** (n - i)
        num2 = num2 + MultiPoly.generator(zs[i], ring) * basis
        den2 = den2 + MultiPoly.generator(ws[i], ring) * basis
    second = LiftFamily(2, g, n, _coefficients_in_x(num2, size, n * m),
                        _coefficients_in_x(den2, size, n * m))
    return first, second
