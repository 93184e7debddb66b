from fractions import Fraction

from rational_expanders.algebra.multivariate_polynomial import MultiPoly
from rational_expanders.algebra.qq import from_ring, to_ring
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.utils.exceptions import GcdUndefinedException, \
    InputException


X1 = 'x1'
X2 = 'x2'
VARIABLES = (X1, X2)


def variable_index(var):
    '''Accept 0, 1, 'x1' or 'x2'; return 0 or 1'''
    if var in (0, X1):
        return 0
    if var in (1, X2):
        return 1
    raise InputException("unknown bivariate variable '%s'" % (var,))


class BiPoly(MultiPoly):
    '''
    Polynomial in x1, x2 over Q or Q(sqrt(delta)).

    Terms are keyed by (e1, e2).
    '''

    __slots__ = ()

    def __init__(self, terms, variables=VARIABLES):
        if tuple(variables) != VARIABLES:
            raise InputException("BiPoly variables are always x1, x2")
        MultiPoly.__init__(self, terms, VARIABLES)

    @classmethod
    def zero(cls, variables=VARIABLES):
        return cls({})

    @classmethod
    def constant(cls, value, variables=VARIABLES):
        return cls({(0, 0): value})

    @classmethod
    def x1(cls):
        return cls({(1, 0): 1})

    @classmethod
    def x2(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_multipoly(cls, poly):
        if poly.variables != VARIABLES:
            poly = poly.embed(VARIABLES)
        return cls(dict(poly.terms()))

    @classmethod
    def from_univariate(cls, poly, name=X1, variables=VARIABLES):
        index = variable_index(name)
        terms = {}
        for k, c in enumerate(poly.coefficients):
            terms[(k, 0) if index == 0 else (0, k)] = c
        return cls(terms)

    @classmethod
    def from_coefficients_in(cls, var, coefficients):
        '''
        Rebuild from UniPoly coefficients in the other variable,
        indexed by the power of ``var``
        '''
        index = variable_index(var)
        terms = {}
        for k, c in enumerate(coefficients):
            for j, value in enumerate(c.coefficients):
                terms[(k, j) if index == 0 else (j, k)] = value
        return cls(terms)

    @property
    def deg_x1(self):
        return self.degree_in(0)

    @property
    def deg_x2(self):
        return self.degree_in(1)

    def degree_in(self, var):
        return MultiPoly.degree_in(self, variable_index(var))

    def coefficient_list(self, var):
        '''
        Coefficients in ``var`` as UniPoly in the other variable,
        lowest power first
        '''
        index = variable_index(var)
        degree = self.degree_in(index)
        if self.is_zero():
            return []
        other = 1 - index
        rows = [dict() for _ in range(degree + 1)]
        for e, c in self.terms():
            rows[e[index]][e[other]] = c
        result = []
        for row in rows:
            top = max(row) if row else -1
            result.append(UniPoly([row.get(j, 0) for j in range(top + 1)]))
        return result

    def specialize(self, var, value):
        '''Substitute ``var`` = value; UniPoly in the other variable'''
        index = variable_index(var)
        other = 1 - index
        coefficients = {}
        for e, c in self.terms():
            k = e[other]
            coefficients[k] = coefficients.get(k, 0) + c * value ** e[index]
        if not coefficients:
            return UniPoly.zero()
        return UniPoly([coefficients.get(k, 0)
                        for k in range(max(coefficients) + 1)])

    def swap(self):
        return BiPoly({(e[1], e[0]): c for e, c in self.terms()})

    def evaluate_at(self, a1, a2):
        return self.evaluate((a1, a2))

    def normalized(self):
        '''Scaled to grlex leading coefficient 1 (x1 > x2)'''
        return self.monic()

    def substitute_univariate(self, p1, p2):
        '''self(p1(x1), p2(x2)) for UniPoly p1, p2'''
        b1 = BiPoly.from_univariate(p1, X1)
        b2 = BiPoly.from_univariate(p2, X2)
        powers1 = [BiPoly.constant(1)]
        powers2 = [BiPoly.constant(1)]
        result = BiPoly.zero()
        for (i, j), c in self.terms():
            while len(powers1) <= i:
                powers1.append(powers1[-1] * b1)
            while len(powers2) <= j:
                powers2.append(powers2[-1] * b2)
            result = result + powers1[i] * powers2[j] * c
        return result


def _strip(coefficients):
    coefficients = list(coefficients)
    while coefficients and coefficients[-1].is_zero():
        coefficients.pop()
    return coefficients


def _content(coefficients):
    content = None
    for c in coefficients:
        if c.is_zero():
            continue
        content = c.monic() if content is None else content.gcd(c)
        if content.degree == 0:
            break
    return content


def _primitive(coefficients):
    content = _content(coefficients)
    return [c.exact_div(content) for c in coefficients]


def _pseudo_remainder(a, b):
    lb = b[-1]
    db = len(b) - 1
    r = _strip(a)
    while len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        new = [c * lb for c in r]
        for i, bc in enumerate(b):
            new[i + shift] = new[i + shift] - lr * bc
        r = _strip(new)
    return r


def content_primitive(p, main_var=X1):
    '''
    Split p = content * primitive with respect to ``main_var``.

    The content is a UniPoly in the other variable; the primitive part
    has coprime coefficients and its leading coefficient in
    ``main_var`` is monic in the other variable.

    Returns
    -------
    (content, primitive): tuple of UniPoly and BiPoly
    '''
    if p.is_zero():
        raise GcdUndefinedException("content of zero is undefined")
    coefficients = p.coefficient_list(main_var)
    content = _content(coefficients)
    primitive = [c.exact_div(content) for c in coefficients]
    scale = primitive[-1].leading_coefficient
    primitive = [c * (Fraction(1) / scale) for c in primitive]
    content = content * scale
    return content, BiPoly.from_coefficients_in(main_var, primitive)


def poly_gcd_bivariate(p, q):
    '''
    Greatest common divisor in K[x1, x2], scaled to grlex leading
    coefficient 1. gcd(p, 0) is p normalized; gcd(0, 0) is undefined.

    Over Q the gcd comes from sympy; over Q(sqrt(delta)) it is computed
    in K[x2][x1] with a primitive remainder sequence.
    '''
    if p.is_zero() and q.is_zero():
        raise GcdUndefinedException("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    if p.is_rational() and q.is_rational():
        g = to_ring(p.term_dict(), VARIABLES).gcd(
            to_ring(q.term_dict(), VARIABLES))
        return BiPoly(from_ring(g)).normalized()
    a = p.coefficient_list(X1)
    b = q.coefficient_list(X1)
    content = _content(a).gcd(_content(b))
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            a = [UniPoly.one()]
            break
        r = _pseudo_remainder(a, b)
        a = b
        b = _primitive(r) if r else []
    a = _primitive(a)
    result = BiPoly.from_coefficients_in(X1, [c * content for c in a])
    return result.normalized()


def exact_divide(p, d):
    '''p / d in K[x1, x2]; raises InputException if d does not divide p'''
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_rational() and d.is_rational():
        quotient, remainder = to_ring(p.term_dict(), VARIABLES).div(
            to_ring(d.term_dict(), VARIABLES))
        if remainder:
            raise InputException("%s does not divide %s" % (d, p))
        return BiPoly(from_ring(quotient))
    order_key = lambda e: (e[0] + e[1], e[0], e[1])
    lead = max((e for e, _ in d.terms()), key=order_key)
    lead_c = d.coefficient(lead)
    remainder = p.term_dict()
    divisor = d.term_dict()
    quotient = {}
    while remainder:
        m = max(remainder, key=order_key)
        if m[0] < lead[0] or m[1] < lead[1]:
            raise InputException("%s does not divide %s" % (d, p))
        shift = (m[0] - lead[0], m[1] - lead[1])
        t = remainder[m] / lead_c
        quotient[shift] = t
        for e, c in divisor.items():
            key = (e[0] + shift[0], e[1] + shift[1])
            value = remainder.get(key, 0) - t * c
            if value == 0:
                remainder.pop(key, None)
            else:
                remainder[key] = value
    return BiPoly(quotient)
