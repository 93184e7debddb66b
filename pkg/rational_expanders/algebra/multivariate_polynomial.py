import math
from fractions import Fraction

from rational_expanders.algebra.qq import from_ring, to_ring
from rational_expanders.algebra.scalar import as_scalar, conjugate, \
    is_rational
from rational_expanders.algebra.univariate_polynomial import NEG_INFINITY, \
    UniPoly, terms_to_text
from rational_expanders.groebner.monomial_order import GRLEX
from rational_expanders.utils.exceptions import InputException


def add_exponents(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub_exponents(a, b):
    return tuple(x - y for x, y in zip(a, b))


def divides_exponents(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm_exponents(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly(object):
    '''
    Sparse polynomial over Q or Q(sqrt(delta)) in named variables.

    Terms map exponent tuples, one entry per variable, to nonzero
    coefficients. Instances are immutable.

    Parameters
    ----------
    terms: dict
        exponent tuple -> coefficient
    variables: tuple of str
        variable names, ranked for lex order by position
    '''

    __slots__ = ('_terms', '_variables')

    def __init__(self, terms, variables):
        self._variables = tuple(variables)
        arity = len(self._variables)
        clean = {}
        for exponents, c in terms.items():
            exponents = tuple(exponents)
            if len(exponents) != arity:
                raise InputException(
                    "exponent %s does not match variables %s" % (
                        exponents, self._variables))
            c = as_scalar(c)
            if c != 0:
                clean[exponents] = c
        self._terms = clean

    def _new(self, terms):
        poly = self.__class__.__new__(self.__class__)
        poly._variables = self._variables
        poly._terms = {e: c for e, c in terms.items() if c != 0}
        return poly

    @classmethod
    def zero(cls, variables):
        return cls({}, variables)

    @classmethod
    def constant(cls, value, variables):
        return cls({(0,) * len(variables): value}, variables)

    @classmethod
    def generator(cls, name, variables):
        variables = tuple(variables)
        exponents = tuple(1 if v == name else 0 for v in variables)
        if sum(exponents) != 1:
            raise InputException("unknown variable '%s'" % name)
        return cls({exponents: 1}, variables)

    @classmethod
    def from_univariate(cls, poly, name, variables):
        variables = tuple(variables)
        index = variables.index(name)
        terms = {}
        for k, c in enumerate(poly.coefficients):
            exponents = [0] * len(variables)
            exponents[index] = k
            terms[tuple(exponents)] = c
        return cls(terms, variables)

    @property
    def variables(self):
        return self._variables

    @property
    def nvars(self):
        return len(self._variables)

    def terms(self):
        return self._terms.items()

    def term_dict(self):
        return dict(self._terms)

    def coefficient(self, exponents):
        return self._terms.get(tuple(exponents), Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self._terms)

    def constant_value(self):
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def is_rational(self):
        return all(is_rational(c) for c in self._terms.values())

    def total_degree(self):
        if not self._terms:
            return NEG_INFINITY
        return max(sum(e) for e in self._terms)

    def degree_in(self, index):
        if not self._terms:
            return NEG_INFINITY
        return max(e[index] for e in self._terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def involves(self, index):
        return any(e[index] for e in self._terms)

    def _check_ring(self, other):
        if other._variables != self._variables:
            raise InputException("variables %s and %s differ" % (
                self._variables, other._variables))

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check_ring(other)
            return other
        try:
            return self._new({(0,) * self.nvars: as_scalar(other)})
        except InputException:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for e, c in other._terms.items():
            result[e] = result.get(e, 0) + c
        return self._new(result)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                scalar = as_scalar(other)
            except InputException:
                return NotImplemented
            return self._new({e: c * scalar for e, c in self._terms.items()})
        self._check_ring(other)
        if self._variables and self.is_rational() and other.is_rational():
            product = to_ring(self._terms, self._variables) * \
                to_ring(other._terms, self._variables)
            return self._new(from_ring(product))
        result = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = add_exponents(ea, eb)
                result[e] = result.get(e, 0) + ca * cb
        return self._new(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = self._new({(0,) * self.nvars: Fraction(1)})
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def multiply_monomial(self, exponents, coefficient=1):
        return self._new({add_exponents(e, exponents): c * coefficient
                          for e, c in self._terms.items()})

    def sorted_terms(self, order=GRLEX):
        '''Terms in descending order'''
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]),
                      reverse=True)

    def leading_monomial(self, order=GRLEX):
        if not self._terms:
            raise InputException("zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order=GRLEX):
        return self._terms[self.leading_monomial(order)]

    def monic(self, order=GRLEX):
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        return self._new({e: c / lc for e, c in self._terms.items()})

    def evaluate(self, point):
        '''Value at a full point, one scalar per variable'''
        if len(point) != self.nvars:
            raise InputException("point arity %d, expected %d" % (
                len(point), self.nvars))
        total = Fraction(0)
        for e, c in self._terms.items():
            value = c
            for x, k in zip(point, e):
                if k:
                    value = value * x ** k
            total = total + value
        return total

    def substitute(self, values):
        '''
        Replace some variables by scalars, keeping the ring.

        Parameters
        ----------
        values: dict
            variable index -> scalar
        '''
        result = {}
        for e, c in self._terms.items():
            value = c
            exponents = list(e)
            for index, x in values.items():
                if exponents[index]:
                    value = value * x ** exponents[index]
                    exponents[index] = 0
            exponents = tuple(exponents)
            result[exponents] = result.get(exponents, 0) + value
        return self._new(result)

    def restrict(self, variables):
        '''
        Same polynomial in a sub-ring: dropped variables must not occur
        '''
        variables = tuple(variables)
        indices = [self._variables.index(v) for v in variables]
        kept = set(indices)
        result = {}
        for e, c in self._terms.items():
            if any(k for i, k in enumerate(e) if i not in kept):
                raise InputException(
                    "polynomial involves variables outside %s" % (
                        variables,))
            result[tuple(e[i] for i in indices)] = c
        return MultiPoly(result, variables)

    def embed(self, variables):
        '''Same polynomial in a ring with more variables'''
        variables = tuple(variables)
        positions = [variables.index(v) for v in self._variables]
        result = {}
        for e, c in self._terms.items():
            exponents = [0] * len(variables)
            for p, k in zip(positions, e):
                exponents[p] = k
            result[tuple(exponents)] = c
        return MultiPoly(result, variables)

    def coefficients_in(self, index):
        '''
        Coefficients with respect to one variable

        Returns
        -------
        dict: power -> MultiPoly in the same ring, without that variable
        '''
        result = {}
        for e, c in self._terms.items():
            k = e[index]
            rest = e[:index] + (0,) + e[index + 1:]
            result.setdefault(k, {})[rest] = c
        return {k: self._new(t) for k, t in result.items()}

    def to_univariate(self, index):
        '''UniPoly in the variable at index; other variables must not occur'''
        coefficients = {}
        for e, c in self._terms.items():
            if any(k for i, k in enumerate(e) if i != index):
                raise InputException("polynomial is not univariate")
            coefficients[e[index]] = c
        if not coefficients:
            return UniPoly.zero()
        top = max(coefficients)
        return UniPoly([coefficients.get(k, 0) for k in range(top + 1)])

    def map_coefficients(self, function):
        return self._new({e: function(c) for e, c in self._terms.items()})

    def conjugate(self):
        return self.map_coefficients(conjugate)

    def integer_scaled(self):
        '''
        Rational multiple with coprime integer coefficients and a
        positive grlex leading coefficient
        '''
        if self.is_zero() or not self.is_rational():
            return self
        lcm = 1
        for c in self._terms.values():
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, int(c * lcm))
        scale = Fraction(lcm, g)
        if self.leading_coefficient() < 0:
            scale = -scale
        return self * scale

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self._variables == other._variables and
                    self._terms == other._terms)
        if isinstance(other, (int, Fraction)):
            return self._terms == self._coerce(other)._terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._variables, frozenset(self._terms.items())))

    def to_text(self, order=GRLEX):
        return terms_to_text([(c, e) for e, c in self.sorted_terms(order)],
                             self._variables)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "MultiPoly(%s; %s)" % (self.to_text(),
                                      ', '.join(self._variables))
