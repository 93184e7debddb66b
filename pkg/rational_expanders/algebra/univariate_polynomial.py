import math
from fractions import Fraction

from rational_expanders.algebra.qq import uni_from_ring, uni_to_ring
from rational_expanders.algebra.scalar import as_scalar, conjugate, \
    is_rational, scalar_to_text
from rational_expanders.utils.exceptions import GcdUndefinedException, \
    InputException


NEG_INFINITY = -math.inf


class UniPoly(object):
    '''
    Dense univariate polynomial over Q or Q(sqrt(delta)).

    Coefficients are stored lowest degree first with no trailing zeros,
    so the zero polynomial has an empty coefficient tuple and degree
    minus infinity.
    '''

    __slots__ = ('_coefficients',)

    def __init__(self, coefficients=()):
        coefficients = [as_scalar(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)

    @classmethod
    def _raw(cls, coefficients):
        poly = cls.__new__(cls)
        coefficients = list(coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        poly._coefficients = tuple(coefficients)
        return poly

    @classmethod
    def zero(cls):
        return cls._raw(())

    @classmethod
    def one(cls):
        return cls._raw((Fraction(1),))

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def x(cls):
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, coefficient, exponent):
        return cls([0] * exponent + [coefficient])

    @classmethod
    def from_roots(cls, roots):
        result = cls.one()
        for r in roots:
            result = result * cls((-as_scalar(r), 1))
        return result

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def degree(self):
        if not self._coefficients:
            return NEG_INFINITY
        return len(self._coefficients) - 1

    @property
    def leading_coefficient(self):
        if not self._coefficients:
            return Fraction(0)
        return self._coefficients[-1]

    def __getitem__(self, index):
        if 0 <= index < len(self._coefficients):
            return self._coefficients[index]
        return Fraction(0)

    def is_zero(self):
        return not self._coefficients

    def is_constant(self):
        return len(self._coefficients) <= 1

    def is_rational(self):
        return all(is_rational(c) for c in self._coefficients)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        try:
            return UniPoly.constant(other)
        except InputException:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coefficients, other._coefficients
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for i, c in enumerate(b):
            result[i] = result[i] + c
        return UniPoly._raw(result)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self._coefficients])

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
        if not isinstance(other, UniPoly):
            try:
                scalar = as_scalar(other)
            except InputException:
                return NotImplemented
            if scalar == 0:
                return UniPoly.zero()
            return UniPoly._raw([c * scalar for c in self._coefficients])
        a, b = self._coefficients, other._coefficients
        if not a or not b:
            return UniPoly.zero()
        if self.is_rational() and other.is_rational():
            return UniPoly._raw(uni_from_ring(uni_to_ring(a) * uni_to_ring(b)))
        result = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                result[i + j] = result[i + j] + ca * cb
        return UniPoly._raw(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = UniPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, scalar):
        return self * scalar

    def divmod(self, divisor):
        '''
        Euclidean division over the coefficient field

        Returns
        -------
        (quotient, remainder): tuple of UniPoly
        '''
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_rational() and divisor.is_rational():
            q, r = uni_to_ring(self._coefficients).div(
                uni_to_ring(divisor._coefficients))
            return UniPoly._raw(uni_from_ring(q)), \
                UniPoly._raw(uni_from_ring(r))
        remainder = list(self._coefficients)
        dd = len(divisor._coefficients) - 1
        lc = divisor._coefficients[-1]
        if len(remainder) - 1 < dd:
            return UniPoly.zero(), self
        quotient = [Fraction(0)] * (len(remainder) - dd)
        for k in range(len(remainder) - 1, dd - 1, -1):
            c = remainder[k]
            if c == 0:
                continue
            t = c / lc
            quotient[k - dd] = t
            for i, dc in enumerate(divisor._coefficients):
                remainder[k - dd + i] = remainder[k - dd + i] - t * dc
        return UniPoly._raw(quotient), UniPoly._raw(remainder[:dd])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, divisor):
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise InputException("%s does not divide %s" % (divisor, self))
        return quotient

    def divides(self, other):
        return (other % self).is_zero()

    def monic(self):
        if self.is_zero():
            return self
        lc = self._coefficients[-1]
        return UniPoly._raw([c / lc for c in self._coefficients])

    def gcd(self, other):
        '''
        Monic greatest common divisor. gcd(p, 0) is monic(p);
        gcd(0, 0) is undefined.
        '''
        if self.is_zero() and other.is_zero():
            raise GcdUndefinedException("gcd(0, 0) is undefined")
        if self.is_rational() and other.is_rational():
            g = uni_to_ring(self._coefficients).gcd(
                uni_to_ring(other._coefficients))
            return UniPoly._raw(uni_from_ring(g)).monic()
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        return UniPoly._raw(
            [i * c for i, c in enumerate(self._coefficients)][1:])

    def square_free_part(self):
        if self.degree < 1:
            return self.monic()
        if self.is_rational():
            part = uni_to_ring(self._coefficients).sqf_part()
            return UniPoly._raw(uni_from_ring(part)).monic()
        return self.exact_div(self.gcd(self.derivative())).monic()

    def is_square_free(self):
        if self.degree < 1:
            return True
        return self.gcd(self.derivative()).degree == 0

    def evaluate(self, value):
        result = Fraction(0)
        for c in reversed(self._coefficients):
            result = result * value + c
        return result

    __call__ = evaluate

    def compose(self, inner):
        '''self(inner(x)) for a UniPoly inner'''
        result = UniPoly.zero()
        for c in reversed(self._coefficients):
            result = result * inner + c
        return result

    def reverse(self, degree):
        '''x**degree * self(1/x) for degree >= deg self'''
        coefficients = list(self._coefficients)
        coefficients += [Fraction(0)] * (degree + 1 - len(coefficients))
        return UniPoly(reversed(coefficients))

    def conjugate(self):
        return UniPoly._raw([conjugate(c) for c in self._coefficients])

    def map_coefficients(self, function):
        return UniPoly([function(c) for c in self._coefficients])

    def integer_coefficients(self):
        '''
        Primitive integer multiple of a rational polynomial: the
        coefficients, lowest first, scaled to coprime integers with a
        positive leading coefficient
        '''
        if not self.is_rational():
            raise InputException("integer form needs rational coefficients")
        if self.is_zero():
            return []
        lcm = 1
        for c in self._coefficients:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self._coefficients]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return [v // g for v in ints]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self._coefficients == other._coefficients
        if isinstance(other, (int, Fraction)):
            return self._coefficients == UniPoly.constant(other)._coefficients
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._coefficients)

    def to_text(self, variable='x'):
        terms = [(c, (i,)) for i, c in enumerate(self._coefficients)
                 if c != 0]
        terms.reverse()
        return terms_to_text(terms, (variable,))

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "UniPoly(%s)" % self.to_text()


def _monomial_text(exponents, variables):
    factors = []
    for name, e in zip(variables, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append("%s^%d" % (name, e))
    return '*'.join(factors)


def terms_to_text(terms, variables):
    '''
    Render (coefficient, exponents) pairs, already ordered, as
    "3*x1^2*x2 - x2 + 1"
    '''
    if not terms:
        return '0'
    pieces = []
    for index, (c, exponents) in enumerate(terms):
        monomial = _monomial_text(exponents, variables)
        negative = False
        if is_rational(c):
            negative = c < 0
            magnitude = -c if negative else c
            if magnitude == 1 and monomial:
                body = monomial
            elif monomial:
                body = "%s*%s" % (scalar_to_text(magnitude), monomial)
            else:
                body = scalar_to_text(magnitude)
        else:
            body = str(c) if not monomial else "%s*%s" % (c, monomial)
        if index == 0:
            pieces.append('-' + body if negative else body)
        else:
            pieces.append(('- ' if negative else '+ ') + body)
    return ' '.join(pieces)
