import math
from fractions import Fraction

from rational_expanders.algebra.bivariate_polynomial import BiPoly, X1, X2, \
    exact_divide, poly_gcd_bivariate, variable_index
from rational_expanders.algebra.scalar import as_scalar, is_rational
from rational_expanders.algebra.univariate_polynomial import UniPoly, \
    terms_to_text
from rational_expanders.utils.exceptions import DomainException, \
    InputException, PoleLineException, ZeroDenominatorException


def _common_integer_scale(coefficients):
    '''Positive rational turning the coefficients into coprime integers'''
    coefficients = list(coefficients)
    if not coefficients or not all(is_rational(c) for c in coefficients):
        return Fraction(1)
    lcm = 1
    for c in coefficients:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    g = 0
    for c in coefficients:
        g = math.gcd(g, int(c * lcm))
    return Fraction(lcm, g)


def _needs_parentheses(text, term_count, is_denominator):
    if term_count > 1:
        return True
    if is_denominator:
        return '*' in text or '/' in text or text.startswith('-')
    return False


def fraction_text(num_terms, den_terms, variables):
    '''
    Canonical "numerator/denominator" text from ordered term lists.
    A denominator equal to 1 is omitted.
    '''
    num_text = terms_to_text(num_terms, variables)
    den_text = terms_to_text(den_terms, variables)
    if den_text == '1':
        return num_text
    if _needs_parentheses(num_text, len(num_terms), False):
        num_text = "(%s)" % num_text
    if _needs_parentheses(den_text, len(den_terms), True):
        den_text = "(%s)" % den_text
    return "%s/%s" % (num_text, den_text)


def _as_unipoly(value):
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(value)


class UniRat(object):
    '''
    Univariate rational function p/q in lowest terms with q monic.

    The degree is max(deg p, deg q); constants have degree 0.
    '''

    __slots__ = ('_num', '_den')

    def __init__(self, numerator, denominator=None):
        num = _as_unipoly(numerator)
        den = UniPoly.one() if denominator is None else \
            _as_unipoly(denominator)
        if den.is_zero():
            raise ZeroDenominatorException("denominator is zero")
        if den.degree > 0 and not num.is_zero():
            g = num.gcd(den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.leading_coefficient
        if lc != 1:
            num = num * (Fraction(1) / lc)
            den = den.monic()
        if num.is_zero():
            den = UniPoly.one()
        self._num = num
        self._den = den

    @classmethod
    def constant(cls, value):
        return cls(UniPoly.constant(value))

    @classmethod
    def identity(cls):
        return cls(UniPoly.x())

    @classmethod
    def from_coefficients(cls, numerator, denominator=(1,)):
        return cls(UniPoly(numerator), UniPoly(denominator))

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    @property
    def degree(self):
        return max(self._num.degree, self._den.degree)

    def is_constant(self):
        return self.degree == 0

    def is_polynomial(self):
        return self._den.degree == 0

    def is_rational(self):
        return self._num.is_rational() and self._den.is_rational()

    def constant_value(self):
        if not self.is_constant():
            raise InputException("%s is not constant" % self)
        return self._num[0]

    def _coerce(self, other):
        if isinstance(other, UniRat):
            return other
        if isinstance(other, UniPoly):
            return UniRat(other)
        try:
            return UniRat.constant(as_scalar(other))
        except InputException:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            return UniRat(self._num + other._num, self._den)
        return UniRat(self._num * other._den + other._num * self._den,
                      self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        result = UniRat.__new__(UniRat)
        result._num = -self._num
        result._den = self._den
        return result

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
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return UniRat(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other._num.is_zero():
            raise ZeroDenominatorException("division by zero function")
        return UniRat(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return UniRat.constant(1) / (self ** -exponent)
        return UniRat(self._num ** exponent, self._den ** exponent)

    def evaluate(self, value):
        den = self._den.evaluate(value)
        if den == 0:
            raise DomainException("%s has a pole at %s" % (self, value))
        return self._num.evaluate(value) / den

    __call__ = evaluate

    def in_domain(self, value):
        return self._den.evaluate(value) != 0

    def value_at_infinity(self):
        '''Limit at infinity; None stands for infinity itself'''
        if self._num.degree > self._den.degree:
            return None
        if self._num.degree < self._den.degree:
            return Fraction(0)
        return self._num.leading_coefficient / self._den.leading_coefficient

    def compose(self, inner):
        '''self(inner(x))'''
        return compose_uni(self, inner)

    def conjugate(self):
        return UniRat(self._num.conjugate(), self._den.conjugate())

    def __eq__(self, other):
        if isinstance(other, UniRat):
            return self._num == other._num and self._den == other._den
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self == other

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._num, self._den))

    def to_text(self, variable='x'):
        scale = _common_integer_scale(
            self._num.coefficients + self._den.coefficients)
        num = self._num * scale
        den = self._den * scale

        def ordered(poly):
            return [(c, (i,)) for i, c in reversed(
                list(enumerate(poly.coefficients))) if c != 0]
        return fraction_text(ordered(num), ordered(den), (variable,))

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "UniRat(%s)" % self.to_text()


def compose_uni(g, h):
    '''
    g(h(x)) computed on the homogenized form
    sum g_i P**i Q**(m-i) for h = P/Q and m = deg g

    A constant g is returned unchanged, and a constant h gives the
    constant g(h).

    Raises
    ------
    ZeroDenominatorException
        when h is a constant at a pole of g, as for g = 1/x, h = 0
    '''
    if g.is_constant():
        return g
    m = g.degree
    p_powers = [UniPoly.one()]
    q_powers = [UniPoly.one()]
    for _ in range(m):
        p_powers.append(p_powers[-1] * h.numerator)
        q_powers.append(q_powers[-1] * h.denominator)
    num = UniPoly.zero()
    den = UniPoly.zero()
    for i in range(m + 1):
        basis = p_powers[i] * q_powers[m - i]
        num = num + basis * g.numerator[i]
        den = den + basis * g.denominator[i]
    return UniRat(num, den)


def _as_bipoly(value):
    if isinstance(value, BiPoly):
        return value
    return BiPoly.constant(value)


def homogenized_substitution(poly, l1, l2, d1, d2):
    '''
    sum c_ij P1**i Q1**(d1-i) P2**j Q2**(d2-j) over the terms of poly,
    for l1 = P1/Q1 in x1 and l2 = P2/Q2 in x2
    '''
    def powers(f, var, top):
        p = BiPoly.from_univariate(f.numerator, var)
        q = BiPoly.from_univariate(f.denominator, var)
        ps = [BiPoly.constant(1)]
        qs = [BiPoly.constant(1)]
        for _ in range(top):
            ps.append(ps[-1] * p)
            qs.append(qs[-1] * q)
        return [ps[i] * qs[top - i] for i in range(top + 1)]
    basis1 = powers(l1, X1, d1)
    basis2 = powers(l2, X2, d2)
    result = BiPoly.zero()
    for (i, j), c in poly.terms():
        result = result + basis1[i] * basis2[j] * c
    return result


class BiRat(object):
    '''
    Bivariate rational function p/q in lowest terms.

    q is scaled to grlex leading coefficient 1 with x1 > x2, which
    makes structural equality a test of equality as functions.
    '''

    __slots__ = ('_num', '_den')

    def __init__(self, numerator, denominator=None):
        num = _as_bipoly(numerator)
        den = BiPoly.constant(1) if denominator is None else \
            _as_bipoly(denominator)
        if den.is_zero():
            raise ZeroDenominatorException("denominator is zero")
        if num.is_zero():
            den = BiPoly.constant(1)
        elif not den.is_constant():
            g = poly_gcd_bivariate(num, den)
            if not g.is_constant():
                num = exact_divide(num, g)
                den = exact_divide(den, g)
        lc = den.leading_coefficient()
        if lc != 1:
            num = num * (Fraction(1) / lc)
            den = den * (Fraction(1) / lc)
        self._num = num
        self._den = den

    @classmethod
    def constant(cls, value):
        return cls(BiPoly.constant(value))

    @classmethod
    def x1(cls):
        return cls(BiPoly.x1())

    @classmethod
    def x2(cls):
        return cls(BiPoly.x2())

    @classmethod
    def from_unirat(cls, f, var=X1):
        return cls(BiPoly.from_univariate(f.numerator, var),
                   BiPoly.from_univariate(f.denominator, var))

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    def degree_in(self, var):
        index = variable_index(var)
        return max(self._num.degree_in(index), self._den.degree_in(index))

    @property
    def deg_x1(self):
        return self.degree_in(0)

    @property
    def deg_x2(self):
        return self.degree_in(1)

    def total_degree(self):
        return max(self._num.total_degree(), self._den.total_degree())

    def is_constant(self):
        return self._num.is_constant() and self._den.is_constant()

    def is_rational(self):
        return self._num.is_rational() and self._den.is_rational()

    def _coerce(self, other):
        if isinstance(other, BiRat):
            return other
        if isinstance(other, BiPoly):
            return BiRat(other)
        try:
            return BiRat.constant(as_scalar(other))
        except InputException:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            return BiRat(self._num + other._num, self._den)
        return BiRat(self._num * other._den + other._num * self._den,
                     self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        result = BiRat.__new__(BiRat)
        result._num = -self._num
        result._den = self._den
        return result

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
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiRat(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other._num.is_zero():
            raise ZeroDenominatorException("division by zero function")
        return BiRat(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return BiRat.constant(1) / (self ** -exponent)
        return BiRat(self._num ** exponent, self._den ** exponent)

    def specialize(self, var, value):
        '''
        Restrict to the line ``var`` = value

        Returns
        -------
        UniRat in the other variable

        Raises
        ------
        PoleLineException
            when the denominator vanishes on the whole line
        '''
        den = self._den.specialize(var, value)
        if den.is_zero():
            raise PoleLineException("%s = %s is a pole line of %s" % (
                var, value, self))
        return UniRat(self._num.specialize(var, value), den)

    def evaluate(self, a1, a2):
        den = self._den.evaluate((a1, a2))
        if den == 0:
            raise DomainException("(%s, %s) is outside the domain of %s" % (
                a1, a2, self))
        return self._num.evaluate((a1, a2)) / den

    def in_domain(self, a1, a2):
        return self._den.evaluate((a1, a2)) != 0

    def swap_variables(self):
        return BiRat(self._num.swap(), self._den.swap())

    def compose_outer(self, g):
        '''g(self(x1, x2)) for a UniRat g'''
        if g.is_constant():
            return BiRat.constant(g.constant_value())
        m = g.degree
        p_powers = [BiPoly.constant(1)]
        q_powers = [BiPoly.constant(1)]
        for _ in range(m):
            p_powers.append(p_powers[-1] * self._num)
            q_powers.append(q_powers[-1] * self._den)
        num = BiPoly.zero()
        den = BiPoly.zero()
        for i in range(m + 1):
            basis = p_powers[i] * q_powers[m - i]
            num = num + basis * g.numerator[i]
            den = den + basis * g.denominator[i]
        return BiRat(num, den)

    def substitute(self, l1, l2):
        '''self(l1(x1), l2(x2)) for UniRat l1, l2'''
        d1 = self.deg_x1
        d2 = self.deg_x2
        num = homogenized_substitution(self._num, l1, l2, d1, d2)
        den = homogenized_substitution(self._den, l1, l2, d1, d2)
        return BiRat(num, den)

    def __eq__(self, other):
        if isinstance(other, BiRat):
            return self._num == other._num and self._den == other._den
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self == other

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._num, self._den))

    def to_text(self):
        scale = _common_integer_scale(
            [c for _, c in self._num.terms()] +
            [c for _, c in self._den.terms()])
        num = self._num * scale
        den = self._den * scale
        return fraction_text(
            [(c, e) for e, c in num.sorted_terms()],
            [(c, e) for e, c in den.sorted_terms()],
            (X1, X2))

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "BiRat(%s)" % self.to_text()


def total_degree(f):
    return f.total_degree()


def agree_on_lines(f1, f2, values, var=X2):
    '''
    True when f1 and f2 restrict to the same function on every line
    ``var`` = a, a in values. Lines that are pole lines of either side
    are skipped.
    '''
    for a in values:
        try:
            r1 = f1.specialize(var, a)
            r2 = f2.specialize(var, a)
        except PoleLineException:
            continue
        if r1 != r2:
            return False
    return True
