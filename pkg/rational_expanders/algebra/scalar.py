import math
from fractions import Fraction

from sympy import factorint

from rational_expanders.utils.exceptions import FieldMismatchException, \
    InputException


def square_free_decomposition(n):
    '''
    Split a nonzero integer as n = s * f**2 with s square-free.

    The sign of n is carried by s.

    Returns
    -------
    (s, f): tuple of int
    '''
    if n == 0:
        raise InputException("square-free part of zero is undefined")
    sign = -1 if n < 0 else 1
    s = 1
    f = 1
    for p, exponent in factorint(abs(int(n))).items():
        p = int(p)
        f *= p ** (exponent // 2)
        if exponent % 2:
            s *= p
    return sign * s, f


def rational_sqrt(r):
    '''Exact rational square root of r, or None'''
    r = Fraction(r)
    if r < 0:
        return None
    num = math.isqrt(r.numerator)
    den = math.isqrt(r.denominator)
    if num * num == r.numerator and den * den == r.denominator:
        return Fraction(num, den)
    return None


def as_scalar(value):
    if isinstance(value, (Fraction, QuadraticScalar)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InputException("%r is not an exact scalar" % (value,))


def is_rational(value):
    return not isinstance(value, QuadraticScalar)


def quadratic(a, b, delta):
    '''
    Build a + b*sqrt(delta), collapsing to a Fraction when b is zero
    '''
    b = Fraction(b)
    if b == 0:
        return Fraction(a)
    return QuadraticScalar(Fraction(a), b, delta)


def conjugate(value):
    if isinstance(value, QuadraticScalar):
        return value.conjugate()
    return value


def small_rationals():
    '''
    Endless deterministic sequence of distinct rationals by height:
    0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, -3/2, 1/3, ...
    '''
    yield Fraction(0)
    height = 1
    while True:
        values = [Fraction(p, q)
                  for q in range(1, height + 1)
                  for p in range(1, height + 1)
                  if max(p, q) == height and math.gcd(p, q) == 1]
        values.sort(key=lambda v: (v.denominator, v.numerator))
        for v in values:
            yield v
            yield -v
        height += 1


def scalar_sort_key(value):
    if isinstance(value, QuadraticScalar):
        return (value.a, value.b)
    return (Fraction(value), Fraction(0))


def scalar_sign(value):
    '''
    Sign of a real scalar. Elements of Q(sqrt(delta)) with delta < 0
    have no sign and raise FieldMismatchException.
    '''
    if not isinstance(value, QuadraticScalar):
        return (value > 0) - (value < 0)
    return value.sign()


def scalar_to_text(value):
    if isinstance(value, QuadraticScalar):
        return str(value)
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


class QuadraticScalar(object):
    '''
    Element a + b*sqrt(delta) of a quadratic extension of Q.

    delta is a square-free integer different from 0 and 1. Instances
    always have b != 0: rational values are kept as Fraction. Operands
    tied to different delta raise FieldMismatchException.
    '''

    __slots__ = ('_a', '_b', '_delta')

    def __init__(self, a, b, delta):
        if delta in (0, 1):
            raise InputException("delta must differ from 0 and 1")
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._delta = int(delta)
        if self._b == 0:
            raise InputException("use Fraction for rational values")

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def delta(self):
        return self._delta

    def _parts(self, other):
        if isinstance(other, QuadraticScalar):
            if other._delta != self._delta:
                raise FieldMismatchException(
                    "cannot mix sqrt(%d) and sqrt(%d)" % (
                        self._delta, other._delta))
            return other._a, other._b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def conjugate(self):
        return QuadraticScalar(self._a, -self._b, self._delta)

    def norm(self):
        return self._a * self._a - self._delta * self._b * self._b

    def sign(self):
        if self._delta < 0:
            raise FieldMismatchException(
                "sqrt(%d) is not real" % self._delta)
        # sign of a + b*sqrt(d) compared through squares
        sa = (self._a > 0) - (self._a < 0)
        sb = (self._b > 0) - (self._b < 0)
        if sa == sb or sa == 0:
            return sb
        if self._a * self._a > self._delta * self._b * self._b:
            return sa
        return sb

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return quadratic(self._a + parts[0], self._b + parts[1], self._delta)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticScalar(-self._a, -self._b, self._delta)

    def __pos__(self):
        return self

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return quadratic(self._a - parts[0], self._b - parts[1], self._delta)

    def __rsub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return quadratic(parts[0] - self._a, parts[1] - self._b, self._delta)

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        c, d = parts
        return quadratic(self._a * c + self._delta * self._b * d,
                         self._a * d + self._b * c,
                         self._delta)

    __rmul__ = __mul__

    def _inverse(self):
        n = self.norm()
        return QuadraticScalar(self._a / n, -self._b / n, self._delta)

    def __truediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        c, d = parts
        if d == 0:
            if c == 0:
                raise ZeroDivisionError("division by zero scalar")
            return QuadraticScalar(self._a / c, self._b / c, self._delta)
        return self * QuadraticScalar(c, d, self._delta)._inverse()

    def __rtruediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return self._inverse() * parts[0]

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Fraction(1)
        base = self
        while exponent:
            if exponent & 1:
                result = base * result
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticScalar):
            return (self._delta == other._delta and self._a == other._a and
                    self._b == other._b)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._a, self._b, self._delta))

    def __bool__(self):
        return True

    def __repr__(self):
        return "QuadraticScalar(%s, %s, %d)" % (
            self._a, self._b, self._delta)

    def __str__(self):
        return "(%s + %s*sqrt(%d))" % (
            scalar_to_text(self._a), scalar_to_text(self._b), self._delta)


class WorkingField(object):
    '''
    The field where roots are looked for: Q, or Q(sqrt(delta))

    Parameters
    ----------
    delta: int or None
        square-free integer different from 0 and 1. None means Q.
    '''

    def __init__(self, delta=None):
        if delta is not None:
            delta = int(delta)
            s, f = square_free_decomposition(delta)
            if f != 1 or delta == 1:
                raise InputException(
                    "delta %d is not a square-free non-unit" % delta)
        self._delta = delta

    @property
    def delta(self):
        return self._delta

    def is_rationals(self):
        return self._delta is None

    def sqrt(self, r):
        '''
        Square root of the rational r inside this field, or None
        '''
        r = Fraction(r)
        root = rational_sqrt(r)
        if root is not None:
            return root
        if self._delta is None:
            return None
        s, f = square_free_decomposition(r.numerator * r.denominator)
        if s != self._delta:
            return None
        return QuadraticScalar(0, Fraction(f, r.denominator), self._delta)

    def contains(self, value):
        if isinstance(value, QuadraticScalar):
            return value.delta == self._delta
        return True

    @staticmethod
    def splitting(r):
        '''Smallest working field holding a square root of the rational r'''
        r = Fraction(r)
        if rational_sqrt(r) is not None:
            return WorkingField()
        s, _ = square_free_decomposition(r.numerator * r.denominator)
        return WorkingField(s)

    def __eq__(self, other):
        return isinstance(other, WorkingField) and \
            other._delta == self._delta

    def __hash__(self):
        return hash(self._delta)

    def __str__(self):
        if self._delta is None:
            return 'Q'
        return 'Q(sqrt(%d))' % self._delta

    __repr__ = __str__


RATIONALS = WorkingField()
