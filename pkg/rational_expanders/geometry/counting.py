import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from plico.utils.logger import Logger

from rational_expanders.algebra.bivariate_polynomial import X2
from rational_expanders.algebra.scalar import as_scalar, is_rational, \
    scalar_sort_key
from rational_expanders.utils.exceptions import DomainException, \
    InputException


_logger = Logger.of('counting')


class EvalSet(object):
    '''Ordered list of distinct exact scalars'''

    def __init__(self, elements):
        values = [as_scalar(v) for v in elements]
        if len(set(values)) != len(values):
            raise InputException("evaluation set has repeated elements")
        self._elements = tuple(values)

    @classmethod
    def of(cls, values):
        if isinstance(values, EvalSet):
            return values
        return cls(values)

    @property
    def elements(self):
        return self._elements

    def is_rational(self):
        return all(is_rational(v) for v in self._elements)

    def sorted(self):
        return EvalSet(sorted(self._elements, key=scalar_sort_key))

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __getitem__(self, index):
        return self._elements[index]

    def __eq__(self, other):
        return isinstance(other, EvalSet) and \
            self._elements == other._elements

    def __hash__(self):
        return hash(self._elements)

    def __repr__(self):
        return "EvalSet(%s)" % ", ".join(str(v) for v in self._elements)


def _integer_coefficients(f):
    '''Integer term dictionaries of a common multiple of (p, q)'''
    terms = list(f.numerator.terms()) + list(f.denominator.terms())
    lcm = 1
    for _, c in terms:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    num = {e: int(c * lcm) for e, c in f.numerator.terms()}
    den = {e: int(c * lcm) for e, c in f.denominator.terms()}
    return num, den


def _homogeneous_powers(value, degree):
    '''p**i q**(degree-i) for value = p/q'''
    value = Fraction(value)
    p, q = value.numerator, value.denominator
    return [p ** i * q ** (degree - i) for i in range(degree + 1)]


def _row_coefficients(terms, powers2, d1):
    row = [0] * (d1 + 1)
    for (i, j), c in terms.items():
        row[i] += c * powers2[j]
    return row


def _dot(row, powers1):
    return sum(c * p for c, p in zip(row, powers1))


class GridEvaluator(object):
    '''
    Exact values of a BiRat on a grid A1 x A2.

    On rational grids f = p/q is evaluated as the pair of integers
    (P, Q) of the homogenized p and q, keyed by the reduced pair; grids
    with quadratic elements fall back to exact scalar evaluation.
    Points where the denominator vanishes are outside the domain.
    '''

    def __init__(self, f):
        self._f = f
        self._d1 = f.deg_x1
        self._d2 = f.deg_x2
        self._integer = f.is_rational()
        if self._integer:
            self._num, self._den = _integer_coefficients(f)

    @property
    def function(self):
        return self._f

    def _integer_rows(self, first, second, counter):
        skipped = 0
        powers1 = [_homogeneous_powers(a, self._d1) for a in first]
        for a2 in second:
            powers2 = _homogeneous_powers(a2, self._d2)
            num_row = _row_coefficients(self._num, powers2, self._d1)
            den_row = _row_coefficients(self._den, powers2, self._d1)
            for p1 in powers1:
                den = _dot(den_row, p1)
                if den == 0:
                    skipped += 1
                    continue
                num = _dot(num_row, p1)
                g = math.gcd(num, den)
                if den < 0:
                    g = -g
                counter[(num // g, den // g)] += 1
        return skipped

    def _exact_rows(self, first, second, counter):
        skipped = 0
        f = self._f
        for a2 in second:
            num_row = f.numerator.specialize(X2, a2)
            den_row = f.denominator.specialize(X2, a2)
            for a1 in first:
                den = den_row.evaluate(a1)
                if den == 0:
                    skipped += 1
                    continue
                counter[num_row.evaluate(a1) / den] += 1
        return skipped

    def value_counter(self, first, second, strict=True):
        '''
        Multiplicity of every value of f on first x second.

        Returns
        -------
        (Counter, int)
            value multiplicities and the number of grid points outside
            the domain

        Raises
        ------
        DomainException
            in strict mode, when a grid point is outside the domain
        '''
        first = EvalSet.of(first)
        second = EvalSet.of(second)
        counter = Counter()
        if self._integer and first.is_rational() and second.is_rational():
            skipped = self._integer_rows(first, second, counter)
        else:
            skipped = self._exact_rows(first, second, counter)
        if skipped and strict:
            raise DomainException(
                "%d grid points are outside the domain of %s" % (
                    skipped, self._f))
        return counter, skipped


def _row_counter(args):
    f, first, rows, strict = args
    return GridEvaluator(f).value_counter(first, rows, strict)


def _chunks(values, count):
    size = max(1, -(-len(values) // count))
    return [values[i:i + size] for i in range(0, len(values), size)]


def value_counter(f, first, second, workers=1, strict=True):
    '''
    Value multiplicities of f on first x second, split over rows of
    the grid among ``workers`` processes. The merge is a sum of
    counters and does not depend on the split.
    '''
    first = EvalSet.of(first)
    second = EvalSet.of(second)
    if workers <= 1 or len(second) < 2:
        return GridEvaluator(f).value_counter(first, second, strict)
    jobs = [(f, first, EvalSet(rows), strict)
            for rows in _chunks(list(second), workers)]
    counter = Counter()
    skipped = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for partial, missing in pool.map(_row_counter, jobs):
            counter.update(partial)
            skipped += missing
    _logger.debug("%d rows over %d workers" % (len(second), workers))
    return counter, skipped


def image_size(f, first, second, workers=1):
    '''|f(A1, A2)|'''
    counter, _ = value_counter(f, first, second, workers)
    return len(counter)


def quadruples_from_counter(counter):
    return sum(m * m for m in counter.values())


def cs_bound_from_counter(counter):
    '''(number of counted points)**2 / Q'''
    points = sum(counter.values())
    quadruples = quadruples_from_counter(counter)
    if quadruples == 0:
        raise InputException("empty grid has no quadruples")
    return Fraction(points * points, quadruples)


def quadruple_count(h, first, second, workers=1):
    '''
    Number of (a1, a2, a1', a2') in A1 x A2 x A1 x A2 with
    h(a1, a2) = h(a1', a2'), the sum of squared value multiplicities
    '''
    counter, _ = value_counter(h, first, second, workers)
    return quadruples_from_counter(counter)


def brute_force_quadruples(h, first, second):
    '''Quadruple count by direct comparison of all pairs of points'''
    points = [(a1, a2) for a1 in first for a2 in second]
    values = [h.evaluate(a1, a2) for a1, a2 in points]
    count = 0
    for u in values:
        for v in values:
            if u == v:
                count += 1
    return count


def cs_lower_bound(h, first, second, workers=1, quadruples=None):
    '''
    (|A1| |A2|)**2 / Q, a lower bound for |h(A1, A2)|
    '''
    if quadruples is None:
        quadruples = quadruple_count(h, first, second, workers)
    if quadruples == 0:
        raise InputException("empty grid has no quadruples")
    size = len(EvalSet.of(first)) * len(EvalSet.of(second))
    return Fraction(size * size, quadruples)


def incidences(first, second, curves):
    '''
    Pairs (point, curve) with the point of first x second on the curve;
    the family is indexed, equal curves from different pairs count
    separately
    '''
    count = 0
    for c in curves:
        for b1 in first:
            for b2 in second:
                if c.contains(b1, b2):
                    count += 1
    return count
