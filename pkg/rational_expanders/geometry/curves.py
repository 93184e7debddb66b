from plico.utils.logger import Logger

from rational_expanders.algebra.bivariate_polynomial import X1, X2, \
    poly_gcd_bivariate
from rational_expanders.algebra.resultant import cross_poly
from rational_expanders.algebra.roots import solve_bivariate_system
from rational_expanders.algebra.scalar import RATIONALS
from rational_expanders.utils.exceptions import DegreeException, \
    DomainException, InputException, PoleLineException


_logger = Logger.of('curves')

C1 = 'c1'
C2 = 'c2'

VARIANTS = (C1, C2)


class CurveSpec(object):
    '''
    Plane curve of value coincidences of f.

    For variant c1 and pair (a2, a2') the curve holds the points
    (b1, b2) with f(b1, a2) = f(b2, a2'); for variant c2 and pair
    (a1, a1') it holds the (b1, b2) with f(a1, b1) = f(a1', b2).

    When both specializations are the same constant every point is a
    coincidence: the defining polynomial is zero, ``whole_plane`` is
    True and the degree is None.
    '''

    def __init__(self, defining, f, pair, variant):
        self._defining = defining
        self._f = f
        self._pair = tuple(pair)
        self._variant = variant

    @classmethod
    def from_defining(cls, defining):
        '''A curve given only by its polynomial, with no provenance'''
        if defining.is_zero():
            raise DegreeException("the zero polynomial defines no curve")
        return cls(defining, None, (), None)

    @property
    def defining(self):
        return self._defining

    @property
    def f(self):
        return self._f

    @property
    def pair(self):
        return self._pair

    @property
    def variant(self):
        return self._variant

    @property
    def whole_plane(self):
        return self._defining.is_zero()

    @property
    def degree(self):
        if self.whole_plane:
            return None
        return self._defining.total_degree()

    def contains(self, b1, b2):
        if self.whole_plane:
            return True
        return self._defining.evaluate((b1, b2)) == 0

    def to_text(self):
        if self.whole_plane:
            return "whole plane"
        return "%s = 0" % self._defining.to_text()

    def __repr__(self):
        return "CurveSpec(%s of %s at %s: %s)" % (
            self._variant, self._f, self._pair, self.to_text())


def _specializations(f, variant, pair):
    var = X2 if variant == C1 else X1
    return f.specialize(var, pair[0]), f.specialize(var, pair[1])


def curve(f, variant, pair):
    '''
    Raises
    ------
    PoleLineException
        when either specialization lies on a pole line of f
    '''
    if variant not in VARIANTS:
        raise InputException("unknown curve variant '%s'" % variant)
    first, second = _specializations(f, variant, pair)
    return CurveSpec(cross_poly(first, second), f, pair, variant)


def curve_family(f, variant, values):
    '''
    Indexed family of curves over all ordered pairs of values. Pairs
    hitting a pole line are left out; whole-plane members stay, so the
    incidences of the family equal the coincidence count.
    '''
    family = []
    for a in values:
        for b in values:
            try:
                family.append(curve(f, variant, (a, b)))
            except PoleLineException as e:
                _logger.warn("skipping pair (%s, %s): %s" % (a, b, e))
    return family


def duality_check(f, first_pair, second_pair):
    '''
    (a1, a1') lies on the c1 curve of (a2, a2') exactly when
    (a2, a2') lies on the c2 curve of (a1, a1').

    Raises
    ------
    DomainException
        when one of (a1, a2), (a1', a2') is outside the domain of f
    '''
    (a1, a1b), (a2, a2b) = first_pair, second_pair
    for point in ((a1, a2), (a1b, a2b)):
        if not f.in_domain(*point):
            raise DomainException("%s is outside the domain of %s" % (
                point, f))
    first, second = _specializations(f, C1, second_pair)
    on_first = cross_poly(first, second).evaluate((a1, a1b)) == 0
    first, second = _specializations(f, C2, first_pair)
    on_second = cross_poly(first, second).evaluate((a2, a2b)) == 0
    return on_first == on_second


def shares_component(c1, c2):
    if c1.whole_plane or c2.whole_plane:
        return True
    return poly_gcd_bivariate(c1.defining, c2.defining).total_degree() > 0


def bezout_check(c1, c2, field=RATIONALS):
    '''
    Common points in the working field of two curves without a shared
    component number at most deg c1 * deg c2; curves sharing a
    component pass.
    '''
    if shares_component(c1, c2):
        return True
    points = solve_bivariate_system(c1.defining, c2.defining, field)
    _logger.debug("%d common points, bound %d" % (
        len(points), c1.degree * c2.degree))
    return len(points) <= c1.degree * c2.degree


def max_curve_degree(f):
    '''Upper bound 2 deg f on the degree of every curve of f'''
    return 2 * f.total_degree()
