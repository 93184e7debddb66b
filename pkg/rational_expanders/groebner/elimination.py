from fractions import Fraction

from plico.utils.logger import Logger

from rational_expanders.algebra.multivariate_polynomial import MultiPoly
from rational_expanders.algebra.roots import split_roots
from rational_expanders.algebra.scalar import RATIONALS, scalar_sort_key
from rational_expanders.groebner.buchberger import buchberger
from rational_expanders.groebner.monomial_order import LEX
from rational_expanders.utils.caps import Caps
from rational_expanders.utils.exceptions import CapExceededException, \
    DegreeException, InputException, NotZeroDimensionalException


_logger = Logger.of('elimination')


def elimination_ideal(gb, m):
    '''
    Elements of a lex basis free of the first m variables, which form
    a basis of the m-th elimination ideal
    '''
    if not gb.order.is_lex():
        raise InputException("elimination needs a lex basis")
    if not 0 <= m <= len(gb.variables):
        raise InputException("cannot eliminate %d of %d variables" % (
            m, len(gb.variables)))
    return [g for g in gb.generators
            if not any(g.involves(i) for i in range(m))]


class ZeroDimSolution(object):
    '''
    Points of a zero-dimensional variety in the working field.

    ``residues`` lists the univariate factors met during
    back-substitution whose roots lie outside the field; when it is
    non-empty the point list is complete only over the field.
    '''

    def __init__(self, variables, points, residues):
        self._variables = tuple(variables)
        self._points = list(points)
        self._residues = list(residues)

    @property
    def variables(self):
        return self._variables

    @property
    def points(self):
        return self._points

    @property
    def residues(self):
        return self._residues

    def has_residue(self):
        return bool(self._residues)

    def as_dicts(self):
        return [dict(zip(self._variables, p)) for p in self._points]

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __repr__(self):
        return "ZeroDimSolution(%s, residues=%s)" % (
            self._points, self._residues)


def solve_zero_dim(gb, field=RATIONALS):
    '''
    All points of V(gb) in the working field, by back-substitution
    through a lex basis from the last variable to the first.

    Raises
    ------
    NotZeroDimensionalException
        when some variable has no pure power among the leading terms
    '''
    if not gb.order.is_lex():
        raise InputException("solving needs a lex basis")
    variables = gb.variables
    n = len(variables)
    if gb.is_unit():
        return ZeroDimSolution(variables, [], [])
    if not gb.is_zero_dimensional():
        raise NotZeroDimensionalException(
            "ideal is not zero-dimensional in %s" % (variables,))
    partial = [{}]
    residues = []
    for i in range(n - 1, -1, -1):
        relevant = [g for g in gb.generators
                    if not any(g.involves(k) for k in range(i))]
        extended = []
        for values in partial:
            specialized = [g.substitute(values).to_univariate(i)
                           for g in relevant]
            specialized = [s for s in specialized if not s.is_zero()]
            if not specialized:
                raise NotZeroDimensionalException(
                    "variable %s is free" % variables[i])
            common = specialized[0]
            for s in specialized[1:]:
                common = common.gcd(s)
            if common.degree < 1:
                continue
            roots, residue = split_roots(common, field)
            if residue is not None:
                _logger.debug("roots of %s lie outside %s" % (
                    residue, field))
                residues.append(residue)
            for r in roots:
                point = dict(values)
                point[i] = r
                extended.append(point)
        partial = extended
    points = [tuple(p[i] for i in range(n)) for p in partial]
    for point in points:
        assert all(g.evaluate(point) == 0 for g in gb.generators)
    points.sort(key=lambda p: tuple(scalar_sort_key(v) for v in p))
    return ZeroDimSolution(variables, points, residues)


def dube_bound(d, n):
    '''
    2 (d**2/2 + d)**(2**(n-1)), the degree bound for reduced bases of
    ideals generated in degree <= d with n variables
    '''
    if d < 0 or n < 1:
        raise DegreeException("need d >= 0 and n >= 1")
    return 2 * (Fraction(d * d, 2) + d) ** (2 ** (n - 1))


def dube_degree_check(gb, d, n):
    '''True when every basis element obeys the degree bound'''
    top = gb.max_degree()
    base = Fraction(d * d, 2) + d
    if base >= 1 and top <= 2 * base:
        return True
    return top <= dube_bound(d, n)


def image_closure(polys, source_variables, image_prefix='y'):
    '''
    Equations of the Zariski closure of the image of a homogeneous
    polynomial map, by eliminating the source variables from
    y_i - p_i(x).

    Returns
    -------
    list of MultiPoly in the image variables y0, y1, ...
    '''
    polys = list(polys)
    source_variables = tuple(source_variables)
    if len(source_variables) > Caps.IMAGE_CLOSURE_ARITY:
        raise CapExceededException(
            "image closure limited to %d source variables, got %d" % (
                Caps.IMAGE_CLOSURE_ARITY, len(source_variables)))
    degrees = {p.total_degree() for p in polys if not p.is_zero()}
    if len(degrees) > 1 or not all(p.is_homogeneous() for p in polys):
        raise DegreeException("map components must be homogeneous of "
                              "equal degree")
    image_variables = tuple("%s%d" % (image_prefix, i)
                            for i in range(len(polys)))
    ring = source_variables + image_variables
    generators = []
    for p, y in zip(polys, image_variables):
        generators.append(MultiPoly.generator(y, ring) - p.embed(ring))
    gb = buchberger(generators, LEX, ring)
    kept = elimination_ideal(gb, len(source_variables))
    return [g.restrict(image_variables) for g in kept]

