from fractions import Fraction

from plico.utils.logger import Logger

from rational_expanders.algebra.bivariate_polynomial import BiPoly, X1, X2
from rational_expanders.algebra.mobius import Mobius
from rational_expanders.algebra.multivariate_polynomial import MultiPoly
from rational_expanders.algebra.rational_function import BiRat, UniRat
from rational_expanders.decompose.univariate import left_solve_vectors
from rational_expanders.groebner.buchberger import buchberger
from rational_expanders.groebner.elimination import solve_zero_dim
from rational_expanders.groebner.monomial_order import LEX
from rational_expanders.utils.caps import Caps
from rational_expanders.utils.exceptions import CapExceededException, \
    DegreeException, InputException, NotZeroDimensionalException


_logger = Logger.of('bivariate lift')

OUTER = 'outer'
INNER = 'inner'


def _lcm(a, b):
    return (a * b).exact_div(a.gcd(b))


def _inner_lift(f, g, max_unknowns):
    m = g.degree
    d1 = f.deg_x1
    if d1 == 0:
        return f
    if d1 % m:
        return None
    n = d1 // m
    if 2 * (n + 1) > max_unknowns:
        raise CapExceededException("inner lift needs %d unknowns, cap %d" % (
            2 * (n + 1), max_unknowns))
    p_f = [UniRat(c) for c in f.numerator.coefficient_list(X1)]
    q_f = [UniRat(c) for c in f.denominator.coefficient_list(X1)]
    vectors = left_solve_vectors(p_f, q_f, g, n, UniRat.constant(0),
                                 UniRat.constant(1))
    identity = UniRat.identity()
    for z, w in vectors:
        if all(c == 0 for c in w):
            continue
        common = None
        for c in z + w:
            common = c.denominator if common is None else \
                _lcm(common, c.denominator)
        z_polys = [(c * common).numerator for c in z]
        w_polys = [(c * common).numerator for c in w]
        h = BiRat(BiPoly.from_coefficients_in(X1, z_polys),
                  BiPoly.from_coefficients_in(X1, w_polys))
        if h.substitute(g, identity) == f:
            return h
    return None


def _grlex_box(n1, n2):
    box = [(i, j) for i in range(n1 + 1) for j in range(n2 + 1)]
    box.sort(key=lambda e: (e[0] + e[1], e[0], e[1]), reverse=True)
    return box


def _embed_bipoly(poly, ring):
    size = len(ring) - 2
    return MultiPoly({(0,) * size + e: c for e, c in poly.terms()}, ring)


def _outer_lift(f, g, max_unknowns):
    m = g.degree
    if m == 1:
        return f.compose_outer(Mobius.from_unirat(g).inverse().as_unirat())
    d1, d2 = f.deg_x1, f.deg_x2
    if d1 % m or d2 % m:
        return None
    box = _grlex_box(d1 // m, d2 // m)
    if 2 * len(box) > max_unknowns:
        raise CapExceededException("outer lift needs %d unknowns, cap %d" % (
            2 * len(box), max_unknowns))
    zs = tuple('z%d_%d' % e for e in box)
    ws = tuple('w%d_%d' % e for e in box)
    ring = zs + ws + (X1, X2)
    size = len(zs) + len(ws)

    def monomial(e):
        return MultiPoly({(0,) * size + e: 1}, ring)
    p = MultiPoly.zero(ring)
    q = MultiPoly.zero(ring)
    for e, z, w in zip(box, zs, ws):
        p = p + MultiPoly.generator(z, ring) * monomial(e)
        q = q + MultiPoly.generator(w, ring) * monomial(e)
    one = MultiPoly.constant(1, ring)
    p_powers = [one]
    q_powers = [one]
    for _ in range(m):
        p_powers.append(p_powers[-1] * p)
        q_powers.append(q_powers[-1] * q)
    num = MultiPoly.zero(ring)
    den = MultiPoly.zero(ring)
    for k in range(m + 1):
        basis = p_powers[k] * q_powers[m - k]
        num = num + basis * g.numerator[k]
        den = den + basis * g.denominator[k]
    residual = _embed_bipoly(f.numerator, ring) * den - \
        _embed_bipoly(f.denominator, ring) * num
    grouped = {}
    for e, c in residual.terms():
        grouped.setdefault(e[size:], {})[e[:size] + (0, 0)] = c
    equations = [MultiPoly(t, ring) for t in grouped.values()]

    for lead in range(len(box)):
        gauge = {ring.index(ws[lead]): Fraction(1)}
        for higher in range(lead):
            gauge[ring.index(ws[higher])] = Fraction(0)
        unknowns = zs + ws[lead + 1:]
        system = [e.substitute(gauge).restrict(unknowns) for e in equations]
        system = [e for e in system if not e.is_zero()]
        if any(e.is_constant() for e in system):
            continue
        gb = buchberger(system, LEX, unknowns)
        if gb.is_unit():
            continue
        try:
            solution = solve_zero_dim(gb)
        except NotZeroDimensionalException:
            _logger.warn("outer lift of %s through %s: gauge %s is not "
                         "zero-dimensional" % (f, g, ws[lead]))
            continue
        for point in solution.points:
            values = dict(zip(unknowns, point))
            values[ws[lead]] = Fraction(1)
            numerator = BiPoly({e: values.get(z, 0)
                                for e, z in zip(box, zs)})
            denominator = BiPoly({e: values.get(w, 0)
                                  for e, w in zip(box, ws)})
            if denominator.is_zero():
                continue
            h = BiRat(numerator, denominator)
            if h.compose_outer(g) == f:
                return h
    return None


def solve_bivariate_lift(f, g, side, max_unknowns=None):
    '''
    Lift a bivariate f through a univariate g.

    side 'outer' looks for h(x1, x2) with f = g(h(x1, x2)); side
    'inner' looks for h(y, x2) with f = h(g(x1), x2), returned as a
    BiRat whose first variable stands for y.

    Returns
    -------
    BiRat or None
    '''
    if max_unknowns is None:
        max_unknowns = Caps.MAX_BIVARIATE_UNKNOWNS
    if g.degree < 1:
        raise DegreeException("lift through a constant")
    if side == OUTER:
        return _outer_lift(f, g, max_unknowns)
    if side == INNER:
        return _inner_lift(f, g, max_unknowns)
    raise InputException("unknown lift side '%s'" % side)


def inner_lift_second(f, g, max_unknowns=None):
    '''h(x1, y) with f = h(x1, g(x2))'''
    lifted = solve_bivariate_lift(f.swap_variables(), g, INNER, max_unknowns)
    if lifted is None:
        return None
    return lifted.swap_variables()
