import itertools
from fractions import Fraction

from plico.utils.logger import Logger

from rational_expanders.algebra.bivariate_polynomial import X1, X2
from rational_expanders.algebra.linear_algebra import inverse2, mat_mul
from rational_expanders.algebra.mobius import Mobius
from rational_expanders.algebra.rational_function import UniRat, compose_uni
from rational_expanders.algebra.scalar import is_rational, small_rationals
from rational_expanders.algebra.specialization import bad_specializations
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.classify.jordan import CASE_I, CASE_II, REAL, \
    jordan_2x2
from rational_expanders.classify.pencil import shift_normalize
from rational_expanders.classify.special_form import ADDITIVE, \
    MULTIPLICATIVE, TANGENT, SpecialForm, verify_form
from rational_expanders.decompose.bivariate import INNER, OUTER, \
    inner_lift_second, solve_bivariate_lift
from rational_expanders.decompose.univariate import enumerate_decompositions, \
    solve_right_component
from rational_expanders.utils.caps import Caps
from rational_expanders.utils.exceptions import CapExceededException, \
    DegreeException, PoleLineException


_logger = Logger.of('classifier')

_SAMPLE_LIMIT = 64


class ClassifyBounds(object):
    '''Degree bounds of the special-form search'''

    def __init__(self, g_degree=None, l_degree=None, max_degree=None):
        self.g_degree = Caps.CLASSIFY_G_DEGREE if g_degree is None \
            else g_degree
        self.l_degree = Caps.CLASSIFY_L_DEGREE if l_degree is None \
            else l_degree
        self.max_degree = Caps.CLASSIFY_MAX_DEGREE if max_degree is None \
            else max_degree

    def as_dict(self):
        return {'g_degree': self.g_degree, 'l_degree': self.l_degree,
                'max_degree': self.max_degree}

    def __repr__(self):
        return "ClassifyBounds(%s)" % self.as_dict()


def _negated(f):
    return f * Fraction(-1)


def _tidy_signs(kind, g, l1, l2):
    '''
    Flip (g o (-x), -l1, -l2) for the odd kernels when l1 has a
    negative rational leading coefficient
    '''
    if kind == MULTIPLICATIVE:
        return g, l1, l2
    lead = l1.numerator.leading_coefficient
    if not is_rational(lead) or not is_rational(
            l1.denominator.leading_coefficient) or lead >= 0:
        return g, l1, l2
    return compose_uni(g, UniRat(UniPoly((0, -1)))), _negated(l1), \
        _negated(l2)


def _implied_function(g_dot, h_dot, l1_dot, l2_dot):
    return h_dot.substitute(l1_dot, l2_dot).compose_outer(g_dot)


def classify_bilinear(g_dot, h_dot, l1_dot, l2_dot, mode=REAL):
    '''
    Special form of f = g_dot(h_dot(l1_dot(x1), l2_dot(x2))) for a
    bilinear h_dot.

    h_dot is shifted in x2 until its pencil e X + Y has Y invertible,
    and the Jordan form of Y^-1 X decides the kind: a nontrivial block
    gives the additive form, distinct eigenvalues the multiplicative
    form and, in real mode, a rotation block the tangent form.
    '''
    if h_dot.deg_x1 > 1 or h_dot.deg_x2 > 1:
        raise DegreeException("%s is not of bidegree (1, 1)" % h_dot)
    f = _implied_function(g_dot, h_dot, l1_dot, l2_dot)
    zero = UniRat.constant(0)
    if h_dot.deg_x2 == 0 or h_dot.deg_x1 == 0:
        if h_dot.deg_x2 == 0:
            inner = h_dot.specialize(X2, 0)
            form = SpecialForm(ADDITIVE, g_dot, compose_uni(inner, l1_dot),
                               zero)
        else:
            inner = h_dot.specialize(X1, 0)
            form = SpecialForm(ADDITIVE, g_dot, zero,
                               compose_uni(inner, l2_dot))
        assert verify_form(f, form)
        return form

    shift, _, pencil = shift_normalize(h_dot)
    y = pencil.y
    z = mat_mul(inverse2(y), pencil.x)
    data = jordan_2x2(z, mode)
    g = compose_uni(compose_uni(g_dot, Mobius.from_matrix(y).as_unirat()),
                    Mobius.from_matrix(data.h).as_unirat())
    l1 = compose_uni(Mobius.from_matrix(inverse2(data.h)).as_unirat(),
                     l1_dot)
    shifted_l2 = compose_uni(UniRat(UniPoly((-shift, 1))), l2_dot)
    j = data.j
    if data.case == CASE_I:
        kind = ADDITIVE
        outer = UniRat(UniPoly((0, 1)), UniPoly((1, j[0][0])))
    elif data.case == CASE_II:
        first, second = j[0][0], j[1][1]
        if first == second:
            kind = ADDITIVE
            outer = zero
        else:
            kind = MULTIPLICATIVE
            outer = UniRat(UniPoly((1, first)), UniPoly((1, second)))
    else:
        kind = TANGENT
        a, b = j[0][0], j[1][0]
        outer = UniRat(UniPoly((0, -b)), UniPoly((1, a)))
    l2 = compose_uni(outer, shifted_l2)
    g, l1, l2 = _tidy_signs(kind, g, l1, l2)
    form = SpecialForm(kind, g, l1, l2)
    assert verify_form(f, form), "witness %s does not recompose" % form
    _logger.debug("bilinear case %s -> %s" % (data.case, form))
    return form


def _generic_value(f, var, degree):
    '''
    First small rational a outside the bad specializations of f at
    which the restriction keeps its full degree
    '''
    bad = bad_specializations(f, var)
    for a in itertools.islice(small_rationals(), _SAMPLE_LIMIT):
        if a in bad:
            continue
        try:
            restriction = f.specialize(var, a)
        except PoleLineException:
            continue
        if restriction.degree == degree:
            return a, restriction
    raise DegreeException("no generic specialization of %s" % f)


def _unknown_count(g_degree, d1, d2):
    k = g_degree
    return 2 * (k + 1) + 2 * (d1 // k + 1) + 2 * (d2 // k + 1) + 8


def classify_full(f, bounds=None, mode=REAL):
    '''
    Search for a special form of f with deg g and deg l_i within the
    bounds.

    Candidate outer parts g_dot are x, f(x1, a) and the left parts of
    the decompositions of f(x1, a) for a generic a; l1_dot is the
    matching right part, l2_dot is solved on a generic line x1 = b,
    and the two inner lifts followed by an outer lift recover a
    bilinear h_dot that classify_bilinear turns into a witness.

    Returns
    -------
    SpecialForm or None
        None means no form exists within the bounds
    '''
    if bounds is None:
        bounds = ClassifyBounds()
    degree = f.total_degree()
    if degree > bounds.max_degree:
        raise CapExceededException(
            "classification limited to total degree %d, got %d" % (
                bounds.max_degree, degree))
    identity = UniRat.identity()
    zero = UniRat.constant(0)
    d1, d2 = f.deg_x1, f.deg_x2
    if d1 == 0 and d2 == 0:
        return SpecialForm(ADDITIVE, UniRat.constant(
            f.numerator.constant_value()), zero, zero, bounds.as_dict())
    if d1 == 0:
        return SpecialForm(ADDITIVE, identity, zero, f.specialize(X1, 0),
                           bounds.as_dict())
    if d2 == 0:
        return SpecialForm(ADDITIVE, identity, f.specialize(X2, 0), zero,
                           bounds.as_dict())

    _, first_line = _generic_value(f, X2, d1)
    _, second_line = _generic_value(f, X1, d2)
    candidates = [(identity, first_line), (first_line, identity)]
    candidates += [(dec.left, dec.right)
                   for dec in enumerate_decompositions(first_line)]
    seen = set()
    usable = []
    for g_dot, l1_dot in candidates:
        k = g_dot.degree
        if k > bounds.g_degree or d2 % k:
            continue
        if d1 // k > bounds.l_degree or d2 // k > bounds.l_degree:
            continue
        if g_dot.to_text() in seen:
            continue
        seen.add(g_dot.to_text())
        usable.append((g_dot, l1_dot))
    usable.sort(key=lambda c: (_unknown_count(c[0].degree, d1, d2),
                               c[0].to_text()))

    for g_dot, l1_dot in usable:
        decomposition = solve_right_component(second_line, g_dot)
        if decomposition is None:
            continue
        l2_dot = decomposition.right
        first_lift = solve_bivariate_lift(f, l1_dot, INNER)
        if first_lift is None:
            continue
        both = inner_lift_second(first_lift, l2_dot)
        if both is None:
            continue
        h_dot = solve_bivariate_lift(both, g_dot, OUTER)
        if h_dot is None or h_dot.deg_x1 > 1 or h_dot.deg_x2 > 1:
            continue
        form = classify_bilinear(g_dot, h_dot, l1_dot, l2_dot, mode)
        if verify_form(f, form):
            return form.with_bounds(bounds.as_dict())
    _logger.notice("%s: no special form within %s" % (f, bounds))
    return None
