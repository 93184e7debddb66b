from plico.utils.logger import Logger

from rational_expanders.algebra.bivariate_polynomial import X2, \
    poly_gcd_bivariate
from rational_expanders.algebra.rational_function import UniRat, compose_uni
from rational_expanders.algebra.resultant import cross_poly
from rational_expanders.decompose.decomposition import CommonLeftPair
from rational_expanders.decompose.univariate import right_components, \
    solve_left_component, tidy_right_factor
from rational_expanders.utils.exceptions import InputException


_logger = Logger.of('luroth')


def _generator_from_gcd(gcd):
    '''
    A generator h(x) read off G(x, y) = gcd of the cross polynomials:
    the ratio of two coefficients of G in y that is not constant
    '''
    coefficients = gcd.coefficient_list(X2)
    for j, cj in enumerate(coefficients):
        if cj.is_zero():
            continue
        for ck in coefficients[j + 1:]:
            if ck.is_zero():
                continue
            h = UniRat(cj, ck)
            if not h.is_constant():
                return h
    return None


def luroth_generator(fs):
    '''
    h with Q(f_1, ..., f_k) = Q(h)

    The generator is accumulated one input at a time: G is the gcd of
    the cross polynomials of the current generator and of the next
    input, and the new generator is a nonconstant ratio of two
    coefficients of G.

    Raises
    ------
    InputException
        when every input is constant
    '''
    fs = [f for f in fs if not f.is_constant()]
    if not fs:
        raise InputException("every input is constant")
    generator = fs[0]
    for f in fs[1:]:
        gcd = poly_gcd_bivariate(cross_poly(generator, generator),
                                 cross_poly(f, f))
        generator = _generator_from_gcd(gcd)
        assert generator is not None and generator.degree == gcd.deg_x1
    generator = tidy_right_factor(generator)
    for f in fs:
        assert solve_left_component(f, generator) is not None
    return generator


def common_left_pair(f11, f12, f21, f22):
    '''
    g1, g2, h1, h2 with f11 = g1 o h1, f12 = g2 o h1, f21 = g1 o h2 and
    f22 = g2 o h2, when the cross polynomials of (f11, f21) and of
    (f12, f22) share a factor; None otherwise
    '''
    shared = poly_gcd_bivariate(cross_poly(f11, f21), cross_poly(f12, f22))
    if shared.is_constant():
        return None
    h1 = luroth_generator([f11, f12])
    g1 = solve_left_component(f11, h1).left
    g2 = solve_left_component(f12, h1).left
    for h2 in right_components(f21, g1):
        if compose_uni(g2, h2) == f22:
            return CommonLeftPair(g1, g2, h1, h2)
    _logger.warn("no rational h2 completes the common left pair of "
                 "%s, %s, %s, %s" % (f11, f12, f21, f22))
    return None
