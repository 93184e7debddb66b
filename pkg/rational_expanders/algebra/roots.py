from rational_expanders.algebra.bivariate_polynomial import X1, X2, \
    poly_gcd_bivariate
from rational_expanders.algebra.qq import from_poly, to_poly
from rational_expanders.algebra.resultant import resultant
from rational_expanders.algebra.scalar import RATIONALS, QuadraticScalar, \
    scalar_sort_key
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.utils.exceptions import InputException


def low_degree_factors(poly):
    '''
    Distinct irreducible factors of degree 1 and 2 of a rational
    polynomial, as UniPoly, found by sympy factorization over Q
    '''
    _, factors = to_poly(poly.coefficients).factor_list()
    result = []
    for factor, _ in factors:
        if 1 <= factor.degree() <= 2:
            result.append(UniPoly(from_poly(factor)))
    return result


def rational_roots(poly):
    '''
    Distinct rational roots of a polynomial with rational coefficients,
    in increasing order
    '''
    if poly.is_zero():
        raise InputException("the zero polynomial vanishes everywhere")
    if not poly.is_rational():
        raise InputException("rational_roots needs rational coefficients")
    if poly.degree < 1:
        return []
    return sorted(-p[0] / p[1] for p in low_degree_factors(poly)
                  if p.degree == 1)


def _quadratic_roots(p, field):
    a, b, c = p[2], p[1], p[0]
    s = field.sqrt(b * b - 4 * a * c)
    if s is None:
        return []
    if s == 0:
        return [-b / (2 * a)]
    return [(-b + s) / (2 * a), (-b - s) / (2 * a)]


def field_roots(poly, field=RATIONALS):
    '''
    Distinct roots of poly lying in the working field, sorted by
    (rational part, irrational part)

    An element of Q(sqrt(delta)) has a minimal polynomial of degree at
    most 2, so the rational factors of degree 1 and 2 carry every root
    in the field. Coefficients in the field go through the norm
    poly * conjugate(poly), which is rational.
    '''
    if poly.is_zero():
        raise InputException("the zero polynomial vanishes everywhere")
    if not poly.is_rational():
        norm = poly * poly.conjugate()
        return [r for r in field_roots(norm, field)
                if poly.evaluate(r) == 0]
    if poly.degree < 1:
        return []
    roots = []
    for p in low_degree_factors(poly):
        if p.degree == 1:
            roots.append(-p[0] / p[1])
        elif not field.is_rationals():
            roots.extend(r for r in _quadratic_roots(p, field)
                         if isinstance(r, QuadraticScalar))
    return sorted(set(roots), key=scalar_sort_key)


def solve_bivariate_system(a, b, field=RATIONALS):
    '''
    Common zeros in the working field of two BiPoly without a common
    factor

    The resultant in x2 gives the candidate x1 values; each is
    substituted back and the x2 values are the roots of the gcd of the
    two specialized equations.

    Returns
    -------
    list of (x1, x2) tuples of scalars, sorted
    '''
    if a.is_zero() or b.is_zero():
        raise InputException("zero equation has infinitely many zeros")
    if poly_gcd_bivariate(a, b).total_degree() > 0:
        raise InputException("equations share a common component")
    if a.degree_in(X2) == 0 and b.degree_in(X2) == 0:
        return []
    if a.degree_in(X2) == 0 or b.degree_in(X2) == 0:
        fixed = a if a.degree_in(X2) == 0 else b
        first = field_roots(fixed.specialize(X2, 0), field)
    else:
        first = field_roots(resultant(a, b, X2), field)
    points = []
    for u in first:
        g = a.specialize(X1, u).gcd(b.specialize(X1, u))
        if g.degree < 1:
            continue
        for v in field_roots(g, field):
            points.append((u, v))
    return sorted(points,
                  key=lambda p: (scalar_sort_key(p[0]), scalar_sort_key(p[1])))


def _remove_roots(poly, roots):
    for r in roots:
        poly = poly.exact_div(UniPoly((-r, 1)))
    return poly


def split_roots(poly, field=RATIONALS):
    '''
    Roots in the working field plus the square-free factor carrying
    the roots outside it

    Returns
    -------
    (roots, residue): list of scalars, UniPoly or None
    '''
    roots = field_roots(poly, field)
    residue = _remove_roots(poly.square_free_part(), roots)
    if residue.degree < 1:
        residue = None
    return roots, residue
