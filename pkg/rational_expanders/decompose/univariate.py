import itertools
from fractions import Fraction

from plico.utils.logger import Logger

from rational_expanders.algebra.linear_algebra import nullspace
from rational_expanders.algebra.mobius import Mobius, mobius_through
from rational_expanders.algebra.multivariate_polynomial import MultiPoly
from rational_expanders.algebra.rational_function import UniRat, compose_uni
from rational_expanders.algebra.roots import field_roots, rational_roots
from rational_expanders.algebra.scalar import RATIONALS, small_rationals
from rational_expanders.algebra.univariate_polynomial import UniPoly
from rational_expanders.decompose.decomposition import Decomposition
from rational_expanders.decompose.lift_family import lift_family, \
    unknown_names
from rational_expanders.groebner.buchberger import buchberger
from rational_expanders.groebner.elimination import solve_zero_dim
from rational_expanders.groebner.monomial_order import LEX
from rational_expanders.utils.caps import Caps
from rational_expanders.utils.exceptions import CapExceededException, \
    DegreeException, NotZeroDimensionalException


_logger = Logger.of('decompose')

_SAMPLE_LIMIT = 256


def _convolve(a, b, zero):
    if not a or not b:
        return []
    result = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            result[i + j] = result[i + j] + x * y
    return result


def composition_basis(g, n):
    '''P**i Q**(n-i) for g = P/Q and i = 0..n'''
    p_powers = [UniPoly.one()]
    q_powers = [UniPoly.one()]
    for _ in range(n):
        p_powers.append(p_powers[-1] * g.numerator)
        q_powers.append(q_powers[-1] * g.denominator)
    return [p_powers[i] * q_powers[n - i] for i in range(n + 1)]


def left_solve_vectors(p_f, q_f, g, n, zero, one):
    '''
    Kernel of the linear system p_f * D - q_f * N = 0, where
    N = sum z_i P**i Q**(n-i) and D = sum w_i P**i Q**(n-i) are the
    linear forms of the h o g coefficient family.

    p_f, q_f are coefficient lists, lowest power first, over any field
    holding the rationals; the result is a list of (z, w) vectors.
    '''
    basis = [[c for c in b.coefficients] for b in composition_basis(g, n)]
    columns = []
    for b in basis:
        columns.append([-v for v in _convolve(q_f, b, zero)])
    for b in basis:
        columns.append(_convolve(p_f, b, zero))
    height = max(len(c) for c in columns)
    matrix = [[c[j] if j < len(c) else zero for c in columns]
              for j in range(height)]
    vectors = nullspace(matrix, len(columns), zero, one)
    return [(v[:n + 1], v[n + 1:]) for v in vectors]


def solve_left_component(f, g):
    '''
    Find h with f = h o g by linear algebra

    Returns
    -------
    Decomposition(left=h, right=g) or None
    '''
    if g.degree < 1:
        raise DegreeException("right factor must be nonconstant")
    if f.degree < 1:
        return Decomposition(f, g)
    if f.degree % g.degree:
        return None
    n = f.degree // g.degree
    vectors = left_solve_vectors(
        list(f.numerator.coefficients), list(f.denominator.coefficients),
        g, n, Fraction(0), Fraction(1))
    for z, w in vectors:
        if all(c == 0 for c in w):
            continue
        h = UniRat(UniPoly(z), UniPoly(w))
        if compose_uni(h, g) == f:
            return Decomposition(h, g)
    return None


def _cross_multiplied(f, family):
    '''
    Coefficients of p_f * D - q_f * N for the g o h family (N, D)
    '''
    p_f = f.numerator.coefficients
    q_f = f.denominator.coefficients
    nums = family.numerators
    dens = family.denominators
    ring = family.variables
    top = max(len(p_f), len(q_f)) + len(nums) - 1
    equations = []
    for j in range(top):
        e = MultiPoly.zero(ring)
        for a in range(j + 1):
            b = j - a
            if b >= len(nums):
                continue
            if a < len(p_f) and p_f[a] != 0:
                e = e + dens[b] * p_f[a]
            if a < len(q_f) and q_f[a] != 0:
                e = e - nums[b] * q_f[a]
        equations.append(e)
    return equations


def right_components(f, g):
    '''
    Every h, up to the representation of h, with f = g o h

    The denominator of h is fixed monic of degree k, trying
    k = n, n-1, ..., 0; each choice is a zero-dimensional system
    solved through a lex Groebner basis.
    '''
    if g.degree < 1:
        raise DegreeException("left factor must be nonconstant")
    if f.degree < 1 or f.degree % g.degree:
        return []
    if g.degree == 1:
        return [Mobius.from_unirat(g).inverse().apply(f)]
    n = f.degree // g.degree
    family, _ = lift_family(g, n)
    zs, ws = unknown_names(n)
    ring = family.variables
    equations = _cross_multiplied(f, family)
    results = []
    outside_field = False
    for k in range(n, -1, -1):
        gauge = {ring.index(ws[k]): Fraction(1)}
        for j in range(k + 1, n + 1):
            gauge[ring.index(ws[j])] = Fraction(0)
        unknowns = zs + ws[:k]
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
            _logger.warn("right component search for %s through %s: "
                         "denominator degree %d is not zero-dimensional" % (
                             f, g, k))
            continue
        outside_field = outside_field or solution.has_residue()
        for point in solution.points:
            values = dict(zip(unknowns, point))
            p = UniPoly([values[z] for z in zs])
            q = UniPoly([values[w] for w in ws[:k]] + [1])
            h = UniRat(p, q)
            if h.degree == n and h not in results and \
                    compose_uni(g, h) == f:
                results.append(h)
    if not results and outside_field:
        _logger.warn("%s through %s: solutions exist only outside Q" % (
            f, g))
    return results


def solve_right_component(f, g):
    '''
    Find h with f = g o h

    Returns
    -------
    Decomposition(left=g, right=h) or None
    '''
    components = right_components(f, g)
    if not components:
        return None
    return Decomposition(g, components[0])


def _value(f, point):
    '''f at a point of the projective line; None is infinity'''
    if point is None:
        return f.value_at_infinity()
    if not f.in_domain(point):
        return None
    return f.evaluate(point)


def _preimages(g, c, field):
    roots = field_roots(g.numerator - g.denominator * c, field)
    result = list(roots)
    if g.value_at_infinity() == c:
        result.append(None)
    return result


def are_equivalent(g1, g2, field=RATIONALS):
    '''
    Mobius map M with g1 = g2 o M, or None.

    M is interpolated from preimages under g2 of three sample values
    of g1, screened on a fourth sample and confirmed symbolically.
    '''
    if g1.degree != g2.degree:
        return None
    if g1.degree == 0:
        return Mobius.identity() if g1 == g2 else None
    xs = []
    for a in small_rationals():
        if g1.in_domain(a):
            xs.append(a)
        if len(xs) == 4:
            break
    preimages = [_preimages(g2, g1.evaluate(x), field) for x in xs[:3]]
    check = g1.evaluate(xs[3])
    for ys in itertools.product(*preimages):
        if len(set(ys)) < 3:
            continue
        m = mobius_through(xs[:3], ys)
        if m is None:
            continue
        if _value(g2, m(xs[3])) != check:
            continue
        if compose_uni(g2, m.as_unirat()) == g1:
            return m
    return None


def tidy_right_factor(h):
    '''
    A Mobius-equivalent right factor in a simpler shape: polynomials
    become monic with zero constant term, and a rational function with
    a single pole point becomes such a polynomial.
    '''
    if h.is_polynomial():
        p = h.numerator
        if p.degree < 1:
            return h
        p = (p - p[0]) * (Fraction(1) / p.leading_coefficient)
        return UniRat(p)
    c = h.value_at_infinity()
    if c is not None:
        r = h.numerator - h.denominator * c
        if r.degree == 0:
            return tidy_right_factor(UniRat(h.denominator, r))
    return h


def _fibre_points(f):
    '''
    Two points a0, a1 with distinct finite values whose fibre
    polynomials p - f(a) q are square-free of full degree
    '''
    d = f.degree
    chosen = []
    for a in itertools.islice(small_rationals(), _SAMPLE_LIMIT):
        if not f.in_domain(a):
            continue
        c = f.evaluate(a)
        if chosen and f.evaluate(chosen[0]) == c:
            continue
        fibre = f.numerator - f.denominator * c
        if fibre.degree != d or not fibre.is_square_free():
            continue
        chosen.append(a)
        if len(chosen) == 2:
            return chosen
    raise DegreeException("no generic fibre found for %s" % f)


def _remainder_equations(r, k):
    '''
    Coefficients of r mod (x**k + c_{k-1} x**(k-1) + ... + c_0) as
    polynomials in c_0..c_{k-1}
    '''
    ring = tuple('c%d' % i for i in range(k))
    cs = [MultiPoly.generator(name, ring) for name in ring]
    remainder = [MultiPoly.constant(c, ring) for c in r.coefficients]
    for j in range(len(remainder) - 1, k - 1, -1):
        t = remainder[j]
        if t.is_zero():
            continue
        for i in range(k):
            remainder[j - k + i] = remainder[j - k + i] - t * cs[i]
        remainder[j] = MultiPoly.zero(ring)
    return ring, remainder[:k]


def monic_divisors(r, k):
    '''Monic divisors of degree k of a square-free rational polynomial'''
    degree = r.degree
    if k < 0 or k > degree:
        return []
    if k == 0:
        return [UniPoly.one()]
    if k == degree:
        return [r.monic()]
    if 2 * k > degree:
        return [r.exact_div(d).monic() for d in monic_divisors(r, degree - k)]
    if k == 1:
        return [UniPoly((-root, 1)) for root in rational_roots(r)]
    ring, equations = _remainder_equations(r, k)
    equations = [e for e in equations if not e.is_zero()]
    gb = buchberger(equations, LEX, ring)
    result = []
    for point in solve_zero_dim(gb).points:
        d = UniPoly(list(point) + [1])
        if d.divides(r):
            result.append(d)
    return result


def enumerate_decompositions(f, max_degree=None):
    '''
    One decomposition f = g o h per equivalence class, both parts of
    degree >= 2.

    Right factors are normalized by h(a0) = 0 and h(a1) = infinity with
    monic numerator and denominator: the numerator is then (x - a0)
    times a monic divisor of the fibre polynomial over f(a0), and the
    denominator likewise over f(a1). Each candidate h is tested by
    solving for g, and the survivors get a tidier right factor.

    Raises
    ------
    CapExceededException
        when deg f exceeds the univariate cap
    '''
    if max_degree is None:
        max_degree = Caps.MAX_UNIVARIATE_DEGREE
    d = f.degree
    if d > max_degree:
        raise CapExceededException(
            "decomposition enumeration limited to degree %d, got %d" % (
                max_degree, d))
    splits = [n for n in range(2, d) if d % n == 0 and d // n >= 2]
    if not splits:
        return []
    a0, a1 = _fibre_points(f)
    x = UniPoly.x()
    r0 = (f.numerator - f.denominator * f.evaluate(a0)).exact_div(x - a0)
    r1 = (f.numerator - f.denominator * f.evaluate(a1)).exact_div(x - a1)
    found = []
    for n in splits:
        numerators = [dv * (x - a0) for dv in monic_divisors(r0, n - 1)]
        denominators = [dv * (x - a1) for dv in monic_divisors(r1, n - 1)]
        for p in numerators:
            for q in denominators:
                h = UniRat(p, q)
                if h.degree != n or solve_left_component(f, h) is None:
                    continue
                right = tidy_right_factor(h)
                decomposition = solve_left_component(f, right)
                if any(other.left.degree == decomposition.left.degree and
                       are_equivalent(decomposition.left, other.left)
                       is not None for other in found):
                    continue
                found.append(decomposition)
    assert len(found) <= 2 ** d
    _logger.debug("%s: %d decomposition classes" % (f, len(found)))
    return sorted(found, key=lambda dec: (dec.right.degree,
                                          dec.right.to_text(),
                                          dec.left.to_text()))
