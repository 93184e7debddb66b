from rational_expanders.algebra.bivariate_polynomial import X2, \
    variable_index
from rational_expanders.algebra.resultant import other_variable, resultant
from rational_expanders.algebra.roots import split_roots
from rational_expanders.algebra.scalar import RATIONALS, scalar_sort_key
from rational_expanders.utils.exceptions import DegreeException


class BadSpecializations(object):
    '''
    Values a with gcd(p(x, a), q(x, a)) != 1, found among the roots of
    Res(p, q) that lie in the working field.

    Parameters
    ----------
    values: list
        sorted bad values in the working field
    residue: UniPoly or None
        square-free factor of the resultant with no roots in the field
    bound: int
        the a-priori upper bound d**(2d) on the number of bad values
    '''

    def __init__(self, values, residue, bound):
        self._values = tuple(values)
        self._residue = residue
        self._bound = bound

    @property
    def values(self):
        return self._values

    @property
    def residue(self):
        return self._residue

    @property
    def bound(self):
        return self._bound

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __contains__(self, value):
        return value in self._values

    def __repr__(self):
        return "BadSpecializations(%s, residue=%s)" % (
            list(self._values), self._residue)


def bad_specializations(f, var=X2, field=RATIONALS):
    '''
    Values of ``var`` at which the specialized numerator and
    denominator of f acquire a common factor

    Parameters
    ----------
    f: BiRat
    var: str
        the variable being fixed; the other one is the main variable
    field: WorkingField

    Returns
    -------
    BadSpecializations
    '''
    index = variable_index(var)
    main = other_variable(var)
    p = f.numerator
    q = f.denominator
    dp = p.degree_in(main)
    dq = q.degree_in(main)
    if dp < 1 and dq < 1:
        raise DegreeException("%s is constant in %s" % (f, main))
    if dp >= 1 and dq >= 1:
        eliminant = resultant(p, q, main)
    elif dp < 1:
        eliminant = p.specialize(main, 0)
    else:
        eliminant = q.specialize(main, 0)
    d = f.total_degree()
    bound = d ** (2 * d)
    if eliminant.is_zero():
        raise DegreeException("numerator and denominator share a factor")
    candidates, residue = split_roots(eliminant, field)
    bad = []
    for a in candidates:
        pa = p.specialize(index, a)
        qa = q.specialize(index, a)
        if pa.is_zero() and qa.is_zero():
            bad.append(a)
        elif pa.gcd(qa).degree >= 1:
            bad.append(a)
    assert len(bad) <= bound
    return BadSpecializations(sorted(bad, key=scalar_sort_key), residue,
                              bound)
