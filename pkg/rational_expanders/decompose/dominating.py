from rational_expanders.algebra.rational_function import UniRat
from rational_expanders.decompose.decomposition import Domination
from rational_expanders.decompose.univariate import enumerate_decompositions, \
    solve_right_component
from rational_expanders.utils.caps import Caps
from rational_expanders.utils.exceptions import CapExceededException, \
    DegreeException


def dominating_function(f1, f2, max_degree=None):
    '''
    A common left part g of largest degree among the left components
    of f1, with f1 = g o h1 and f2 = g o h2.

    The identity always qualifies, so the search never fails.
    '''
    if max_degree is None:
        max_degree = Caps.MAX_UNIVARIATE_DEGREE
    if f1.degree < 1 or f2.degree < 1:
        raise DegreeException("dominating function of a constant")
    for f in (f1, f2):
        if f.degree > max_degree:
            raise CapExceededException(
                "dominating function limited to degree %d, got %d" % (
                    max_degree, f.degree))
    identity = UniRat.identity()
    candidates = [(f1, identity)]
    candidates += [(dec.left, dec.right)
                   for dec in enumerate_decompositions(f1, max_degree)]
    candidates.append((identity, f1))
    candidates.sort(key=lambda c: (-c[0].degree, c[0].to_text()))
    for g, h1 in candidates:
        if f2.degree % g.degree:
            continue
        decomposition = solve_right_component(f2, g)
        if decomposition is not None:
            return Domination(g, h1, decomposition.right)
    raise AssertionError("identity failed as a common left part")
