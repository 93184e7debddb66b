from fractions import Fraction

from plico.utils.logger import Logger

from rational_expanders.algebra.multivariate_polynomial import MultiPoly, \
    add_exponents, divides_exponents, lcm_exponents, sub_exponents
from rational_expanders.groebner.monomial_order import LEX
from rational_expanders.utils.exceptions import InputException


_logger = Logger.of('groebner')


def _leading(terms, order):
    return max(terms, key=order.key)


def _monic(terms, order):
    lead = _leading(terms, order)
    c = terms[lead]
    if c == 1:
        return lead, terms
    return lead, {e: v / c for e, v in terms.items()}


def _normal_form(terms, basis, order):
    '''
    Full reduction of a term dict modulo a list of
    (leading monomial, monic term dict) pairs
    '''
    pending = dict(terms)
    remainder = {}
    while pending:
        m = _leading(pending, order)
        c = pending[m]
        for lead, g in basis:
            if divides_exponents(lead, m):
                shift = sub_exponents(m, lead)
                for e, v in g.items():
                    key = add_exponents(e, shift)
                    value = pending.get(key, 0) - c * v
                    if value == 0:
                        pending.pop(key, None)
                    else:
                        pending[key] = value
                break
        else:
            remainder[m] = c
            del pending[m]
    return remainder


def _s_polynomial(lead_i, g_i, lead_j, g_j):
    lcm = lcm_exponents(lead_i, lead_j)
    si = sub_exponents(lcm, lead_i)
    sj = sub_exponents(lcm, lead_j)
    result = {}
    for e, v in g_i.items():
        key = add_exponents(e, si)
        result[key] = result.get(key, 0) + v
    for e, v in g_j.items():
        key = add_exponents(e, sj)
        value = result.get(key, 0) - v
        if value == 0:
            result.pop(key, None)
        else:
            result[key] = value
    return {e: v for e, v in result.items() if v != 0}


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class GroebnerBasis(object):
    '''
    Reduced Groebner basis: monic, minimal, inter-reduced and sorted
    by decreasing leading monomial.
    '''

    def __init__(self, generators, order, variables):
        self._generators = tuple(generators)
        self._order = order
        self._variables = tuple(variables)

    @property
    def generators(self):
        return self._generators

    @property
    def order(self):
        return self._order

    @property
    def variables(self):
        return self._variables

    def is_unit(self):
        '''True for the whole ring, basis {1}'''
        return len(self._generators) == 1 and \
            self._generators[0].is_constant()

    def leading_monomials(self):
        return [g.leading_monomial(self._order) for g in self._generators]

    def reduce(self, p):
        '''Normal form of p modulo the basis'''
        if p.variables != self._variables:
            p = p.embed(self._variables)
        basis = [(g.leading_monomial(self._order), g.term_dict())
                 for g in self._generators]
        return MultiPoly(_normal_form(p.term_dict(), basis, self._order),
                         self._variables)

    def contains(self, p):
        return self.reduce(p).is_zero()

    def is_zero_dimensional(self):
        '''Every variable has a pure power among the leading monomials'''
        if self.is_unit():
            return True
        leads = self.leading_monomials()
        for i in range(len(self._variables)):
            if not any(m[i] > 0 and sum(m) == m[i] for m in leads):
                return False
        return True

    def max_degree(self):
        return max(g.total_degree() for g in self._generators)

    def __len__(self):
        return len(self._generators)

    def __iter__(self):
        return iter(self._generators)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and \
            self._order == other._order and \
            self._variables == other._variables and \
            self._generators == other._generators

    def __repr__(self):
        return "GroebnerBasis[%s](%s)" % (
            self._order, ', '.join(str(g) for g in self._generators))


def buchberger(generators, order=LEX, variables=None):
    '''
    Reduced Groebner basis of the ideal spanned by ``generators``.

    Pairs are selected by the normal strategy (smallest lcm first);
    pairs with coprime leading monomials and pairs covered by the
    chain criterion are dropped.

    Parameters
    ----------
    generators: list of MultiPoly
        all in the same ring
    order: MonomialOrder
    variables: tuple of str
        the ring, needed only when every generator is zero

    Raises
    ------
    InputException
        when every generator is zero
    '''
    generators = list(generators)
    if variables is None:
        if not generators:
            raise InputException("no generators given")
        variables = generators[0].variables
    polys = [g.embed(variables) if g.variables != variables else g
             for g in generators]
    polys = [g for g in polys if not g.is_zero()]
    if not polys:
        raise InputException("all generators are zero")
    zero_exponent = (0,) * len(variables)
    if any(g.is_constant() for g in polys):
        return GroebnerBasis([MultiPoly.constant(1, variables)], order,
                             variables)

    basis = []
    pairs = set()
    for g in polys:
        reduced = _normal_form(g.term_dict(), basis, order)
        if not reduced:
            continue
        lead, monic = _monic(reduced, order)
        basis.append((lead, monic))
    for j in range(len(basis)):
        for i in range(j):
            pairs.add((i, j))

    def pair_lcm(pair):
        return order.key(lcm_exponents(basis[pair[0]][0], basis[pair[1]][0]))

    processed = 0
    while pairs:
        pair = min(pairs, key=lambda p: (pair_lcm(p), p))
        pairs.discard(pair)
        i, j = pair
        lead_i, g_i = basis[i]
        lead_j, g_j = basis[j]
        if _coprime(lead_i, lead_j):
            continue
        lcm = lcm_exponents(lead_i, lead_j)
        if _chain_criterion(i, j, lcm, basis, pairs):
            continue
        processed += 1
        s = _s_polynomial(lead_i, g_i, lead_j, g_j)
        remainder = _normal_form(s, basis, order)
        if not remainder:
            continue
        lead, monic = _monic(remainder, order)
        if lead == zero_exponent:
            return GroebnerBasis([MultiPoly.constant(1, variables)], order,
                                 variables)
        basis.append((lead, monic))
        new = len(basis) - 1
        for k in range(new):
            pairs.add((k, new))
    _logger.debug("buchberger: %d S-polynomials, %d elements" % (
        processed, len(basis)))
    return GroebnerBasis(_reduce_basis(basis, order, variables), order,
                         variables)


def _chain_criterion(i, j, lcm, basis, pairs):
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if not divides_exponents(basis[k][0], lcm):
            continue
        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue
        return True
    return False


def _reduce_basis(basis, order, variables):
    minimal = []
    for index, (lead, g) in enumerate(basis):
        covered = False
        for other_index, (other_lead, _) in enumerate(basis):
            if other_index == index:
                continue
            if divides_exponents(other_lead, lead) and (
                    other_lead != lead or other_index < index):
                covered = True
                break
        if not covered:
            minimal.append((lead, g))
    reduced = []
    for index, (lead, g) in enumerate(minimal):
        others = [pair for k, pair in enumerate(minimal) if k != index]
        tail = {e: v for e, v in g.items() if e != lead}
        tail = _normal_form(tail, others, order)
        tail[lead] = Fraction(1)
        reduced.append((lead, tail))
    reduced.sort(key=lambda pair: order.key(pair[0]), reverse=True)
    return [MultiPoly(g, variables) for _, g in reduced]
