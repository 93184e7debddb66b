from rational_expanders.utils.exceptions import InputException


class MonomialOrder(object):
    '''
    Total order on exponent tuples, variables ranked by position.

    LEX compares exponents position by position; GRLEX compares total
    degree first and breaks ties lexicographically. ``key`` maps an
    exponent tuple to a value whose natural ordering is the monomial
    order, so that max(terms, key=order.key) is the leading monomial.
    '''
    LEX = 'lex'
    GRLEX = 'grlex'

    def __init__(self, kind):
        if kind not in (self.LEX, self.GRLEX):
            raise InputException("unknown monomial order '%s'" % kind)
        self._kind = kind

    @property
    def kind(self):
        return self._kind

    def is_lex(self):
        return self._kind == self.LEX

    def key(self, exponents):
        if self._kind == self.LEX:
            return exponents
        return (sum(exponents),) + tuple(exponents)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other._kind == self._kind

    def __hash__(self):
        return hash(self._kind)

    def __str__(self):
        return self._kind

    __repr__ = __str__


LEX = MonomialOrder(MonomialOrder.LEX)
GRLEX = MonomialOrder(MonomialOrder.GRLEX)
