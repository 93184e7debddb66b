from rational_expanders.algebra.rational_function import compose_uni


class Decomposition(object):
    '''f = left o right'''

    def __init__(self, left, right):
        self._left = left
        self._right = right

    @property
    def left(self):
        return self._left

    @property
    def right(self):
        return self._right

    def compose(self):
        return compose_uni(self._left, self._right)

    def verify(self, f):
        return self.compose() == f

    def as_dict(self):
        return {'left': self._left.to_text(), 'right': self._right.to_text()}

    def __eq__(self, other):
        return isinstance(other, Decomposition) and \
            self._left == other._left and self._right == other._right

    def __hash__(self):
        return hash((self._left, self._right))

    def __repr__(self):
        return "Decomposition(%s o %s)" % (self._left, self._right)


class Domination(object):
    '''
    A common left part g with f1 = g o h1 and f2 = g o h2
    '''

    def __init__(self, g, h1, h2):
        self.g = g
        self.h1 = h1
        self.h2 = h2

    def verify(self, f1, f2):
        return compose_uni(self.g, self.h1) == f1 and \
            compose_uni(self.g, self.h2) == f2

    def as_dict(self):
        return {'g': self.g.to_text(), 'h1': self.h1.to_text(),
                'h2': self.h2.to_text()}

    def __repr__(self):
        return "Domination(g=%s, h1=%s, h2=%s)" % (self.g, self.h1, self.h2)


class CommonLeftPair(object):
    '''
    f11 = g1 o h1, f12 = g2 o h1, f21 = g1 o h2, f22 = g2 o h2
    '''

    def __init__(self, g1, g2, h1, h2):
        self.g1 = g1
        self.g2 = g2
        self.h1 = h1
        self.h2 = h2

    def verify(self, f11, f12, f21, f22):
        return (compose_uni(self.g1, self.h1) == f11 and
                compose_uni(self.g2, self.h1) == f12 and
                compose_uni(self.g1, self.h2) == f21 and
                compose_uni(self.g2, self.h2) == f22)

    def as_dict(self):
        return {'g1': self.g1.to_text(), 'g2': self.g2.to_text(),
                'h1': self.h1.to_text(), 'h2': self.h2.to_text()}

    def __repr__(self):
        return "CommonLeftPair(g1=%s, g2=%s, h1=%s, h2=%s)" % (
            self.g1, self.g2, self.h1, self.h2)
