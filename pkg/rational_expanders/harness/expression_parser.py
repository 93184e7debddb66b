import abc
import re
from fractions import Fraction

from six import with_metaclass

from rational_expanders.algebra.bivariate_polynomial import VARIABLES
from rational_expanders.algebra.multivariate_polynomial import MultiPoly
from rational_expanders.algebra.rational_function import BiRat, UniRat
from rational_expanders.groebner.monomial_order import GRLEX, LEX
from rational_expanders.utils.exceptions import ExpressionSyntaxException, \
    InputException


UNIVARIATE = ('x',)

_TOKEN = re.compile(r'\s*(?:(?P<number>\d+(?:\.\d+)?)|'
                    r'(?P<name>[A-Za-z_][A-Za-z0-9_]*)|'
                    r'(?P<op>\*\*|[-+*/^()]))')


class Token(object):

    def __init__(self, kind, text, position):
        self.kind = kind
        self.text = text
        self.position = position

    def __repr__(self):
        return "Token(%s %r at %d)" % (self.kind, self.text, self.position)


def tokenize(text):
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None:
            offset = position + len(stripped[position:]) - \
                len(stripped[position:].lstrip())
            raise ExpressionSyntaxException(
                "unexpected character %r" % stripped[offset], offset)
        kind = match.lastgroup
        value = match.group(kind)
        if kind == 'op' and value == '**':
            value = '^'
        tokens.append(Token(kind, value, match.start(kind)))
        position = match.end()
    tokens.append(Token('end', '', len(stripped)))
    return tokens


class Expr(with_metaclass(abc.ABCMeta, object)):
    '''Node of a parsed expression'''

    def __init__(self, position):
        self.position = position

    @abc.abstractmethod
    def lower(self, target):
        '''Evaluate the tree in the arithmetic of ``target``'''

    def variables(self):
        return set()


class Number(Expr):

    def __init__(self, value, position):
        Expr.__init__(self, position)
        self.value = value

    def lower(self, target):
        return target.constant(self.value)

    def __repr__(self):
        return "Number(%s)" % self.value


class Variable(Expr):

    def __init__(self, name, position):
        Expr.__init__(self, position)
        self.name = name

    def lower(self, target):
        return target.variable(self.name, self.position)

    def variables(self):
        return {self.name}

    def __repr__(self):
        return "Variable(%s)" % self.name


class Negate(Expr):

    def __init__(self, operand, position):
        Expr.__init__(self, position)
        self.operand = operand

    def lower(self, target):
        return -self.operand.lower(target)

    def variables(self):
        return self.operand.variables()

    def __repr__(self):
        return "Negate(%r)" % self.operand


class BinaryOp(Expr):

    def __init__(self, op, left, right, position):
        Expr.__init__(self, position)
        self.op = op
        self.left = left
        self.right = right

    def lower(self, target):
        left = self.left.lower(target)
        right = self.right.lower(target)
        if self.op == '+':
            return left + right
        if self.op == '-':
            return left - right
        if self.op == '*':
            return left * right
        return target.divide(left, right, self.position)

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __repr__(self):
        return "BinaryOp(%s, %r, %r)" % (self.op, self.left, self.right)


class Power(Expr):

    def __init__(self, base, exponent, position):
        Expr.__init__(self, position)
        self.base = base
        self.exponent = exponent

    def lower(self, target):
        base = self.base.lower(target)
        result = target.constant(1)
        for _ in range(abs(self.exponent)):
            result = result * base
        if self.exponent < 0:
            result = target.divide(target.constant(1), result, self.position)
        return result

    def variables(self):
        return self.base.variables()

    def __repr__(self):
        return "Power(%r, %d)" % (self.base, self.exponent)


class _Parser(object):
    '''
    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' int)?
    atom   := number | name | '(' expr ')' | '-' factor
    '''

    def __init__(self, text):
        self._tokens = tokenize(text)
        self._index = 0

    def _peek(self):
        return self._tokens[self._index]

    def _next(self):
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _expect(self, text):
        token = self._next()
        if token.text != text:
            raise ExpressionSyntaxException(
                "expected '%s', found %s" % (text, _describe(token)),
                token.position)
        return token

    def parse(self):
        expr = self._expr()
        token = self._peek()
        if token.kind != 'end':
            raise ExpressionSyntaxException(
                "unexpected %s" % _describe(token), token.position)
        return expr

    def _expr(self):
        node = self._term()
        while self._peek().text in ('+', '-'):
            op = self._next()
            node = BinaryOp(op.text, node, self._term(), op.position)
        return node

    def _term(self):
        node = self._factor()
        while self._peek().text in ('*', '/'):
            op = self._next()
            node = BinaryOp(op.text, node, self._factor(), op.position)
        return node

    def _factor(self):
        node = self._atom()
        if self._peek().text == '^':
            op = self._next()
            sign = 1
            if self._peek().text == '-':
                self._next()
                sign = -1
            token = self._next()
            if token.kind != 'number' or not token.text.isdigit():
                raise ExpressionSyntaxException(
                    "integer exponent expected, found %s" % _describe(token),
                    token.position)
            node = Power(node, sign * int(token.text), op.position)
        return node

    def _atom(self):
        token = self._next()
        if token.kind == 'number':
            return Number(Fraction(token.text), token.position)
        if token.kind == 'name':
            return Variable(token.text, token.position)
        if token.text == '(':
            node = self._expr()
            self._expect(')')
            return node
        if token.text == '-':
            return Negate(self._factor(), token.position)
        raise ExpressionSyntaxException(
            "unexpected %s" % _describe(token), token.position)


def _describe(token):
    if token.kind == 'end':
        return 'end of input'
    return "'%s'" % token.text


def parse(text):
    '''
    Parse text into an expression tree

    Raises
    ------
    ExpressionSyntaxException
        with the character position of the offending token
    '''
    return _Parser(text).parse()


class _RationalTarget(object):

    def __init__(self, kind, names):
        self._kind = kind
        self._names = names

    def constant(self, value):
        return self._kind.constant(value)

    def variable(self, name, position):
        if name not in self._names:
            raise ExpressionSyntaxException(
                "unknown variable '%s', expected one of %s" % (
                    name, ', '.join(self._names)), position)
        if self._kind is UniRat:
            return UniRat.identity()
        return BiRat.x1() if name == VARIABLES[0] else BiRat.x2()

    def divide(self, left, right, position):
        return left / right


class _PolynomialTarget(object):

    def __init__(self, names):
        self._names = tuple(names)

    def constant(self, value):
        return MultiPoly.constant(value, self._names)

    def variable(self, name, position):
        if name not in self._names:
            raise ExpressionSyntaxException(
                "unknown variable '%s', expected one of %s" % (
                    name, ', '.join(self._names)), position)
        return MultiPoly.generator(name, self._names)

    def divide(self, left, right, position):
        if not right.is_constant():
            raise ExpressionSyntaxException(
                "polynomial expected, division by a non-constant", position)
        if right.is_zero():
            raise ExpressionSyntaxException("division by zero", position)
        return left * (Fraction(1) / right.constant_value())


def _as_tree(expression):
    if isinstance(expression, Expr):
        return expression
    return parse(expression)


def to_birat(expression):
    '''Lower text or a tree in x1, x2 to a canonical BiRat'''
    return _as_tree(expression).lower(_RationalTarget(BiRat, VARIABLES))


def to_unirat(expression):
    '''Lower text or a tree in x to a canonical UniRat'''
    return _as_tree(expression).lower(_RationalTarget(UniRat, UNIVARIATE))


def to_multipoly(expression, variables):
    return _as_tree(expression).lower(_PolynomialTarget(variables))


def is_univariate(expression):
    return _as_tree(expression).variables() <= set(UNIVARIATE)


class IdealFile(object):
    '''Generators, variables and monomial order read from an ideal file'''

    def __init__(self, polys, variables, order):
        self.polys = polys
        self.variables = variables
        self.order = order


_ORDERS = {'lex': LEX, 'grlex': GRLEX}


def parse_ideal(text):
    '''
    One polynomial per line; '#' starts a comment. An optional
    "vars: a, b, c" line fixes the variables, which otherwise are the
    names in order of first appearance, and an optional
    "order: lex|grlex" line the monomial order (lex by default).
    '''
    variables = None
    order = LEX
    trees = []
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        key, separator, value = line.partition(':')
        key = key.strip().lower()
        if separator and key == 'vars':
            variables = tuple(v.strip() for v in re.split(r'[,\s]+', value)
                              if v.strip())
            continue
        if separator and key == 'order':
            name = value.strip().lower()
            if name not in _ORDERS:
                raise InputException("unknown monomial order '%s'" % name)
            order = _ORDERS[name]
            continue
        trees.append(parse(line))
    if not trees:
        raise InputException("ideal file has no generators")
    if variables is None:
        seen = []
        for tree in trees:
            for name in _names_in_order(tree):
                if name not in seen:
                    seen.append(name)
        variables = tuple(seen)
    polys = [to_multipoly(tree, variables) for tree in trees]
    return IdealFile(polys, variables, order)


def _names_in_order(tree):
    if isinstance(tree, Variable):
        return [tree.name]
    if isinstance(tree, BinaryOp):
        return _names_in_order(tree.left) + _names_in_order(tree.right)
    if isinstance(tree, Negate):
        return _names_in_order(tree.operand)
    if isinstance(tree, Power):
        return _names_in_order(tree.base)
    return []
