import abc
import math
from fractions import Fraction

import numpy as np
from six import with_metaclass

from rational_expanders.algebra.scalar import scalar_to_text
from rational_expanders.geometry.counting import EvalSet
from rational_expanders.utils.caps import HarnessDefaults
from rational_expanders.utils.exceptions import InputException, \
    SetGenerationException


class SetFamily(with_metaclass(abc.ABCMeta, object)):
    '''A rule producing an n-element evaluation set'''

    @abc.abstractmethod
    def family_id(self):
        '''Text that parse_family turns back into this family'''

    @abc.abstractmethod
    def generate(self, n, seed):
        '''
        Returns
        -------
        EvalSet
            n distinct scalars

        Raises
        ------
        SetGenerationException
            when n distinct elements are not reached within the allowed
            number of attempts
        '''

    def __repr__(self):
        return "SetFamily(%s)" % self.family_id()


def _collect_distinct(candidates, n, family):
    '''First n distinct values among at most ATTEMPT_FACTOR * n draws'''
    if n == 0:
        return EvalSet([])
    seen = set()
    elements = []
    for attempt, value in enumerate(candidates):
        if attempt >= HarnessDefaults.ATTEMPT_FACTOR * n:
            break
        if value is None or value in seen:
            continue
        seen.add(value)
        elements.append(value)
        if len(elements) == n:
            return EvalSet(elements)
    raise SetGenerationException(
        "%s: only %d distinct elements within %d attempts, %d wanted" % (
            family.family_id(), len(elements),
            HarnessDefaults.ATTEMPT_FACTOR * n, n))


class ArithmeticProgression(SetFamily):

    def __init__(self, start, difference):
        if difference == 0:
            raise InputException("progression difference must be nonzero")
        self._start = Fraction(start)
        self._difference = Fraction(difference)

    def family_id(self):
        return "ap:%s,%s" % (scalar_to_text(self._start),
                             scalar_to_text(self._difference))

    def generate(self, n, seed=0):
        return EvalSet([self._start + k * self._difference for k in range(n)])


class GeometricProgression(SetFamily):

    def __init__(self, start, ratio):
        if ratio in (0, 1, -1):
            raise InputException("ratio %s gives no progression" % ratio)
        if start == 0:
            raise InputException("geometric progression from zero")
        self._start = Fraction(start)
        self._ratio = Fraction(ratio)

    def family_id(self):
        return "gp:%s,%s" % (scalar_to_text(self._start),
                             scalar_to_text(self._ratio))

    def generate(self, n, seed=0):
        return EvalSet([self._start * self._ratio ** k for k in range(n)])


class RandomIntegers(SetFamily):
    '''
    Distinct integers drawn from [0, bound), bound = n**3 unless fixed;
    the seed is fixed here or taken from the run
    '''

    def __init__(self, bound=None, seed=None):
        self._bound = bound
        self._seed = seed

    def family_id(self):
        parts = [str(v) for v in (self._bound, self._seed) if v is not None]
        return "random" + (":" + ",".join(parts) if parts else "")

    def bound_for(self, n):
        if self._bound is not None:
            return self._bound
        return max(n, 1) ** HarnessDefaults.RANDOM_BOUND_EXPONENT

    def generate(self, n, seed=0):
        bound = self.bound_for(n)
        if bound < n:
            raise SetGenerationException(
                "cannot draw %d distinct integers below %d" % (n, bound))
        rng = np.random.default_rng(self._seed if self._seed is not None
                                    else seed)
        draws = rng.integers(0, bound,
                             size=HarnessDefaults.ATTEMPT_FACTOR * max(n, 1))
        return _collect_distinct((int(v) for v in draws), n, self)


class TangentOrbit(SetFamily):
    '''
    t, t + t, t + t + t, ... under the tangent addition
    (u + v)/(1 - u v); iterates at a pole are skipped.
    '''

    def __init__(self, t):
        self._t = Fraction(t)

    def family_id(self):
        return "tan:%s" % scalar_to_text(self._t)

    def _iterates(self):
        p, q = self._t.numerator, self._t.denominator
        s, c = p, q
        while True:
            yield Fraction(s, c) if c != 0 else None
            s, c = s * q + c * p, c * q - s * p
            g = math.gcd(s, c)
            s, c = s // g, c // g

    def generate(self, n, seed=0):
        return _collect_distinct(self._iterates(), n, self)


def _arguments(text, count, name):
    values = [v.strip() for v in text.split(',') if v.strip()]
    if len(values) != count:
        raise InputException("%s expects %d arguments, got '%s'" % (
            name, count, text))
    try:
        return [Fraction(v) for v in values]
    except (ValueError, ZeroDivisionError):
        raise InputException("bad %s arguments '%s'" % (name, text))


def parse_family(text):
    '''
    ap:START,DIFF | gp:START,RATIO | random[:BOUND[,SEED]] | tan:T
    '''
    name, _, arguments = text.strip().partition(':')
    name = name.strip().lower()
    if name == 'ap':
        return ArithmeticProgression(*_arguments(arguments, 2, name))
    if name == 'gp':
        return GeometricProgression(*_arguments(arguments, 2, name))
    if name in ('tan', 'tan_orbit'):
        return TangentOrbit(*_arguments(arguments, 1, name))
    if name == 'random':
        values = [v.strip() for v in arguments.split(',') if v.strip()]
        if len(values) > 2 or not all(v.isdigit() for v in values):
            raise InputException("bad random arguments '%s'" % arguments)
        values = [int(v) for v in values] + [None] * (2 - len(values))
        return RandomIntegers(*values)
    raise InputException("unknown set family '%s'" % text)


def gen_set(family, n, seed=0):
    if not isinstance(family, SetFamily):
        family = parse_family(family)
    return family.generate(n, seed)
