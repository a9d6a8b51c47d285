# coding=utf-8

"""
Result models. Witnesses, classifications and harness reports are thin
keyword-argument records; `to_plain` turns them (and the mathematical values
they hold) into plain data for reports.
"""

from fractions import Fraction

from ordalab.util import camel_to_snake, format_rational, snake_to_camel


class Model(object):
    """
    Superclass for all models. Stores its fields as keyword arguments and
    answers attribute access for both snake_case and camelCase spellings.
    """

    tag = None

    def __init__(self, **kwargs):
        self._attrs = dict((snake_to_camel(key), value) for (key, value) in kwargs.items())

    def __dir__(self):
        return sorted(camel_to_snake(key) for key in self._attrs.keys())

    def __getattr__(self, attr):
        """
        Magic for returning a field. Will try a camelCased version of the
        snake_cased input if the attribute contains an underscore. This means
        witness.check_depth returns the same as witness.checkDepth.
        """
        if attr.startswith('_'):
            raise AttributeError(attr)
        if "_" in attr:
            attr = snake_to_camel(attr)

        try:
            return self._attrs[attr]
        except KeyError:
            raise AttributeError("%s has no attribute '%s' (tried %r)"
                                 % (type(self).__name__, camel_to_snake(attr), dir(self)))

    def get(self, attr, default=None):
        return self._attrs.get(snake_to_camel(attr), default)

    def as_dict(self):
        """The fields as plain data, keys in snake_case."""
        data = {}
        if self.tag is not None:
            data['tag'] = self.tag
        for key in sorted(self._attrs):
            data[camel_to_snake(key)] = to_plain(self._attrs[key])
        return data

    def __eq__(self, other):
        return type(self) is type(other) and self._attrs == other._attrs

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        args = ', '.join('%s=%r' % (attr, getattr(self, attr)) for attr in dir(self))
        return "<%s.%s(%s)>" % (type(self).__module__, type(self).__name__, args)


def to_plain(value):
    """Convert a value into str/bool/int/list/dict data suitable for a report."""
    if isinstance(value, Model):
        return value.as_dict()
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return dict((str(key), to_plain(item)) for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    if hasattr(value, 'as_literal'):
        return value.as_literal()
    return str(value)


class WordCheck(Model):
    """
    Outcome of an exhaustive word check. True when it passed.

    mode
        "semigroup" or "group"
    depth
        Maximal word length
    count
        Number of words checked
    counterexample
        None, or the two colliding words (the second is "id" in group mode)
    """

    def __bool__(self):
        return self.counterexample is None

    __nonzero__ = __bool__


class SemigroupWitness(Model):
    """
    Certificate that alpha^m and beta^n freely generate a free semigroup.

    m, n
        Minimal exponents
    x
        The separating point beta(a)
    a, b
        The ends of the interval the two maps play on
    check_depth
        Depth of the exhaustive distinctness check
    inverted
        Which of alpha, beta were replaced by their inverses
    inclusions
        The exact endpoint checks that certify the interval inclusions
    """


class GroupWitness(Model):
    """
    Certificate that alpha^p and beta^q freely generate a free group.

    p, q
        Exponents
    markers
        The points x_0 < x_1 < ... < x_{n-1} cut from the alternating chain
    chain
        The alternating complement intervals of the two fixed sets
    pieces, cover
        P and Q over one period
    normalizer
        The affine map sending b0 to 0 and z(b0) to 1
    inclusions
        Certified endpoint images for 0 < |r| <= 3
    check_depth
        Depth of the reduced word check
    """


class Conjugator(Model):
    """
    A word g in the generators of a group of [0, 1] such that conjugating one
    family by g makes it commute with another.
    """


class Violation(Model):
    """A failed order axiom, with the serialized words involved."""


class HarnessReport(Model):
    """
    Result of an order or convexity harness.

    elements
        Number of distinct group elements
    comparisons
        Number of comparisons performed
    violations
        List of Violation
    """

    def __bool__(self):
        return not self.violations

    __nonzero__ = __bool__


class Classification(Model):
    """Superclass of the four outcomes of a fixed point / ping-pong analysis."""


class CommonFixedPoint(Classification):
    """The maps share fixed points; `fixed_set` holds them (within `window` if periodic)."""
    tag = 'CommonFixedPoint'


class FreeSemigroup(Classification):
    """Two of the maps generate a free semigroup; see `witness` and `pair`."""
    tag = 'FreeSemigroup'


class FreeGroup(Classification):
    """Two of the maps generate a free group; see `witness` and `pair`."""
    tag = 'FreeGroup'


class Inconclusive(Classification):
    """Neither a common fixed point nor a certificate was found; see `reason`."""
    tag = 'Inconclusive'
