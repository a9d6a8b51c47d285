# coding=utf-8

"""
Piecewise linear orientation preserving homeomorphisms of the line with
affine tails, and the group operations on them.

A map is given by its breakpoints (x, y), strictly increasing in both
coordinates, together with a left and a right tail, each an affine function
slope * x + offset with positive slope. Maps are kept in a canonical form in
which no breakpoint is collinear with its neighbours, so two maps are equal
exactly when their canonical forms are. Maps of [0, 1] are the maps with
identity tails whose breakpoints all lie in [0, 1].
"""

import abc
import bisect
import logging
from fractions import Fraction

from ordalab.exceptions import BadInput, InvalidMap, NotUnitInterval
from ordalab.modules import common
from ordalab.modules.intervals import ClosedSet, NEG_INF, POS_INF, complement_open
from ordalab.util import format_rational, parse_rational

log = logging.getLogger(__name__)

ONE = Fraction(1)
ZERO = Fraction(0)
IDENTITY_TAIL = (ONE, ZERO)


class LineMap(abc.ABC):
    """
    An order preserving bijection of the line. Subclasses provide
    `evaluate`, `inverse`, `identity_like` and composition through `*`.
    """

    @abc.abstractmethod
    def evaluate(self, x):
        """Image of the rational x."""

    @abc.abstractmethod
    def inverse(self):
        """The inverse map."""

    @abc.abstractmethod
    def identity_like(self):
        """The identity, in the representation of this map."""

    def __call__(self, x):
        return self.evaluate(Fraction(x))

    def __pow__(self, n):
        return power(self, n)

    def moves_up_at(self, x):
        """Whether f(x) > x; for a fixed point free map this holds everywhere or nowhere."""
        return self(x) > x

    is_unit_interval = False

    def fixed_set(self):
        """
        The whole fixed set, for maps where it is a finite union of closed
        intervals. Other maps only answer `fixed_set_within`.
        """
        raise BadInput("The fixed set of %s is not a finite union of intervals" % self)

    def support(self):
        """The open set of points the map moves."""
        return complement_open(self.fixed_set())


def _slope(p, q):
    return (q[1] - p[1]) / (q[0] - p[0])


def _canonical(points, left_slope, right_slope, left_offset, right_offset):
    """Drop collinear breakpoints and recompute tail offsets from the survivors."""
    kept = []
    for position, point in enumerate(points):
        before = left_slope if position == 0 else _slope(points[position - 1], point)
        after = right_slope if position == len(points) - 1 else _slope(point, points[position + 1])
        if before != after:
            kept.append(point)

    if kept:
        left_offset = kept[0][1] - left_slope * kept[0][0]
        right_offset = kept[-1][1] - right_slope * kept[-1][0]
    elif points:
        left_offset = points[0][1] - left_slope * points[0][0]
        right_offset = left_offset
    return tuple(kept), (left_slope, left_offset), (right_slope, right_offset)


class PLMap(LineMap):
    """A piecewise linear orientation preserving homeomorphism of the line."""

    def __init__(self, breakpoints=(), left_tail=None, right_tail=None, unit_interval=False):
        points = tuple((Fraction(x), Fraction(y)) for x, y in breakpoints)
        left_tail = tuple(Fraction(v) for v in (left_tail or IDENTITY_TAIL))
        right_tail = tuple(Fraction(v) for v in (right_tail or IDENTITY_TAIL))

        for position in range(1, len(points)):
            if points[position][0] <= points[position - 1][0]:
                raise InvalidMap("Breakpoint x-coordinates must increase strictly")
            if points[position][1] <= points[position - 1][1]:
                raise InvalidMap("Breakpoint y-coordinates must increase strictly")
        if left_tail[0] <= 0 or right_tail[0] <= 0:
            raise InvalidMap("Tail slopes must be positive")

        if points:
            first, last = points[0], points[-1]
            if left_tail[0] * first[0] + left_tail[1] != first[1]:
                raise InvalidMap("Left tail does not meet the first breakpoint")
            if right_tail[0] * last[0] + right_tail[1] != last[1]:
                raise InvalidMap("Right tail does not meet the last breakpoint")
        elif left_tail != right_tail:
            raise InvalidMap("A map without breakpoints needs equal tails")

        if unit_interval:
            if not points or points[0] != (ZERO, ZERO) or points[-1] != (ONE, ONE):
                raise NotUnitInterval("A map of [0, 1] must start at (0, 0) and end at (1, 1)")
            if left_tail != IDENTITY_TAIL or right_tail != IDENTITY_TAIL:
                raise NotUnitInterval("A map of [0, 1] has identity tails")

        self.breakpoints, self.left_tail, self.right_tail = _canonical(
            points, left_tail[0], right_tail[0], left_tail[1], right_tail[1])
        self._xs = tuple(x for x, _ in self.breakpoints)

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def affine(cls, slope, offset=0):
        tail = (Fraction(slope), Fraction(offset))
        return cls((), tail, tail)

    @classmethod
    def unit(cls, breakpoints):
        return cls(breakpoints, unit_interval=True)

    @classmethod
    def parse(cls, literal):
        """
        Build a map from a literal: {"breakpoints": [["0", "0"], ...],
        "left_tail": {"slope": ..., "offset": ...}, "right_tail": ...,
        "unit_interval": bool}.
        """
        try:
            points = [(parse_rational(x), parse_rational(y)) for x, y in literal.get('breakpoints', [])]
            tails = []
            for key in ('left_tail', 'right_tail'):
                tail = literal.get(key)
                tails.append((parse_rational(tail['slope']), parse_rational(tail['offset']))
                             if tail is not None else None)
        except (AttributeError, KeyError, TypeError, ValueError):
            raise BadInput("Invalid map literal %r" % (literal,))
        return cls(points, tails[0], tails[1], unit_interval=bool(literal.get('unit_interval')))

    def as_literal(self):
        def tail(t):
            return {'slope': format_rational(t[0]), 'offset': format_rational(t[1])}
        return {
            'breakpoints': [[format_rational(x), format_rational(y)] for x, y in self.breakpoints],
            'left_tail': tail(self.left_tail),
            'right_tail': tail(self.right_tail),
        }

    def identity_like(self):
        return PLMap()

    @property
    def is_identity(self):
        return not self.breakpoints and self.left_tail == IDENTITY_TAIL

    @property
    def is_translation(self):
        return not self.breakpoints and self.left_tail[0] == 1

    @property
    def is_unit_interval(self):
        return (self.left_tail == IDENTITY_TAIL and self.right_tail == IDENTITY_TAIL and
                all(0 <= x <= 1 for x in self._xs))

    def evaluate(self, x):
        if not self.breakpoints or x <= self._xs[0]:
            slope, offset = self.left_tail
            return slope * x + offset
        if x >= self._xs[-1]:
            slope, offset = self.right_tail
            return slope * x + offset
        position = bisect.bisect_right(self._xs, x)
        (x0, y0), (x1, y1) = self.breakpoints[position - 1], self.breakpoints[position]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def inverse(self):
        def invert(tail):
            return (1 / tail[0], -tail[1] / tail[0])
        return PLMap([(y, x) for x, y in self.breakpoints], invert(self.left_tail), invert(self.right_tail))

    def compose(self, other):
        """The map x -> self(other(x))."""
        inner_inverse = other.inverse()
        xs = set(other._xs)
        xs.update(inner_inverse.evaluate(x) for x in self._xs)
        points = [(x, self.evaluate(other.evaluate(x))) for x in sorted(xs)]

        left = (self.left_tail[0] * other.left_tail[0],
                self.left_tail[0] * other.left_tail[1] + self.left_tail[1])
        right = (self.right_tail[0] * other.right_tail[0],
                 self.right_tail[0] * other.right_tail[1] + self.right_tail[1])
        return PLMap(points, left, right)

    def __mul__(self, other):
        if isinstance(other, PLMap):
            return self.compose(other)
        return NotImplemented

    def reverse(self):
        """The map r -> -f(-r)."""
        points = [(-x, -y) for x, y in reversed(self.breakpoints)]
        return PLMap(points, (self.right_tail[0], -self.right_tail[1]),
                     (self.left_tail[0], -self.left_tail[1]))

    def pieces(self):
        """Yield (lo, hi, slope, offset) for the tails and every segment."""
        slope, offset = self.left_tail
        if not self.breakpoints:
            yield NEG_INF, POS_INF, slope, offset
            return
        yield NEG_INF, self._xs[0], slope, offset
        for p, q in zip(self.breakpoints, self.breakpoints[1:]):
            slope = _slope(p, q)
            yield p[0], q[0], slope, p[1] - slope * p[0]
        slope, offset = self.right_tail
        yield self._xs[-1], POS_INF, slope, offset

    def fixed_set(self):
        """The exact set of fixed points, solved piece by piece."""
        return ClosedSet(_fixed_pieces(self.pieces()))

    def fixed_set_within(self, lo, hi):
        return self.fixed_set().intersect(ClosedSet([(lo, hi)]))

    def has_fixed_point(self):
        return not self.fixed_set().is_empty()

    def __eq__(self, other):
        return (isinstance(other, PLMap) and self.breakpoints == other.breakpoints and
                self.left_tail == other.left_tail and self.right_tail == other.right_tail)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.breakpoints, self.left_tail, self.right_tail))

    def __repr__(self):
        return '<PLMap(%s)>' % self

    def __str__(self):
        if not self.breakpoints:
            slope, offset = self.left_tail
            return 'x -> %s*x + %s' % (format_rational(slope), format_rational(offset))
        return ' '.join('(%s,%s)' % (format_rational(x), format_rational(y)) for x, y in self.breakpoints)


def _fixed_pieces(pieces):
    """Closed intervals of fixed points of affine pieces slope * x + offset on [lo, hi]."""
    for lo, hi, slope, offset in pieces:
        if slope == 1:
            if offset == 0:
                yield lo, hi
        else:
            point = offset / (1 - slope)
            if lo <= point <= hi:
                yield point, point


def evaluate(f, x):
    return f(x)


def compose(f, g):
    return f * g


def inverse(f):
    return f.inverse()


def power(f, n):
    """The n-fold composite of f, by repeated squaring; negative n uses the inverse."""
    if n < 0:
        f, n = f.inverse(), -n
    result = f.identity_like()
    square = f
    while n:
        if n & 1:
            result = result * square
        n >>= 1
        if n:
            square = square * square
    return result


def conjugate(x, g):
    """g x g^-1."""
    return g * x * g.inverse()


def reverse(f):
    return f.reverse()


def equals(f, g):
    return f == g


def fixed_set(f):
    return f.fixed_set()


def commutator(f, g):
    """f g f^-1 g^-1."""
    return f * g * f.inverse() * g.inverse()


class PLMapModule(common.Module):
    """Map algebra commands (`map ...`)."""

    def evaluate(self, f, x):
        return self.request('map eval', [str(f), format_rational(x)], format_rational(f(x)))

    def compose(self, f, g):
        return self.request('map compose', [str(f), str(g)], (f * g).as_literal())

    def inverse(self, f):
        return self.request('map inverse', [str(f)], f.inverse().as_literal())

    def power(self, f, n):
        return self.request('map power', [str(f), n], power(f, n).as_literal())

    def conjugate(self, x, g):
        return self.request('map conjugate', [str(x), str(g)], conjugate(x, g).as_literal())

    def reverse(self, f):
        return self.request('map reverse', [str(f)], f.reverse().as_literal())

    def equals(self, f, g):
        return self.request('map equals', [str(f), str(g)], f == g)

    def fix(self, f):
        return self.request('map fix', [str(f)], f.fixed_set().as_literal())
