# coding=utf-8

"""
Exact algebra of the closed and open subsets of the line that arise as fixed
point sets of piecewise linear maps and as their complements.

Endpoints are Fractions or one of the two sentinels NEG_INF and POS_INF, which
compare correctly against every Fraction.
"""

import functools
import logging
from fractions import Fraction

from ordalab.exceptions import BadInput, CertificateViolation, NotUnitInterval
from ordalab.modules import common
from ordalab.util import format_rational, parse_rational

log = logging.getLogger(__name__)


@functools.total_ordering
class Infinity(object):
    """One of the two ends of the line. Never equal to any Fraction."""

    def __init__(self, sign):
        self.sign = sign

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.sign == self.sign

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return self.sign < other.sign
        return self.sign < 0

    def __hash__(self):
        return hash(('inf', self.sign))

    def __neg__(self):
        return Infinity(-self.sign)

    def __repr__(self):
        return 'NEG_INF' if self.sign < 0 else 'POS_INF'

    def __str__(self):
        return '-inf' if self.sign < 0 else 'inf'


NEG_INF = Infinity(-1)
POS_INF = Infinity(1)


def is_finite(value):
    return not isinstance(value, Infinity)


def midpoint(lo, hi):
    """A rational point strictly inside the open interval (lo, hi)."""
    if is_finite(lo) and is_finite(hi):
        return (lo + hi) / 2
    if is_finite(lo):
        return lo + 1
    if is_finite(hi):
        return hi - 1
    return Fraction(0)


def parse_endpoint(value):
    if str(value).strip() in ('-inf', '-oo'):
        return NEG_INF
    if str(value).strip() in ('inf', '+inf', 'oo'):
        return POS_INF
    return parse_rational(value)


def format_endpoint(value):
    return str(value) if not is_finite(value) else format_rational(value)


def _image(f, value):
    return f(value) if is_finite(value) else value


class ClosedSet(object):
    """
    A finite union of pairwise disjoint closed intervals [lo, hi], stored
    sorted with touching intervals merged. A point p is the interval [p, p].
    """

    def __init__(self, intervals=()):
        pieces = []
        for lo, hi in intervals:
            if lo > hi or lo == POS_INF or hi == NEG_INF:
                raise BadInput("Invalid closed interval [%s, %s]" % (lo, hi))
            pieces.append((lo, hi))
        pieces.sort(key=lambda piece: (piece[0], piece[1]))

        merged = []
        for lo, hi in pieces:
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        self.intervals = tuple(merged)

    @classmethod
    def line(cls):
        return cls([(NEG_INF, POS_INF)])

    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def parse(cls, items):
        """Build a set from a literal: a list of ["lo", "hi"] pairs."""
        try:
            return cls((parse_endpoint(lo), parse_endpoint(hi)) for lo, hi in items)
        except (TypeError, ValueError):
            raise BadInput("Invalid set literal %r" % (items,))

    def is_empty(self):
        return not self.intervals

    def __bool__(self):
        return bool(self.intervals)

    __nonzero__ = __bool__

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __eq__(self, other):
        return isinstance(other, ClosedSet) and self.intervals == other.intervals

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.intervals)

    def contains(self, x):
        return any(lo <= x <= hi for lo, hi in self.intervals)

    __contains__ = contains

    def union(self, other):
        return ClosedSet(self.intervals + other.intervals)

    def intersect(self, other):
        result = []
        i = j = 0
        while i < len(self.intervals) and j < len(other.intervals):
            lo = max(self.intervals[i][0], other.intervals[j][0])
            hi = min(self.intervals[i][1], other.intervals[j][1])
            if lo <= hi:
                result.append((lo, hi))
            if self.intervals[i][1] < other.intervals[j][1]:
                i += 1
            else:
                j += 1
        return ClosedSet(result)

    def meets(self, lo, hi, closed_lo=True, closed_hi=True):
        """Whether the set meets the interval between lo and hi with the given end types."""
        for a, b in self.intervals:
            above = b >= lo if closed_lo else b > lo
            below = a <= hi if closed_hi else a < hi
            if above and below:
                return True
        return False

    def image(self, f):
        """The image of the set under an increasing homeomorphism of the line."""
        return ClosedSet((_image(f, lo), _image(f, hi)) for lo, hi in self.intervals)

    def as_literal(self):
        return [[format_endpoint(lo), format_endpoint(hi)] for lo, hi in self.intervals]

    def __repr__(self):
        return '<ClosedSet(%s)>' % self

    def __str__(self):
        if not self.intervals:
            return 'empty'
        return ' u '.join('[%s, %s]' % (format_endpoint(lo), format_endpoint(hi))
                          for lo, hi in self.intervals)


class OpenIntervalList(object):
    """A sorted list of pairwise disjoint open intervals (lo, hi) with lo < hi."""

    def __init__(self, intervals=()):
        pieces = sorted((lo, hi) for lo, hi in intervals if lo < hi)
        merged = []
        for lo, hi in pieces:
            if merged and lo < merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        self.intervals = tuple(merged)

    def is_empty(self):
        return not self.intervals

    def __bool__(self):
        return bool(self.intervals)

    __nonzero__ = __bool__

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __eq__(self, other):
        return isinstance(other, OpenIntervalList) and self.intervals == other.intervals

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.intervals)

    def contains(self, x):
        return any(lo < x < hi for lo, hi in self.intervals)

    __contains__ = contains

    def union(self, other):
        return OpenIntervalList(self.intervals + other.intervals)

    def overlaps(self, other):
        """Whether some interval of self and some interval of other share a point."""
        i = j = 0
        while i < len(self.intervals) and j < len(other.intervals):
            if max(self.intervals[i][0], other.intervals[j][0]) < \
                    min(self.intervals[i][1], other.intervals[j][1]):
                return True
            if self.intervals[i][1] < other.intervals[j][1]:
                i += 1
            else:
                j += 1
        return False

    def image(self, f):
        return OpenIntervalList((_image(f, lo), _image(f, hi)) for lo, hi in self.intervals)

    def as_literal(self):
        return [[format_endpoint(lo), format_endpoint(hi)] for lo, hi in self.intervals]

    def __repr__(self):
        return '<OpenIntervalList(%s)>' % self

    def __str__(self):
        if not self.intervals:
            return 'empty'
        return ' u '.join('(%s, %s)' % (format_endpoint(lo), format_endpoint(hi))
                          for lo, hi in self.intervals)


def intersect(a, b):
    return a.intersect(b)


def complement_open(a):
    """The open complement of a closed set, as disjoint sorted open intervals."""
    gaps = []
    previous = NEG_INF
    for lo, hi in a.intervals:
        if previous < lo:
            gaps.append((previous, lo))
        previous = hi
    if previous < POS_INF:
        gaps.append((previous, POS_INF))
    return OpenIntervalList(gaps)


def group_fixed_set(gens):
    """
    The common fixed set of a list of maps, which is also the fixed set of the
    group they generate.
    """
    if not gens:
        raise BadInput("group_fixed_set needs at least one generator")
    result = ClosedSet.line()
    for gen in gens:
        result = result.intersect(gen.fixed_set())
        if result.is_empty():
            break
    return result


def _require_unit_interval(gens):
    for position, gen in enumerate(gens):
        if not gen.is_unit_interval:
            raise NotUnitInterval("Generator %d moves points outside (0, 1)" % position)


def orbit_intervals(gens):
    """
    The open intervals of [0, 1] on which the group generated by unit
    interval maps acts without a global fixed point. Each interval is
    checked to be invariant under every generator.
    """
    _require_unit_interval(gens)
    result = complement_open(group_fixed_set(gens))
    for lo, hi in result:
        for position, gen in enumerate(gens):
            if gen(lo) != lo or gen(hi) != hi:
                raise CertificateViolation(
                    "Generator %d does not preserve (%s, %s)"
                    % (position, format_endpoint(lo), format_endpoint(hi)))
    log.debug("orbit intervals of %d generators: %s", len(gens), result)
    return result


def is_plt(gens):
    """Whether the unit interval maps have no common fixed point in (0, 1)."""
    _require_unit_interval(gens)
    return not group_fixed_set(gens).meets(Fraction(0), Fraction(1), False, False)


class IntervalsModule(common.Module):
    """Set algebra commands (`sets ...`)."""

    def intersect(self, a, b):
        result = intersect(a, b)
        return self.request('sets intersect', [a.as_literal(), b.as_literal()], result.as_literal())

    def complement(self, a):
        result = complement_open(a)
        return self.request('sets complement', [a.as_literal()], result.as_literal())

    def groupfix(self, gens):
        result = group_fixed_set(gens)
        return self.request('sets groupfix', [str(g) for g in gens], result.as_literal())

    def orbits(self, gens):
        result = orbit_intervals(gens)
        return self.request('sets orbits', [str(g) for g in gens], result.as_literal(),
                            certificate={'invariant_under_generators': True})

    def plt(self, gens):
        fixed = group_fixed_set(gens)
        return self.request('sets plt', [str(g) for g in gens], is_plt(gens),
                            certificate={'common_fixed_set': fixed.as_literal()})
