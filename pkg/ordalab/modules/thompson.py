# coding=utf-8

"""
Concrete groups of piecewise linear maps: Thompson's group F acting on
[0, 1], the group of lifts to the line of Thompson's group T (maps with
f(x + 1) = f(x) + 1), and the conjugator search that makes two families of
compactly supported elements of a group without interior global fixed
points commute.
"""

import bisect
import logging
import math
from fractions import Fraction

from ordalab.exceptions import (BadInput, CertificateViolation, InvalidMap, PreconditionViolation,
                                SearchExhausted, SupportNotInterior)
from ordalab.models import Conjugator
from ordalab.modules import common
from ordalab.modules.intervals import ClosedSet, OpenIntervalList, is_plt
from ordalab.modules.plmap import LineMap, PLMap, commutator, conjugate, _fixed_pieces, _slope
from ordalab.util import format_rational, format_word, parse_rational, word_maps

log = logging.getLogger(__name__)


def _normalize(points):
    """Move every point into the period 0 <= x < 1 and sort."""
    normalized = {}
    for x, y in points:
        x, y = Fraction(x), Fraction(y)
        shift = math.floor(x)
        x, y = x - shift, y - shift
        if normalized.get(x, y) != y:
            raise InvalidMap("Two values given for x = %s" % format_rational(x))
        normalized[x] = y
    return sorted(normalized.items())


class PeriodicMap(LineMap):
    """
    A piecewise linear homeomorphism of the line commuting with x -> x + 1.

    Stored as its breakpoints with 0 <= x < 1; the map is their periodic
    extension (x + k, y + k). The value offset of the lift is carried by the
    y-coordinates. A translation keeps the single anchor point (0, c).
    """

    def __init__(self, points):
        points = _normalize(points)
        if not points:
            raise InvalidMap("A periodic map needs at least one point")
        for p, q in zip(points, points[1:]):
            if q[1] <= p[1]:
                raise InvalidMap("Periodic map values must increase")
        if points[-1][1] >= points[0][1] + 1:
            raise InvalidMap("Periodic map values must increase across the period")

        kept = []
        for position, point in enumerate(points):
            before = points[position - 1] if position else (points[-1][0] - 1, points[-1][1] - 1)
            after = (points[position + 1] if position < len(points) - 1
                     else (points[0][0] + 1, points[0][1] + 1))
            if _slope(before, point) != _slope(point, after):
                kept.append(point)
        if not kept:
            kept = [(Fraction(0), points[0][1] - points[0][0])]
        self.points = tuple(kept)

        self._extended = ((self.points[-1][0] - 1, self.points[-1][1] - 1),) + self.points + \
            ((self.points[0][0] + 1, self.points[0][1] + 1),)
        self._xs = tuple(x for x, _ in self._extended)

    @classmethod
    def identity(cls):
        return cls([(0, 0)])

    @classmethod
    def translation(cls, offset):
        return cls([(0, offset)])

    @classmethod
    def from_plmap(cls, f):
        if not f.is_translation:
            raise BadInput("Only translations of the line commute with x -> x + 1: %s" % f)
        return cls.translation(f.left_tail[1])

    @classmethod
    def parse(cls, literal):
        try:
            return cls([(parse_rational(x), parse_rational(y)) for x, y in literal['breakpoints']])
        except (KeyError, TypeError, ValueError):
            raise BadInput("Invalid periodic map literal %r" % (literal,))

    def as_literal(self):
        return {
            'periodic': True,
            'breakpoints': [[format_rational(x), format_rational(y)] for x, y in self.points],
        }

    def identity_like(self):
        return PeriodicMap.identity()

    @property
    def shift(self):
        """The integer part of f(0)."""
        return math.floor(self.evaluate(Fraction(0)))

    @property
    def is_identity(self):
        return self.points == ((0, 0),)

    @property
    def is_translation(self):
        return len(self.points) == 1

    def evaluate(self, x):
        shift = math.floor(x)
        t = x - shift
        position = bisect.bisect_right(self._xs, t) - 1
        (x0, y0), (x1, y1) = self._extended[position], self._extended[position + 1]
        return y0 + (y1 - y0) * (t - x0) / (x1 - x0) + shift

    def inverse(self):
        return PeriodicMap([(y, x) for x, y in self.points])

    def compose(self, other):
        """The map x -> self(other(x))."""
        start = other.evaluate(Fraction(0))
        back = other.inverse()
        xs = set([Fraction(0)])
        xs.update(x for x, _ in other.points)
        for x, _ in self.points:
            xs.add(back.evaluate(x + math.ceil(start - x)))
        return PeriodicMap([(x, self.evaluate(other.evaluate(x))) for x in xs])

    def __mul__(self, other):
        if isinstance(other, PeriodicMap):
            return self.compose(other)
        if isinstance(other, PLMap):
            return self.compose(PeriodicMap.from_plmap(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, PLMap):
            return PeriodicMap.from_plmap(other).compose(self)
        return NotImplemented

    def reverse(self):
        return PeriodicMap([(-x, -y) for x, y in self.points])

    def fixed_set_within(self, lo, hi):
        """The fixed points in [lo, hi]; the full fixed set is their integer translates."""
        pieces = []
        for shift in range(math.floor(lo) - 1, math.floor(hi) + 2):
            for p, q in zip(self._extended, self._extended[1:]):
                slope = _slope(p, q)
                offset = p[1] - slope * p[0] + shift - slope * shift
                pieces.append((p[0] + shift, q[0] + shift, slope, offset))
        return ClosedSet(_fixed_pieces(pieces)).intersect(ClosedSet([(lo, hi)]))

    def has_fixed_point(self):
        return not self.fixed_set_within(Fraction(0), Fraction(1)).is_empty()

    def __eq__(self, other):
        return isinstance(other, PeriodicMap) and self.points == other.points

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return '<PeriodicMap(%s)>' % self

    def __str__(self):
        return 'periodic ' + ' '.join('(%s,%s)' % (format_rational(x), format_rational(y))
                                      for x, y in self.points)


def f_generators():
    """The standard generators x0, x1 of Thompson's group F, checked against its relations."""
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    x0 = PLMap.unit([(0, 0), (half, quarter), (3 * quarter, half), (1, 1)])
    x1 = PLMap.unit([(0, 0), (half, half), (3 * quarter, Fraction(5, 8)), (Fraction(7, 8), 3 * quarter), (1, 1)])
    for name, holds in check_f_relations(x0, x1):
        if not holds:
            raise CertificateViolation("Relation %s of F fails" % name)
    return x0, x1


def check_f_relations(x0, x1):
    """The two defining relations of F, each paired with whether it holds exactly."""
    u = x0 * x1.inverse()
    x2 = conjugate(x1, x0.inverse())
    x3 = conjugate(x1, x0.inverse() ** 2)
    return [
        ('[x0 x1^-1, x0^-1 x1 x0]', commutator(u, x2).is_identity),
        ('[x0 x1^-1, x0^-2 x1 x0^2]', commutator(u, x3).is_identity),
    ]


def ttilde_generators():
    """
    Lifts of the generators A, B, C of Thompson's group T to maps of the line
    commuting with z(x) = x + 1, together with z.
    """
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    a = PeriodicMap([(0, 0), (half, quarter), (3 * quarter, half)])
    b = PeriodicMap([(0, 0), (half, half), (3 * quarter, Fraction(5, 8)), (Fraction(7, 8), 3 * quarter)])
    c = PeriodicMap([(0, 3 * quarter), (half, 1), (3 * quarter, Fraction(3, 2))])
    z = PeriodicMap.translation(1)
    for gen in (a, b, c):
        if gen * z != z * gen:
            raise CertificateViolation("%s does not commute with x -> x + 1" % gen)
    return [a, b, c], z


def _union_of_supports(maps):
    support = OpenIntervalList()
    for f in maps:
        moved = f.support()
        if moved and not (0 < moved.intervals[0][0] and moved.intervals[-1][1] < 1):
            raise SupportNotInterior("%s moves points next to 0 or 1" % f)
        support = support.union(moved)
    return support


def lplt_conjugator(a_gens, b_gens, g_gens, depth, names=None):
    """
    Search the words of length <= depth in g_gens, shortest first, for g with
    g(r) > s, where r is the infimum of the support of the first family and s
    the supremum of the support of the second. Then g a g^-1 and b have
    disjoint supports for all a, b, and the commutators are checked exactly.
    Families whose supports are already apart get the identity.
    """
    names = names or ['g%d' % position for position in range(len(g_gens))]
    if not a_gens or not b_gens:
        return Conjugator(word='id', letters=(), map=PLMap.identity(), commutators_checked=0)
    if not is_plt(g_gens):
        raise PreconditionViolation("The generators have a common fixed point in (0, 1)")

    support_a = _union_of_supports(a_gens)
    support_b = _union_of_supports(b_gens)
    if not support_a or not support_b:
        return Conjugator(word='id', letters=(), map=PLMap.identity(), commutators_checked=0)
    r, s = support_a.intervals[0][0], support_b.intervals[-1][1]

    if support_a.intervals[-1][1] <= support_b.intervals[0][0] or r >= s:
        # the supports are already apart, in either order
        word, g = (), PLMap.identity()
    else:
        for word, g in word_maps(g_gens, depth, PLMap.identity()):
            if g(r) > s:
                break
        else:
            raise SearchExhausted("No word of length <= %d pushes %s past %s"
                                  % (depth, format_rational(r), format_rational(s)))
    log.info("conjugator %s found", format_word(word, names))

    checked = 0
    for a in a_gens:
        moved = conjugate(a, g)
        for b in b_gens:
            checked += 1
            if moved * b != b * moved:
                raise CertificateViolation("Conjugated generator does not commute with %s" % b)
    return Conjugator(word=format_word(word, names), letters=word, map=g, r=r, s=s, image_of_r=g(r),
                      commutators_checked=checked)


class ThompsonModule(common.Module):
    """Fixture and conjugator commands (`thompson ...`)."""

    def fixtures(self, registry, name=None):
        if name is None:
            return self.request('thompson fixtures', [], sorted(registry))
        if name not in registry:
            raise BadInput('Fixture %s not found' % name)
        fixture = registry[name]
        certificate = None
        if name.startswith('F.'):
            certificate = {'relations': [[relation, holds] for relation, holds in check_f_relations(*f_generators())]}
        return self.request('thompson fixtures', [name], fixture, certificate=certificate)

    def conjugator(self, a_gens, b_gens, g_gens, depth, names=None):
        result = lplt_conjugator(a_gens, b_gens, g_gens, depth, names)
        return self.request('thompson conjugator', [[str(f) for f in a_gens], [str(f) for f in b_gens],
                                                    [str(f) for f in g_gens], depth],
                            result.word, certificate=result)
