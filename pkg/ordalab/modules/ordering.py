# coding=utf-8

"""
Left orders on groups of piecewise linear maps coming from their action on
the line: f < g when f(x) < g(x) at the first point x, in a fixed well
order of the line, where the two maps differ. The germ order reads the line
from -infinity; a priority order looks at finitely many chosen points first.
"""

import functools
import logging
import random

from ordalab.exceptions import BadInput
from ordalab.models import HarnessReport, Violation
from ordalab.modules import common
from ordalab.modules.intervals import midpoint, NEG_INF, POS_INF
from ordalab.modules.plmap import PLMap
from ordalab.util import format_rational, format_word, word_maps

log = logging.getLogger(__name__)

LESS = -1
EQUAL = 0
GREATER = 1

NAMES = {LESS: 'less', EQUAL: 'equal', GREATER: 'greater'}


def _sign(value):
    return (value > 0) - (value < 0)


def germ_compare(f, g):
    """
    Compare two maps by their first difference seen from -infinity.

    Differing left tails decide at once; otherwise the maps agree up to
    some breakpoint and are both affine on each following gap, so the sign
    at the midpoint of the first gap where they differ decides.
    """
    for h in (f, g):
        if not isinstance(h, PLMap):
            raise BadInput("The germ order compares maps with affine tails, not %s" % h)
    if f == g:
        return EQUAL
    if f.left_tail != g.left_tail:
        (slope_f, offset_f), (slope_g, offset_g) = f.left_tail, g.left_tail
        if slope_f != slope_g:
            return LESS if slope_f > slope_g else GREATER
        return LESS if offset_f < offset_g else GREATER

    xs = sorted(set(x for x, _ in f.breakpoints) | set(x for x, _ in g.breakpoints))
    ends = [NEG_INF] + xs + [POS_INF]
    for lo, hi in zip(ends, ends[1:]):
        point = midpoint(lo, hi)
        difference = f(point) - g(point)
        if difference:
            return _sign(difference)
    return EQUAL


class OrderOracle(object):
    """
    A left order on maps: values at the priority points, compared in turn,
    then `tie_break`. Without a tie break, maps agreeing at every priority
    point compare equal, which is no longer an order on distinct maps.
    """

    def __init__(self, priority_points=(), tie_break=germ_compare):
        self.priority_points = tuple(priority_points)
        self.tie_break = tie_break

    def compare(self, f, g):
        if f == g:
            return EQUAL
        for point in self.priority_points:
            outcome = _sign(f(point) - g(point))
            if outcome:
                return outcome
        if self.tie_break is None:
            return EQUAL
        return self.tie_break(f, g)

    __call__ = compare

    def sort_key(self):
        return functools.cmp_to_key(self.compare)

    def __repr__(self):
        return '<OrderOracle(priority=[%s], tie_break=%s)>' % (
            ', '.join(format_rational(p) for p in self.priority_points),
            getattr(self.tie_break, '__name__', None))


def priority_compare(oracle, f, g):
    return oracle.compare(f, g)


def _elements(gens, word_length, names):
    """Distinct maps of the words up to word_length, each with its shortest word."""
    found = {}
    for word, value in word_maps(gens, word_length, PLMap.identity()):
        if value not in found:
            found[value] = format_word(word, names)
    log.debug("%d distinct elements from words of length <= %d", len(found), word_length)
    return list(found.items())


def order_axiom_harness(gens, oracle, word_length, samples, seed=0, names=None, cone_length=3):
    """
    Check the order axioms on the distinct maps given by words up to
    word_length: totality and antisymmetry on every pair, transitivity and
    left invariance on `samples` random triples, and closure of the positive
    cone under composition on words up to cone_length.
    """
    names = names or ['g%d' % (position + 1) for position in range(len(gens))]
    elements = _elements(gens, word_length, names)
    violations = []
    comparisons = 0

    for i, (f, word_f) in enumerate(elements):
        for g, word_g in elements[i + 1:]:
            forward, backward = oracle.compare(f, g), oracle.compare(g, f)
            comparisons += 2
            if forward == EQUAL:
                violations.append(Violation(kind='totality', words=[word_f, word_g]))
            elif forward != -backward:
                violations.append(Violation(kind='antisymmetry', words=[word_f, word_g]))

    rng = random.Random(seed)
    for _ in range(samples):
        (f, word_f), (g, word_g), (h, word_h) = [rng.choice(elements) for _ in range(3)]
        first, second, third = oracle.compare(f, g), oracle.compare(g, h), oracle.compare(f, h)
        comparisons += 3
        if first == second == LESS and third != LESS:
            violations.append(Violation(kind='transitivity', words=[word_f, word_g, word_h]))
        shifted = oracle.compare(h * f, h * g)
        comparisons += 1
        if shifted != first:
            violations.append(Violation(kind='left_invariance', words=[word_h, word_f, word_g]))

    identity = PLMap.identity()
    positive = [(f, word) for f, word in _elements(gens, cone_length, names)
                if oracle.compare(f, identity) == GREATER]
    for f, word_f in positive:
        for g, word_g in positive:
            comparisons += 1
            if oracle.compare(f * g, identity) != GREATER:
                violations.append(Violation(kind='positive_cone', words=[word_f, word_g]))

    log.info("order harness: %d elements, %d comparisons, %d violations",
             len(elements), comparisons, len(violations))
    return HarnessReport(elements=len(elements), comparisons=comparisons, samples=samples,
                         violations=violations)


def convex_stabilizer_check(gens, priority_points, word_length, names=None):
    """
    Sort the distinct maps up to word_length in the priority order and check
    that nothing outside the stabilizer of the priority points sits between
    two elements of the stabilizer.
    """
    names = names or ['g%d' % (position + 1) for position in range(len(gens))]
    key = OrderOracle(priority_points).sort_key()
    elements = sorted(_elements(gens, word_length, names), key=lambda item: key(item[0]))

    def stabilizes(f):
        return all(f(point) == point for point in priority_points)

    inside = [position for position, (f, _) in enumerate(elements) if stabilizes(f)]
    violations = []
    if inside:
        below = inside[0]
        for position in range(inside[0] + 1, inside[-1]):
            f, word = elements[position]
            if stabilizes(f):
                below = position
                continue
            above = next(index for index in inside if index > position)
            violations.append(Violation(kind='convexity',
                                        words=[elements[below][1], word, elements[above][1]]))
    return HarnessReport(elements=len(elements), stabilizer=len(inside), comparisons=len(elements),
                         violations=violations)


class OrderingModule(common.Module):
    """Order comparisons and axiom harnesses (`order ...`)."""

    def compare(self, f, g, priority_points=()):
        outcome = OrderOracle(priority_points).compare(f, g)
        return self.request('order compare', [str(f), str(g), list(priority_points)], NAMES[outcome])

    def harness(self, gens, word_length, samples, priority_points=(), negative=False, names=None):
        oracle = OrderOracle(priority_points, tie_break=None if negative else germ_compare)
        report = order_axiom_harness(gens, oracle, word_length, samples, self.config.seed, names)
        return self.request('order harness', [str(g) for g in gens] + [word_length, samples, negative],
                            not report.violations, certificate=report,
                            status='ok' if report else 'violation')

    def convex(self, gens, priority_points, word_length, names=None):
        report = convex_stabilizer_check(gens, priority_points, word_length, names)
        return self.request('order convex', [str(g) for g in gens] + [list(priority_points), word_length],
                            not report.violations, certificate=report,
                            status='ok' if report else 'violation')
