# coding=utf-8

"""
Ping-pong certificates. Two maps that push an interval towards opposite
ends generate a free semigroup; two maps commuting with a fixed point free
map z whose fixed sets interleave generate a free group after passing to
powers. Every witness produced here carries the exact endpoint checks it
relies on, followed by an exhaustive word check.
"""

import logging
from fractions import Fraction

from ordalab.exceptions import (BadInput, CertificateViolation, CoverConstructionError, FixedPointFree,
                                LimitReached, PreconditionViolation, SearchBoundExceeded)
from ordalab.models import (CommonFixedPoint, FreeGroup, FreeSemigroup, GroupWitness, Inconclusive,
                            SemigroupWitness, WordCheck)
from ordalab.modules import common
from ordalab.modules.intervals import ClosedSet, complement_open, format_endpoint, group_fixed_set, is_finite
from ordalab.modules.plmap import PLMap, power
from ordalab.util import format_rational, format_word, word_maps

log = logging.getLogger(__name__)

SEMIGROUP = 'semigroup'
GROUP = 'group'

# |r| checked explicitly for the free group inclusions
REPEATS = 3


def _names(count):
    return ['g%d' % (position + 1) for position in range(count)]


def verify_distinct_words(gens, mode, depth, probe=None, names=None):
    """
    Exhaustively check a family of maps for relations up to `depth`.

    In semigroup mode the nonempty positive words are evaluated at `probe`
    and must take pairwise distinct values. In group mode every nonempty
    freely reduced word must differ from the identity map.
    """
    if depth < 1:
        raise BadInput("Word checks need depth >= 1, got %d" % depth)
    if not gens:
        raise BadInput("Word checks need at least one map")
    names = names or _names(len(gens))

    if mode == SEMIGROUP:
        if probe is None:
            raise PreconditionViolation("A semigroup word check needs a probe point")
        probe = Fraction(probe)
        seen = {}
        level = [((), probe)]
        count = 0
        for _ in range(depth):
            following = []
            for word, value in level:
                for index, gen in enumerate(gens):
                    # the new letter acts last, so it goes in front
                    extended, image = ((index, 1),) + word, gen(value)
                    count += 1
                    if image in seen:
                        pair = [format_word(seen[image], names), format_word(extended, names)]
                        log.debug("words %s and %s agree at %s", pair[0], pair[1], format_rational(probe))
                        return WordCheck(mode=mode, depth=depth, count=count, probe=probe, counterexample=pair)
                    seen[image] = extended
                    following.append((extended, image))
            level = following
        return WordCheck(mode=mode, depth=depth, count=count, probe=probe, counterexample=None)

    if mode == GROUP:
        count = 0
        for word, value in word_maps(gens, depth, gens[0].identity_like()):
            if not word:
                continue
            count += 1
            if value.is_identity:
                return WordCheck(mode=mode, depth=depth, count=count, probe=probe,
                                 counterexample=[format_word(word, names), 'id'])
        return WordCheck(mode=mode, depth=depth, count=count, probe=probe, counterexample=None)

    raise BadInput("Unknown word check mode %r" % (mode,))


def _escape(step, start, target, below, search_bound, label, strict=True):
    """Least r >= 1 such that step^r(start) passes target (downwards if `below`)."""
    value = start
    for exponent in range(1, search_bound + 1):
        value = step(value)
        if below and (value < target or not strict and value == target):
            return exponent
        if not below and (value > target or not strict and value == target):
            return exponent
    raise SearchBoundExceeded("%s needs an exponent above the search bound %d" % (label, search_bound))


def free_semigroup_witness(alpha, beta, a, b, check_depth=12, search_bound=64):
    """
    alpha fixes a, beta fixes b, and neither has another fixed point in the
    relevant half-open part of [a, b]. After replacing them by inverses where
    needed, alpha pulls b down and beta pushes a up; alpha^m and beta^n with
    minimal m, n separate at x = beta(a).
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise PreconditionViolation("Need a < b, got a=%s b=%s" % (format_rational(a), format_rational(b)))
    if alpha(a) != a:
        raise PreconditionViolation("alpha does not fix a=%s" % format_rational(a))
    if beta(b) != b:
        raise PreconditionViolation("beta does not fix b=%s" % format_rational(b))
    if alpha.fixed_set_within(a, b).meets(a, b, False, True):
        raise PreconditionViolation("alpha has a fixed point in (a, b]")
    if beta.fixed_set_within(a, b).meets(a, b, True, False):
        raise PreconditionViolation("beta has a fixed point in [a, b)")

    inverted = []
    if alpha(b) > b:
        alpha = alpha.inverse()
        inverted.append('alpha')
    if beta(a) < a:
        beta = beta.inverse()
        inverted.append('beta')
    if inverted:
        log.info("replaced %s by the inverse", ' and '.join(inverted))

    x = beta(a)
    m = _escape(alpha, b, x, True, search_bound, 'alpha^m(b) < x')
    n = _escape(beta, a, x, False, search_bound, 'beta^n(a) > x')
    log.debug("semigroup exponents m=%d n=%d at x=%s", m, n, format_rational(x))

    gen_a, gen_b = power(alpha, m), power(beta, n)
    inclusions = [
        {'map': 'alpha^%d' % m, 'point': b, 'image': gen_a(b), 'bound': x, 'holds': gen_a(b) < x},
        {'map': 'alpha^%d' % m, 'point': a, 'image': gen_a(a), 'bound': a, 'holds': gen_a(a) == a},
        {'map': 'beta^%d' % n, 'point': a, 'image': gen_b(a), 'bound': x, 'holds': gen_b(a) > x},
        {'map': 'beta^%d' % n, 'point': b, 'image': gen_b(b), 'bound': b, 'holds': gen_b(b) == b},
    ]
    if not all(item['holds'] for item in inclusions):
        raise CertificateViolation("Endpoint inclusions fail for m=%d n=%d" % (m, n))

    check = verify_distinct_words([gen_a, gen_b], SEMIGROUP, check_depth, x, names=['A', 'B'])
    if not check:
        raise CertificateViolation("Words %s and %s agree at %s"
                                   % (check.counterexample[0], check.counterexample[1], format_rational(x)))
    return SemigroupWitness(m=m, n=n, x=x, a=a, b=b, check_depth=check_depth, inverted=inverted,
                            inclusions=inclusions, word_count=check.count)


def _containing(intervals, point):
    for lo, hi, owner in intervals:
        if lo < point < hi:
            return lo, hi, owner
    return None


def ns_classify(gens, check_depth=12, search_bound=64):
    """
    Either the maps share a fixed point, or two of them play ping-pong on
    the overlap of a maximal complementary interval of one with an interval
    of another, and generate a free semigroup there.
    """
    for position, gen in enumerate(gens):
        if not gen.has_fixed_point():
            raise FixedPointFree("Generator %d has no fixed point" % position)

    common_set = group_fixed_set(gens)
    if not common_set.is_empty():
        return CommonFixedPoint(fixed_set=common_set)

    intervals = []
    for position, gen in enumerate(gens):
        intervals.extend((lo, hi, position) for lo, hi in complement_open(gen.fixed_set()))
    start, end, owner = _maximal(intervals)

    if is_finite(end):
        other = _containing(intervals, end)
        if other is None:
            raise CertificateViolation("%s is fixed by every generator" % format_endpoint(end))
        a, b = other[0], end
        alpha_index, beta_index = other[2], owner
    else:
        other = _containing(intervals, start)
        if other is None:
            raise CertificateViolation("%s is fixed by every generator" % format_endpoint(start))
        a, b = start, other[1]
        alpha_index, beta_index = owner, other[2]
    log.info("interval (%s, %s) of generator %d meets (%s, %s) of generator %d",
             format_endpoint(start), format_endpoint(end), owner,
             format_endpoint(other[0]), format_endpoint(other[1]), other[2])

    witness = free_semigroup_witness(gens[alpha_index], gens[beta_index], a, b, check_depth, search_bound)
    return FreeSemigroup(witness=witness, pair=[alpha_index, beta_index])


def _maximal(intervals):
    """The leftmost interval not strictly contained in another."""
    best = None
    for item in intervals:
        if best is None or item[0] < best[0] or (item[0] == best[0] and item[1] > best[1]):
            best = item
    return best


class PeriodicIntervalSet(object):
    """
    A z-invariant open set: the disjoint open `pieces` inside one period
    [start, z(start)) together with all their z-translates.
    """

    def __init__(self, pieces, z):
        self.pieces = tuple(sorted(pieces))
        self.z = z
        self.start = self.pieces[0][0]
        self._back = z.inverse()

    def covers(self, lo, hi):
        """Whether the open interval (lo, hi) lies inside the set."""
        shift = 0
        start = self.start
        while start > lo:
            start, shift = self._back(start), shift - 1
        while self.z(start) <= lo:
            start, shift = self.z(start), shift + 1
        step = power(self.z, shift)
        return any(step(a) <= lo and hi <= step(b) for a, b in self.pieces)

    def as_literal(self):
        return [[format_rational(a), format_rational(b)] for a, b in self.pieces]

    def __str__(self):
        return ' u '.join('(%s, %s)' % (format_rational(a), format_rational(b)) for a, b in self.pieces) + \
            ' + z-translates'


def _piece_exponent(f, lo, hi, moves_up, search_bound, label):
    """Least r such that f^r and f^-r both carry (lo, hi) off itself."""
    back = f.inverse()
    if moves_up:
        return max(_escape(f, lo, hi, False, search_bound, label, strict=False),
                   _escape(back, hi, lo, True, search_bound, label, strict=False))
    return max(_escape(f, hi, lo, True, search_bound, label, strict=False),
               _escape(back, lo, hi, False, search_bound, label, strict=False))


def _check_inclusions(f, name, exponent, sources, target):
    checks = []
    for r in range(-REPEATS, REPEATS + 1):
        if r == 0:
            continue
        step = power(f, exponent * r)
        for lo, hi in sources:
            image = (step(lo), step(hi))
            holds = target.covers(*image)
            checks.append({'map': '%s^%d' % (name, exponent * r), 'piece': [lo, hi], 'image': list(image),
                           'holds': holds})
            if not holds:
                raise CertificateViolation("%s^%d does not carry (%s, %s) into the other set"
                                           % (name, exponent * r, format_rational(lo), format_rational(hi)))
    return checks


def free_group_witness(alpha, beta, z, check_depth=6, search_bound=64):
    """
    alpha and beta commute with the fixed point free map z and have disjoint
    nonempty fixed sets. An alternating chain of their complementary
    intervals across one z-period cuts the line into pieces P (inside
    alpha-intervals) and Q (inside beta-intervals); alpha^p moves P into Q
    and beta^q moves Q into P.
    """
    if z.has_fixed_point():
        raise PreconditionViolation("z must be fixed point free")
    for name, f in (('alpha', alpha), ('beta', beta)):
        if z * f != f * z:
            raise PreconditionViolation("%s does not commute with z" % name)
    if z(0) < 0:
        z = z.inverse()

    lo, hi = Fraction(0), z(0)
    fix_a, fix_b = alpha.fixed_set_within(lo, hi), beta.fixed_set_within(lo, hi)
    for name, fixed in (('alpha', fix_a), ('beta', fix_b)):
        if fixed.is_empty():
            raise FixedPointFree("%s has no fixed point" % name)
    if not fix_a.intersect(fix_b).is_empty():
        raise PreconditionViolation("The fixed sets of alpha and beta meet at %s" % fix_a.intersect(fix_b))

    b0 = fix_b.intervals[0][0]
    w0, w1 = b0, z(b0)
    normalizer = PLMap.affine(1 / (w1 - w0), -w0 / (w1 - w0))

    outer_lo, outer_hi = z.inverse()(w0), z(w1)
    spans = {
        'alpha': [(a, b, 'alpha') for a, b in complement_open(alpha.fixed_set_within(outer_lo, outer_hi))],
        'beta': [(a, b, 'beta') for a, b in complement_open(beta.fixed_set_within(outer_lo, outer_hi))],
    }

    chain = [_containing(spans['alpha'], w0)]
    while chain[-1] is not None and chain[-1][1] <= w1:
        owner = 'beta' if chain[-1][2] == 'alpha' else 'alpha'
        following = _containing(spans[owner], chain[-1][1])
        if following is not None and following[1] <= chain[-1][1]:
            following = None
        chain.append(following)
    if chain[-1] is None or chain[-1][2] != 'alpha' or any(not (is_finite(a) and is_finite(b)) for a, b, _ in chain):
        raise CoverConstructionError("No alternating chain of intervals covers [%s, %s]"
                                     % (format_rational(w0), format_rational(w1)))
    log.info("alternating chain of %d intervals over [%s, %s]", len(chain), format_rational(w0),
             format_rational(w1))

    # markers: midpoints of overlaps of consecutive chain intervals, closed up by z
    markers = [(chain[position + 1][0] + chain[position][1]) / 2 for position in range(len(chain) - 1)]
    markers.insert(0, z.inverse()(markers[-1]))
    pieces = list(zip(markers, markers[1:]))
    p_pieces, q_pieces = pieces[0::2], pieces[1::2]
    p_set, q_set = PeriodicIntervalSet(p_pieces, z), PeriodicIntervalSet(q_pieces, z)

    exponents = {}
    for name, f, owned in (('alpha', alpha, p_pieces), ('beta', beta, q_pieces)):
        exponents[name] = max(
            _piece_exponent(f, a, b, f.moves_up_at((a + b) / 2), search_bound, '%s exponent' % name)
            for a, b in owned)
    p, q = exponents['alpha'], exponents['beta']
    log.debug("free group exponents p=%d q=%d", p, q)

    inclusions = _check_inclusions(alpha, 'alpha', p, p_pieces, q_set)
    inclusions.extend(_check_inclusions(beta, 'beta', q, q_pieces, p_set))

    check = verify_distinct_words([power(alpha, p), power(beta, q)], GROUP, check_depth, names=['A', 'B'])
    if not check:
        raise CertificateViolation("The word %s is the identity" % check.counterexample[0])
    return GroupWitness(p=p, q=q, markers=markers, chain=[[a, b, owner] for a, b, owner in chain],
                        pieces=p_set, cover=q_set, normalizer=normalizer, window=[w0, w1],
                        inclusions=inclusions, check_depth=check_depth, word_count=check.count)


def commuting_family_fixcheck(fs, z, check_depth=6, search_bound=64):
    """
    For maps commuting with a fixed point free z: report their common fixed
    points over one z-period, or find a pair generating a free group.
    """
    if z.has_fixed_point():
        raise PreconditionViolation("z must be fixed point free")
    for position, f in enumerate(fs):
        if z * f != f * z:
            raise PreconditionViolation("Map %d does not commute with z" % position)

    window = sorted([Fraction(0), z(0)])
    fixed_sets = [f.fixed_set_within(*window) for f in fs]
    common_set = ClosedSet.line()
    for position, fixed in enumerate(fixed_sets):
        if fixed.is_empty():
            raise FixedPointFree("Map %d has no fixed point" % position)
        common_set = common_set.intersect(fixed)
    if not common_set.is_empty():
        return CommonFixedPoint(fixed_set=common_set, window=window)

    reasons = []
    for i in range(len(fs)):
        for j in range(i + 1, len(fs)):
            if not fixed_sets[i].intersect(fixed_sets[j]).is_empty():
                continue
            try:
                witness = free_group_witness(fs[i], fs[j], z, check_depth, search_bound)
            except (PreconditionViolation, LimitReached) as exc:
                log.debug("pair (%d, %d) rejected: %s", i, j, exc)
                reasons.append('(%d, %d): %s' % (i, j, exc))
                continue
            return FreeGroup(witness=witness, pair=[i, j])
    return Inconclusive(reason='; '.join(reasons) or 'no pair of maps has disjoint fixed sets')


class PingPongModule(common.Module):
    """Free semigroup and free group certificates (`pingpong ...`)."""

    def _depth(self, depth, default):
        if depth is None:
            return default
        if depth < 1:
            raise BadInput("Word checks need depth >= 1, got %d" % depth)
        return depth

    def semigroup(self, alpha, beta, a, b, depth=None):
        depth = self._depth(depth, self.config.semigroup_depth)
        witness = free_semigroup_witness(alpha, beta, a, b, depth, self.config.search_bound)
        return self.request('pingpong semigroup', [str(alpha), str(beta), a, b, depth],
                            {'m': witness.m, 'n': witness.n, 'x': witness.x}, certificate=witness)

    def classify(self, gens, depth=None):
        depth = self._depth(depth, self.config.semigroup_depth)
        result = ns_classify(gens, depth, self.config.search_bound)
        return self.request('pingpong classify', [str(g) for g in gens] + [depth], result.tag,
                            certificate=result)

    def freegroup(self, alpha, beta, z, depth=None):
        depth = self._depth(depth, self.config.group_depth)
        witness = free_group_witness(alpha, beta, z, depth, self.config.search_bound)
        return self.request('pingpong freegroup', [str(alpha), str(beta), str(z), depth],
                            {'p': witness.p, 'q': witness.q}, certificate=witness)

    def fixcheck(self, fs, z, depth=None):
        depth = self._depth(depth, self.config.group_depth)
        result = commuting_family_fixcheck(fs, z, depth, self.config.search_bound)
        return self.request('pingpong fixcheck', [str(f) for f in fs] + [str(z), depth], result.tag,
                            certificate=result)

    def words(self, gens, mode, depth=None, probe=None):
        depth = self._depth(depth, self.config.semigroup_depth if mode == SEMIGROUP else self.config.group_depth)
        check = verify_distinct_words(gens, mode, depth, probe)
        return self.request('pingpong words', [str(g) for g in gens] + [mode, depth, probe], bool(check),
                            certificate=check, status='ok' if check else 'violation')
