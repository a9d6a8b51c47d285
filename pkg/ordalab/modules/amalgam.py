# coding=utf-8

"""
Actions of amalgamated products G *_C H on the line, for H = <k> infinite
cyclic and C = <c> identified with <h>, h = k^e.

When c and h are both fixed point free and move points the same way, an
intertwiner phi with phi h = c phi exists; conjugating G by phi turns c
into h, so G and H act compatibly and their actions glue. The maps built
this way have infinitely many breakpoints and are evaluated lazily.
"""

import logging
from fractions import Fraction

from ordalab.exceptions import BadInput, DirectionMismatch, InvalidWord, PreconditionViolation, ResourceLimit
from ordalab.modules import common
from ordalab.modules.plmap import LineMap, PLMap, power
from ordalab.util import evaluate_word, format_rational, format_word, free_reduce, invert_word, parse_word

log = logging.getLogger(__name__)

G_FACTOR = 'g'
H_FACTOR = 'h'
DEFAULT_BUDGET = 10 ** 6


class LazyMap(LineMap):
    """A map known only through its evaluation procedure and a descriptor."""

    descriptor = 'lazy'

    def identity_like(self):
        return PLMap.identity()

    def __mul__(self, other):
        if isinstance(other, LineMap):
            return CompositeMap(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, LineMap):
            return CompositeMap(other, self)
        return NotImplemented

    def __str__(self):
        return self.descriptor


class Intertwiner(LazyMap):
    """
    phi with phi(h(x)) = c(phi(x)): affine from the fundamental domain
    [t0, h(t0)) onto [u0, c(u0)) and extended by phi(h^k y) = c^k phi(y).
    """

    def __init__(self, h, c, t0=0, u0=0, budget=DEFAULT_BUDGET):
        if h.has_fixed_point():
            raise PreconditionViolation("h has a fixed point")
        if c.has_fixed_point():
            raise PreconditionViolation("c has a fixed point")
        t0, u0 = Fraction(t0), Fraction(u0)
        if h.moves_up_at(t0) != c.moves_up_at(u0):
            raise DirectionMismatch("h and c move points in opposite directions; apply reverse to one side first")

        self.h, self.c, self.t0, self.u0, self.budget = h, c, t0, u0, budget
        # the fundamental domain is read off the upward mover
        if h.moves_up_at(t0):
            self._step_h, self._step_c = h, c
        else:
            self._step_h, self._step_c = h.inverse(), c.inverse()
        self._back_h, self._back_c = self._step_h.inverse(), self._step_c.inverse()
        self._t1, self._u1 = self._step_h(t0), self._step_c(u0)
        self.descriptor = 'intertwiner(h=%s, c=%s, t0=%s, u0=%s)' % (h, c, format_rational(t0), format_rational(u0))

    def _steps(self, count):
        if count > self.budget:
            raise ResourceLimit("Intertwiner evaluation exceeded %d steps" % self.budget)

    def evaluate(self, x):
        y, k = x, 0
        while y < self.t0:
            y, k = self._step_h(y), k - 1
            self._steps(-k)
        while y >= self._t1:
            y, k = self._back_h(y), k + 1
            self._steps(k)
        value = self.u0 + (y - self.t0) * (self._u1 - self.u0) / (self._t1 - self.t0)
        step = self._step_c if k > 0 else self._back_c
        for _ in range(abs(k)):
            value = step(value)
        return value

    def inverse(self):
        return Intertwiner(self.c, self.h, self.u0, self.t0, self.budget)


def intertwiner(h, c, t0=0, u0=0, budget=DEFAULT_BUDGET):
    return Intertwiner(h, c, t0, u0, budget)


class ConjugateMap(LazyMap):
    """phi^-1 g phi."""

    def __init__(self, g, phi):
        self.g, self.phi = g, phi
        self._phi_inverse = phi.inverse()
        self.descriptor = 'conjugate(%s)' % (g,)

    def evaluate(self, x):
        return self._phi_inverse(self.g(self.phi(x)))

    def inverse(self):
        return ConjugateMap(self.g.inverse(), self.phi)


class CompositeMap(LazyMap):
    """outer after inner."""

    def __init__(self, outer, inner):
        self.outer, self.inner = outer, inner
        self.descriptor = '(%s) o (%s)' % (outer, inner)

    def evaluate(self, x):
        return self.outer(self.inner(x))

    def inverse(self):
        return CompositeMap(self.inner.inverse(), self.outer.inverse())


class GluedAction(object):
    """
    The action theta of G *_C H: theta(g) = phi^-1 g phi on G, theta(k) = k
    on H, where phi intertwines h = k^e with c.
    """

    def __init__(self, g_gens, c, k, e, t0=0, u0=0, align=False, budget=DEFAULT_BUDGET):
        if not e:
            raise PreconditionViolation("The exponent e must be nonzero")
        if k.has_fixed_point():
            raise PreconditionViolation("k has a fixed point")
        h = power(k, e)
        if c.has_fixed_point():
            raise PreconditionViolation("c has a fixed point")
        self.reversed = False
        if c.moves_up_at(Fraction(u0)) != h.moves_up_at(Fraction(t0)):
            if not align:
                raise DirectionMismatch("c and h = k^%d move points in opposite directions; "
                                        "glue with align to reverse the action of G" % e)
            g_gens = [g.reverse() for g in g_gens]
            c = c.reverse()
            self.reversed = True
            log.info("reversed the action of G to match the direction of h")

        self.g_gens, self.c, self.k, self.e, self.h = list(g_gens), c, k, e, h
        self.phi = Intertwiner(h, c, t0, u0, budget)
        self.theta_g = [ConjugateMap(g, self.phi) for g in self.g_gens]
        self.theta_c = ConjugateMap(c, self.phi)

    def check_relation(self, points):
        """theta(c)(x) == h(x) at every point, with both values."""
        return [(x, self.theta_c(x), self.h(x), self.theta_c(x) == self.h(x)) for x in points]


def glued_action(g_gens, c, k, e, t0=0, u0=0, align=False, budget=DEFAULT_BUDGET):
    return GluedAction(g_gens, c, k, e, t0, u0, align, budget)


class AmalgamWord(object):
    """An alternating product of G-syllables (letter tuples) and H-syllables (powers of k)."""

    def __init__(self, syllables=()):
        self.syllables = tuple((factor, tuple(value) if factor == G_FACTOR else int(value))
                               for factor, value in syllables)

    def __mul__(self, other):
        return AmalgamWord(self.syllables + other.syllables)

    def inverse(self):
        return AmalgamWord((factor, invert_word(value) if factor == G_FACTOR else -value)
                           for factor, value in reversed(self.syllables))

    def is_empty(self):
        return not self.syllables

    def __len__(self):
        return len(self.syllables)

    def __eq__(self, other):
        return isinstance(other, AmalgamWord) and self.syllables == other.syllables

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.syllables)

    def format(self, names):
        if not self.syllables:
            return 'id'
        return ' '.join('g:' + format_word(value, names).replace(' ', '.') if factor == G_FACTOR
                        else 'h:%d' % value for factor, value in self.syllables)


class Amalgam(object):
    """
    The data of G *_C H: named PL generators of G, c as a word in them, the
    generator k of H and the exponent e with c identified with k^e.
    """

    def __init__(self, g_gens, names, c_word, k, e, t0=0, u0=0, align=False, budget=DEFAULT_BUDGET):
        if len(g_gens) != len(names):
            raise BadInput("Every generator of G needs a name")
        self.g_gens, self.names, self.k, self.e = list(g_gens), list(names), k, int(e)
        self.c_word = parse_word(c_word, self.names) if isinstance(c_word, str) else tuple(c_word)
        self.t0, self.u0, self.align, self.budget = Fraction(t0), Fraction(u0), align, budget
        self.c = evaluate_word(self.c_word, self.g_gens, PLMap.identity())
        self._action = None

    @classmethod
    def parse(cls, literal, resolve=PLMap.parse):
        """
        Build an amalgam from {"G": {name: map, ...}, "c": "<G word>", "k": map,
        "e": int, "t0": ..., "u0": ..., "align": bool}; `resolve` turns each
        map value into a map.
        """
        try:
            names = sorted(literal['G'])
            gens = [resolve(literal['G'][name]) for name in names]
            return cls(gens, names, literal['c'], resolve(literal['k']), int(literal['e']),
                       literal.get('t0', 0), literal.get('u0', 0), bool(literal.get('align', False)))
        except (KeyError, TypeError, ValueError) as exc:
            raise BadInput("Invalid amalgam literal: %s" % exc)

    def as_literal(self):
        return {
            'G': dict((name, gen.as_literal()) for name, gen in zip(self.names, self.g_gens)),
            'c': format_word(self.c_word, self.names),
            'k': self.k.as_literal(),
            'e': self.e,
            't0': format_rational(self.t0),
            'u0': format_rational(self.u0),
            'align': self.align,
        }

    def with_budget(self, budget):
        """The same amalgam, evaluating its intertwiner within `budget` steps."""
        if budget == self.budget:
            return self
        return Amalgam(self.g_gens, self.names, self.c_word, self.k, self.e, self.t0, self.u0, self.align,
                       budget)

    @property
    def action(self):
        if self._action is None:
            self._action = GluedAction(self.g_gens, self.c, self.k, self.e, self.t0, self.u0,
                                       self.align, self.budget)
        return self._action

    def parse_word(self, text):
        """Parse "g:d^2 h:-3"; G-syllables may join letters with '.'."""
        syllables = []
        for token in text.split():
            if token == 'id':
                continue
            factor, _, body = token.partition(':')
            if factor == G_FACTOR:
                syllables.append((G_FACTOR, parse_word(body, self.names)))
            elif factor == H_FACTOR:
                try:
                    syllables.append((H_FACTOR, int(body)))
                except ValueError:
                    raise InvalidWord("H-syllables are integer powers of k, got %r" % token)
            else:
                raise InvalidWord("Unknown factor in %r; use g:<word> or h:<power>" % token)
        return AmalgamWord(syllables)

    def format_word(self, word):
        return word.format(self.names)

    def g_map(self, letters):
        return evaluate_word(letters, self.g_gens, PLMap.identity())

    def c_exponent(self, letters):
        """n with g = c^n, or None when the G-element is not in <c>."""
        g = self.g_map(letters)
        target = g(0)
        step = self.c if (self.c(0) > 0) == (target > 0) else self.c.inverse()
        value, n = Fraction(0), 0
        sign = 1 if step is self.c else -1
        while value != target:
            if n > self.budget:
                raise ResourceLimit("Membership search in <c> exceeded %d steps" % self.budget)
            following = step(value)
            # stepping past the target means g(0) is not an orbit point
            if (following - target) * (value - target) < 0:
                return None
            value, n = following, n + 1
        n *= sign
        return n if power(self.c, n) == g else None


def _merge(syllables, amalgam):
    merged = []
    for factor, value in syllables:
        if merged and merged[-1][0] == factor:
            previous = merged.pop()[1]
            value = free_reduce(previous + value) if factor == G_FACTOR else previous + value
        merged.append((factor, value))
    return [(factor, value) for factor, value in merged
            if not (factor == H_FACTOR and value == 0) and
            not (factor == G_FACTOR and amalgam.g_map(value).is_identity)]


def amalgam_reduce(amalgam, word):
    """
    Normal form of a word in G *_C H: merge neighbouring syllables of the
    same factor, drop trivial ones, and move a syllable lying in C into the
    other factor, until at most one syllable is left or none lies in C.
    """
    syllables = _merge(word.syllables, amalgam)
    while len(syllables) > 1:
        for position, (factor, value) in enumerate(syllables):
            if factor == G_FACTOR:
                n = amalgam.c_exponent(value)
                if n is not None:
                    syllables[position] = (H_FACTOR, amalgam.e * n)
                    break
            elif value % amalgam.e == 0:
                n = value // amalgam.e
                letters = amalgam.c_word * n if n > 0 else invert_word(amalgam.c_word) * -n
                syllables[position] = (G_FACTOR, letters)
                break
        else:
            break
        log.debug("moved syllable %d across the identification", position)
        syllables = _merge(syllables, amalgam)
    return AmalgamWord(syllables)


def amalgam_eval(action, word, x):
    """theta(word)(x); the rightmost syllable acts first."""
    value = Fraction(x)
    for factor, syllable in reversed(word.syllables):
        if factor == H_FACTOR:
            value = power(action.k, syllable)(value)
        else:
            value = action.phi(value)
            for index, sign in reversed(syllable):
                gen = action.g_gens[index]
                value = gen(value) if sign > 0 else gen.inverse()(value)
            value = action.phi.inverse()(value)
    return value


class AmalgamModule(common.Module):
    """Glued actions of amalgams (`amalgam ...`)."""

    def intertwine(self, h, c, points, t0=0, u0=0):
        phi = Intertwiner(h, c, t0, u0, self.config.budget)
        values = [[x, phi(x)] for x in points]
        checks = [[x, phi(h(x)), c(phi(x)), phi(h(x)) == c(phi(x))] for x in points]
        return self.request('amalgam intertwine', [str(h), str(c), t0, u0], values,
                            certificate={'intertwining': checks})

    def glue(self, amalgam, points):
        amalgam = amalgam.with_budget(self.config.budget)
        action = amalgam.action
        images = dict((name, [[x, theta(x)] for x in points])
                      for name, theta in zip(amalgam.names, action.theta_g))
        images['k'] = [[x, amalgam.k(x)] for x in points]
        relation = action.check_relation(points)
        holds = all(item[3] for item in relation)
        return self.request('amalgam glue', [amalgam.names, format_word(amalgam.c_word, amalgam.names),
                                             str(amalgam.k), amalgam.e], images,
                            certificate={'relation': [list(item) for item in relation],
                                         'reversed': action.reversed},
                            status='ok' if holds else 'violation')

    def reduce(self, amalgam, text):
        amalgam = amalgam.with_budget(self.config.budget)
        word = amalgam.parse_word(text)
        reduced = amalgam_reduce(amalgam, word)
        trivial = reduced.is_empty()
        return self.request('amalgam reduce', [text], amalgam.format_word(reduced),
                            certificate={'syllables': len(reduced), 'trivial': trivial})

    def eval(self, amalgam, text, x):
        amalgam = amalgam.with_budget(self.config.budget)
        word = amalgam.parse_word(text)
        return self.request('amalgam eval', [text, x], amalgam_eval(amalgam.action, word, x))
