# coding=utf-8

"""Named maps and amalgams that the command line accepts in place of files."""

from fractions import Fraction

from ordalab.modules.amalgam import Amalgam
from ordalab.modules.plmap import PLMap, conjugate
from ordalab.modules.thompson import PeriodicMap, f_generators, ttilde_generators


class Fixture(object):
    """A named object, built on first use."""

    def __init__(self, name, description, build):
        self.name = name
        self.description = description
        self._build = build
        self._value = None

    @property
    def value(self):
        if self._value is None:
            self._value = self._build()
        return self._value

    def as_literal(self):
        value = self.value
        return {
            'name': self.name,
            'description': self.description,
            'value': value.as_literal() if hasattr(value, 'as_literal') else str(value),
        }

    def __str__(self):
        return self.name

    def __repr__(self):
        return '<Fixture("%s")>' % self


def _periodic_alpha():
    return PeriodicMap([(0, 0), (Fraction(1, 4), Fraction(1, 2))])


def _trefoil():
    d = PLMap.affine(1, Fraction(1, 2))
    return Amalgam([d], ['d'], 'd^2', PLMap.affine(1, 1), 3)


def _unit_bump(lo, hi):
    """
    A map of [0, 1] moving exactly the points of (lo, hi) upwards: x0^-1
    rescaled into [lo, hi], with slopes 2, 1 and 1/2. Dyadic lo and hi give
    an element of F.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    width = hi - lo
    return PLMap.unit([(0, 0), (lo, lo), (lo + width / 4, lo + width / 2),
                       (lo + width / 2, lo + 3 * width / 4), (hi, hi), (1, 1)])


FIXTURES = dict((fixture.name, fixture) for fixture in [
    Fixture('F.x0', "Thompson's group F, generator x0", lambda: f_generators()[0]),
    Fixture('F.x1', "Thompson's group F, generator x1", lambda: f_generators()[1]),
    Fixture('F.bump', 'Element of F supported in (1/4, 1/2)', lambda: _unit_bump(Fraction(1, 4), Fraction(1, 2))),
    Fixture('F.bump.right', 'Element of F supported in (5/8, 3/4)',
            lambda: _unit_bump(Fraction(5, 8), Fraction(3, 4))),
    Fixture('Ttilde.A', 'Lift of the generator A of T', lambda: ttilde_generators()[0][0]),
    Fixture('Ttilde.B', 'Lift of the generator B of T', lambda: ttilde_generators()[0][1]),
    Fixture('Ttilde.C', 'Lift of the generator C of T', lambda: ttilde_generators()[0][2]),
    Fixture('Ttilde.z', 'The central translation x -> x + 1', lambda: ttilde_generators()[1]),
    Fixture('identity', 'The identity map', PLMap.identity),
    Fixture('translate', 'x -> x + 1', lambda: PLMap.affine(1, 1)),
    Fixture('halving', 'x -> x/2', lambda: PLMap.affine(Fraction(1, 2), 0)),
    Fixture('affine', 'x -> (x + 1)/2', lambda: PLMap.affine(Fraction(1, 2), Fraction(1, 2))),
    Fixture('ray.left', 'Fixes exactly (-inf, 0]', lambda: PLMap([(0, 0)], (1, 0), (2, 0))),
    Fixture('ray.right', 'Fixes exactly [1, inf)', lambda: PLMap([(1, 1)], (2, -1), (1, 0))),
    Fixture('pingpong.alpha', 'Periodic map fixing exactly the integers', _periodic_alpha),
    Fixture('pingpong.beta', 'pingpong.alpha moved by 1/2',
            lambda: conjugate(_periodic_alpha(), PLMap.affine(1, Fraction(1, 2)))),
    Fixture('trefoil', 'The trefoil group <d, k | d^2 = k^3> with d = x + 1/2, k = x + 1', _trefoil),
])


def names():
    return sorted(FIXTURES)


def load(name):
    try:
        return FIXTURES[name].value
    except KeyError:
        raise KeyError('Fixture %s not found' % name)
