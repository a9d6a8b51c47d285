# coding=utf-8

"""Seeded random maps, points and words built with Faker."""

from fractions import Fraction

from ordalab.modules.plmap import PLMap


def rational(fake, lo=-6, hi=6, denominator=8):
    """A random rational in [lo, hi] with the given denominator."""
    return Fraction(fake.random_int(min=lo * denominator, max=hi * denominator), denominator)


def _increasing(fake, count, lo, hi, denominator):
    values = set()
    while len(values) < count:
        values.add(rational(fake, lo, hi, denominator))
    return sorted(values)


def plmap(fake, breakpoints=3, lo=-4, hi=4):
    """A random map of the line with `breakpoints` breakpoints and random tails."""
    xs = _increasing(fake, breakpoints, lo, hi, 4)
    ys = _increasing(fake, breakpoints, lo, hi, 4)
    left_slope = Fraction(fake.random_int(min=1, max=4), fake.random_int(min=1, max=4))
    right_slope = Fraction(fake.random_int(min=1, max=4), fake.random_int(min=1, max=4))
    return PLMap(list(zip(xs, ys)), (left_slope, ys[0] - left_slope * xs[0]),
                 (right_slope, ys[-1] - right_slope * xs[-1]))


def unit_map(fake, breakpoints=2):
    """A random map of [0, 1] with interior breakpoints of denominator 16."""
    xs = _increasing(fake, breakpoints, 0, 1, 16)
    ys = _increasing(fake, breakpoints, 0, 1, 16)
    points = [(x, y) for x, y in zip(xs, ys) if 0 < x < 1 and 0 < y < 1]
    return PLMap.unit([(0, 0)] + points + [(1, 1)])
