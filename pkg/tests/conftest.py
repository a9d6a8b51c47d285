from __future__ import absolute_import

from fractions import Fraction

import pytest
from faker import Faker

from ordalab.api import OrdaLab
from ordalab.modules.plmap import PLMap, conjugate
from ordalab.modules.thompson import PeriodicMap, f_generators


@pytest.fixture
def lab():
    return OrdaLab()


@pytest.fixture
def fake():
    """A Faker instance with a fixed seed, so random inputs repeat between runs."""
    fake = Faker()
    fake.seed_instance(1234)
    return fake


@pytest.fixture
def f_gens():
    return list(f_generators())


@pytest.fixture
def halving():
    return PLMap.affine(Fraction(1, 2))


@pytest.fixture
def affine():
    return PLMap.affine(Fraction(1, 2), Fraction(1, 2))


@pytest.fixture
def periodic_pair():
    """A periodic map fixing the integers, the same map moved by 1/2, and z = x + 1."""
    alpha = PeriodicMap([(0, 0), (Fraction(1, 4), Fraction(1, 2))])
    beta = conjugate(alpha, PLMap.affine(1, Fraction(1, 2)))
    return alpha, beta, PeriodicMap.translation(1)
