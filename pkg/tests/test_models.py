# coding=utf-8

"""Contains tests both for the models system and for the models themselves."""

from fractions import Fraction

import pytest

from ordalab.models import (CommonFixedPoint, FreeGroup, HarnessReport, Inconclusive, Model, SemigroupWitness,
                            Violation, WordCheck, to_plain)
from ordalab.modules.intervals import ClosedSet, NEG_INF
from ordalab.modules.plmap import PLMap


def test_model_construct_kwargs():
    """Tests construction of a Model by keyword arguments."""
    mod = Model(foo="foo", bar=Model(baz="baz"))
    assert mod.foo == "foo"
    assert mod.bar.baz == "baz"


def test_model_snake_case():
    """Tests Model's case-aliasing magic."""
    mod = Model(check_depth=12)
    assert mod.check_depth == 12
    assert mod.checkDepth == 12


def test_model_missing_attribute():
    with pytest.raises(AttributeError):
        Model(m=1).n


def test_model_get_default():
    assert SemigroupWitness(m=2).get('word_count', 0) == 0


@pytest.mark.parametrize("first,second", [
    (Model(), Model()),
    (SemigroupWitness(m=2, n=2, x=Fraction(1, 2)), SemigroupWitness(m=2, n=2, x=Fraction(1, 2))),
    (Violation(kind='totality', words=['a', 'b']), Violation(kind='totality', words=['a', 'b'])),
])
def test_equal_with_equal(first, second):
    assert first == second


@pytest.mark.parametrize("first,second", [
    (SemigroupWitness(m=2), SemigroupWitness(m=3)),
    (SemigroupWitness(m=2), Model(m=2)),
    (CommonFixedPoint(fixed_set=ClosedSet()), Inconclusive(fixed_set=ClosedSet())),
])
def test_equal_with_unequal(first, second):
    assert first != second


def test_word_check_truthiness():
    assert WordCheck(mode='group', depth=2, count=4, counterexample=None)
    assert not WordCheck(mode='group', depth=2, count=4, counterexample=['a b', 'id'])


def test_harness_report_truthiness():
    assert HarnessReport(elements=3, violations=[])
    assert not HarnessReport(elements=3, violations=[Violation(kind='totality', words=['a', 'b'])])


def test_classification_tags():
    assert CommonFixedPoint().as_dict() == {'tag': 'CommonFixedPoint'}
    assert FreeGroup(pair=[0, 1]).as_dict() == {'tag': 'FreeGroup', 'pair': [0, 1]}


def test_to_plain():
    value = {
        'x': Fraction(-3, 4),
        'set': ClosedSet([(NEG_INF, Fraction(0))]),
        'map': PLMap.affine(2),
        'nested': (1, True, None),
    }
    assert to_plain(value) == {
        'x': '-3/4',
        'set': [['-inf', '0']],
        'map': {'breakpoints': [], 'left_tail': {'slope': '2', 'offset': '0'},
                'right_tail': {'slope': '2', 'offset': '0'}},
        'nested': [1, True, None],
    }


def test_witness_as_dict_snake_case():
    witness = SemigroupWitness(m=2, n=2, x=Fraction(1, 2), check_depth=12)
    assert witness.as_dict() == {'m': 2, 'n': 2, 'x': '1/2', 'check_depth': 12}
