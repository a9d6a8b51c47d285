# coding=utf-8

from fractions import Fraction

import pytest

from ordalab.data import fixtures
from ordalab.exceptions import BadInput
from ordalab.modules.ordering import (EQUAL, GREATER, LESS, OrderOracle, convex_stabilizer_check,
                                      germ_compare, order_axiom_harness, priority_compare)
from ordalab.modules.plmap import PLMap
from tests.factories.plmaps import plmap

half = Fraction(1, 2)


@pytest.mark.parametrize("f,g,expected", [
    (PLMap.affine(1, 1), PLMap.affine(1, 2), LESS),
    (PLMap.affine(1, 2), PLMap.affine(1, 1), GREATER),
    (PLMap.affine(Fraction(1, 2)), PLMap.identity(), GREATER),
    (PLMap.affine(2), PLMap.identity(), LESS),
    (fixtures.load('ray.left'), PLMap.identity(), GREATER),
    (PLMap.identity(), PLMap.identity(), EQUAL),
])
def test_germ_compare(f, g, expected):
    assert germ_compare(f, g) == expected


def test_germ_compare_f_generators(f_gens):
    x0, x1 = f_gens
    assert germ_compare(x0, PLMap.identity()) == LESS
    assert germ_compare(x1, PLMap.identity()) == LESS
    assert germ_compare(x0, x1) == LESS


def test_germ_compare_is_antisymmetric(fake):
    for _ in range(100):
        f, g = plmap(fake), plmap(fake)
        assert germ_compare(f, g) == -germ_compare(g, f)
        assert (germ_compare(f, g) == EQUAL) == (f == g)


def test_germ_compare_needs_affine_tails(periodic_pair):
    alpha, beta, _ = periodic_pair
    with pytest.raises(BadInput):
        germ_compare(alpha, beta)
    with pytest.raises(BadInput):
        OrderOracle().compare(PLMap.identity(), alpha)
    assert OrderOracle([Fraction(1, 4)]).compare(alpha, beta) == GREATER


def test_priority_points_come_first():
    oracle = OrderOracle([Fraction(0)])
    assert oracle(PLMap.affine(1, 1), PLMap.affine(1, -1)) == GREATER
    assert priority_compare(oracle, PLMap.affine(2), PLMap.affine(3)) == \
        germ_compare(PLMap.affine(2), PLMap.affine(3))


def test_oracle_without_tie_break():
    oracle = OrderOracle([half], tie_break=None)
    x1 = fixtures.load('F.x1')
    assert oracle(x1, PLMap.identity()) == EQUAL


def test_sort_key_orders_translations():
    maps = [PLMap.affine(1, k) for k in (3, -1, 0, 2)]
    ordered = sorted(maps, key=OrderOracle().sort_key())
    assert [f(0) for f in ordered] == [-1, 0, 2, 3]


def test_harness_on_f(f_gens):
    report = order_axiom_harness(f_gens, OrderOracle(), 4, 10000, seed=7, names=["x0", "x1"])
    assert report
    assert report.violations == []
    assert report.elements > 100


def test_harness_with_priority_points(f_gens):
    report = order_axiom_harness(f_gens, OrderOracle([half, Fraction(1, 4)]), 3, 500, seed=7)
    assert report


def test_harness_negative_control(f_gens):
    report = order_axiom_harness(f_gens, OrderOracle([half], tie_break=None), 2, 50, names=['x0', 'x1'])
    assert not report
    kinds = set(violation.kind for violation in report.violations)
    assert 'totality' in kinds
    assert ['id', 'x1'] in [violation.words for violation in report.violations]


def test_harness_samples_are_seeded(f_gens):
    first = order_axiom_harness(f_gens, OrderOracle(), 2, 100, seed=3)
    second = order_axiom_harness(f_gens, OrderOracle(), 2, 100, seed=3)
    assert first == second


def test_convex_stabilizer(f_gens):
    report = convex_stabilizer_check(f_gens, [half], 4)
    assert report
    assert 1 < report.stabilizer < report.elements


def test_convex_stabilizer_of_translations():
    report = convex_stabilizer_check([PLMap.affine(1, 1)], [Fraction(0)], 3)
    assert report
    assert report.stabilizer == 1
    assert report.elements == 7


def test_module_reports(lab, f_gens):
    x0, x1 = f_gens
    assert lab.order.compare(x0, x1).result == 'less'
    report = lab.order.harness(f_gens, 2, 20, negative=True, priority_points=[half])
    assert report.status == 'violation'
    assert report.exit_status == 1
    assert lab.order.convex(f_gens, [half], 3).result is True
