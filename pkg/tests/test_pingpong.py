# coding=utf-8

from fractions import Fraction

import pytest

from ordalab.data import fixtures
from ordalab.exceptions import BadInput, FixedPointFree, PreconditionViolation, SearchBoundExceeded
from ordalab.models import CommonFixedPoint, FreeGroup, FreeSemigroup, Inconclusive
from ordalab.modules.pingpong import (GROUP, SEMIGROUP, PeriodicIntervalSet, commuting_family_fixcheck,
                                      free_group_witness, free_semigroup_witness, ns_classify,
                                      verify_distinct_words)
from ordalab.modules.plmap import PLMap, conjugate, power
from ordalab.modules.thompson import PeriodicMap

half, quarter = Fraction(1, 2), Fraction(1, 4)


def test_semigroup_witness_halving_and_affine(halving, affine):
    witness = free_semigroup_witness(halving, affine, 0, 1)
    assert (witness.m, witness.n, witness.x) == (2, 2, half)
    assert witness.inverted == []
    assert all(item['holds'] for item in witness.inclusions)
    # 2 + 4 + ... + 2^12
    assert witness.word_count == 2 ** 13 - 2


def test_semigroup_witness_exponents_are_minimal(halving, affine):
    witness = free_semigroup_witness(halving, affine, 0, 1)
    assert not power(halving, witness.m - 1)(1) < witness.x
    assert not power(affine, witness.n - 1)(0) > witness.x


def test_semigroup_witness_quarter_maps():
    alpha = PLMap.affine(quarter)
    beta = PLMap.affine(quarter, Fraction(3, 4))
    witness = free_semigroup_witness(alpha, beta, 0, 1, check_depth=8)
    assert (witness.m, witness.n, witness.x) == (1, 2, Fraction(3, 4))


def test_semigroup_witness_inverts_maps():
    witness = free_semigroup_witness(PLMap.affine(2), PLMap.affine(2, -1), 0, 1, check_depth=6)
    assert witness.inverted == ['alpha', 'beta']
    assert (witness.m, witness.n) == (2, 2)


@pytest.mark.parametrize("a,b", [(1, 0), (half, 1)])
def test_semigroup_witness_bad_interval(halving, affine, a, b):
    with pytest.raises(PreconditionViolation):
        free_semigroup_witness(halving, affine, a, b)


def test_semigroup_witness_interior_fixed_point(halving):
    beta = PLMap([(half, half), (1, 1)], (Fraction(1, 2), Fraction(1, 4)), (1, 0))
    with pytest.raises(PreconditionViolation):
        free_semigroup_witness(halving, beta, 0, 1)


def test_semigroup_witness_search_bound():
    slow = PLMap.affine(Fraction(1023, 1024))
    with pytest.raises(SearchBoundExceeded):
        free_semigroup_witness(slow, PLMap.affine(Fraction(1023, 1024), Fraction(1, 1024)), 0, 1,
                               search_bound=8)


def test_verify_distinct_words_semigroup(halving, affine):
    check = verify_distinct_words([PLMap.affine(1, 1), PLMap.affine(1, 2)], SEMIGROUP, 2, probe=half)
    assert not check
    assert check.counterexample == ["g2", "g1^2"]
    check = verify_distinct_words([power(halving, 2), power(affine, 2)], SEMIGROUP, 5, probe=half)
    assert check
    assert check.count == 62


def test_verify_distinct_words_group_finds_relation():
    shift, double = PLMap.affine(1, 1), PLMap.affine(1, 2)
    check = verify_distinct_words([shift, double], GROUP, 3, names=['s', 'd'])
    assert not check
    assert check.counterexample[1] == 'id'


@pytest.mark.parametrize("mode,depth", [(SEMIGROUP, 0), (GROUP, -1), ('monoid', 3)])
def test_verify_distinct_words_bad_arguments(halving, mode, depth):
    with pytest.raises(BadInput):
        verify_distinct_words([halving], mode, depth, probe=half)


def test_verify_distinct_words_needs_maps():
    with pytest.raises(BadInput):
        verify_distinct_words([], GROUP, 2)


def test_verify_distinct_words_needs_a_point(halving):
    with pytest.raises(PreconditionViolation):
        verify_distinct_words([halving], SEMIGROUP, 2)


def test_module_rejects_explicit_zero_depth(lab, halving, affine):
    with pytest.raises(BadInput):
        lab.pingpong.words([halving], GROUP, depth=0)
    with pytest.raises(BadInput):
        lab.pingpong.classify([halving, affine], depth=0)


def test_classify_common_fixed_point(f_gens):
    result = ns_classify(f_gens)
    assert isinstance(result, CommonFixedPoint)
    assert result.tag == 'CommonFixedPoint'
    assert Fraction(0) in result.fixed_set


def test_classify_free_semigroup(halving, affine):
    result = ns_classify([halving, affine], check_depth=8)
    assert isinstance(result, FreeSemigroup)
    assert result.pair == [0, 1]
    assert (result.witness.m, result.witness.n) == (2, 2)


def test_classify_single_generator(halving):
    result = ns_classify([halving])
    assert isinstance(result, CommonFixedPoint)
    assert result.fixed_set == halving.fixed_set()


def test_classify_rays():
    gens = [fixtures.load("ray.left"), fixtures.load("ray.right")]
    result = ns_classify(gens, check_depth=10)
    assert result.witness.word_count == 2 ** 11 - 2
    assert isinstance(result, FreeSemigroup)
    assert (result.witness.a, result.witness.b) == (0, 1)
    assert result.witness.inverted == ['alpha', 'beta']
    assert (result.witness.m, result.witness.n, result.witness.x) == (2, 2, half)


def test_classify_needs_fixed_points(halving):
    with pytest.raises(FixedPointFree):
        ns_classify([halving, PLMap.affine(1, 1)])


def test_free_group_witness(periodic_pair):
    alpha, beta, z = periodic_pair
    witness = free_group_witness(alpha, beta, z)
    assert (witness.p, witness.q) == (3, 3)
    assert witness.markers == [quarter, Fraction(3, 4), Fraction(5, 4)]
    assert [owner for _, _, owner in witness.chain] == ['alpha', 'beta', 'alpha']
    assert witness.pieces.as_literal() == [['1/4', '3/4']]
    assert witness.cover.as_literal() == [['3/4', '5/4']]
    for lo, hi in witness.pieces.pieces:
        for a, b in witness.cover.pieces:
            assert hi <= a or b <= lo
    assert witness.window == [half, Fraction(3, 2)]
    assert witness.normalizer(half) == 0 and witness.normalizer(Fraction(3, 2)) == 1
    assert all(item['holds'] for item in witness.inclusions)
    # 4 * (1 + 3 + ... + 3^5)
    assert witness.word_count == 1456


def test_free_group_witness_with_inverted_z(periodic_pair):
    alpha, beta, z = periodic_pair
    witness = free_group_witness(alpha, beta, z.inverse(), check_depth=3)
    assert (witness.p, witness.q) == (3, 3)


def test_free_group_witness_z_with_fixed_point(periodic_pair):
    alpha, beta, _ = periodic_pair
    with pytest.raises(PreconditionViolation):
        free_group_witness(alpha, beta, alpha)


def test_free_group_witness_fixed_sets_meet(periodic_pair):
    alpha, _, z = periodic_pair
    with pytest.raises(PreconditionViolation):
        free_group_witness(alpha, power(alpha, 2), z)


def test_free_group_witness_fixed_point_free(periodic_pair):
    alpha, _, z = periodic_pair
    with pytest.raises(FixedPointFree):
        free_group_witness(alpha, PeriodicMap.translation(half), z)



def test_periodic_interval_set_covers(periodic_pair):
    _, _, z = periodic_pair
    pieces = PeriodicIntervalSet([(Fraction(3, 4), Fraction(5, 4))], z)
    assert pieces.covers(Fraction(7, 9), Fraction(25, 27))
    assert pieces.covers(Fraction(-1, 5), Fraction(1, 5))
    assert not pieces.covers(Fraction(1, 2), Fraction(7, 8))


def test_fixcheck_free_group(periodic_pair):
    alpha, beta, z = periodic_pair
    result = commuting_family_fixcheck([alpha, beta], z, check_depth=3)
    assert isinstance(result, FreeGroup)
    assert result.pair == [0, 1]


def test_fixcheck_common_fixed_point(periodic_pair):
    alpha, _, z = periodic_pair
    result = commuting_family_fixcheck([alpha, power(alpha, 2), conjugate(alpha, PLMap.affine(1, 1))], z)
    assert isinstance(result, CommonFixedPoint)
    assert result.fixed_set.intervals == ((0, 0), (1, 1))
    assert result.window == [0, 1]


def test_fixcheck_inconclusive(periodic_pair):
    alpha, beta, z = periodic_pair
    result = commuting_family_fixcheck([alpha, beta, conjugate(alpha, PLMap.affine(1, quarter))], z,
                                       check_depth=2, search_bound=1)
    assert isinstance(result, Inconclusive)
    assert 'search bound' in result.reason


def test_fixcheck_rejects_non_commuting(halving):
    with pytest.raises(PreconditionViolation):
        commuting_family_fixcheck([halving], PLMap.affine(1, 1))
