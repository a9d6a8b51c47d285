# coding=utf-8

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ordalab.exceptions import BadInput, InvalidMap, NotUnitInterval
from ordalab.modules.intervals import NEG_INF, POS_INF
from ordalab.modules.plmap import PLMap, commutator, conjugate, power
from tests.factories.plmaps import plmap, rational, unit_map

half, quarter = Fraction(1, 2), Fraction(1, 4)

fractions = st.fractions(min_value=-8, max_value=8, max_denominator=16)
slopes = st.fractions(min_value=Fraction(1, 8), max_value=8, max_denominator=8)


@st.composite
def maps(draw, max_breakpoints=4):
    count = draw(st.integers(min_value=0, max_value=max_breakpoints))
    xs = sorted(draw(st.sets(fractions, min_size=count, max_size=count)))
    ys = sorted(draw(st.sets(fractions, min_size=count, max_size=count)))
    left, right = draw(slopes), draw(slopes)
    if not xs:
        offset = draw(fractions)
        return PLMap.affine(left, offset)
    return PLMap(list(zip(xs, ys)), (left, ys[0] - left * xs[0]), (right, ys[-1] - right * xs[-1]))


def test_canonical_form_drops_collinear_breakpoints():
    f = PLMap([(0, 0), (1, 1), (2, 2)])
    assert f.breakpoints == ()
    assert f.is_identity
    assert f == PLMap.identity()


def test_canonical_form_keeps_real_breakpoints():
    f = PLMap([(0, 0), (1, 2)], (1, 0), (1, 1))
    assert f.breakpoints == ((0, 0), (1, 2))
    assert f.left_tail == (1, 0)
    assert f.right_tail == (1, 1)


@pytest.mark.parametrize("breakpoints,left,right", [
    ([(0, 0), (0, 1)], None, None),
    ([(0, 1), (1, 0)], None, None),
    ([(0, 0)], (0, 0), None),
    ([(0, 0)], (1, 1), None),
    ([(1, 1)], None, (2, 0)),
    ([], (1, 0), (2, 0)),
])
def test_invalid_maps(breakpoints, left, right):
    with pytest.raises(InvalidMap):
        PLMap(breakpoints, left, right)


def test_unit_interval_maps(f_gens):
    x0, x1 = f_gens
    assert x0.is_unit_interval and x1.is_unit_interval
    with pytest.raises(NotUnitInterval):
        PLMap.unit([(0, 0), (half, quarter)])
    assert not PLMap.affine(1, 1).is_unit_interval


def test_evaluate(f_gens):
    x0, x1 = f_gens
    assert x0(half) == quarter
    assert x0(Fraction(3, 8)) == Fraction(3, 16)
    assert x0(Fraction(7, 8)) == Fraction(3, 4)
    assert x0(-5) == -5
    assert x1(Fraction(13, 16)) == Fraction(11, 16)


def test_parse_and_literal():
    literal = {'breakpoints': [['0', '0'], ['1', '2']],
               'left_tail': {'slope': '1', 'offset': '0'},
               'right_tail': {'slope': '1', 'offset': '1'}}
    f = PLMap.parse(literal)
    assert f.as_literal() == literal
    assert PLMap.parse({}) == PLMap.identity()


@pytest.mark.parametrize("literal", [
    {'breakpoints': [['0']]},
    {'breakpoints': [['a', '0']]},
    {'left_tail': {'slope': '1'}},
    [],
])
def test_parse_invalid(literal):
    with pytest.raises(BadInput):
        PLMap.parse(literal)


def test_parse_unit_interval_flag():
    with pytest.raises(NotUnitInterval):
        PLMap.parse({'breakpoints': [['0', '0'], ['2', '2']], 'unit_interval': True})


def test_f_generator_inverse_and_power(f_gens):
    x0, _ = f_gens
    inverse = x0.inverse()
    assert inverse(quarter) == half
    assert (x0 * inverse).is_identity
    assert power(x0, 2)(1 - quarter) == quarter
    assert x0 ** -2 == inverse * inverse
    assert power(x0, 0).is_identity


def test_conjugate_and_commutator():
    shift = PLMap.affine(1, 1)
    double = PLMap.affine(2)
    # g x g^-1 with x = shift, g = double: 2((r / 2) + 1) = r + 2
    assert conjugate(shift, double) == PLMap.affine(1, 2)
    assert commutator(shift, shift).is_identity
    assert not commutator(shift, double).is_identity


def test_reverse():
    f = PLMap([(0, 0)], (1, 0), (2, 0))
    g = f.reverse()
    for x in (Fraction(-3), Fraction(0), Fraction(5, 2)):
        assert g(x) == -f(-x)
    assert g.reverse() == f


def test_fixed_set_and_support(f_gens):
    _, x1 = f_gens
    assert x1.fixed_set().intervals == ((NEG_INF, half), (1, POS_INF))
    assert x1.support().intervals == ((half, 1),)
    assert PLMap.affine(1, 1).fixed_set().is_empty()
    assert PLMap.affine(2, -1).fixed_set().intervals == ((1, 1),)


def test_fixed_set_within():
    f = PLMap.affine(Fraction(1, 2))
    assert f.fixed_set_within(Fraction(1), Fraction(2)).is_empty()
    assert f.fixed_set_within(Fraction(-1), Fraction(1)).intervals == ((0, 0),)


def test_str():
    assert str(PLMap.affine(half, 1)) == 'x -> 1/2*x + 1'
    assert str(PLMap([(0, 0)], (1, 0), (2, 0))) == '(0,0)'


def test_random_maps_group_laws(fake):
    for _ in range(50):
        f, g, h = plmap(fake), plmap(fake), plmap(fake)
        assert (f * g) * h == f * (g * h)
        assert (f * f.inverse()).is_identity
        assert (f * g).inverse() == g.inverse() * f.inverse()


def test_random_maps_agree_pointwise(fake):
    """Composition agrees with evaluating one map after the other."""
    for _ in range(50):
        f, g = plmap(fake), plmap(fake)
        composite = f * g
        for _ in range(20):
            x = rational(fake, -10, 10, 32)
            assert composite(x) == f(g(x))
            assert f.inverse()(f(x)) == x


def test_random_unit_maps_stay_in_f(fake):
    for _ in range(20):
        f, g = unit_map(fake), unit_map(fake)
        assert (f * g).is_unit_interval
        assert f.inverse().is_unit_interval


@given(maps(), maps(), fractions)
@settings(max_examples=200)
def test_composition_pointwise(f, g, x):
    assert (f * g)(x) == f(g(x))


@given(maps(), fractions)
@settings(max_examples=200)
def test_fixed_set_is_exact(f, x):
    assert (f(x) == x) == (x in f.fixed_set())


@given(maps(), maps())
@settings(max_examples=100)
def test_equality_is_extensional(f, g):
    """Canonical forms are equal exactly when the maps agree at all breakpoints and far out."""
    xs = set(x for x, _ in f.breakpoints) | set(x for x, _ in g.breakpoints) | set([Fraction(0)])
    probes = xs | set([min(xs) - 1, max(xs) + 1, min(xs) - 2, max(xs) + 2])
    assert (f == g) == all(f(x) == g(x) for x in probes)


def test_fixed_set_agrees_with_evaluation(fake):
    for _ in range(100):
        f = plmap(fake, breakpoints=fake.random_int(min=1, max=5))
        fixed = f.fixed_set()
        for _ in range(1000):
            x = rational(fake, -6, 6, 8)
            assert (x in fixed) == (f(x) == x)


@given(maps(), fractions, fractions)
def test_maps_are_increasing(f, x, y):
    if x < y:
        assert f(x) < f(y)


@given(maps(), st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3))
@settings(max_examples=50)
def test_power_is_additive(f, a, b):
    assert power(f, a + b) == power(f, a) * power(f, b)


@given(maps(), maps())
@settings(max_examples=100)
def test_conjugation_moves_fixed_sets(f, g):
    assert conjugate(f, g).fixed_set() == f.fixed_set().image(g)


@given(maps(), maps())
@settings(max_examples=100)
def test_reverse_is_a_homomorphism(f, g):
    assert (f * g).reverse() == f.reverse() * g.reverse()
    assert f.reverse().reverse() == f


@given(maps())
def test_reverse_turns_the_direction(f):
    if f.fixed_set().is_empty():
        up = f(0) > 0
        for x in (Fraction(-100), Fraction(0), Fraction(7, 3)):
            assert (f.reverse()(x) < x) == up


@given(maps())
def test_canonical_form_is_idempotent(f):
    again = PLMap(f.breakpoints, f.left_tail, f.right_tail)
    assert again.breakpoints == f.breakpoints
    assert again == f
