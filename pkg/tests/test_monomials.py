import pytest

from woideals.errors import ExponentOverflowError, ParseError, UniverseMismatchError
from woideals.models.monomial import (MAX_EXPONENT, Monomial, VariableUniverse, divides, lcm_mono, mul_mono,
                                      phi_map, subst_one)


@pytest.fixture
def universe():
    return VariableUniverse(('x1', 'x2', 'x3', 'x4'))


def mono(universe, text):
    return Monomial.parse(universe, text)


def test_text_form(universe):
    m = universe.monomial({'x1': 2, 'x2': 1, 'x4': 3})
    assert m.to_text() == 'x1^2*x2*x4^3'
    assert mono(universe, 'x1^2*x2*x4^3') == m
    assert universe.one().to_text() == '1'
    assert mono(universe, '1').is_one()


def test_repeated_factors_accumulate(universe):
    assert mono(universe, 'x2*x2^2') == universe.variable('x2', 3)


def test_degree_and_support(universe):
    m = mono(universe, 'x1*x3^4')
    assert m.degree == 5
    assert m.support == frozenset({'x1', 'x3'})


def test_canonical_order(universe):
    texts = ['x2*x3', 'x1*x3', 'x4', 'x1*x2', 'x1^2']
    ordered = sorted((mono(universe, t) for t in texts), key=Monomial.sort_key)
    assert [m.to_text() for m in ordered] == ['x4', 'x1^2', 'x1*x2', 'x1*x3', 'x2*x3']


def test_divides(universe):
    assert divides(mono(universe, 'x2*x3'), mono(universe, 'x1*x2^2*x3'))
    assert not divides(mono(universe, 'x1*x2^2'), mono(universe, 'x1*x2*x3'))
    assert divides(universe.one(), mono(universe, 'x4'))


def test_lcm_and_product(universe):
    a = mono(universe, 'x1*x2^2')
    b = mono(universe, 'x2*x3')
    assert lcm_mono(a, b).to_text() == 'x1*x2^2*x3'
    assert mul_mono(a, b).to_text() == 'x1*x2^3*x3'


def test_subst_one(universe):
    assert subst_one(mono(universe, 'x1*x2^2*x3'), {'x2', 'x3'}).to_text() == 'x2^2*x3'
    assert subst_one(mono(universe, 'x1*x4'), {'x2'}).is_one()


def test_phi_map(universe):
    m = mono(universe, 'x1*x2^2*x4')
    assert phi_map(m, {'x2': 3, 'x4': 2}).to_text() == 'x1*x2^6*x4^2'
    with pytest.raises(ParseError):
        phi_map(m, {'x2': 0})


def test_exponent_overflow(universe):
    assert MAX_EXPONENT == 2 ** 16
    big = universe.variable('x1', MAX_EXPONENT)
    assert big.exps[0] == 65536
    with pytest.raises(ExponentOverflowError):
        big * universe.variable('x1')


def test_universe_mismatch(universe):
    other = VariableUniverse(('y1', 'y2'))
    with pytest.raises(UniverseMismatchError):
        universe.variable('x1').lcm(other.variable('y1'))
    with pytest.raises(UniverseMismatchError):
        universe.variable('y1')


@pytest.mark.parametrize('text', ['x1^^2', 'x1**x2', 'x9', '2*x1', ''])
def test_parse_rejects_malformed(universe, text):
    with pytest.raises(ParseError):
        mono(universe, text)


def test_universe_rejects_duplicates_and_bad_names():
    with pytest.raises(ParseError):
        VariableUniverse(('x1', 'x1'))
    with pytest.raises(ParseError):
        VariableUniverse(('1x',))
