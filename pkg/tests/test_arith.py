import pytest
from hypothesis import given
from hypothesis import strategies as st

from bridgecluster.arith import (
    ContinuedFraction,
    Parity,
    Ratio,
    canonical,
    cf_expand,
    cf_value,
    mirror,
    parity,
    parse_cf,
    parse_fraction,
    reduced_fractions,
)


@st.composite
def fractions_in_unit_interval(draw, q_max=400):
    q = draw(st.integers(2, q_max))
    p = draw(st.integers(1, q - 1))
    from math import gcd

    g = gcd(p, q)
    return Ratio(p // g, q // g)


def test_expansion_of_7_19():
    assert cf_expand(Ratio(7, 19)).terms == (2, 1, 2, 2)
    assert cf_expand(Ratio(7, 19), "alternate").terms == (2, 1, 2, 1, 1)


def test_one_half_has_two_expansions():
    assert cf_expand(Ratio(1, 2)).terms == (2,)
    assert cf_expand(Ratio(1, 2), "alternate").terms == (1, 1)


def test_three_fifths():
    cf = cf_expand(Ratio(3, 5))
    assert cf.terms == (1, 1, 2)
    assert cf.num_triangles == 3
    assert cf.partial_sums == (0, 1, 2, 4)


def test_mirror_of_7_19_is_12_19():
    m = mirror(cf_expand(Ratio(7, 19)))
    assert m.terms == (1, 1, 1, 2, 2)
    assert cf_value(m) == Ratio(12, 19)
    assert cf_expand(Ratio(12, 19)) == m


def test_degenerate_values():
    assert cf_value(()) == Ratio(0, 1)
    assert cf_value((0,)) == Ratio(1, 0)
    assert cf_value((1,)) == Ratio(1, 1)


def test_parity_classes():
    assert parity(Ratio(7, 19)) is Parity.ONE_ONE
    assert parity(Ratio(2, 7)) is Parity.ZERO_ONE
    assert parity(Ratio(1, 2)) is Parity.ONE_ZERO
    assert parity(Ratio(1, 0)) is Parity.ONE_ZERO


@pytest.mark.parametrize("text", ["2/4", "0/3", "3/3", "5/3", "1/0", "a/b", "1/2/3", ""])
def test_parse_fraction_rejects(text):
    with pytest.raises(ValueError):
        parse_fraction(text)


def test_parse_cf_forms():
    assert parse_cf("[2,1,2,2]").terms == (2, 1, 2, 2)
    assert parse_cf("2, 1, 2, 2").terms == (2, 1, 2, 2)
    for bad in ("[1]", "[0,2]", "[]", "x"):
        with pytest.raises(ValueError):
            parse_cf(bad)


def test_ratio_must_be_reduced():
    with pytest.raises(ValueError):
        Ratio(2, 4)


def test_reduced_fractions_count():
    # sum of Euler phi(q) for q = 2..10
    assert len(list(reduced_fractions(10))) == 31
    assert list(reduced_fractions(2)) == [Ratio(1, 2)]


@given(fractions_in_unit_interval())
def test_expansions_evaluate_back(f):
    for variant in ("canonical", "alternate"):
        cf = cf_expand(f, variant)
        assert cf_value(cf) == f
    assert cf_expand(f).is_canonical()
    assert canonical(cf_expand(f, "alternate")) == cf_expand(f)


@given(fractions_in_unit_interval())
def test_mirror_evaluates_to_complement_and_is_involutive(f):
    cf = cf_expand(f)
    m = mirror(cf)
    assert cf_value(m) == f.complement()
    assert mirror(m) == cf
    assert m.num_triangles == cf.num_triangles


@given(fractions_in_unit_interval())
def test_parity_of_complement(f):
    # 1/1 and 0/1 swap for odd q, 1/0 is fixed
    swap = {Parity.ONE_ONE: Parity.ZERO_ONE, Parity.ZERO_ONE: Parity.ONE_ONE, Parity.ONE_ZERO: Parity.ONE_ZERO}
    assert parity(f.complement()) is swap[parity(f)]


def test_terms_must_be_positive():
    with pytest.raises(ValueError):
        ContinuedFraction((2, 0))
