import pytest
from helpers import poly

from bridgecluster.arith import ContinuedFraction, Ratio, cf_expand, reduced_fractions
from bridgecluster.knot import (
    FanSide,
    alexander_skein_oracle,
    alexander_specialized,
    classify_fans,
    crossing_signs,
    exponent_and_sign,
    is_seifert,
    seifert_data,
    seifert_path,
    triangle_signs,
    verify_fraction,
    verify_range,
)
from bridgecluster.paths import enumerate_paths, f_polynomial
from bridgecluster.poly import HalfLaurent
from bridgecluster.triangle import build


def at_of(p, q):
    return build(cf_expand(Ratio(p, q)))


def t_poly(terms):
    return HalfLaurent.from_t(terms)


def test_seifert_path_of_7_19():
    at = at_of(7, 19)
    assert seifert_path(at).describe(at) == "7/19->3/8->1/3->1/2->1/1"


def test_seifert_path_of_3_5():
    at = at_of(3, 5)
    assert seifert_path(at).describe(at) == "3/5->1/2->1/1"


def test_fan_sides_of_7_19():
    at = at_of(7, 19)
    sides = classify_fans(at, seifert_path(at))
    B, L = FanSide.BOTTOM_EDGE_IN_PATH, FanSide.LEFT_OF_PATH
    assert sides == (L, L, B, B)


def test_signs_of_worked_examples():
    assert crossing_signs(at_of(7, 19)) == (-1, -1, 1, -1)
    assert triangle_signs(at_of(7, 19)) == (1, 1, -1, 1, -1, 1)
    assert crossing_signs(at_of(2, 7)) == (1, 1)
    assert triangle_signs(at_of(2, 7)) == (1, -1, 1, 1)
    assert crossing_signs(at_of(3, 5)) == (-1, -1, 1)
    assert triangle_signs(at_of(3, 5)) == (1, -1, 1)


@pytest.mark.parametrize("p,q,d2,s", [(7, 19, -2, 1), (2, 7, -2, 1), (3, 5, -2, -1), (1, 2, -1, -1)])
def test_exponent_and_sign(p, q, d2, s):
    cf = cf_expand(Ratio(p, q))
    data = seifert_data(build(cf))
    assert exponent_and_sign(cf, data.t, data.fan_sides) == (d2, s)


def test_specialized_f_of_7_19():
    r = alexander_specialized(cf_expand(Ratio(7, 19)))
    assert r.f_specialized == t_poly({-1: -1, 0: 5, 1: -7, 2: 5, 3: -1})


@pytest.mark.parametrize("p,q,delta", [
    (3, 5, {-1: -1, 0: 3, 1: -1}),
    (2, 7, {-1: 2, 0: -3, 1: 2}),
    (7, 19, {-2: -1, -1: 5, 0: -7, 1: 5, 2: -1}),
])
def test_alexander_worked_examples(p, q, delta):
    cf = cf_expand(Ratio(p, q))
    assert alexander_specialized(cf).delta == t_poly(delta)
    assert alexander_skein_oracle(cf) == t_poly(delta)


def test_hopf_link():
    expected = HalfLaurent({1: 1, -1: -1})
    assert alexander_specialized(ContinuedFraction((2,))).delta == expected
    assert alexander_skein_oracle((2,)) == expected


def test_skein_conventions():
    assert alexander_skein_oracle(()) == 1
    assert alexander_skein_oracle((0,)) == 0
    assert alexander_skein_oracle((1,)) == 1
    assert alexander_skein_oracle((2, 1, 2, 0)) == alexander_skein_oracle((2, 1))
    with pytest.raises(ValueError):
        alexander_skein_oracle((2, -1))


def test_single_term_family():
    for a in range(1, 10):
        got = alexander_skein_oracle((a,))
        if a > 1:
            assert alexander_specialized(ContinuedFraction((a,))).delta == got
        if a % 2 == 0:
            # two-component links: (a/2)(t^(1/2) - t^(-1/2))
            assert got == HalfLaurent({1: a // 2, -1: -(a // 2)})
        else:
            # (2, a) torus knots: alternating t^k for |k| <= (a-1)/2
            m = (a - 1) // 2
            assert got == HalfLaurent({2 * k: (-1) ** (m - k) for k in range(-m, m + 1)})


def test_alternate_expansion_gives_the_same_polynomial():
    for f in reduced_fractions(20):
        a = alexander_specialized(cf_expand(f)).delta
        b = alexander_specialized(cf_expand(f, "alternate")).delta
        assert a == b


@pytest.mark.parametrize("f", list(reduced_fractions(24)), ids=str)
def test_half_powers_iff_even_denominator(f):
    delta = alexander_specialized(cf_expand(f)).delta
    assert delta.has_integral_t_powers() == (f.q % 2 == 1)
    # Delta(1) = +-1 for knots and 0 for links
    assert abs(delta.evaluate_t(1)) == (1 if f.q % 2 else 0)


def test_seifert_filter_rejects_other_paths():
    at = at_of(7, 19)
    sp = seifert_path(at)
    others = [p for p in enumerate_paths(at) if p != sp]
    assert len(others) == 18
    assert not any(is_seifert(at, p) for p in others)


def test_f_hat_uses_the_f_polynomial():
    at = at_of(2, 7)
    assert f_polynomial(at) == poly("1 + y3 + y2y3 + y1y2y3 + y3y4 + y2y3y4 + y1y2y3y4", 4)
    assert alexander_specialized(at.cf).f_specialized == t_poly({0: 2, 1: -3, 2: 2})


def test_verify_rows():
    row = verify_fraction(Ratio(7, 19))
    assert row.ok and row.symmetric and row.mirror_invariant
    row = verify_fraction(Ratio(1, 2))
    assert row.ok and row.symmetric is None
    assert len(verify_range(2)) == 1
    with pytest.raises(ValueError):
        verify_range(1)
