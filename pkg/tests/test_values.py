from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quniform.errors import ParseError, ValidationError
from quniform.values import (
    EREAL,
    INF,
    VALUE_AXIOMS,
    ExtRational,
    ProductSemigroup,
    ZeroInfFn,
    check_value_axioms,
    scale,
    semigroup_from_header,
)

F = Fraction


def all_pass(rep):
    return {c.name: c.passed for c in rep.clauses} == {name: True for name in VALUE_AXIOMS}


def test_ereal_sample_passes():
    rep = check_value_axioms(EREAL, [0, F(1, 2), 1, INF], [F(1, 2), 1, 3])
    assert all_pass(rep), rep.to_text()


def test_zeroinf_all_elements_pass():
    sg = ZeroInfFn(2)
    elems = sg.elements()
    assert len(elems) == 4
    rep = check_value_axioms(sg, elems, elems)
    assert all_pass(rep), rep.to_text()


class BrokenHalf(ExtRational):
    def half(self, r):
        return Fraction(r)


def test_broken_halving_is_caught():
    rep = check_value_axioms(BrokenHalf(), [0, F(1, 2), 1, INF], [1])
    c = rep.clause("exact_halving")
    assert not c.passed
    assert c.witness == {"r": "1", "half": "1", "sum": "2"}


def test_sample_outside_carrier_rejected():
    with pytest.raises(ValidationError):
        check_value_axioms(EREAL, [-1], [1])
    with pytest.raises(ValidationError):
        check_value_axioms(EREAL, [0.5], [1])
    with pytest.raises(ValidationError):
        check_value_axioms(ZeroInfFn(2), [frozenset({5})], [frozenset()])


def test_non_positive_sample_rejected():
    with pytest.raises(ValidationError):
        check_value_axioms(EREAL, [0], [0])
    with pytest.raises(ValidationError):
        check_value_axioms(EREAL, [0], [INF])


def test_empty_samples_rejected():
    with pytest.raises(ValidationError):
        check_value_axioms(EREAL, [], [1])


@pytest.mark.parametrize(
    "a, c, expected",
    [(F(3, 2), 2, F(3)), (0, 7, F(0)), (INF, 2, INF), (F(5), F(1, 2), F(5, 2))],
)
def test_scale(a, c, expected):
    assert scale(a, c) == expected


@pytest.mark.parametrize("c", [0, -1, INF])
def test_scale_rejects_bad_factor(c):
    with pytest.raises(ValidationError):
        scale(1, c)


def test_infinity_ordering_and_absorption():
    assert EREAL.add(INF, F(3)) is INF
    assert EREAL.leq(F(10**9), INF)
    assert not EREAL.leq(INF, F(10**9))
    assert not EREAL.ball_lt(INF, F(10**9))
    assert F(1) < INF and INF > F(1) and not INF < INF


@pytest.mark.parametrize("text, value", [("3/6", F(1, 2)), ("4", F(4)), ("inf", INF), (" 0 ", F(0))])
def test_ereal_syntax(text, value):
    assert EREAL.parse(text) == value
    assert EREAL.parse(EREAL.format(value)) == value


@pytest.mark.parametrize("text", ["-1", "1/0", "x", "1.5"])
def test_ereal_syntax_errors(text):
    with pytest.raises(ParseError):
        EREAL.parse(text)


def test_zeroinf_syntax():
    sg = ZeroInfFn(3)
    assert sg.parse("{}") == frozenset()
    assert sg.parse("{2, 0}") == frozenset({0, 2})
    assert sg.format(frozenset({2, 0})) == "{0,2}"
    with pytest.raises(ParseError):
        sg.parse("{3}")
    with pytest.raises(ParseError):
        sg.parse("1,2")


def test_headers_roundtrip():
    for sg in (EREAL, ZeroInfFn(4)):
        assert semigroup_from_header(sg.header()) == sg
    with pytest.raises(ParseError):
        semigroup_from_header("tropical")


fractions_ = st.fractions(min_value=0, max_value=20, max_denominator=12)
positives = st.fractions(min_value=F(1, 12), max_value=20, max_denominator=12)


@given(fractions_, positives, positives)
def test_ereal_ball_is_strict_order_on_finite(a, r, s):
    assert EREAL.ball_lt(a, r) == (a < r)
    assert not EREAL.ball_lt(r, r)
    if EREAL.ball_lt(a, r) and r < s:
        assert EREAL.ball_lt(a, s)


@given(positives, positives)
def test_ereal_half_injective(r, s):
    assert (EREAL.half(r) == EREAL.half(s)) == (r == s)
    assert EREAL.add(EREAL.half(r), EREAL.half(r)) == r


@given(st.sets(st.integers(0, 4)))
def test_zeroinf_idempotent(s):
    sg = ZeroInfFn(5)
    a = frozenset(s)
    assert sg.add(a, a) == a
    assert sg.add(sg.half(a), sg.half(a)) == a


def _product_samples():
    ereal_elems = [F(0), F(1, 2), F(1), INF]
    ereal_pos = [F(1, 2), F(1), F(3)]
    zi = ZeroInfFn(2)
    return ereal_elems, ereal_pos, zi, zi.elements()


def test_product_report_is_conjunction_of_factors():
    ee, ep, zi, ze = _product_samples()
    prod = ProductSemigroup(EREAL, zi)
    rep = check_value_axioms(prod, [(a, b) for a in ee for b in ze], [(r, s) for r in ep for s in ze])
    left = check_value_axioms(EREAL, ee, ep)
    right = check_value_axioms(zi, ze, ze)
    for name in VALUE_AXIOMS:
        assert rep.clause(name).passed == (left.clause(name).passed and right.clause(name).passed)


def test_product_report_inherits_factor_failure():
    ee, ep, zi, ze = _product_samples()
    prod = ProductSemigroup(BrokenHalf(), zi)
    rep = check_value_axioms(prod, [(a, b) for a in ee for b in ze], [(r, s) for r in ep for s in ze])
    left = check_value_axioms(BrokenHalf(), ee, ep)
    for name in VALUE_AXIOMS:
        assert rep.clause(name).passed == left.clause(name).passed
    assert not rep.clause("exact_halving").passed


def test_product_syntax():
    prod = ProductSemigroup(EREAL, ZeroInfFn(2))
    a = (F(1, 2), frozenset({1}))
    assert prod.format(a) == "(1/2;{1})"
    assert prod.parse(prod.format(a)) == a
