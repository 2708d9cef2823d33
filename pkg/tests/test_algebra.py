from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fstirling.algebra import NEG_INF, ShiftPoly, UniPoly, exact, power
from fstirling.errors import UsageError

small = st.integers(min_value=-20, max_value=20)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def unipolys(coeff=small, var="q"):
    return st.lists(coeff, max_size=6).map(lambda cs: UniPoly(cs, var))


def shiftpolys(arity=2):
    exps = st.tuples(*[st.integers(0, 3)] * arity)
    return st.dictionaries(exps, small, max_size=5).map(lambda d: ShiftPoly(arity, d))


def bracket(m):
    return UniPoly((1,) * m, "q")


def test_add_examples():
    assert UniPoly([1, 1]) + UniPoly([0, 1, 1]) == UniPoly([1, 2, 1])
    p = UniPoly([3, 0, 2])
    assert p + UniPoly() == p
    assert bracket(2) + bracket(3) == UniPoly([2, 2, 1])


def test_mul_examples():
    assert bracket(2) * bracket(2) == UniPoly([1, 2, 1])
    p = UniPoly([3, 0, 2])
    assert p * 1 == p
    t = UniPoly.variable("t")
    assert t * (t + 2) * (t + 6) == UniPoly([0, 12, 8, 1], "t")


def test_eval_examples():
    p = UniPoly([2, 4, 5, 4, 2, 1])
    assert p.eval(1) == 18
    assert p(0) == p.constant_term() == 2
    for n in range(6):
        assert bracket(n).eval(1) == n


def test_normalization_and_degree():
    assert UniPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert UniPoly().degree == NEG_INF
    assert UniPoly([0, 0]).is_zero()
    assert UniPoly([5]).degree == 0
    assert ShiftPoly(2).degree == NEG_INF
    assert UniPoly([Fraction(4, 2)]).coeffs == (2,)
    assert isinstance(exact(Fraction(6, 3)), int)
    assert exact(Fraction(2, 4)) == Fraction(1, 2)


def test_variable_mismatch_is_usage_error():
    with pytest.raises(UsageError):
        UniPoly([1, 1], "q") + UniPoly([1, 1], "z")
    with pytest.raises(UsageError):
        UniPoly([1, 1], "q") * UniPoly([1, 1], "t")
    with pytest.raises(UsageError):
        UniPoly([1], "w")


def test_arity_mismatch_is_usage_error():
    with pytest.raises(UsageError):
        ShiftPoly.variable(2, 0) + ShiftPoly.variable(3, 0)
    with pytest.raises(UsageError):
        ShiftPoly(2, {(1, 0, 0): 1})
    with pytest.raises(UsageError):
        ShiftPoly.variable(2, 0).substitute([1])


def test_substitution_examples():
    a1, a2 = ShiftPoly.variable(2, 0), ShiftPoly.variable(2, 1)
    p = 5 + 3 * (a1 + a2) + 2 * a1 * a2
    z = UniPoly.variable("z")
    assert p.substitute([0, z]) == UniPoly([5, 3], "z")
    assert p.substitute([0, 1]) == 8
    assert p * 1 == p
    assert p.substitute([Fraction(1, 2), 2]) == 5 + Fraction(15, 2) + 2


def test_shiftpoly_rendering_is_graded_lex():
    a1, a2 = ShiftPoly.variable(2, 0), ShiftPoly.variable(2, 1)
    p = 2 * a1 * a2 + 3 * a2 + 3 * a1 + 5
    assert str(p) == "5 + 3*a1 + 3*a2 + 2*a1*a2"
    assert str(a2**2 + a1 * a2 + a1**2) == "a1^2 + a1*a2 + a2^2"
    assert str(ShiftPoly(3)) == "0"


def test_unipoly_rendering():
    assert str(UniPoly([2, 4, 5, 4, 2, 1])) == "2 + 4*q + 5*q^2 + 4*q^3 + 2*q^4 + q^5"
    assert str(UniPoly([0, -1, 1], "x")) == "-x + x^2"
    assert str(UniPoly([Fraction(1, 2)], "t")) == "1/2"
    nested = UniPoly([0, UniPoly([-1, -1], "z"), 1], "x")
    assert str(nested) == "(-1 - z)*x + x^2"


def test_power():
    assert power(3, 0) == 1
    assert power(UniPoly([1, 1]), 3) == UniPoly([1, 3, 3, 1])
    with pytest.raises(UsageError):
        power(2, -1)


@settings(max_examples=60, deadline=None)
@given(unipolys(), unipolys(), unipolys())
def test_unipoly_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == UniPoly()


@settings(max_examples=40, deadline=None)
@given(unipolys(rationals), unipolys(rationals), unipolys(rationals))
def test_rational_unipoly_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(shiftpolys(), shiftpolys(), shiftpolys())
def test_shiftpoly_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(unipolys(), unipolys(), rationals)
def test_eval_is_multiplicative(p, q, v):
    assert (p * q).eval(v) == p.eval(v) * q.eval(v)
    assert (p + q).eval(v) == p.eval(v) + q.eval(v)


@settings(max_examples=60, deadline=None)
@given(shiftpolys(arity=3))
def test_shiftpoly_parse_render_round_trip(p):
    assert ShiftPoly.parse(str(p), 3) == p


@settings(max_examples=60, deadline=None)
@given(unipolys(var="z"))
def test_unipoly_parse_render_round_trip(p):
    assert UniPoly.parse(str(p), "z") == p


def test_parse_errors():
    with pytest.raises(UsageError):
        UniPoly.parse("1 + y", "q")
    with pytest.raises(UsageError):
        ShiftPoly.parse("a3", 2)
    with pytest.raises(UsageError):
        UniPoly.parse("", "q")
