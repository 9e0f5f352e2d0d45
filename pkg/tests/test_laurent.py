"""Exact coefficient arithmetic in Z[q, q^-1] and Z[q^-+1, p^-+1]."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qw22 import (
    ArithmeticBoundError,
    EvaluationDomainError,
    LaurentPoly,
    ProfileError,
    UnsupportedInverseError,
    q_identity_check,
    q_int,
)


def rand_poly(rng, nvars=1, span=6, terms=4):
    out = LaurentPoly.zero(nvars)
    for _ in range(rng.randint(0, terms)):
        eq = rng.randint(-span, span)
        ep = rng.randint(-span, span) if nvars == 2 else 0
        out = out + LaurentPoly.monomial(rng.randint(-9, 9), eq, ep, nvars=nvars)
    return out


def test_constants_and_predicates():
    assert LaurentPoly.zero().is_zero()
    assert LaurentPoly.one().is_one()
    assert not LaurentPoly.one().is_zero()
    assert LaurentPoly.constant(7).constant_value() == 7
    assert LaurentPoly.q_power(0) == LaurentPoly.one()
    assert LaurentPoly.q_power(2).is_monomial()
    assert not (LaurentPoly.q_power(2) + LaurentPoly.one()).is_monomial()


def test_zero_coefficients_are_dropped():
    a = LaurentPoly({(3, 0): 5}) - LaurentPoly({(3, 0): 5})
    assert a.is_zero()
    assert a.items() == ()
    assert not a


def test_immutability():
    a = q_int(2)
    with pytest.raises(AttributeError):
        a.nvars = 2


def test_rendering_descending_exponents():
    assert str(q_int(2)) == "q + q^-1"
    assert str(q_int(2) ** 2) == "q^2 + 2 + q^-2"
    assert str(LaurentPoly.zero()) == "0"
    assert str(-q_int(2)) == "-q - q^-1"
    assert str(q_int(3, 2)) == "q^2 + q*p + p^2"
    assert str(q_int(-1, 2)) == "-q^-1*p^-1"


def test_json_form():
    assert q_int(2).to_json_obj() == {
        "terms": [{"eq": 1, "c": "1"}, {"eq": -1, "c": "1"}]
    }
    # the p exponent only appears in the two-variable profile
    assert q_int(-1, 2).to_json_obj() == {
        "terms": [{"eq": -1, "ep": -1, "c": "-1"}]
    }


def test_integer_operands_coerce():
    assert q_int(2) * 1 == q_int(2)
    assert q_int(2) + 0 == q_int(2)
    assert 2 - LaurentPoly.one() == LaurentPoly.one()
    assert str(3 * LaurentPoly.q_power(-1)) == "3*q^-1"


def test_power_rules():
    q = LaurentPoly.q_power
    assert q(3) ** -1 == q(-3)
    assert (2 * q(1)) ** 2 == 4 * q(2)
    assert q_int(5) ** 0 == LaurentPoly.one()
    with pytest.raises(UnsupportedInverseError):
        q_int(2) ** -1
    with pytest.raises(UnsupportedInverseError):
        (2 * q(1)) ** -1


def test_exponent_window_is_enforced():
    with pytest.raises(ArithmeticBoundError):
        LaurentPoly.monomial(1, 2**63)
    big = LaurentPoly.q_power(2**62)
    with pytest.raises(ArithmeticBoundError):
        big * big


def test_profiles_never_mix():
    with pytest.raises(ProfileError):
        q_int(2) + q_int(2, 2)
    with pytest.raises(ProfileError):
        q_int(2) * LaurentPoly.p_power(1)


def test_q_int_anchor_values():
    assert q_int(0).is_zero()
    assert q_int(1).is_one()
    assert q_int(2) == LaurentPoly.q_power(1) + LaurentPoly.q_power(-1)
    for n in range(-12, 13):
        assert q_int(-n) == -q_int(n)


def test_q_int_two_variable_is_the_exact_quotient():
    q = LaurentPoly.q_power(1, nvars=2)
    p = LaurentPoly.p_power(1)
    for n in range(-10, 11):
        # (q - p) * [n] == q^n - p^n in both directions of n
        assert (q - p) * q_int(n, 2) == LaurentPoly.monomial(
            1, n, 0, nvars=2
        ) - LaurentPoly.monomial(1, 0, n, nvars=2)
    assert q_int(-1, 2) == -LaurentPoly.monomial(1, -1, -1, nvars=2)


def test_substitute_p_inverse_collapses_to_one_variable():
    for n in range(-10, 11):
        collapsed = q_int(n, 2).substitute_p_inverse()
        assert collapsed.nvars == 1
        assert collapsed == q_int(n)
    with pytest.raises(ProfileError):
        q_int(3).substitute_p_inverse()


def test_splitting_identities():
    for m in range(-8, 9):
        for n in range(-8, 9):
            assert q_identity_check(m, n)


def test_eval_is_exact_rational():
    assert q_int(2).eval(Fraction(3, 2)) == Fraction(13, 6)
    v = q_int(3, 2).eval(Fraction(2), Fraction(1, 3))
    assert v == Fraction(4) + Fraction(2, 3) + Fraction(1, 9)
    with pytest.raises(EvaluationDomainError):
        q_int(2).eval(Fraction(0))
    with pytest.raises(ProfileError):
        q_int(2, 2).eval(Fraction(2))


def test_eval_distributes_over_ring_ops():
    rng = random.Random(7)
    qv, pv = Fraction(5, 3), Fraction(-2, 7)
    for _ in range(50):
        a = rand_poly(rng, 2)
        b = rand_poly(rng, 2)
        assert (a + b).eval(qv, pv) == a.eval(qv, pv) + b.eval(qv, pv)
        assert (a * b).eval(qv, pv) == a.eval(qv, pv) * b.eval(qv, pv)


@given(st.integers(-40, 40), st.integers(-40, 40))
def test_q_int_product_symmetry(m, n):
    assert q_int(m) * q_int(n) == q_int(n) * q_int(m)


small_poly = st.builds(
    lambda pairs: sum(
        (LaurentPoly.monomial(c, e) for e, c in pairs), LaurentPoly.zero()
    ),
    st.lists(st.tuples(st.integers(-30, 30), st.integers(-50, 50)), max_size=6),
)


@settings(deadline=None, max_examples=150)
@given(small_poly, small_poly, small_poly)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def distributed_product(a, b):
    """a * b computed one monomial at a time, always on the dict path."""
    total = LaurentPoly.zero(a.nvars)
    for (eq, ep), c in a.items():
        total = total + LaurentPoly.monomial(c, eq, ep, nvars=a.nvars) * b
    return total


def test_dense_products_cross_check_the_fast_path():
    # term counts above 96 pairs route through the packed convolution;
    # the distributed sum below stays on the dict path
    rng = random.Random(11)
    for nvars in (1, 2):
        for _ in range(5):
            a = rand_poly(rng, nvars, span=25, terms=30)
            b = rand_poly(rng, nvars, span=25, terms=30)
            assert a * b == distributed_product(a, b)


def test_huge_coefficients_stay_exact():
    # far beyond int64 after squaring: the guard must reject the fast path
    big = LaurentPoly.zero()
    for e in range(12):
        big = big + LaurentPoly.monomial(3**40 + e, e)
    sq = big * big
    assert sq == distributed_product(big, big)
    assert sq.items()[0][1] == (3**40 + 11) ** 2
