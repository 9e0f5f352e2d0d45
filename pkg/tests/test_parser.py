"""Expression grammar: atoms, precedence, errors, and text round-trips."""

import random

import pytest

from qw22 import (
    ArithmeticBoundError,
    DeformationProfile,
    L,
    LaurentPoly,
    ParseError,
    T,
    W,
    element_from,
    element_text,
    parse_element,
    q_bracket,
)

GEN = DeformationProfile.GENERALIZED


def test_atoms():
    assert element_text(parse_element("3")) == "3"
    assert element_text(parse_element("q + q^-1")) == "q + q^-1"
    assert element_text(parse_element("T^2 L[0] W[3]")) == "T^2 L[0] W[3]"
    assert parse_element("L[-4]") == element_from(L(-4))
    assert parse_element("1") - parse_element("T * T^-1") == parse_element("0")


def test_juxtaposition_is_multiplication():
    assert parse_element("L[1] L[2]") == parse_element("L[1] * L[2]")
    assert element_text(parse_element("L[1] L[2]")) == "L[1] L[2]"


def test_precedence():
    # * binds tighter than +, ^ tighter than *, unary minus scales one factor
    assert element_text(parse_element("2 L[1] + q^2 * T^-1 W[0]")) == (
        "q^2 * T^-1 W[0] + 2 * L[1]"
    )
    assert parse_element("-L[1] + L[1]").is_zero()
    assert parse_element("L[1]^2") == parse_element("L[1] * L[1]")
    got = element_text(parse_element("(L[1] + L[2])^2"))
    assert got == "(1 + q^-2) * L[1] L[2] + L[1]^2 + L[2]^2 - q^-1 * L[3]"


def test_bracket_atom():
    x = parse_element("qbr(L[0], L[1]; q^-1, q)")
    assert element_text(x) == "L[1]"
    assert parse_element("qbr(W[2], L[-1]; q, q^-1)") == q_bracket(
        element_from(W(2)),
        element_from(L(-1)),
        LaurentPoly.q_power(1),
        LaurentPoly.q_power(-1),
    )


def test_parse_errors_carry_positions():
    cases = {
        "L[2": "expected ']', found 'end of input' (line 1, column 4)",
        "q^": "expected an exponent, found 'end of input' (line 1, column 3)",
        "T + * L[1]": "expected an element, found '*' (line 1, column 5)",
        "L[2]*": "expected an element, found 'end of input' (line 1, column 6)",
        "(L[1]": "expected ')', found 'end of input' (line 1, column 6)",
        "W[]": "expected a generator index, found ']' (line 1, column 3)",
        "": "expected an element, found 'end of input' (line 1, column 1)",
        "-L[1] - -L[2]": "expected an element, found '-' (line 1, column 9)",
    }
    for src, message in cases.items():
        with pytest.raises(ParseError) as exc:
            parse_element(src)
        assert str(exc.value) == message


def test_profile_gates_the_second_variable():
    with pytest.raises(ParseError) as exc:
        parse_element("p * L[1]")
    assert "needs the two-parameter profile" in str(exc.value)
    assert element_text(parse_element("p * L[1]", GEN)) == "p * L[1]"


def test_bracket_weights_must_be_scalar():
    with pytest.raises(ParseError) as exc:
        parse_element("qbr(L[0], L[1]; L[2], q)")
    assert "bracket weights must be scalar" in str(exc.value)


def test_bounds_surface_as_arithmetic_errors():
    with pytest.raises(ArithmeticBoundError):
        parse_element("L[9999999]")
    with pytest.raises(ArithmeticBoundError):
        parse_element("q^99999999999999999999")


def test_round_trip_standard():
    rng = random.Random(5)
    syms = [L(n) for n in range(-4, 5)] + [W(n) for n in range(-4, 5)] + [T]
    for _ in range(60):
        word = tuple(rng.choice(syms) for _ in range(rng.randint(0, 3)))
        x = element_from(word)
        assert parse_element(element_text(x)) == x


def test_round_trip_generalized():
    rng = random.Random(6)
    syms = [L(n) for n in range(-4, 5)] + [W(n) for n in range(-4, 5)]
    for _ in range(60):
        word = tuple(rng.choice(syms) for _ in range(rng.randint(0, 3)))
        x = element_from(word, GEN)
        assert parse_element(element_text(x), GEN) == x
