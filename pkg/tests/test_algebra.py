"""Normal ordering, the two deformation profiles, and element arithmetic."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from qw22 import (
    ArithmeticBoundError,
    DeformationProfile,
    Element,
    EvaluationDomainError,
    GeneratorSymbol,
    L,
    LaurentPoly,
    NormalWord,
    ProfileError,
    T,
    T_INV,
    UNIT_WORD,
    W,
    classical_limit,
    element_from,
    element_text,
    evaluate,
    is_normal,
    multiply,
    normalize,
    q_bracket,
    q_int,
    substitute_p_inverse,
)
from fractions import Fraction

S = DeformationProfile.STANDARD
G = DeformationProfile.GENERALIZED


def qp(e):
    return LaurentPoly.q_power(e)


def qp2(e):
    return LaurentPoly.q_power(e, nvars=2)


def pp(e):
    return LaurentPoly.p_power(e)


def gen_word(el):
    ((nw, c),) = el.terms()
    assert c.is_one()
    return nw


# -- symbols and words -----------------------------------------------------


def test_generator_symbols():
    assert L(3) == GeneratorSymbol("L", 3)
    assert W(-2) == GeneratorSymbol("W", -2)
    assert T.kind == "T" and T_INV.kind == "Tinv"
    with pytest.raises(ArithmeticBoundError):
        L(2**20 + 1)
    with pytest.raises(ArithmeticBoundError):
        W(-(2**20) - 1)


def test_normal_word_validation():
    w = NormalWord(2, ((1, 2), (3, 1)), ((0, 1),))
    assert w.text() == "T^2 L[1]^2 L[3] W[0]"
    assert w.generator_sequence() == (T, T, L(1), L(1), L(3), W(0))
    assert UNIT_WORD.is_unit() and UNIT_WORD.text() == ""
    with pytest.raises(ValueError):
        NormalWord(0, ((3, 1), (1, 1)), ())
    with pytest.raises(ValueError):
        NormalWord(0, ((1, 0),), ())


def test_is_normal():
    assert is_normal((T, T, L(1), L(1), L(3), W(0)))
    assert is_normal(())
    assert is_normal((T_INV, T_INV))
    assert not is_normal((T, T_INV))
    assert not is_normal((L(1), T))
    assert not is_normal((L(3), L(1)))
    assert not is_normal((W(0), L(1)))


# -- normalize: anchor outputs ----------------------------------------------


def test_normalize_anchor_examples():
    assert element_text(normalize((L(2), L(1)))) == "q^-2 * L[1] L[2] - q^-1 * L[3]"
    assert element_text(normalize((W(1), L(0)))) == "-q^-1 * W[1] + q^-2 * L[0] W[1]"
    assert element_text(normalize((W(2), W(1)))) == "q^-2 * W[1] W[2]"
    assert element_text(normalize((T, T_INV))) == "1"
    assert element_text(normalize((L(0), T))) == "q^2 * T L[0]"
    assert element_text(normalize((T, L(0)))) == "T L[0]"
    assert element_text(normalize((L(1), T, T, L(0)))) == (
        "q^6 * T^2 L[0] L[1] - q^7 * T^2 L[1]"
    )


def test_normalize_generalized_anchor_examples():
    assert element_text(normalize((L(2), L(1)), G)) == (
        "q^-1*p * L[1] L[2] - q^-1 * L[3]"
    )
    assert element_text(normalize((W(1), L(0)), G)) == (
        "-q^-1 * W[1] + q^-1*p * L[0] W[1]"
    )
    assert element_text(normalize((W(2), W(1)), G)) == "q^-1*p * W[1] W[2]"


def test_generalized_profile_rejects_t():
    with pytest.raises(ProfileError):
        normalize((T,), G)
    with pytest.raises(ProfileError):
        element_from((L(1), T_INV), G)


def test_t_collection_weights():
    # moving L_n left across T^s costs q^{2(n+1)s}; W_n costs the same
    for n in range(-4, 5):
        for s in range(-3, 4):
            word = [L(n)] + [T if s > 0 else T_INV] * abs(s)
            got = normalize(tuple(word))
            want = Element(S, {NormalWord(s, ((n, 1),), ()): qp(2 * (n + 1) * s)})
            assert got == want
            word = [W(n)] + [T if s > 0 else T_INV] * abs(s)
            got = normalize(tuple(word))
            want = Element(S, {NormalWord(s, (), ((n, 1),)): qp(2 * (n + 1) * s)})
            assert got == want


# -- the defining relations hold under normalize ----------------------------


def rel_pairs(lo, hi):
    return [(m, n) for m in range(lo, hi + 1) for n in range(lo, hi + 1)]


def test_standard_ladder_relations():
    for m, n in rel_pairs(-5, 5):
        ln_lm = normalize((L(n), L(m)))
        lm_ln = normalize((L(m), L(n)))
        assert ln_lm.scaled(qp(n - m)) - lm_ln.scaled(qp(m - n)) == element_from(
            L(m + n)
        ).scaled(q_int(m - n))
        wn_lm = normalize((W(n), L(m)))
        lm_wn = normalize((L(m), W(n)))
        assert wn_lm.scaled(qp(n - m)) - lm_wn.scaled(qp(m - n)) == element_from(
            W(m + n)
        ).scaled(q_int(m - n))
        wn_wm = normalize((W(n), W(m)))
        wm_wn = normalize((W(m), W(n)))
        assert wn_wm.scaled(qp(n - m)) == wm_wn.scaled(qp(m - n))


def test_standard_t_relations():
    for s in range(-4, 5):
        for n in range(-4, 5):
            t_run = (T,) * s if s >= 0 else (T_INV,) * (-s)
            lhs = normalize(t_run + (L(n),))
            rhs = normalize((L(n),) + t_run).scaled(qp(-2 * (n + 1) * s))
            assert lhs == rhs
            lhs = normalize(t_run + (W(n),))
            rhs = normalize((W(n),) + t_run).scaled(qp(-2 * (n + 1) * s))
            assert lhs == rhs


def test_generalized_ladder_relations():
    for m, n in rel_pairs(-4, 4):
        ln_lm = normalize((L(n), L(m)), G)
        lm_ln = normalize((L(m), L(n)), G)
        assert ln_lm.scaled(qp2(n - m)) - lm_ln.scaled(pp(n - m)) == element_from(
            L(m + n), G
        ).scaled(-q_int(n - m, 2))
        wn_lm = normalize((W(n), L(m)), G)
        lm_wn = normalize((L(m), W(n)), G)
        assert wn_lm.scaled(qp2(n - m)) - lm_wn.scaled(pp(n - m)) == element_from(
            W(m + n), G
        ).scaled(-q_int(n - m, 2))
        wn_wm = normalize((W(n), W(m)), G)
        wm_wn = normalize((W(m), W(n)), G)
        assert wn_wm.scaled(qp2(n - m)) == wm_wn.scaled(pp(n - m))


# -- basis stability ---------------------------------------------------------


def random_normal_word(rng, with_t=True):
    d = rng.randint(-3, 3) if with_t else 0
    l_pool = rng.sample(range(-6, 7), rng.randint(0, 3))
    w_pool = rng.sample(range(-6, 7), rng.randint(0, 3))
    lb = tuple((n, rng.randint(1, 2)) for n in sorted(l_pool))
    wb = tuple((n, rng.randint(1, 2)) for n in sorted(w_pool))
    return NormalWord(d, lb, wb)


def test_normal_words_are_fixed_points():
    rng = random.Random(42)
    for _ in range(300):
        nw = random_normal_word(rng)
        got = normalize(nw.generator_sequence())
        assert got == Element(S, {nw: LaurentPoly.one()})
    for _ in range(100):
        nw = random_normal_word(rng, with_t=False)
        got = normalize(nw.generator_sequence(), G)
        assert got == Element(G, {nw: LaurentPoly.one(2)})


def test_normalize_lands_on_normal_words():
    rng = random.Random(9)
    syms = [T, T_INV] + [L(n) for n in range(-5, 6)] + [W(n) for n in range(-5, 6)]
    for _ in range(200):
        word = tuple(rng.choice(syms) for _ in range(rng.randint(0, 5)))
        for nw, c in normalize(word).terms():
            assert is_normal(nw.generator_sequence())
            assert not c.is_zero()


# -- element arithmetic ------------------------------------------------------


def test_unit_and_zero():
    one = Element.unit()
    zero = Element.zero()
    x = normalize((L(2), W(-1)))
    assert multiply(one, x) == x
    assert multiply(x, one) == x
    assert x + zero == x
    assert x - x == zero
    assert element_text(zero) == "0"
    assert element_text(one) == "1"


def test_multiply_is_bilinear():
    rng = random.Random(5)
    syms = [T, T_INV] + [L(n) for n in range(-4, 5)] + [W(n) for n in range(-4, 5)]
    for _ in range(40):
        a = normalize(tuple(rng.choice(syms) for _ in range(rng.randint(0, 3))))
        b = normalize(tuple(rng.choice(syms) for _ in range(rng.randint(0, 3))))
        c = normalize(tuple(rng.choice(syms) for _ in range(rng.randint(0, 3))))
        s = q_int(rng.randint(2, 5))
        assert multiply(a + b, c) == multiply(a, c) + multiply(b, c)
        assert multiply(a, b + c) == multiply(a, b) + multiply(a, c)
        assert multiply(a.scaled(s), b) == multiply(a, b).scaled(s)
        assert multiply(a, b.scaled(s)) == multiply(a, b).scaled(s)


def test_multiply_concatenates_before_rewriting():
    x = normalize((L(2),))
    y = normalize((L(1),))
    assert multiply(x, y) == normalize((L(2), L(1)))
    assert element_text(multiply(y, x)) == "L[1] L[2]"


def test_profiles_never_mix():
    with pytest.raises(ProfileError):
        multiply(normalize((L(1),)), normalize((L(1),), G))
    with pytest.raises(ProfileError):
        normalize((L(1),)) + normalize((L(1),), G)


def test_known_overlap_obstruction():
    """The ladder overlap L1.L-1.L-2 does not resolve: the two complete
    reduction orders disagree by an exact residual that vanishes at q = 1.
    This pins the deterministic strategy's output on both association orders.
    """
    x, y, z = (element_from(L(n)) for n in (1, -1, -2))
    left = multiply(multiply(x, y), z)
    right = multiply(x, multiply(y, z))
    residual = left - right
    want = (
        element_from(NormalWord(0, ((-3, 1), (1, 1)), ())).scaled(qp(-9) - qp(-11))
        + element_from(NormalWord(0, ((-2, 1),), ())).scaled(qp(-4) - qp(-8))
        + element_from(NormalWord(0, ((-2, 1), (0, 1)), ())).scaled(
            qp(-9) + qp(-11) - qp(-5) - qp(-7)
        )
        + element_from(NormalWord(0, ((-1, 2),), ())).scaled(qp(-3) - qp(-9))
    )
    assert residual == want
    assert classical_limit(residual).is_zero()


def test_t_crossing_obstruction():
    """A fused pair crosses T with weight 2(m+n+1), the unfused factors with
    2(m+1) + 2(n+1); the q^2 gap makes the orders of fusion and crossing
    observable, so this triple breaks associativity."""
    x = element_from(L(1))
    y = element_from(L(0))
    t = element_from(T)
    a = multiply(multiply(x, y), t)
    b = multiply(x, multiply(y, t))
    assert element_text(a) == "q^4 * T L[0] L[1] - q^3 * T L[1]"
    assert element_text(b) == "q^4 * T L[0] L[1] - q^5 * T L[1]"


# -- brackets, limits, substitution -------------------------------------------


def test_q_bracket_reproduces_fusion():
    for m, n in rel_pairs(-5, 5):
        got = q_bracket(element_from(L(n)), element_from(L(m)), qp(n - m), qp(m - n))
        assert got == element_from(L(m + n)).scaled(q_int(m - n))
        got = q_bracket(element_from(W(n)), element_from(L(m)), qp(n - m), qp(m - n))
        assert got == element_from(W(m + n)).scaled(q_int(m - n))
        got = q_bracket(element_from(W(n)), element_from(W(m)), qp(n - m), qp(m - n))
        assert got.is_zero()


def test_classical_limit_is_the_lie_bracket():
    for m, n in rel_pairs(-4, 4):
        lm, ln = element_from(L(m)), element_from(L(n))
        commutator = multiply(lm, ln) - multiply(ln, lm)
        got = classical_limit(commutator)
        assert got.terms() == (
            ((NormalWord(0, ((m + n, 1),), ()), Fraction(n - m)),)
            if m != n
            else ()
        )


def test_evaluate_exactness():
    x = normalize((L(2), L(1)))
    num = evaluate(x, Fraction(3, 2))
    for nw, c in x.terms():
        assert num.terms()[[t[0] for t in num.terms()].index(nw)][1] == c.eval(
            Fraction(3, 2)
        )
    with pytest.raises(EvaluationDomainError):
        evaluate(x, Fraction(0))
    y = normalize((L(2), L(1)), G)
    with pytest.raises(ProfileError):
        evaluate(y, Fraction(2))
    assert str(evaluate(element_from(L(1)).scaled(qp(1)), Fraction(2))) == "2 * L[1]"


def test_substitute_p_inverse_recovers_standard():
    rng = random.Random(3)
    syms = [L(n) for n in range(-4, 5)] + [W(n) for n in range(-4, 5)]
    for _ in range(60):
        word = tuple(rng.choice(syms) for _ in range(rng.randint(0, 4)))
        collapsed = substitute_p_inverse(normalize(word, G))
        assert collapsed == normalize(word, S)
    with pytest.raises(ProfileError):
        substitute_p_inverse(normalize((L(1),), S))


# -- text form ----------------------------------------------------------------


def test_element_text_conventions():
    assert element_text(element_from(L(0)).scaled(-LaurentPoly.one())) == "-L[0]"
    assert element_text(element_from(W(2)).scaled(q_int(2))) == "(q + q^-1) * W[2]"
    assert element_text(element_from(3)) == "3"
    # pure-W words carry an empty L-block, which sorts ahead of any L-word
    assert (
        element_text(element_from(L(1)) - element_from(W(1)).scaled(qp(-1)))
        == "-q^-1 * W[1] + L[1]"
    )
    assert element_text(element_from(NormalWord(-2, (), ((0, 3),)))) == "T^-2 W[0]^3"


@settings(deadline=None, max_examples=80)
@given(
    st.lists(
        st.sampled_from(
            [T, T_INV, L(-3), L(0), L(2), W(-2), W(1), W(3)],
        ),
        max_size=5,
    )
)
def test_normalize_is_a_projection(word):
    el = normalize(tuple(word))
    for nw, c in el.terms():
        again = normalize(nw.generator_sequence())
        assert again == Element(S, {nw: LaurentPoly.one()})
