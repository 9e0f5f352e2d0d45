"""Coproduct, counit, and antipode for the standard profile.

T is group-like, and both generator ladders are T-twisted primitive:

    delta(T)    = T (x) T
    delta(L[n]) = L[n] (x) T^n  +  T^n (x) L[n]
    delta(W[n]) = W[n] (x) T^n  +  T^n (x) W[n]
    eps(T^d) = 1,   eps(L[n]) = eps(W[n]) = 0
    S(T) = T^-1,    S(X[n]) = -T^-n X[n] T^-n     (X either ladder)

delta extends as an algebra map (images multiplied left to right), S as an
anti-map (images of the reversed word).  Everything here is exact; the
generalized two-parameter profile has no Hopf layer and is rejected.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .algebra import (
    STANDARD,
    DeformationProfile,
    Element,
    GeneratorSymbol,
    L,
    NormalWord,
    T,
    T_INV,
    UNIT_WORD,
    W,
    Word,
    _multiply_words,
    _raw_element,
    element_from,
    element_text,
    multiply,
    normalize,
)
from .errors import ProfileError
from .laurent import LaurentPoly, q_int


def _require_standard(x: Element):
    if x.profile is not STANDARD:
        raise ProfileError("the Hopf structure lives on the standard profile")


class TensorElement:
    """A finite sum of two-slot tensors of normal words, standard profile."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c.nvars != 1:
                    raise ProfileError("tensor coefficients live in the one-variable ring")
                if c:
                    clean[key] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    @staticmethod
    def unit() -> "TensorElement":
        return TensorElement({(UNIT_WORD, UNIT_WORD): LaurentPoly.one()})

    def terms(self) -> tuple:
        return tuple(
            sorted(
                self._terms.items(),
                key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()),
            )
        )

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key)
            v = c if v is None else v + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return _raw_tensor(out)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return _raw_tensor({k: -c for k, c in self._terms.items()})

    def scaled(self, factor) -> "TensorElement":
        if isinstance(factor, int):
            factor = LaurentPoly.constant(factor)
        out = {}
        for key, c in self._terms.items():
            v = c * factor
            if v:
                out[key] = v
        return _raw_tensor(out)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        if isinstance(other, (LaurentPoly, int)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        return tensor_text(self)

    def __repr__(self):
        return f"<TensorElement {tensor_text(self)}>"

    def to_json_obj(self) -> dict:
        out = []
        for (a, b), c in self.terms():
            out.append(
                {
                    "coeff": c.to_json_obj(),
                    "slots": [
                        {"t": w.t_exp, "l": [list(x) for x in w.l_block],
                         "w": [list(x) for x in w.w_block]}
                        for w in (a, b)
                    ],
                }
            )
        return {"terms": out}


def _raw_tensor(terms: dict) -> TensorElement:
    t = TensorElement.__new__(TensorElement)
    object.__setattr__(t, "_terms", terms)
    return t


def tensor_of(x: Element, y: Element) -> TensorElement:
    """Outer product of two Elements as a TensorElement."""
    _require_standard(x)
    _require_standard(y)
    out = {}
    for nw1, c1 in x._terms.items():
        for nw2, c2 in y._terms.items():
            v = c1 * c2
            if v:
                out[(nw1, nw2)] = v
    return _raw_tensor(out)


def tensor_multiply(u: TensorElement, v: TensorElement) -> TensorElement:
    """Slotwise product; each slot is normally ordered independently."""
    out: dict = {}
    for (a1, a2), c in u._terms.items():
        for (b1, b2), d in v._terms.items():
            cd = c * d
            if not cd:
                continue
            left = _multiply_words(a1, b1, STANDARD)
            right = _multiply_words(a2, b2, STANDARD)
            for n1, f1 in left._terms.items():
                cf = cd * f1
                for n2, f2 in right._terms.items():
                    key = (n1, n2)
                    v2 = out.get(key)
                    v2 = cf * f2 if v2 is None else v2 + cf * f2
                    if v2:
                        out[key] = v2
                    else:
                        out.pop(key, None)
    return _raw_tensor(out)


def flip(t: TensorElement) -> TensorElement:
    return _raw_tensor({(b, a): c for (a, b), c in t._terms.items()})


# -- the three structure maps ----------------------------------------------


def _t_word(d: int) -> Word:
    return tuple([T if d > 0 else T_INV] * abs(d))


@lru_cache(maxsize=512)
def _gen_coproduct(sym: GeneratorSymbol) -> TensorElement:
    kind, n = sym
    if kind in ("T", "Tinv"):
        d = 1 if kind == "T" else -1
        tw = NormalWord(t_exp=d)
        return _raw_tensor({(tw, tw): LaurentPoly.one()})
    gen = NormalWord(l_block=((n, 1),)) if kind == "L" else NormalWord(w_block=((n, 1),))
    tn = NormalWord(t_exp=n)
    one = LaurentPoly.one()
    return _raw_tensor({(gen, tn): one, (tn, gen): one})


@lru_cache(maxsize=512)
def _gen_antipode(sym: GeneratorSymbol) -> Element:
    kind, n = sym
    if kind == "T":
        return element_from(NormalWord(t_exp=-1))
    if kind == "Tinv":
        return element_from(NormalWord(t_exp=1))
    return -normalize(_t_word(-n) + (sym,) + _t_word(-n), STANDARD)


def map_word_coproduct(word: Word) -> TensorElement:
    """delta on a free word: the product of the generator images."""
    out = TensorElement.unit()
    for sym in word:
        out = tensor_multiply(out, _gen_coproduct(sym))
    return out


def map_word_antipode(word: Word) -> Element:
    """S on a free word: images of the symbols multiplied in reverse."""
    out = Element.unit(STANDARD)
    for sym in reversed(word):
        out = multiply(out, _gen_antipode(sym))
    return out


def map_word_counit(word: Word) -> LaurentPoly:
    for sym in word:
        if sym.kind in ("L", "W"):
            return LaurentPoly.zero()
    return LaurentPoly.one()


@lru_cache(maxsize=1 << 14)
def _word_coproduct(nw: NormalWord) -> TensorElement:
    # Group-like T-power in one step, then the ladder images.
    d = nw.t_exp
    tw = NormalWord(t_exp=d)
    out = _raw_tensor({(tw, tw): LaurentPoly.one()})
    for n, k in nw.l_block:
        img = _gen_coproduct(GeneratorSymbol("L", n))
        for _ in range(k):
            out = tensor_multiply(out, img)
    for n, k in nw.w_block:
        img = _gen_coproduct(GeneratorSymbol("W", n))
        for _ in range(k):
            out = tensor_multiply(out, img)
    return out


@lru_cache(maxsize=1 << 14)
def _word_antipode(nw: NormalWord) -> Element:
    return map_word_antipode(nw.generator_sequence())


def coproduct(x: Element) -> TensorElement:
    _require_standard(x)
    out = TensorElement()
    for nw, c in x._terms.items():
        out = out + _word_coproduct(nw).scaled(c)
    return out


def counit(x: Element) -> LaurentPoly:
    _require_standard(x)
    total = LaurentPoly.zero()
    for nw, c in x._terms.items():
        if not (nw.l_block or nw.w_block):
            total = total + c
    return total


def antipode(x: Element) -> Element:
    _require_standard(x)
    out = Element.zero(STANDARD)
    for nw, c in x._terms.items():
        out = out + _word_antipode(nw).scaled(c)
    return out


def power_closed_form(map_name: str, gen_kind: str, n: int, r: int):
    """Binomial closed forms for delta and S on an r-th generator power.

    delta(X[n]^r) = sum_i C(r, i) X[n]^(r-i) T^(i n) (x) T^((r-i) n) X[n]^i
    S(X[n]^r)     = (-1)^r T^(-r n) X[n]^r T^(-r n)
    """
    if gen_kind not in ("L", "W"):
        raise ValueError("gen_kind must be 'L' or 'W'")
    if r < 0:
        raise ValueError("power must be nonnegative")
    sym = GeneratorSymbol(gen_kind, n)
    if map_name == "delta":
        total = TensorElement()
        for i in range(r + 1):
            left = normalize((sym,) * (r - i) + _t_word(i * n), STANDARD)
            right = normalize(_t_word((r - i) * n) + (sym,) * i, STANDARD)
            total = total + tensor_of(left, right).scaled(comb(r, i))
        return total
    if map_name == "antipode":
        body = normalize(_t_word(-r * n) + (sym,) * r + _t_word(-r * n), STANDARD)
        return body if r % 2 == 0 else -body
    raise ValueError("map_name must be 'delta' or 'antipode'")


# -- axiom checks -----------------------------------------------------------


def _triple_expand(t: TensorElement, slot: int) -> dict:
    """Apply delta inside one slot of a two-tensor, giving a flat triple."""
    out: dict = {}
    for (a, b), c in t._terms.items():
        inner = _word_coproduct(a if slot == 0 else b)
        for (u, v), d in inner._terms.items():
            key = (u, v, b) if slot == 0 else (a, u, v)
            val = out.get(key)
            cd = c * d
            val = cd if val is None else val + cd
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def _triple_text(triple: dict) -> str:
    if not triple:
        return "0"
    bits = []
    for (a, b, c_w) in sorted(triple, key=lambda k: (k[0].sort_key(), k[1].sort_key(), k[2].sort_key())):
        coeff = triple[(a, b, c_w)]
        bits.append(
            f"({coeff}) * ({a.text() or '1'}) (x) ({b.text() or '1'}) (x) ({c_w.text() or '1'})"
        )
    return " + ".join(bits)


class _TripleDiff:
    """Difference of two flat triples, printable as a counterexample."""

    def __init__(self, left: dict, right: dict):
        diff = dict(left)
        for key, c in right.items():
            v = diff.get(key)
            v = -c if v is None else v - c
            if v:
                diff[key] = v
            else:
                diff.pop(key, None)
        self.diff = diff

    def is_zero(self):
        return not self.diff

    def __str__(self):
        return _triple_text(self.diff)


# Relation ids usable in relation-preservation checks: each maps (m, n) to
# scalar-weighted free words for the two sides of a defining relation.
def _relation_words(rel: str, m: int, n: int):
    q = LaurentPoly.q_power
    if rel == "tl" or rel == "tw":
        sym = L(n) if rel == "tl" else W(n)
        lhs = [(LaurentPoly.one(), _t_word(m) + (sym,))]
        rhs = [(q(-2 * (n + 1) * m), (sym,) + _t_word(m))]
        return lhs, rhs
    if rel == "ll":
        lhs = [(q(n - m), (L(n), L(m))), (-q(m - n), (L(m), L(n)))]
        rhs = [(q_int(m - n), (L(m + n),))]
        return lhs, rhs
    if rel == "lw":
        lhs = [(q(n - m), (L(n), W(m))), (-q(m - n), (W(m), L(n)))]
        rhs = [(q_int(m - n), (W(m + n),))]
        return lhs, rhs
    if rel == "ww":
        lhs = [(q(n - m), (W(n), W(m))), (-q(m - n), (W(m), W(n)))]
        rhs = []
        return lhs, rhs
    raise ValueError(f"unknown relation id {rel!r}")


def _combine_words(side, mapper, zero):
    total = zero
    for scalar, word in side:
        img = mapper(word)
        total = total + img.scaled(scalar) if not isinstance(img, LaurentPoly) else total + img * scalar
    return total


def _preservation(map_name: str, rel: str, m: int, n: int):
    lhs, rhs = _relation_words(rel, m, n)
    if map_name == "delta":
        mapper, zero = map_word_coproduct, TensorElement()
    elif map_name == "eps":
        mapper, zero = map_word_counit, LaurentPoly.zero()
    elif map_name == "s":
        mapper, zero = map_word_antipode, Element.zero(STANDARD)
    else:
        raise ValueError(f"unknown map {map_name!r}")
    left = _combine_words(lhs, mapper, zero)
    right = _combine_words(rhs, mapper, zero)
    diff = left - right
    ok = (not diff) if isinstance(diff, LaurentPoly) else diff.is_zero()
    return ok, (None if ok else diff)


_PRESERVATION_IDS = {
    f"{m}-{r}" for m in ("delta", "eps", "s") for r in ("tl", "tw", "ll", "lw", "ww")
}


def check_axiom(axiom: str, arg=None) -> tuple:
    """Verify one Hopf axiom; returns (ok, witness).

    Single-element axioms (arg is an Element): coassoc, counit-left,
    counit-right, antipode-left, antipode-right, s-squared,
    cocommutativity-witness.  Pair axioms (arg is an (x, y) Element pair):
    delta-hom, s-antihom.  Index-pair axioms (arg is (m, n)):
    commutativity-witness, delta-hom, and every "<map>-<relation>"
    preservation id with map in delta/eps/s and relation in
    tl/tw/ll/lw/ww.  The witness conventions are inverted for the two
    -witness axioms: True means a violation was exhibited.
    """
    if axiom in _PRESERVATION_IDS:
        m, n = arg
        map_name, rel = axiom.split("-")
        return _preservation(map_name, rel, m, n)

    if axiom == "delta-hom":
        x, y = arg
        if isinstance(x, int):
            return _preservation("delta", "ll", x, y)
        _require_standard(x)
        diff = coproduct(multiply(x, y)) - tensor_multiply(coproduct(x), coproduct(y))
        return diff.is_zero(), (None if diff.is_zero() else diff)

    if axiom == "s-antihom":
        x, y = arg
        diff = antipode(multiply(x, y)) - multiply(antipode(y), antipode(x))
        return diff.is_zero(), (None if diff.is_zero() else diff)

    if axiom == "commutativity-witness":
        m, n = arg
        x = element_from(L(m))
        y = element_from(L(n))
        diff = multiply(x, y) - multiply(y, x)
        return (not diff.is_zero()), (diff if not diff.is_zero() else None)

    if axiom not in (
        "coassoc",
        "counit-left",
        "counit-right",
        "antipode-left",
        "antipode-right",
        "s-squared",
        "cocommutativity-witness",
    ):
        raise ValueError(f"unknown axiom id {axiom!r}")
    x = arg
    _require_standard(x)
    if axiom == "coassoc":
        t = coproduct(x)
        left = _triple_expand(t, 0)   # (delta (x) 1) delta
        right = _triple_expand(t, 1)  # (1 (x) delta) delta
        d = _TripleDiff(left, right)
        return d.is_zero(), (None if d.is_zero() else d)
    if axiom == "counit-left":
        # (eps (x) 1) delta = 1 (x) x
        t = coproduct(x)
        got = TensorElement()
        for (a, b), c in t._terms.items():
            e = map_word_counit(a.generator_sequence())
            if e:
                got = got + _raw_tensor({(UNIT_WORD, b): c * e})
        want = tensor_of(Element.unit(STANDARD), x)
        diff = got - want
        return diff.is_zero(), (None if diff.is_zero() else diff)
    if axiom == "counit-right":
        # (1 (x) eps) delta = x (x) 1
        t = coproduct(x)
        got = TensorElement()
        for (a, b), c in t._terms.items():
            e = map_word_counit(b.generator_sequence())
            if e:
                got = got + _raw_tensor({(a, UNIT_WORD): c * e})
        want = tensor_of(x, Element.unit(STANDARD))
        diff = got - want
        return diff.is_zero(), (None if diff.is_zero() else diff)
    if axiom == "antipode-left":
        # m (S (x) 1) delta = eps * unit
        t = coproduct(x)
        got = Element.zero(STANDARD)
        for (a, b), c in t._terms.items():
            got = got + multiply(_word_antipode(a), element_from(b)).scaled(c)
        want = Element.unit(STANDARD).scaled(counit(x))
        diff = got - want
        return diff.is_zero(), (None if diff.is_zero() else diff)
    if axiom == "antipode-right":
        # m (1 (x) S) delta = eps * unit
        t = coproduct(x)
        got = Element.zero(STANDARD)
        for (a, b), c in t._terms.items():
            got = got + multiply(element_from(a), _word_antipode(b)).scaled(c)
        want = Element.unit(STANDARD).scaled(counit(x))
        diff = got - want
        return diff.is_zero(), (None if diff.is_zero() else diff)
    if axiom == "s-squared":
        diff = antipode(antipode(x)) - x
        return diff.is_zero(), (None if diff.is_zero() else diff)
    if axiom == "cocommutativity-witness":
        t = coproduct(x)
        diff = flip(t) - t
        return (not diff.is_zero()), (diff if not diff.is_zero() else None)
    raise ValueError(f"unknown axiom id {axiom!r}")


# -- rendering ---------------------------------------------------------------


def tensor_text(t: TensorElement) -> str:
    items = t.terms()
    if not items:
        return "0"
    chunks = []
    for (a, b), c in items:
        body_w = f"({a.text() or '1'}) (x) ({b.text() or '1'})"
        neg = False
        if c.term_count == 1:
            mag = c
            ((_, _), cv), = c.items()
            if cv < 0:
                neg = True
                mag = -c
            body = body_w if mag.is_one() else f"{mag} * {body_w}"
        else:
            body = f"({c}) * {body_w}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)
