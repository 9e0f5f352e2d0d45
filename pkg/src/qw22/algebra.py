"""Generators, words, and PBW normal forms for the deformed algebra.

The algebra is generated by an invertible group-like T and two ladders of
generators L[n], W[n] indexed over the integers.  A word is a free product
of generator symbols; `normalize` rewrites any word into the spanning basis
of normally ordered monomials

    T^d  L[i1]^k1 ... L[ir]^kr  W[j1]^m1 ... W[js]^ms

with i1 < ... < ir and j1 < ... < js, T-power first.  Two deformation
profiles are supported: the standard one-parameter profile (coefficients in
Z[q, q^-1], T allowed) and a generalized two-parameter profile
(coefficients in Z[q^±1, p^±1], T-free).  All rewriting is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Union

from .errors import ArithmeticBoundError, ProfileError
from .laurent import EXPONENT_BOUND, LaurentPoly, q_int

# Generator indices stay inside this cap so exponent formulas like
# -2(n+1)m keep well within the checked 64-bit exponent window.
INDEX_CAP = 1 << 20


class DeformationProfile(Enum):
    STANDARD = "standard-q"
    GENERALIZED = "generalized-two-param"

    @property
    def nvars(self) -> int:
        return 1 if self is DeformationProfile.STANDARD else 2


STANDARD = DeformationProfile.STANDARD
GENERALIZED = DeformationProfile.GENERALIZED


class GeneratorSymbol(NamedTuple):
    kind: str  # "T", "Tinv", "L", "W"
    index: int


T = GeneratorSymbol("T", 0)
T_INV = GeneratorSymbol("Tinv", 0)


def _check_index(n: int) -> int:
    if abs(n) > INDEX_CAP:
        raise ArithmeticBoundError(f"generator index {n} beyond cap {INDEX_CAP}")
    return n


def L(n: int) -> GeneratorSymbol:
    return GeneratorSymbol("L", _check_index(n))


def W(n: int) -> GeneratorSymbol:
    return GeneratorSymbol("W", _check_index(n))


Word = tuple  # tuple[GeneratorSymbol, ...]


@dataclass(frozen=True)
class NormalWord:
    """A normally ordered basis monomial: T-power, then L-block, W-block.

    Blocks are tuples of (index, multiplicity) with strictly ascending
    indices and positive multiplicities.
    """

    t_exp: int = 0
    l_block: tuple = ()
    w_block: tuple = ()

    def __post_init__(self):
        if abs(self.t_exp) > EXPONENT_BOUND:
            raise ArithmeticBoundError("T-power beyond the checked window")
        for block in (self.l_block, self.w_block):
            last = None
            for n, k in block:
                _check_index(n)
                if k < 1:
                    raise ValueError("block multiplicities must be positive")
                if last is not None and n <= last:
                    raise ValueError("block indices must strictly ascend")
                last = n

    def is_unit(self) -> bool:
        return not (self.t_exp or self.l_block or self.w_block)

    def is_t_free(self) -> bool:
        return self.t_exp == 0

    def t_free_part(self) -> "NormalWord":
        return NormalWord(0, self.l_block, self.w_block)

    def sort_key(self):
        return (self.t_exp, self.l_block, self.w_block)

    def generator_sequence(self) -> Word:
        syms = []
        step = T if self.t_exp > 0 else T_INV
        syms.extend([step] * abs(self.t_exp))
        for n, k in self.l_block:
            syms.extend([GeneratorSymbol("L", n)] * k)
        for n, k in self.w_block:
            syms.extend([GeneratorSymbol("W", n)] * k)
        return tuple(syms)

    def text(self) -> str:
        pieces = []
        d = self.t_exp
        if d == 1:
            pieces.append("T")
        elif d:
            pieces.append(f"T^{d}")
        for n, k in self.l_block:
            pieces.append(f"L[{n}]" if k == 1 else f"L[{n}]^{k}")
        for n, k in self.w_block:
            pieces.append(f"W[{n}]" if k == 1 else f"W[{n}]^{k}")
        return " ".join(pieces)


UNIT_WORD = NormalWord()


class Element:
    """A finite linear combination of normal words over the profile's ring."""

    __slots__ = ("profile", "_terms")

    def __init__(self, profile: DeformationProfile, terms: dict | None = None):
        clean = {}
        nv = profile.nvars
        if terms:
            for nw, c in terms.items():
                if c.nvars != nv:
                    raise ProfileError("coefficient profile does not match element profile")
                if profile is GENERALIZED and nw.t_exp:
                    raise ProfileError("T symbols are not supported in the generalized profile")
                if c:
                    clean[nw] = c
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @staticmethod
    def unit(profile: DeformationProfile = STANDARD) -> "Element":
        return Element(profile, {UNIT_WORD: LaurentPoly.one(profile.nvars)})

    @staticmethod
    def zero(profile: DeformationProfile = STANDARD) -> "Element":
        return Element(profile, {})

    def terms(self) -> tuple:
        """Term pairs (NormalWord, coeff) in canonical ascending word order."""
        return tuple(sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, nw: NormalWord) -> LaurentPoly:
        return self._terms.get(nw, LaurentPoly.zero(self.profile.nvars))

    def _require_same(self, other: "Element"):
        if self.profile is not other.profile:
            raise ProfileError("mixed deformation profiles")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same(other)
        out = dict(self._terms)
        for nw, c in other._terms.items():
            v = out.get(nw)
            v = c if v is None else v + c
            if v:
                out[nw] = v
            else:
                out.pop(nw, None)
        return _raw_element(self.profile, out)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return _raw_element(self.profile, {nw: -c for nw, c in self._terms.items()})

    def scaled(self, factor) -> "Element":
        if isinstance(factor, int):
            factor = LaurentPoly.constant(factor, self.profile.nvars)
        if factor.nvars != self.profile.nvars:
            raise ProfileError("scalar profile does not match element profile")
        if not factor:
            return Element.zero(self.profile)
        out = {}
        for nw, c in self._terms.items():
            v = c * factor
            if v:
                out[nw] = v
        return _raw_element(self.profile, out)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        if isinstance(other, (LaurentPoly, int)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.profile is other.profile and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.profile, frozenset(self._terms.items())))

    def __str__(self):
        return element_text(self)

    def __repr__(self):
        return f"<Element {element_text(self)}>"

    def to_json_obj(self) -> dict:
        out = []
        for nw, c in self.terms():
            out.append(
                {
                    "coeff": c.to_json_obj(),
                    "t": nw.t_exp,
                    "l": [[n, k] for n, k in nw.l_block],
                    "w": [[n, k] for n, k in nw.w_block],
                }
            )
        return {"terms": out}


def _raw_element(profile, terms: dict) -> Element:
    el = Element.__new__(Element)
    object.__setattr__(el, "profile", profile)
    object.__setattr__(el, "_terms", terms)
    return el


def element_from(x, profile: DeformationProfile = STANDARD) -> Element:
    """Build an Element from a generator symbol, a word, a normal word,
    a scalar coefficient, or a plain integer."""
    if isinstance(x, GeneratorSymbol):
        return normalize((x,), profile)
    if isinstance(x, NormalWord):
        return Element(profile, {x: LaurentPoly.one(profile.nvars)})
    if isinstance(x, (tuple, list)):
        return normalize(tuple(x), profile)
    if isinstance(x, LaurentPoly):
        return Element(profile, {UNIT_WORD: x})
    if isinstance(x, int):
        return Element(profile, {UNIT_WORD: LaurentPoly.constant(x, profile.nvars)})
    raise TypeError(f"cannot build an Element from {type(x).__name__}")


# -- rewriting ------------------------------------------------------------


def is_normal(word: Word) -> bool:
    """True when the word is literally in normal order: a same-direction
    T-run, then weakly ascending L indices, then weakly ascending W indices."""
    phase = 0  # 0: T-run, 1: L-run, 2: W-run
    t_dir = 0
    last = None
    for sym in word:
        kind = sym.kind
        if kind in ("T", "Tinv"):
            if phase != 0:
                return False
            d = 1 if kind == "T" else -1
            if t_dir and d != t_dir:
                return False
            t_dir = d
        elif kind == "L":
            if phase == 2:
                return False
            if phase == 1 and sym.index < last:
                return False
            phase, last = 1, sym.index
        else:
            if phase != 2:
                phase, last = 2, None
            if last is not None and sym.index < last:
                return False
            last = sym.index
    return True


def _collect_t(word: Word, profile: DeformationProfile):
    """Commute every T-power to the front in one sweep.

    Crossing X[n] with T^s costs q^{2(n+1)s}, so a T arriving from the
    right of the current tail picks up the accumulated shift sum.
    Returns (q-exponent, net T-power, tail of (kind, index) pairs).
    """
    exp = 0
    t_net = 0
    shift_sum = 0
    tail = []
    for sym in word:
        kind = sym.kind
        if kind == "T" or kind == "Tinv":
            if profile is GENERALIZED:
                raise ProfileError("T symbols are not supported in the generalized profile")
            s = 1 if kind == "T" else -1
            exp += 2 * s * shift_sum
            t_net += s
        elif kind in ("L", "W"):
            _check_index(sym.index)
            tail.append((kind, sym.index))
            shift_sum += sym.index + 1
        else:
            raise ValueError(f"unknown generator kind {kind!r}")
    if abs(exp) > EXPONENT_BOUND or abs(t_net) > EXPONENT_BOUND:
        raise ArithmeticBoundError("T-collection exponent beyond the checked window")
    return exp, t_net, tuple(tail)


def _leftmost_reducible(seq) -> int | None:
    for i in range(len(seq) - 1):
        k1, n1 = seq[i]
        k2, n2 = seq[i + 1]
        if k2 == "L" and (k1 == "W" or (k1 == "L" and n1 > n2)):
            return i
        if k1 == "W" and k2 == "W" and n1 > n2:
            return i
    return None


def _rule_branches(seq, i, profile):
    """Apply the single rewrite step at position i; yield (factor, new_seq)."""
    k1, a = seq[i]
    k2, b = seq[i + 1]
    head, tail = seq[:i], seq[i + 2 :]
    nv = profile.nvars
    if profile is STANDARD:
        if k1 == "L":  # L[n] L[m], n > m
            n, m = a, b
            yield LaurentPoly.q_power(2 * (m - n)), head + (("L", m), ("L", n)) + tail
            fuse = LaurentPoly.q_power(m - n) * q_int(m - n)
            yield fuse, head + (("L", _check_index(m + n)),) + tail
        elif k2 == "L":  # W[m] L[n], any order of indices
            m, n = a, b
            yield LaurentPoly.q_power(2 * (n - m)), head + (("L", n), ("W", m)) + tail
            fuse = -(LaurentPoly.q_power(n - m) * q_int(m - n))
            if fuse:
                yield fuse, head + (("W", _check_index(m + n)),) + tail
        else:  # W[n] W[m], n > m
            n, m = a, b
            yield LaurentPoly.q_power(2 * (m - n)), head + (("W", m), ("W", n)) + tail
        return
    # Generalized two-parameter profile: same shapes, prefactors split
    # between q and p, correction terms through the two-variable bracket.
    if k1 == "L":
        n, m = a, b
        swap = LaurentPoly.monomial(1, m - n, n - m, nvars=2)
        yield swap, head + (("L", m), ("L", n)) + tail
        fuse = -(LaurentPoly.q_power(m - n, 2) * q_int(n - m, 2))
        yield fuse, head + (("L", _check_index(m + n)),) + tail
    elif k2 == "L":
        m, n = a, b
        swap = LaurentPoly.monomial(1, n - m, m - n, nvars=2)
        yield swap, head + (("L", n), ("W", m)) + tail
        fuse = LaurentPoly.p_power(m - n) * q_int(n - m, 2)
        if fuse:
            yield fuse, head + (("W", _check_index(m + n)),) + tail
    else:
        n, m = a, b
        swap = LaurentPoly.monomial(1, m - n, n - m, nvars=2)
        yield swap, head + (("W", m), ("W", n)) + tail


def _normalize_tail(tail, profile) -> dict:
    """Rewrite a T-free (kind, index) sequence to normal order.

    Worklist rewriting, always reducing the leftmost reducible pair;
    identical intermediate sequences are merged so shared subproblems are
    only expanded once.
    """
    one = LaurentPoly.one(profile.nvars)
    pending = {tail: one}
    done: dict = {}
    while pending:
        seq, coeff = pending.popitem()
        i = _leftmost_reducible(seq)
        if i is None:
            v = done.get(seq)
            v = coeff if v is None else v + coeff
            if v:
                done[seq] = v
            else:
                done.pop(seq, None)
            continue
        for factor, new_seq in _rule_branches(seq, i, profile):
            v = pending.get(new_seq)
            v = coeff * factor if v is None else v + coeff * factor
            if v:
                pending[new_seq] = v
            else:
                pending.pop(new_seq, None)
    return done


def _blocks_from_seq(seq):
    l_block = []
    w_block = []
    for kind, n in seq:
        block = l_block if kind == "L" else w_block
        if block and block[-1][0] == n:
            block[-1] = (n, block[-1][1] + 1)
        else:
            block.append((n, 1))
    return tuple(l_block), tuple(w_block)


def normalize(word: Word, profile: DeformationProfile = STANDARD) -> Element:
    """Rewrite a free word of generator symbols into the normal basis."""
    exp, t_net, tail = _collect_t(tuple(word), profile)
    front = LaurentPoly.q_power(exp, profile.nvars)
    out: dict = {}
    for seq, c in _normalize_tail(tail, profile).items():
        l_block, w_block = _blocks_from_seq(seq)
        nw = NormalWord(t_net, l_block, w_block)
        v = c * front
        prev = out.get(nw)
        v = v if prev is None else prev + v
        if v:
            out[nw] = v
        else:
            out.pop(nw, None)
    return _raw_element(profile, out)


@lru_cache(maxsize=1 << 15)
def _multiply_words(nw1: NormalWord, nw2: NormalWord, profile: DeformationProfile) -> Element:
    return normalize(nw1.generator_sequence() + nw2.generator_sequence(), profile)


def multiply(x: Element, y: Element) -> Element:
    """Product of two Elements in the same profile, normally ordered."""
    x._require_same(y)
    profile = x.profile
    out: dict = {}
    for nw1, c1 in x._terms.items():
        for nw2, c2 in y._terms.items():
            c = c1 * c2
            if not c:
                continue
            for nw, f in _multiply_words(nw1, nw2, profile)._terms.items():
                v = out.get(nw)
                v = c * f if v is None else v + c * f
                if v:
                    out[nw] = v
                else:
                    out.pop(nw, None)
    return _raw_element(profile, out)


def q_bracket(x: Element, y: Element, alpha: LaurentPoly, beta: LaurentPoly) -> Element:
    """The deformed commutator alpha*x*y - beta*y*x."""
    return multiply(x, y).scaled(alpha) - multiply(y, x).scaled(beta)


# -- numeric specializations ----------------------------------------------


class NumericElement:
    """An Element whose coefficients have been evaluated to exact rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for nw, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[nw] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("NumericElement is immutable")

    def terms(self) -> tuple:
        return tuple(sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, NumericElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for nw, c in self.terms():
            wt = nw.text()
            mag = -c if c < 0 else c
            body = f"{mag} * {wt}" if wt and mag != 1 else (wt or str(mag))
            if not chunks:
                chunks.append(f"-{body}" if c < 0 else body)
            else:
                chunks.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"<NumericElement {self}>"

    def to_json_obj(self) -> dict:
        out = []
        for nw, c in self.terms():
            out.append(
                {
                    "coeff": str(c),
                    "t": nw.t_exp,
                    "l": [[n, k] for n, k in nw.l_block],
                    "w": [[n, k] for n, k in nw.w_block],
                }
            )
        return {"terms": out}


def evaluate(x: Element, q_val, p_val=None) -> NumericElement:
    """Evaluate every coefficient at exact rational points."""
    return NumericElement({nw: c.eval(q_val, p_val) for nw, c in x._terms.items()})


def classical_limit(x: Element) -> NumericElement:
    """Specialize the standard profile at q = 1."""
    if x.profile is not STANDARD:
        raise ProfileError("the classical limit applies to the standard profile")
    return evaluate(x, 1)


def substitute_p_inverse(x: Element) -> Element:
    """Collapse a generalized-profile Element onto the standard profile
    by sending p to q^-1."""
    if x.profile is not GENERALIZED:
        raise ProfileError("substitution applies to the generalized profile")
    out: dict = {}
    for nw, c in x._terms.items():
        v = c.substitute_p_inverse()
        if v:
            out[nw] = v
    return _raw_element(STANDARD, out)


# -- rendering ------------------------------------------------------------


def element_text(el: Element) -> str:
    """Canonical text: `coeff * word` terms joined by signs, words with
    T-power first, then L and W factors."""
    items = el.terms()
    if not items:
        return "0"
    if len(items) == 1 and items[0][0].is_unit():
        return str(items[0][1])
    chunks = []
    for nw, c in items:
        wt = nw.text()
        neg = False
        if c.term_count == 1:
            mag = c
            ((_, _), cv), = c.items()
            if cv < 0:
                neg = True
                mag = -c
            if not wt:
                body = str(mag)
            elif mag.is_one():
                body = wt
            else:
                body = f"{mag} * {wt}"
        else:
            body = f"({c}) * {wt}" if wt else f"({c})"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)
