"""Oscillator module over a graded boson-fermion basis.

This is the package's independent cross-check: the module action below is
built directly from ladder operators (never from the rewrite engine), so
agreement between a word and its normal form acting on basis vectors is
genuine evidence for the rewrite rules.

Basis vectors |k, eps> carry an integer grade k and a fermionic occupancy
eps in {0, 1}.  The bosonic ladder weight lambda_k depends on the profile:

    classical   lambda_k = k
    q-deformed  lambda_k = q^k [k]
    two-param   lambda_k = p^-k (q^k - p^k)/(q - p)

L[n] acts as lambda_k multiplied with an n-shift; W[n] additionally flips
the occupancy from 0 to 1 and annihilates occupied vectors.  T has no
module action: only the T-free subalgebra is represented.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import algebra
from .algebra import (
    INDEX_CAP,
    DeformationProfile,
    Element,
    GeneratorSymbol,
    NormalWord,
    Word,
    normalize,
)
from .errors import ArithmeticBoundError, ProfileError
from .laurent import LaurentPoly, q_int


class OscillatorProfile(Enum):
    CLASSICAL = "classical"
    Q_DEFORMED = "q-deformed"
    TWO_PARAM = "two-param"

    @property
    def nvars(self) -> int:
        return 2 if self is OscillatorProfile.TWO_PARAM else 1


CLASSICAL = OscillatorProfile.CLASSICAL
Q_DEFORMED = OscillatorProfile.Q_DEFORMED
TWO_PARAM = OscillatorProfile.TWO_PARAM

# Rewrite profile whose normal forms this oscillator profile cross-checks.
_REWRITE_FOR = {
    Q_DEFORMED: DeformationProfile.STANDARD,
    TWO_PARAM: DeformationProfile.GENERALIZED,
}

GRADE_CAP = INDEX_CAP


class FockLabel(NamedTuple):
    k: int
    eps: int


def _check_grade(k: int) -> int:
    if abs(k) > GRADE_CAP:
        raise ArithmeticBoundError(f"grade {k} beyond cap {GRADE_CAP}")
    return k


@lru_cache(maxsize=8192)
def ladder_weight(profile: OscillatorProfile, k: int) -> LaurentPoly:
    """The weight lambda_k picked up when the lowering operator acts on
    grade k.  Each choice solves its profile's one-step recurrence."""
    if profile is CLASSICAL:
        return LaurentPoly.constant(k)
    if profile is Q_DEFORMED:
        return LaurentPoly.q_power(k) * q_int(k)
    return LaurentPoly.p_power(-k) * q_int(k, 2)


class ModuleVector:
    """Finite linear combination of basis vectors with exact coefficients."""

    __slots__ = ("profile", "_terms")

    def __init__(self, profile: OscillatorProfile, terms: dict | None = None):
        clean = {}
        nv = profile.nvars
        if terms:
            for label, c in terms.items():
                if c.nvars != nv:
                    raise ProfileError("coefficient profile does not match module profile")
                if c:
                    _check_grade(label.k)
                    clean[label] = c
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ModuleVector is immutable")

    def terms(self) -> tuple:
        return tuple(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        if self.profile is not other.profile:
            raise ProfileError("mixed oscillator profiles")
        out = dict(self._terms)
        for label, c in other._terms.items():
            v = out.get(label)
            v = c if v is None else v + c
            if v:
                out[label] = v
            else:
                out.pop(label, None)
        return _raw_vector(self.profile, out)

    def __sub__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return _raw_vector(self.profile, {l: -c for l, c in self._terms.items()})

    def scaled(self, factor) -> "ModuleVector":
        if isinstance(factor, int):
            factor = LaurentPoly.constant(factor, self.profile.nvars)
        out = {}
        for label, c in self._terms.items():
            v = c * factor
            if v:
                out[label] = v
        return _raw_vector(self.profile, out)

    def __eq__(self, other):
        if isinstance(other, ModuleVector):
            return self.profile is other.profile and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.profile, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for (k, eps), c in self.terms():
            ket = f"|{k},{eps}>"
            neg = False
            if c.term_count == 1:
                mag = c
                ((_, _), cv), = c.items()
                if cv < 0:
                    neg = True
                    mag = -c
                body = ket if mag.is_one() else f"{mag} * {ket}"
            else:
                body = f"({c}) * {ket}"
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"<ModuleVector {self}>"

    def at_q_one(self) -> dict:
        """Coefficients evaluated at q = 1, zero values dropped."""
        out = {}
        for label, c in self._terms.items():
            v = c.eval(1)
            if v:
                out[label] = v
        return out


def _raw_vector(profile, terms: dict) -> ModuleVector:
    v = ModuleVector.__new__(ModuleVector)
    object.__setattr__(v, "profile", profile)
    object.__setattr__(v, "_terms", terms)
    return v


def basis_vector(profile: OscillatorProfile, k: int, eps: int) -> ModuleVector:
    if eps not in (0, 1):
        raise ValueError("occupancy must be 0 or 1")
    _check_grade(k)
    return _raw_vector(profile, {FockLabel(k, eps): LaurentPoly.one(profile.nvars)})


# -- operator actions -----------------------------------------------------


def apply_ladder(op: str, v: ModuleVector) -> ModuleVector:
    """Apply one of the four ladder operators: a, a_dag, b, b_dag."""
    profile = v.profile
    out: dict = {}

    def add(label, c):
        prev = out.get(label)
        c = c if prev is None else prev + c
        if c:
            out[label] = c
        else:
            out.pop(label, None)

    if op == "a_dag":
        for (k, eps), c in v._terms.items():
            add(FockLabel(_check_grade(k + 1), eps), c)
    elif op == "a":
        for (k, eps), c in v._terms.items():
            w = ladder_weight(profile, k)
            if w:
                add(FockLabel(_check_grade(k - 1), eps), c * w)
    elif op == "b":
        for (k, eps), c in v._terms.items():
            if eps == 1:
                add(FockLabel(k, 0), c)
    elif op == "b_dag":
        for (k, eps), c in v._terms.items():
            if eps == 0:
                add(FockLabel(k, 1), c)
    else:
        raise ValueError(f"unknown ladder operator {op!r}")
    return _raw_vector(profile, out)


def shift(n: int, v: ModuleVector) -> ModuleVector:
    """The pure grade shift: the n-th power of the raising operator,
    meaningful for every integer n since raising is invertible."""
    out = {}
    for (k, eps), c in v._terms.items():
        out[FockLabel(_check_grade(k + n), eps)] = c
    return _raw_vector(v.profile, out)


def apply_generator(sym: GeneratorSymbol, v: ModuleVector) -> ModuleVector:
    """Module action of one algebra generator (T-free subalgebra only)."""
    profile = v.profile
    kind = sym.kind
    if kind == "L":
        n = sym.index
        out: dict = {}
        for (k, eps), c in v._terms.items():
            w = ladder_weight(profile, k)
            if not w:
                continue
            label = FockLabel(_check_grade(k + n), eps)
            prev = out.get(label)
            c = c * w if prev is None else prev + c * w
            if c:
                out[label] = c
            else:
                out.pop(label, None)
        return _raw_vector(profile, out)
    if kind == "W":
        n = sym.index
        out = {}
        for (k, eps), c in v._terms.items():
            if eps:
                continue
            w = ladder_weight(profile, k)
            if not w:
                continue
            label = FockLabel(_check_grade(k + n), 1)
            prev = out.get(label)
            c = c * w if prev is None else prev + c * w
            if c:
                out[label] = c
        return _raw_vector(profile, out)
    raise ProfileError("T has no module action; only the T-free subalgebra is represented")


def apply_word(word: Word, v: ModuleVector) -> ModuleVector:
    """Act with a free word, rightmost symbol first."""
    for sym in reversed(word):
        if v.is_zero():
            break
        v = apply_generator(sym, v)
    return v


def apply_element(x: Element, v: ModuleVector) -> ModuleVector:
    """Act with a normally ordered Element on a module vector."""
    expected = _REWRITE_FOR.get(v.profile)
    if expected is None or x.profile is not expected:
        raise ProfileError(
            f"profile {v.profile.value} represents the {expected.value if expected else '?'} algebra"
        )
    total = _raw_vector(v.profile, {})
    for nw, c in x._terms.items():
        if nw.t_exp:
            raise ProfileError("T has no module action; only the T-free subalgebra is represented")
        vec = apply_word(nw.generator_sequence(), v)
        if not vec.is_zero():
            total = total + vec.scaled(c)
    return total


# -- relation checks ------------------------------------------------------


def _op_chain(ops):
    """ops: sequence of ("ladder", name) / ("gen", sym) / ("shift", n),
    leftmost op acting last."""

    def run(v):
        for op in reversed(ops):
            tag, arg = op
            if tag == "ladder":
                v = apply_ladder(arg, v)
            elif tag == "gen":
                v = apply_generator(arg, v)
            else:
                v = shift(arg, v)
        return v

    return run


def _relation_sides(rel, profile: OscillatorProfile):
    """Operator identities as (scalar, ops) term lists, one (lhs, rhs)
    pair per identity covered by the relation id."""
    nv = profile.nvars
    one = LaurentPoly.one(nv)
    q = lambda e: LaurentPoly.q_power(e, nv)

    if isinstance(rel, str):
        rel = (rel,)
    name = rel[0]

    if name == "boson":
        if profile is not CLASSICAL:
            raise ProfileError("rel 'boson' applies to the classical profile")
        yield ([(one, (("ladder", "a"), ("ladder", "a_dag"))),
                (-one, (("ladder", "a_dag"), ("ladder", "a")))],
               [(one, ())])
        return
    if name == "qboson":
        if profile is not Q_DEFORMED:
            raise ProfileError("rel 'qboson' applies to the q-deformed profile")
        yield ([(q(-1), (("ladder", "a"), ("ladder", "a_dag"))),
                (-q(1), (("ladder", "a_dag"), ("ladder", "a")))],
               [(one, ())])
        return
    if name == "gboson":
        if profile is not TWO_PARAM:
            raise ProfileError("rel 'gboson' applies to the two-param profile")
        yield ([(LaurentPoly.p_power(1), (("ladder", "a"), ("ladder", "a_dag"))),
                (-q(1), (("ladder", "a_dag"), ("ladder", "a")))],
               [(one, ())])
        return
    if name == "fermion":
        yield ([(one, (("ladder", "b"), ("ladder", "b_dag"))),
                (one, (("ladder", "b_dag"), ("ladder", "b")))],
               [(one, ())])
        yield ([(one, (("ladder", "b"), ("ladder", "b")))], [])
        yield ([(one, (("ladder", "b_dag"), ("ladder", "b_dag")))], [])
        return
    if name == "qd":
        if profile is not Q_DEFORMED:
            raise ProfileError("rel 'qd' applies to the q-deformed profile")
        (n,) = rel[1:]
        yield ([(q(-n), (("ladder", "a"), ("shift", n))),
                (-q(n), (("shift", n), ("ladder", "a")))],
               [(q_int(n), (("shift", n - 1),))])
        return
    if name == "gqd":
        if profile is not TWO_PARAM:
            raise ProfileError("rel 'gqd' applies to the two-param profile")
        (n,) = rel[1:]
        yield ([(LaurentPoly.p_power(n), (("ladder", "a"), ("shift", n))),
                (-q(n), (("shift", n), ("ladder", "a")))],
               [(q_int(n, 2), (("shift", n - 1),))])
        return

    m, n = rel[1:]
    gl = lambda i: ("gen", GeneratorSymbol("L", i))
    gw = lambda i: ("gen", GeneratorSymbol("W", i))
    if name == "LE":
        if profile is not CLASSICAL:
            raise ProfileError("rel 'LE' applies to the classical profile")
        c = LaurentPoly.constant(n - m)
        yield ([(one, (gl(m), gl(n))), (-one, (gl(n), gl(m)))],
               [(c, (gl(m + n),))] if n != m else [])
        yield ([(one, (gl(m), gw(n))), (-one, (gw(n), gl(m)))],
               [(c, (gw(m + n),))] if n != m else [])
        yield ([(one, (gw(m), gw(n))), (-one, (gw(n), gw(m)))], [])
        return
    if name == "qLE":
        if profile is not Q_DEFORMED:
            raise ProfileError("rel 'qLE' applies to the q-deformed profile")
        c = q_int(m - n)
        yield ([(q(n - m), (gl(n), gl(m))), (-q(m - n), (gl(m), gl(n)))],
               [(c, (gl(m + n),))] if c else [])
        yield ([(q(n - m), (gl(n), gw(m))), (-q(m - n), (gw(m), gl(n)))],
               [(c, (gw(m + n),))] if c else [])
        yield ([(q(n - m), (gw(n), gw(m))), (-q(m - n), (gw(m), gw(n)))], [])
        return
    if name == "gq":
        if profile is not TWO_PARAM:
            raise ProfileError("rel 'gq' applies to the two-param profile")
        c = -q_int(n - m, 2)
        pnm = LaurentPoly.p_power(n - m)
        yield ([(q(n - m), (gl(n), gl(m))), (-pnm, (gl(m), gl(n)))],
               [(c, (gl(m + n),))] if c else [])
        yield ([(q(n - m), (gl(n), gw(m))), (-pnm, (gw(m), gl(n)))],
               [(c, (gw(m + n),))] if c else [])
        yield ([(q(n - m), (gw(n), gw(m))), (-pnm, (gw(m), gw(n)))], [])
        return
    raise ValueError(f"unknown relation id {rel!r}")


def _eval_side(side, v: ModuleVector) -> ModuleVector:
    total = _raw_vector(v.profile, {})
    for scalar, ops in side:
        vec = _op_chain(ops)(v)
        if not vec.is_zero():
            total = total + vec.scaled(scalar)
    return total


def check_relation(rel, profile: OscillatorProfile, k_range) -> tuple:
    """Verify an operator identity on every |k, eps> with k in k_range.

    rel is an id string or a tuple (id, indices...): "boson", "fermion",
    "qboson", "gboson", ("qd", n), ("gqd", n), ("LE", m, n), ("qLE", m, n),
    ("gq", m, n).  Returns (ok, witness) with a printed counterexample."""
    lo, hi = k_range
    sides = list(_relation_sides(rel, profile))
    for k in range(lo, hi + 1):
        for eps in (0, 1):
            v = basis_vector(profile, k, eps)
            for lhs, rhs in sides:
                left = _eval_side(lhs, v)
                right = _eval_side(rhs, v)
                if left != right:
                    return False, (
                        f"rel {rel!r} on |{k},{eps}>: lhs = {left}, rhs = {right}"
                    )
    return True, None


def oracle_consistency(word: Word, profile: OscillatorProfile, k_range) -> tuple:
    """Compare the raw word action with the action of its normal form on
    every basis vector in range.  The classical profile compares both sides
    of the standard normal form at q = 1."""
    word = tuple(word)
    for sym in word:
        if sym.kind not in ("L", "W"):
            raise ProfileError("oracle words must be T-free")
    lo, hi = k_range
    if profile is CLASSICAL:
        nf = normalize(word, DeformationProfile.STANDARD)
        for k in range(lo, hi + 1):
            for eps in (0, 1):
                direct = apply_word(word, basis_vector(CLASSICAL, k, eps))
                via_nf = apply_element(nf, basis_vector(Q_DEFORMED, k, eps))
                if direct.at_q_one() != via_nf.at_q_one():
                    return False, (
                        f"word {word_text(word)} on |{k},{eps}>: "
                        f"direct = {direct}, normal form at q=1 differs"
                    )
        return True, None
    nf = normalize(word, _REWRITE_FOR[profile])
    for k in range(lo, hi + 1):
        for eps in (0, 1):
            v = basis_vector(profile, k, eps)
            direct = apply_word(word, v)
            via_nf = apply_element(nf, v)
            if direct != via_nf:
                return False, (
                    f"word {word_text(word)} on |{k},{eps}>: "
                    f"direct = {direct}, via normal form = {via_nf}"
                )
    return True, None


def word_text(word: Word) -> str:
    pieces = []
    for sym in word:
        if sym.kind == "T":
            pieces.append("T")
        elif sym.kind == "Tinv":
            pieces.append("T^-1")
        else:
            pieces.append(f"{sym.kind}[{sym.index}]")
    return " ".join(pieces) if pieces else "1"
