"""Exact Laurent polynomials over the integers.

Coefficients live in Z[q, q^-1] (one-variable profile) or in
Z[q, q^-1, p, p^-1] (two-variable profile, p playing the role of a second
deformation unit).  Terms are kept sparse as a dict mapping exponent pairs
(e_q, e_p) to nonzero integer coefficients; the one-variable profile keeps
e_p = 0 everywhere.  Arithmetic is always exact: integers are unbounded,
but exponents are confined to a checked signed 64-bit window so downstream
exponent formulas cannot silently run away.

Operands of different variable profiles never mix; that is a ProfileError,
not a coercion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import (
    ArithmeticBoundError,
    EvaluationDomainError,
    ProfileError,
    UnsupportedInverseError,
)

# Exponents are semantically int64; Python ints never wrap, so the window is
# enforced by hand and violations raise instead.
EXPONENT_BOUND = 2**63 - 1

# Below this many coefficient pair-products, plain dict loops beat the
# packing overhead of the convolution fast path.
_SMALL_PRODUCT = 96

# Guards for the numpy fast path: dense span cap and int64 headroom.
_MAX_DENSE_SPAN = 1 << 16
_INT64_SAFE = 1 << 62


def _check_exponent(e: int) -> int:
    if e > EXPONENT_BOUND or e < -EXPONENT_BOUND:
        raise ArithmeticBoundError(
            f"exponent {e} left the checked 64-bit window"
        )
    return e


def _mul_terms_small(a: dict, b: dict) -> dict:
    out: dict = {}
    get = out.get
    for (qa, pa), ca in a.items():
        for (qb, pb), cb in b.items():
            key = (qa + qb, pa + pb)
            v = get(key, 0) + ca * cb
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def _mul_terms_conv(a: dict, b: dict):
    """Exact product via int64 convolution, or None if the guards fail.

    Exponent pairs are packed into one lane index; the shared stride is the
    combined q-span, so lane sums never carry into the p part.
    """
    ka = list(a)
    kb = list(b)
    minqa = min(e for e, _ in ka)
    maxqa = max(e for e, _ in ka)
    minpa = min(e for _, e in ka)
    maxpa = max(e for _, e in ka)
    minqb = min(e for e, _ in kb)
    maxqb = max(e for e, _ in kb)
    minpb = min(e for _, e in kb)
    maxpb = max(e for _, e in kb)
    sq = (maxqa - minqa) + (maxqb - minqb) + 1
    sp = (maxpa - minpa) + (maxpb - minpb) + 1
    if sq * sp > _MAX_DENSE_SPAN:
        return None
    ma = max(abs(c) for c in a.values())
    mb = max(abs(c) for c in b.values())
    if min(len(a), len(b)) * ma * mb >= _INT64_SAFE:
        return None

    la = (maxqa - minqa) + (maxpa - minpa) * sq + 1
    lb = (maxqb - minqb) + (maxpb - minpb) * sq + 1
    va = np.zeros(la, dtype=np.int64)
    vb = np.zeros(lb, dtype=np.int64)
    for (eq, ep), c in a.items():
        va[(eq - minqa) + (ep - minpa) * sq] = c
    for (eq, ep), c in b.items():
        vb[(eq - minqb) + (ep - minpb) * sq] = c
    conv = np.convolve(va, vb)
    minq = minqa + minqb
    minp = minpa + minpb
    out = {}
    for i in np.flatnonzero(conv).tolist():
        out[(minq + i % sq, minp + i // sq)] = int(conv[i])
    return out


def _mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    if len(a) * len(b) > _SMALL_PRODUCT:
        out = _mul_terms_conv(a, b)
        if out is not None:
            for eq, ep in out:
                _check_exponent(eq)
                _check_exponent(ep)
            return out
    out = _mul_terms_small(a, b)
    for eq, ep in out:
        _check_exponent(eq)
        _check_exponent(ep)
    return out


class LaurentPoly:
    """Immutable sparse Laurent polynomial with a fixed variable profile.

    nvars is 1 (q only) or 2 (q and p).  Never mutate ``_terms``; all
    operations hand back fresh objects, which keeps sharing safe.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, terms: dict | None = None, nvars: int = 1):
        if nvars not in (1, 2):
            raise ProfileError(f"nvars must be 1 or 2, got {nvars}")
        clean: dict = {}
        if terms:
            for key, c in terms.items():
                if not c:
                    continue
                eq, ep = key
                if ep and nvars == 1:
                    raise ProfileError("p-exponent in a one-variable polynomial")
                clean[(_check_exponent(eq), _check_exponent(ep))] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(nvars: int = 1) -> "LaurentPoly":
        return _ZERO[nvars]

    @staticmethod
    def one(nvars: int = 1) -> "LaurentPoly":
        return _ONE[nvars]

    @staticmethod
    def constant(c: int, nvars: int = 1) -> "LaurentPoly":
        return LaurentPoly({(0, 0): c}, nvars)

    @staticmethod
    def monomial(c: int, eq: int, ep: int = 0, nvars: int | None = None) -> "LaurentPoly":
        if nvars is None:
            nvars = 2 if ep else 1
        return LaurentPoly({(eq, ep): c}, nvars)

    @staticmethod
    def q_power(e: int, nvars: int = 1) -> "LaurentPoly":
        return LaurentPoly({(e, 0): 1}, nvars)

    @staticmethod
    def p_power(e: int) -> "LaurentPoly":
        return LaurentPoly({(0, e): 1}, 2)

    # -- inspection -----------------------------------------------------

    def items(self) -> tuple:
        """Terms as ((e_q, e_p), coeff) pairs in descending canonical order."""
        return tuple(sorted(self._terms.items(), reverse=True))

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> int:
        """The integer value of a constant polynomial."""
        if not self._terms:
            return 0
        if set(self._terms) == {(0, 0)}:
            return self._terms[(0, 0)]
        raise ValueError("polynomial is not constant")

    # -- ring structure -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ProfileError("mixed variable profiles in arithmetic")
            return other
        if isinstance(other, int):
            return LaurentPoly({(0, 0): other}, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
        return _wrap(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return _wrap({k: -c for k, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) - c
            if v:
                out[key] = v
            else:
                del out[key]
        return _wrap(out, self.nvars)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _wrap(_mul_terms(self._terms, other._terms), self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise UnsupportedInverseError(
                    "negative power of a non-monomial Laurent polynomial"
                )
            ((eq, ep), c), = self._terms.items()
            if c not in (1, -1):
                raise UnsupportedInverseError(
                    "monomial coefficient must be a unit to invert"
                )
            base = LaurentPoly({(-eq, -ep): c}, self.nvars)
            return base ** (-k)
        result = _ONE[self.nvars]
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self._terms
            return self._terms == {(0, 0): other}
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    # -- specializations ------------------------------------------------

    def eval(self, q_val: Fraction, p_val: Fraction | None = None) -> Fraction:
        """Exact evaluation at nonzero rational points."""
        q_val = Fraction(q_val)
        if q_val == 0:
            raise EvaluationDomainError("q = 0 is outside the Laurent domain")
        if self.nvars == 2:
            if p_val is None:
                raise ProfileError("two-variable polynomial needs a p value")
            p_val = Fraction(p_val)
            if p_val == 0:
                raise EvaluationDomainError("p = 0 is outside the Laurent domain")
        elif p_val is not None:
            raise ProfileError("one-variable polynomial takes no p value")
        total = Fraction(0)
        for (eq, ep), c in self._terms.items():
            v = c * q_val**eq
            if ep:
                v *= p_val**ep
            total += v
        return total

    def substitute_p_inverse(self) -> "LaurentPoly":
        """Collapse the two-variable profile by sending p to q^-1."""
        if self.nvars != 2:
            raise ProfileError("substitution applies to two-variable polynomials")
        out: dict = {}
        for (eq, ep), c in self._terms.items():
            key = (_check_exponent(eq - ep), 0)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
        return _wrap(out, 1)

    # -- rendering ------------------------------------------------------

    def _monomial_text(self, eq: int, ep: int, c: int) -> str:
        pieces = []
        if abs(c) != 1 or (eq == 0 and ep == 0):
            pieces.append(str(abs(c)))
        if eq:
            pieces.append("q" if eq == 1 else f"q^{eq}")
        if ep:
            pieces.append("p" if ep == 1 else f"p^{ep}")
        return "*".join(pieces)

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for (eq, ep), c in self.items():
            body = self._monomial_text(eq, ep, c)
            if not chunks:
                chunks.append(f"-{body}" if c < 0 else body)
            else:
                chunks.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"LaurentPoly({self._terms!r}, nvars={self.nvars})"

    def to_json_obj(self) -> dict:
        terms = []
        for (eq, ep), c in self.items():
            entry: dict = {"eq": eq}
            if self.nvars == 2:
                entry["ep"] = ep
            entry["c"] = str(c)
            terms.append(entry)
        return {"terms": terms}


def _wrap(terms: dict, nvars: int) -> LaurentPoly:
    poly = LaurentPoly.__new__(LaurentPoly)
    object.__setattr__(poly, "nvars", nvars)
    object.__setattr__(poly, "_terms", terms)
    return poly


_ZERO = {1: LaurentPoly({}, 1), 2: LaurentPoly({}, 2)}
_ONE = {1: LaurentPoly({(0, 0): 1}, 1), 2: LaurentPoly({(0, 0): 1}, 2)}


# -- deformed integers ---------------------------------------------------


def _q_int_terms(n: int, nvars: int) -> dict:
    if n == 0:
        return {}
    if nvars == 1:
        if n < 0:
            return {k: -c for k, c in _q_int_terms(-n, 1).items()}
        return {(e, 0): 1 for e in range(n - 1, -n - 1, -2)}
    if n > 0:
        return {(i, n - 1 - i): 1 for i in range(n)}
    # Negative two-variable case keeps the defining exact division
    # (q - p) * value = q^n - p^n true, so the value picks up the unit
    # -q^n p^n relative to the positive case.
    m = -n
    return {(i - m, -1 - i): -1 for i in range(m)}


@lru_cache(maxsize=4096)
def _q_int_cached(n: int, nvars: int) -> LaurentPoly:
    return _wrap(_q_int_terms(n, nvars), nvars)


def q_int(n: int, nvars: int = 1) -> LaurentPoly:
    """The deformed integer [n]: a symmetric q-power sum for one variable,
    the exact quotient (q^n - p^n)/(q - p) for two."""
    if abs(n) <= 512:
        return _q_int_cached(n, nvars)
    return _wrap(_q_int_terms(n, nvars), nvars)


def q_identity_check(m: int, n: int) -> bool:
    """Both one-variable splitting identities for the pair (m, n):
    q^n [m] - q^m [n] = [m - n] and q^-n [m] + q^m [n] = [m + n]."""
    qm = q_int(m)
    qn = q_int(n)
    first = LaurentPoly.q_power(n) * qm - LaurentPoly.q_power(m) * qn == q_int(m - n)
    second = LaurentPoly.q_power(-n) * qm + LaurentPoly.q_power(m) * qn == q_int(m + n)
    return first and second


def lp_eval(a: LaurentPoly, q_val, p_val=None) -> Fraction:
    return a.eval(q_val, p_val)
