"""Sparse multivariate polynomials in the fixed symbols x, y, a, b, t.

Coefficients live in the rational-function field of q (QRat).  The symbol
set is a closed enumeration; q itself is not a symbol, it lives inside the
coefficients where denominators and negative powers are allowed.  Terms are
iterated in graded lexicographic order with precedence x > y > a > b > t,
so rendering is canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .qfield import ONE as QR_ONE, QRat, Scalar, ZERO as QR_ZERO

CoeffLike = Union[QRat, int, Fraction]


class Symbol(Enum):
    """The closed symbol set; the member order fixes monomial precedence."""

    x = 0
    y = 1
    a = 2
    b = 3
    t = 4


_NSYM = len(Symbol)
_ZEROS = (0,) * _NSYM


@dataclass(frozen=True)
class Monomial:
    """Exponent vector over the symbol set (zero exponents implicit)."""

    exps: tuple[int, int, int, int, int]

    @property
    def exponents(self) -> dict[Symbol, int]:
        return {s: e for s, e in zip(Symbol, self.exps) if e}

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __str__(self) -> str:
        parts = []
        for s, e in zip(Symbol, self.exps):
            if e == 1:
                parts.append(s.name)
            elif e:
                parts.append(f"{s.name}^{e}")
        return "*".join(parts)


def _as_coeff(v: CoeffLike) -> QRat:
    if isinstance(v, QRat):
        return v
    return QRat.from_scalar(v)


class MPoly:
    """Immutable sparse polynomial; no stored coefficient is zero."""

    __slots__ = ("_t",)

    def __init__(self, terms: dict | None = None):
        t: dict[tuple, QRat] = {}
        if terms:
            for mono, c in terms.items():
                key = mono.exps if isinstance(mono, Monomial) else tuple(mono)
                c = _as_coeff(c)
                if not c.is_zero():
                    t[key] = c
        self._t = t

    # -- construction ---------------------------------------------------------

    @classmethod
    def _raw(cls, t: dict) -> MPoly:
        self = object.__new__(cls)
        self._t = t
        return self

    @classmethod
    def zero(cls) -> MPoly:
        return _ZERO

    @classmethod
    def one(cls) -> MPoly:
        return _ONE

    @classmethod
    def const(cls, c: CoeffLike) -> MPoly:
        c = _as_coeff(c)
        return cls._raw({_ZEROS: c}) if not c.is_zero() else _ZERO

    @classmethod
    def var(cls, s: Symbol) -> MPoly:
        exps = [0] * _NSYM
        exps[s.value] = 1
        return cls._raw({tuple(exps): QR_ONE})

    # -- views ----------------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, QRat]:
        return {Monomial(k): v for k, v in self._sorted_items()}

    def _sorted_items(self):
        return sorted(self._t.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and _ZEROS in self._t)

    def constant_coeff(self) -> QRat:
        return self._t.get(_ZEROS, QR_ZERO)

    def degree_in(self, s: Symbol) -> int:
        """Highest exponent of s (zero when s is absent or the polynomial is 0)."""
        i = s.value
        return max((k[i] for k in self._t), default=0)

    def total_degree(self) -> int:
        return max((sum(k) for k in self._t), default=0)

    def free_of(self, *symbols: Symbol) -> bool:
        idx = [s.value for s in symbols]
        return all(all(k[i] == 0 for i in idx) for k in self._t)

    # -- ring arithmetic --------------------------------------------------------

    def __add__(self, other) -> MPoly:
        other = _as_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._t:
            return other
        if not other._t:
            return self
        out = dict(self._t)
        for k, c in other._t.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other) -> MPoly:
        other = _as_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MPoly:
        other = _as_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> MPoly:
        if isinstance(other, (QRat, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        if not self._t or not other._t:
            return _ZERO
        out: dict[tuple, QRat] = {}
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                k = tuple(e1 + e2 for e1, e2 in zip(k1, k2))
                c = c1 * c2
                s = out.get(k)
                if s is None:
                    out[k] = c
                else:
                    s = s + c
                    if s.is_zero():
                        del out[k]
                    else:
                        out[k] = s
        return MPoly._raw(out)

    __rmul__ = __mul__

    def scale(self, c: CoeffLike) -> MPoly:
        c = _as_coeff(c)
        if c.is_zero():
            return _ZERO
        if c.is_one():
            return self
        return MPoly._raw({k: v * c for k, v in self._t.items()})

    def __pow__(self, n: int) -> MPoly:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("polynomial power must be nonnegative")
        acc = _ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            n >>= 1
            if n:
                base = base * base
        return acc

    # -- substitution and specialization ----------------------------------------

    def subst(self, s: Symbol, value) -> MPoly:
        """Exact substitution s := value (value may be an MPoly or a coefficient)."""
        return self.subst_many({s: value})

    def subst_many(self, assignment: dict[Symbol, object]) -> MPoly:
        """Simultaneous substitution of several symbols."""
        vals = {}
        for s, v in assignment.items():
            vals[s.value] = v if isinstance(v, MPoly) else MPoly.const(_as_coeff(v))
        out = _ZERO
        powers: dict[tuple[int, int], MPoly] = {}
        for k, c in self._t.items():
            rest = list(k)
            factor = None
            for i, v in vals.items():
                e = k[i]
                rest[i] = 0
                if e:
                    p = powers.get((i, e))
                    if p is None:
                        p = v ** e
                        powers[(i, e)] = p
                    factor = p if factor is None else factor * p
            term = MPoly._raw({tuple(rest): c})
            if factor is not None:
                term = term * factor
            out = out + term
        return out

    def eval_q1(self) -> MPoly:
        """Specialize every coefficient at q = 1; raises PoleAtPoint on a pole."""
        out: dict[tuple, QRat] = {}
        for k, c in self._t.items():
            v = c.eval(1)
            if v:
                out[k] = QRat.from_scalar(v)
        return MPoly._raw(out)

    def eval_at(self, q0: Scalar, values: dict[Symbol, Scalar]) -> Fraction:
        """Full numeric evaluation; every occurring symbol must be assigned."""
        total = Fraction(0)
        for k, c in self._t.items():
            term = c.eval(q0)
            for s in Symbol:
                e = k[s.value]
                if e:
                    term *= Fraction(values[s]) ** e
            total += term
        return total

    def coeffs_in(self, s: Symbol) -> list[MPoly]:
        """Coefficients with respect to s, index d holding the s**d part."""
        i = s.value
        buckets: list[dict] = [{} for _ in range(self.degree_in(s) + 1)]
        for k, c in self._t.items():
            e = k[i]
            rest = list(k)
            rest[i] = 0
            buckets[e][tuple(rest)] = c
        return [MPoly._raw(b) for b in buckets]

    def coeff_of(self, mono: Monomial | tuple) -> QRat:
        key = mono.exps if isinstance(mono, Monomial) else tuple(mono)
        return self._t.get(key, QR_ZERO)

    # -- comparison and rendering --------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _as_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts: list[str] = []
        for k, c in self._sorted_items():
            mono = str(Monomial(k))
            neg = c.is_negative()
            mag = -c if neg else c
            if not mono:
                body = _wrap_coeff(str(mag))
            elif mag.is_one():
                body = mono
            else:
                body = f"{_wrap_coeff(str(mag))}*{mono}"
            if not parts:
                parts.append(("-" + body) if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self})"


def _wrap_coeff(s: str) -> str:
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == " " and depth == 0:
            return f"({s})"
    return s


def _as_mpoly(v) -> MPoly:
    if isinstance(v, MPoly):
        return v
    if isinstance(v, (QRat, int, Fraction)):
        return MPoly.const(v)
    return NotImplemented


_ZERO = MPoly._raw({})
_ONE = MPoly._raw({_ZEROS: QR_ONE})


# --------------------------------------------------------------------------
# Operation-style surface.
# --------------------------------------------------------------------------

def mp_arith(op: str, lhs: MPoly, rhs=None) -> MPoly:
    """Ring arithmetic dispatcher: op in {add, sub, mul, neg, scale, pow}."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "neg":
        return -lhs
    if op == "scale":
        return lhs.scale(rhs)
    if op == "pow":
        return lhs ** rhs
    raise ValueError(f"unknown operation {op!r}")


def mp_subst(p: MPoly, s: Symbol, value) -> MPoly:
    return p.subst(s, value)


def mp_eval_q1(p: MPoly) -> MPoly:
    return p.eval_q1()


def mp_coeffs_in(p: MPoly, s: Symbol) -> list[MPoly]:
    return p.coeffs_in(s)
