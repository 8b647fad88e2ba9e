"""Exact arithmetic in the field of rational functions of q over the rationals.

A value is a reduced fraction of polynomials in the single indeterminate q.
The canonical form is unique: numerator and denominator share no polynomial
factor, the denominator is a primitive integer polynomial with positive
leading coefficient, and the remaining rational scalar is absorbed into the
numerator.  Equality is therefore plain representation equality, and the
text rendering of a value is bit-reproducible.

All values are immutable and freely shareable between threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Sequence, Union

Scalar = Union[int, Fraction]


class DivisionByZero(ZeroDivisionError):
    """Division by the zero element, or zero raised to a negative power."""


class PoleAtPoint(ArithmeticError):
    """Evaluation at a point where the reduced denominator vanishes."""

    def __init__(self, point: Fraction):
        super().__init__(f"denominator vanishes at q = {point}")
        self.point = point


# --------------------------------------------------------------------------
# Dense integer polynomials, little endian, as plain tuples.  () is zero.
# These helpers are internal; the public surface is QPoly / QRat below.
# --------------------------------------------------------------------------

IPoly = tuple  # tuple[int, ...]


def _trim(cs: list) -> IPoly:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(f: IPoly, g: IPoly) -> IPoly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return _trim(out)


def _pmul(f: IPoly, g: IPoly) -> IPoly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(out)


def _pscale(f: IPoly, k: int) -> IPoly:
    if k == 0:
        return ()
    return tuple(c * k for c in f)


def _pshift(f: IPoly, k: int) -> IPoly:
    """Multiply by q**k (k >= 0)."""
    if not f:
        return ()
    return (0,) * k + tuple(f)


def _valuation(f: IPoly) -> int:
    for i, c in enumerate(f):
        if c:
            return i
    return 0


def _content(f: IPoly) -> int:
    g = 0
    for c in f:
        g = _int_gcd(g, c)
        if g == 1:
            return 1
    return g


def _primitive(f: IPoly) -> tuple[int, IPoly]:
    """Split f as content * primitive part with positive leading coefficient.

    The content carries the sign; the primitive part has lc > 0.
    """
    if not f:
        return 0, ()
    c = _content(f)
    if f[-1] < 0:
        c = -c
    if c == 1:
        return 1, f
    return c, tuple(x // c for x in f)


def _divexact(f: IPoly, g: IPoly) -> IPoly:
    """Exact polynomial division; g must divide f over the integers."""
    if not f:
        return ()
    if g == (1,):
        return f
    df, dg = len(f) - 1, len(g) - 1
    rem = list(f)
    out = [0] * (df - dg + 1)
    lg = g[-1]
    for k in range(df - dg, -1, -1):
        c = rem[dg + k]
        if c:
            qc = c // lg
            out[k] = qc
            for i, gc in enumerate(g):
                rem[k + i] -= qc * gc
    return _trim(out)


def _prem(f: IPoly, g: IPoly) -> IPoly:
    """Remainder of f by g up to a scalar multiple (exact integer steps)."""
    dg = len(g) - 1
    lg = g[-1]
    cur = list(f)
    while len(cur) - 1 >= dg and cur:
        lf = cur[-1]
        cur = [c * lg for c in cur]
        shift = len(cur) - 1 - dg
        for i, gc in enumerate(g):
            cur[shift + i] -= lf * gc
        while cur and cur[-1] == 0:
            cur.pop()
    return tuple(cur)


def _pgcd(f: IPoly, g: IPoly) -> IPoly:
    """Primitive gcd with positive leading coefficient (gcd over the rationals)."""
    if not f:
        return _primitive(g)[1]
    if not g:
        return _primitive(f)[1]
    vf, vg = _valuation(f), _valuation(g)
    v = min(vf, vg)
    f = _primitive(f[vf:])[1]
    g = _primitive(g[vg:])[1]
    if len(f) < len(g):
        f, g = g, f
    while g:
        if len(g) == 1:
            f = (1,)
            break
        r = _prem(f, g)
        f, g = g, _primitive(r)[1]
    return _pshift(f, v)


def _peval(f: IPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _render_terms(pairs) -> str:
    """Join (negative, body) pairs into a canonical sum string."""
    parts: list[str] = []
    for neg, body in pairs:
        if not parts:
            parts.append(("-" + body) if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def render_poly(coeffs: Sequence[Fraction]) -> str:
    """Canonical text of a polynomial in q, highest power first."""
    pairs = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if i == 0:
            body = str(mag)
        else:
            var = "q" if i == 1 else f"q^{i}"
            body = var if mag == 1 else f"{mag}*{var}"
        pairs.append((neg, body))
    return _render_terms(pairs)


@dataclass(frozen=True)
class QPoly:
    """Polynomial in q with rational coefficients, index i holding the q**i term."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def of(cls, coeffs: Sequence[Scalar]) -> QPoly:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def eval(self, q0: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(q0) + c
        return acc

    def __str__(self) -> str:
        return render_poly(self.coeffs)


class QRat:
    """Element of the field of rational functions in q, in canonical form.

    Internally stored as a rational scalar times a quotient of coprime
    primitive integer polynomials with positive leading coefficients.
    """

    __slots__ = ("_c", "_np", "_dp")

    def __init__(self, num: Sequence[Scalar], den: Sequence[Scalar] = (1,)):
        cn, pn = _fraction_coeffs_to_int(num)
        cd, pd = _fraction_coeffs_to_int(den)
        if not pd:
            raise DivisionByZero("zero denominator")
        if not pn:
            self._c, self._np, self._dp = Fraction(0), (), (1,)
            return
        sn, pn = _primitive(pn)
        sd, pd = _primitive(pd)
        g = _pgcd(pn, pd)
        if g != (1,):
            pn = _divexact(pn, g)
            pd = _divexact(pd, g)
        self._c = Fraction(cd * sn, cn * sd)
        self._np = pn
        self._dp = pd

    # -- construction -------------------------------------------------------

    @classmethod
    def _make(cls, c: Fraction, np: IPoly, dp: IPoly) -> QRat:
        self = object.__new__(cls)
        if c == 0 or not np:
            self._c, self._np, self._dp = Fraction(0), (), (1,)
        else:
            self._c, self._np, self._dp = c, np, dp
        return self

    @classmethod
    def from_scalar(cls, v: Scalar) -> QRat:
        f = Fraction(v)
        return cls._make(f, (1,), (1,)) if f else ZERO

    @classmethod
    def q_power(cls, k: int) -> QRat:
        """q**k as a field element; negative k lands the power in the denominator."""
        if k >= 0:
            return cls._make(Fraction(1), _pshift((1,), k), (1,))
        return cls._make(Fraction(1), (1,), _pshift((1,), -k))

    # -- views ---------------------------------------------------------------

    @property
    def num(self) -> QPoly:
        return QPoly(tuple(self._c * k for k in self._np))

    @property
    def den(self) -> QPoly:
        return QPoly(tuple(Fraction(k) for k in self._dp))

    def is_zero(self) -> bool:
        return not self._np

    def is_one(self) -> bool:
        return self._c == 1 and self._np == (1,) and self._dp == (1,)

    def is_constant(self) -> bool:
        """True when the value is a plain rational number (free of q)."""
        return len(self._np) <= 1 and self._dp == (1,)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self._c if self._np else Fraction(0)

    def is_negative(self) -> bool:
        """Sign of the canonical numerator (denominator is always positive-led)."""
        return self._c < 0

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        g = _pgcd(self._dp, other._dp)
        d1 = _divexact(self._dp, g)
        d2 = _divexact(other._dp, g)
        c1, c2 = self._c, other._c
        lden = c1.denominator * c2.denominator // _int_gcd(c1.denominator, c2.denominator)
        m1 = c1.numerator * (lden // c1.denominator)
        m2 = c2.numerator * (lden // c2.denominator)
        t = _padd(_pscale(_pmul(self._np, d2), m1), _pscale(_pmul(other._np, d1), m2))
        if not t:
            return ZERO
        ct, tp = _primitive(t)
        g2 = _pgcd(tp, g)
        if g2 != (1,):
            tp = _divexact(tp, g2)
            g = _divexact(g, g2)
        den = _pmul(_pmul(d1, g), d2)
        return QRat._make(Fraction(ct, lden), tp, den)

    __radd__ = __add__

    def __neg__(self) -> QRat:
        return QRat._make(-self._c, self._np, self._dp)

    def __sub__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        g1 = _pgcd(self._np, other._dp)
        g2 = _pgcd(other._np, self._dp)
        np = _pmul(_divexact(self._np, g1), _divexact(other._np, g2))
        dp = _pmul(_divexact(self._dp, g2), _divexact(other._dp, g1))
        return QRat._make(self._c * other._c, np, dp)

    __rmul__ = __mul__

    def inv(self) -> QRat:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return QRat._make(1 / self._c, self._dp, self._np)

    def __truediv__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int) -> QRat:
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return ONE
        base = self
        if n < 0:
            base = self.inv()
            n = -n
        np, dp = (1,), (1,)
        bn, bd = base._np, base._dp
        e = n
        while e:
            if e & 1:
                np = _pmul(np, bn)
                dp = _pmul(dp, bd)
            e >>= 1
            if e:
                bn = _pmul(bn, bn)
                bd = _pmul(bd, bd)
        return QRat._make(base._c ** n, np, dp)

    # -- comparison, evaluation, rendering ------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c and self._np == other._np and self._dp == other._dp

    def __hash__(self) -> int:
        return hash((self._c, self._np, self._dp))

    def eval(self, q0: Scalar) -> Fraction:
        q0 = Fraction(q0)
        dv = _peval(self._dp, q0)
        if dv == 0:
            raise PoleAtPoint(q0)
        if not self._np:
            return Fraction(0)
        return self._c * _peval(self._np, q0) / dv

    def __str__(self) -> str:
        num_s = render_poly(self.num.coeffs)
        if self._dp == (1,):
            return num_s
        den_s = render_poly(self.den.coeffs)
        if " " in num_s:
            num_s = f"({num_s})"
        if " " in den_s:
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    def __repr__(self) -> str:
        return f"QRat({self})"


def _fraction_coeffs_to_int(coeffs: Sequence[Scalar]) -> tuple[int, IPoly]:
    """Clear denominators: return (L, ints) such that coeffs == ints / L."""
    fs = [Fraction(c) for c in coeffs]
    while fs and fs[-1] == 0:
        fs.pop()
    if not fs:
        return 1, ()
    lden = 1
    for f in fs:
        lden = lden * f.denominator // _int_gcd(lden, f.denominator)
    ints = _trim([int(f * lden) for f in fs])
    return lden, ints


def _coerce(v) -> QRat:
    if isinstance(v, QRat):
        return v
    if isinstance(v, (int, Fraction)):
        return QRat.from_scalar(v)
    return NotImplemented


ZERO = QRat._make(Fraction(0), (), (1,))
ONE = QRat._make(Fraction(1), (1,), (1,))
Q = QRat._make(Fraction(1), (0, 1), (1,))


# --------------------------------------------------------------------------
# Operation-style surface.
# --------------------------------------------------------------------------

def qrat_arith(op: str, lhs: QRat, rhs=None) -> QRat:
    """Field arithmetic dispatcher: op in {add, sub, mul, div, neg, pow}."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        rhs = _coerce(rhs)
        if rhs.is_zero():
            raise DivisionByZero("division by zero")
        return lhs / rhs
    if op == "neg":
        return -lhs
    if op == "pow":
        if not isinstance(rhs, int):
            raise TypeError("pow exponent must be an integer")
        if rhs < 0 and lhs.is_zero():
            raise DivisionByZero("zero to a negative power")
        return lhs ** rhs
    raise ValueError(f"unknown operation {op!r}")


def qrat_eval(r: QRat, q0: Scalar) -> Fraction:
    """Exact substitution q := q0; raises PoleAtPoint on a denominator root."""
    return r.eval(q0)


def qrat_equal(lhs: QRat, rhs: QRat) -> bool:
    """Equality of canonical forms (equivalently: lhs - rhs reduces to zero)."""
    return lhs == rhs
