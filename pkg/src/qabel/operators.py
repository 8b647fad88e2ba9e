"""Linear operators on polynomials built from the q-derivative.

The q-derivative acts on monomials by D v^n = [n] v^(n-1), extended
linearly; this agrees with the difference-quotient definition on every
polynomial while staying inside the coefficient model.  Power series in D
(DSeries) act as exact finite sums because D eventually annihilates any
polynomial.  The module also houses the evaluation functional L, the
diagonal rescaling V, the difference operator on the symbol t, the
ladder operators Q_n, and the q-Pincherle residual.
"""
from __future__ import annotations

from typing import Callable, Sequence

from .mpoly import MPoly, Symbol, _as_mpoly
from .qcomb import binom2, qfac, qint, qpow
from .qfield import ONE as QR_ONE, QRat


class InvalidIndex(ValueError):
    """Operator index outside its defined range."""


def qderiv(p: MPoly, v: Symbol, k: int = 1) -> MPoly:
    """k-fold q-derivative with respect to v."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k == 0:
        return p
    i = v.value
    out: dict[tuple, QRat] = {}
    for key, c in p._t.items():
        e = key[i]
        if e < k:
            continue
        f = QR_ONE
        for j in range(e, e - k, -1):
            f = f * qint(j)
        nk = list(key)
        nk[i] = e - k
        nk = tuple(nk)
        c = c * f
        s = out.get(nk)
        out[nk] = c if s is None else s + c
    return MPoly._raw({k2: v2 for k2, v2 in out.items() if not v2.is_zero()})


class DSeries:
    """Formal power series in D, materialized on demand.

    Applying it to a polynomial of degree d in the distinguished variable
    consults only the coefficients of D^0 .. D^d, so every application is an
    exact finite sum.
    """

    def __init__(self, gen: Callable[[int], MPoly]):
        self._gen = gen
        self._cache: list[MPoly] = []

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> DSeries:
        cs = [_as_mpoly(c) for c in coeffs]
        zero = MPoly.zero()
        return cls(lambda k: cs[k] if k < len(cs) else zero)

    def coeff(self, k: int) -> MPoly:
        while len(self._cache) <= k:
            self._cache.append(_as_mpoly(self._gen(len(self._cache))))
        return self._cache[k]


def make_exp_dseries(kind: str, c) -> DSeries:
    """Operator exponential e(cD) or E(cD) as an on-demand D-series."""
    if kind not in ("small_e", "big_E"):
        raise ValueError(f"unknown exponential kind {kind!r}")
    c = _as_mpoly(c)
    powers = [MPoly.one()]

    def gen(k: int) -> MPoly:
        while len(powers) <= k:
            powers.append(powers[-1] * c)
        w = qfac(k).inv()
        if kind == "big_E":
            w = w * qpow(binom2(k))
        return powers[k].scale(w)

    return DSeries(gen)


def dseries_apply(op: DSeries, p: MPoly, v: Symbol = Symbol.x) -> MPoly:
    """Apply the operator series to p in the variable v (exact finite sum)."""
    out = MPoly.zero()
    dk = p
    for k in range(p.degree_in(v) + 1):
        if k:
            dk = qderiv(dk, v, 1)
        g = op.coeff(k)
        if not g.is_zero():
            out = out + g * dk
    return out


def L_functional(p: MPoly, v: Symbol = Symbol.x) -> MPoly:
    """Evaluation at v = 0: the degree-0 part of p in v."""
    return p.subst(v, MPoly.zero())


def V_op(p: MPoly, v: Symbol = Symbol.x) -> MPoly:
    """Rescale the degree-m component in v by q^-(m choose 2)."""
    out: dict[tuple, QRat] = {}
    i = v.value
    for key, c in p._t.items():
        out[key] = c * qpow(-binom2(key[i]))
    return MPoly._raw(out)


def delta_op(p: MPoly, k: int) -> MPoly:
    """Apply the product of the factors (1 - q^j U), j = 1..k.

    U rescales the t^i component by q^-i; the polynomial's dependence on the
    underlying index must be carried entirely by the symbol t.
    """
    if k < 0:
        raise ValueError("difference order must be nonnegative")
    it = Symbol.t.value
    cur = p
    for j in range(1, k + 1):
        qj = qpow(j)
        out: dict[tuple, QRat] = {}
        for key, c in cur._t.items():
            c2 = c * (QR_ONE - qj * qpow(-key[it]))
            if not c2.is_zero():
                out[key] = c2
        cur = MPoly._raw(out)
    return cur


def Qn_apply(n: int, p: MPoly, form: str = "closed") -> MPoly:
    """Ladder operator of index n applied to p (variable x).

    The closed form composes D/q^(n-1) with the exponential pair
    e(c_n D) / e(c_(n-1) D), the reciprocal realized as E(-c_(n-1) D);
    the series form uses the explicit D-expansion with literal factor
    products.  Both are exact finite sums.
    """
    if n < 1:
        raise InvalidIndex("ladder operator index must be at least 1")
    a = MPoly.var(Symbol.a)
    b = MPoly.var(Symbol.b)
    if form == "closed":
        c_n = (a.scale(qint(n)) + b).scale(qpow(-(n - 1)))
        c_prev = (a.scale(qint(n - 1)) + b).scale(qpow(-(n - 2)))
        out = dseries_apply(make_exp_dseries("big_E", -c_prev), p)
        out = dseries_apply(make_exp_dseries("small_e", c_n), out)
        return qderiv(out, Symbol.x, 1).scale(qpow(-(n - 1)))
    if form == "series":
        qn = qpow(n)

        def gen(i: int) -> MPoly:
            if i == 0:
                return MPoly.zero()
            k = i - 1
            prod = MPoly.one()
            for j in range(k):
                prod = prod * (a.scale(qint(j + 1) - qn * qint(j)) + b.scale(QR_ONE - qpow(j + 1)))
            return prod.scale(qfac(k).inv() * qpow(-(n - 1) * i))

        return dseries_apply(DSeries(gen), p)
    raise ValueError(f"unknown form {form!r}")


def pincherle_residual(m: int, n: int) -> MPoly:
    """Residual of the commutation rule for f(D) = D^m tested on x^n.

    Computes D^m(x * x^n) - x * (qD)^m x^n - [m] D^(m-1) x^n, which the
    commutation rule asserts is identically zero.
    """
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    x = MPoly.var(Symbol.x)
    xn = x ** n
    lhs = qderiv(x * xn, Symbol.x, m)
    mid = (x * qderiv(xn, Symbol.x, m)).scale(qpow(m))
    if m == 0:
        return lhs - mid
    rhs = qderiv(xn, Symbol.x, m - 1).scale(qint(m))
    return lhs - mid - rhs
