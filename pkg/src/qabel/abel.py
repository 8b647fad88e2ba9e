"""The q-Abel polynomial families and their expansion machinery.

Seven families are built over the symbols x, a, b: the classical family
(the q = 1 baseline), two equivalent q-deformations A and G, the plain and
general B variants obtained through the diagonal rescaling V, the product
family w, and the two-term family S.  On top of the families sit the
Abel-basis expansion of an arbitrary polynomial and the three coefficient
extraction modes of the q-Lagrange machinery.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from .mpoly import MPoly, Symbol
from .operators import V_op, qderiv
from .qcomb import binom2, qfac, qint, qpow
from .series import PowerSeries


class OrderTooSmall(ValueError):
    """The input series is too short for the requested number of coefficients."""


class FamilyId(Enum):
    CLASSICAL = "classical"
    A = "A"
    G = "G"
    B_PLAIN = "B_plain"
    B_GENERAL = "B_general"
    W = "w"
    S = "S"


_X = MPoly.var(Symbol.x)
_A = MPoly.var(Symbol.a)
_B = MPoly.var(Symbol.b)


@lru_cache(maxsize=None)
def abel_poly(family: FamilyId, n: int) -> MPoly:
    """The degree-n member of a family, expanded in x, a, b.

    Every family has the constant 1 at index 0.
    """
    if n < 0:
        raise ValueError("family index must be nonnegative")
    if n == 0:
        return MPoly.one()
    if family is FamilyId.CLASSICAL:
        return (_X - _B) * (_X - _B - _A.scale(n)) ** (n - 1)
    if family is FamilyId.A:
        out = _X - _B
        shift = _A.scale(qint(n)) + _B.scale(qpow(n))
        for j in range(1, n):
            out = out * (_X.scale(qpow(j)) - shift)
        return out
    if family is FamilyId.G:
        out = _X - _B
        shift = _A.scale(qint(n)) + _B
        for j in range(1, n):
            out = out * (_X.scale(qpow(j)) - shift)
        return out
    if family is FamilyId.W:
        out = MPoly.one()
        shift = _A.scale(qint(n)) + _B
        for j in range(n):
            out = out * (_X.scale(qpow(j)) - shift)
        return out
    if family is FamilyId.S:
        return _X ** n + (_A * _X ** (n - 1)).scale(qint(n))
    if family is FamilyId.B_PLAIN:
        return V_op(abel_poly(FamilyId.A, n).subst(Symbol.b, MPoly.zero()))
    if family is FamilyId.B_GENERAL:
        return V_op(abel_poly(FamilyId.A, n))
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class AbelCoefficients:
    """Coefficients of a polynomial against a family basis, index by degree."""

    basis: FamilyId
    coeffs: tuple[MPoly, ...]

    def __post_init__(self):
        for c in self.coeffs:
            if not c.free_of(Symbol.x):
                raise ValueError("expansion coefficients must be free of x")

    def reconstruct(self) -> MPoly:
        out = MPoly.zero()
        for k, c in enumerate(self.coeffs):
            out = out + c * abel_poly(self.basis, k)
        return out


def abel_expand(f: MPoly) -> AbelCoefficients:
    """Expand f in the G basis via q-derivative evaluations at shifted points.

    Coefficient k reads off q^-(k choose 2)/[k]! times the k-th q-derivative
    of f at x = q^-k (b + [k] a).
    """
    if not f.free_of(Symbol.y, Symbol.t):
        raise ValueError("polynomial to expand must be free of y and t")
    coeffs = []
    dk = f
    for k in range(f.degree_in(Symbol.x) + 1):
        if k:
            dk = qderiv(dk, Symbol.x, 1)
        point = (_B + _A.scale(qint(k))).scale(qpow(-k))
        c = dk.subst(Symbol.x, point).scale(qpow(-binom2(k)) * qfac(k).inv())
        coeffs.append(c)
    return AbelCoefficients(FamilyId.G, tuple(coeffs))


def lagrange_shift(mode: str, n: int) -> MPoly:
    """The shift entering E(shift * z) in each expansion mode."""
    if mode == "plain":
        return _A.scale(qint(n))
    if mode == "general_b":
        return _A.scale(qint(n)) + _B.scale(qpow(n))
    if mode == "buermann":
        return (_B.scale(qpow(n)) + _A.scale(qint(n))).scale(qpow(-1))
    raise ValueError(f"unknown mode {mode!r}")


def _exp_coeffs(s: MPoly, m: int) -> list[MPoly]:
    """Coefficients of e(s z) up to z^m."""
    out = [MPoly.one()]
    p = MPoly.one()
    for i in range(1, m + 1):
        p = p * s
        out.append(p.scale(qfac(i).inv()))
    return out


def _conv_at(u: list[MPoly], v, m: int) -> MPoly:
    acc = MPoly.zero()
    for i in range(m + 1):
        ui = u[i]
        if not ui.is_zero():
            vj = v[m - i]
            if not vj.is_zero():
                acc = acc + ui * vj
    return acc


def lagrange_coeffs(f: PowerSeries, mode: str, order: int) -> list[MPoly]:
    """Coefficients c_0..c_order of the expansion of f over z^n E(shift_n z).

    plain:     c_n reads [n-1]! times the z^(n-1) coefficient of
               e(-[n]a z) f'(z); the expansion of f itself.
    general_b: the two-term variant with shift [n]a + q^n b.
    buermann:  c_n reads [n]! times the z^n coefficient of
               e(-(q^n b + [n]a)/q z) f(z); expands f(z)/(1 + a z / q).
    """
    if mode not in ("plain", "general_b", "buermann"):
        raise ValueError(f"unknown mode {mode!r}")
    if f.order < order:
        raise OrderTooSmall(f"series order {f.order} below requested {order}")
    fc = list(f.coeffs)
    fd = [fc[j + 1].scale(qint(j + 1)) for j in range(len(fc) - 1)]
    out = [fc[0]]
    for n in range(1, order + 1):
        s = lagrange_shift(mode, n)
        if mode == "buermann":
            e = _exp_coeffs(-s, n)
            out.append(_conv_at(e, fc, n).scale(qfac(n)))
            continue
        e = _exp_coeffs(-s, n - 1)
        c = _conv_at(e, fd, n - 1)
        if mode == "general_b":
            e2 = _exp_coeffs(-s.scale(qpow(-1)), n - 1)
            c = c - (_B * _conv_at(e2, fc, n - 1)).scale(qpow(n - 1))
        out.append(c.scale(qfac(n - 1)))
    return out
