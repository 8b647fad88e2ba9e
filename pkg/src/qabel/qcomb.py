"""q-combinatorial primitives: q-integers, q-factorials, Gaussian binomials,
the shifted products (y +- x)(y +- qx)...(y +- q^(n-1)x), and q-Pochhammer
symbols.  Results are QRat scalars or MPoly values; everything is exact.
"""
from __future__ import annotations

from functools import lru_cache

from .mpoly import MPoly
from .qfield import ONE, QRat


def binom2(n: int) -> int:
    """n choose 2, with the values 0 for n in {0, 1}."""
    return n * (n - 1) // 2 if n > 1 else 0


def qpow(k: int) -> QRat:
    """q**k as a field element (negative k allowed)."""
    return QRat.q_power(k)


@lru_cache(maxsize=None)
def qint(n: int) -> QRat:
    """The q-integer 1 + q + ... + q**(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError("q-integer index must be nonnegative")
    return QRat((1,) * n)


@lru_cache(maxsize=None)
def qfac(n: int) -> QRat:
    """The q-factorial, the product of the first n q-integers."""
    if n < 0:
        raise ValueError("q-factorial index must be nonnegative")
    if n == 0:
        return ONE
    return qfac(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QRat:
    """Gaussian binomial coefficient, computed by the q-Pascal recurrence.

    Always a polynomial in q; zero outside 0 <= k <= n.
    """
    if n < 0:
        raise ValueError("upper index must be nonnegative")
    if k < 0 or k > n:
        return QRat((0,))
    if k == 0 or k == n:
        return ONE
    return qbinom(n - 1, k - 1) + qpow(k) * qbinom(n - 1, k)


def qprod(y: MPoly, x: MPoly, n: int, sign: str = "plus") -> MPoly:
    """Expanded n-fold shifted product of y with q-power multiples of x.

    sign "plus" gives (y + x)(y + qx)...(y + q^(n-1)x); "minus" flips x.
    The empty product is 1.
    """
    if n < 0:
        raise ValueError("product length must be nonnegative")
    if sign not in ("plus", "minus"):
        raise ValueError(f"unknown sign {sign!r}")
    step = x if sign == "plus" else -x
    out = MPoly.one()
    for j in range(n):
        out = out * (y + step.scale(qpow(j)))
    return out


def qpoch(u: MPoly, n: int) -> MPoly:
    """Expanded q-Pochhammer product (1 - u)(1 - qu)...(1 - q^(n-1)u)."""
    if n < 0:
        raise ValueError("product length must be nonnegative")
    out = MPoly.one()
    one = MPoly.one()
    for j in range(n):
        out = out * (one - u.scale(qpow(j)))
    return out
