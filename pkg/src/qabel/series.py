"""Truncated formal power series in z with multivariate polynomial coefficients.

A series carries an explicit truncation order N and exactly N+1 coefficients.
Arithmetic between two series demands equal orders; mismatches raise instead
of coercing, so a verification run can never silently compare different
truncations.  The two q-exponential series and the Abel-type sums
sum_k coeff_k/[k]! z^k E(shift_k z) are provided as constructors.
"""
from __future__ import annotations

from typing import Callable

from .mpoly import MPoly, _as_mpoly
from .qcomb import binom2, qfac, qint, qpow


class OrderMismatch(ValueError):
    """Arithmetic between series of different truncation orders."""


class NonUnitConstantTerm(ArithmeticError):
    """Series division by a series whose constant term is not an invertible scalar."""


class PowerSeries:
    """Immutable truncated series: coeffs[k] is the z**k coefficient."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = tuple(_as_mpoly(c) for c in coeffs)
        if len(cs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(cs)}")
        self.order = order
        self.coeffs = cs

    @classmethod
    def constant(cls, value, order: int) -> PowerSeries:
        zero = MPoly.zero()
        return cls(order, (_as_mpoly(value),) + (zero,) * order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> PowerSeries:
        """The single term coeff * z**k (zero series when k exceeds the order)."""
        zero = MPoly.zero()
        cs = [zero] * (order + 1)
        if k <= order:
            cs[k] = _as_mpoly(coeff)
        return cls(order, cs)

    def _check(self, other: PowerSeries):
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        return PowerSeries(self.order, tuple(u + v for u, v in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> PowerSeries:
        return PowerSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        return PowerSeries(self.order, tuple(u - v for u, v in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        n = self.order
        out = [MPoly.zero()] * (n + 1)
        for i, u in enumerate(self.coeffs):
            if u.is_zero():
                continue
            for j in range(n + 1 - i):
                v = other.coeffs[j]
                if not v.is_zero():
                    out[i + j] = out[i + j] + u * v
        return PowerSeries(n, out)

    def __truediv__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        g0 = other.coeffs[0]
        if g0.is_zero() or not g0.is_constant():
            raise NonUnitConstantTerm(f"constant term {g0} is not an invertible scalar")
        inv0 = g0.constant_coeff().inv()
        out: list[MPoly] = []
        for m in range(self.order + 1):
            acc = self.coeffs[m]
            for j in range(1, m + 1):
                gj = other.coeffs[j]
                if not gj.is_zero():
                    acc = acc - gj * out[m - j]
            out.append(acc.scale(inv0))
        return PowerSeries(self.order, out)

    def truncated(self, order: int) -> PowerSeries:
        """Explicit truncation to a lower (or equal) order."""
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return PowerSeries(order, self.coeffs[: order + 1])

    def q_derivative(self) -> PowerSeries:
        """Termwise q-derivative in z, one order lower."""
        if self.order == 0:
            return PowerSeries(0, (MPoly.zero(),))
        return PowerSeries(
            self.order - 1,
            tuple(self.coeffs[k + 1].scale(qint(k + 1)) for k in range(self.order)),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(f"({c})")
            elif k == 1:
                parts.append(f"({c})*z")
            else:
                parts.append(f"({c})*z^{k}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(z^{self.order + 1})"

    def __repr__(self) -> str:
        return f"PowerSeries({self})"


def ps_arith(op: str, f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Series arithmetic dispatcher: op in {add, sub, mul, div}."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation {op!r}")


def ps_exp(kind: str, c, order: int) -> PowerSeries:
    """The q-exponential series of c*z.

    kind "small_e" gives sum c^k z^k / [k]!; "big_E" additionally weights
    term k by q^(k choose 2).
    """
    c = _as_mpoly(c)
    coeffs = []
    power = MPoly.one()
    for k in range(order + 1):
        if k:
            power = power * c
        w = qfac(k).inv()
        if kind == "big_E":
            w = w * qpow(binom2(k))
        elif kind != "small_e":
            raise ValueError(f"unknown exponential kind {kind!r}")
        coeffs.append(power.scale(w))
    return PowerSeries(order, coeffs)


def abel_sum(coeff: Callable[[int], MPoly], shift: Callable[[int], MPoly], order: int) -> PowerSeries:
    """Assemble sum_k coeff(k)/[k]! * z^k * E(shift(k) z), truncated.

    Term k contributes q^(m-k choose 2) shift(k)^(m-k) / [m-k]! times its own
    weight to every z^m with k <= m <= order.
    """
    out = [MPoly.zero()] * (order + 1)
    for k in range(order + 1):
        ck = _as_mpoly(coeff(k)).scale(qfac(k).inv())
        if ck.is_zero():
            continue
        sk = _as_mpoly(shift(k))
        power = MPoly.one()
        for m in range(k, order + 1):
            j = m - k
            if j:
                power = power * sk
            w = qpow(binom2(j)) * qfac(j).inv()
            out[m] = out[m] + (ck * power).scale(w)
    return PowerSeries(order, out)


def ps_equal(f: PowerSeries, g: PowerSeries) -> bool:
    """Coefficient-wise equality at one shared truncation order."""
    return f == g
