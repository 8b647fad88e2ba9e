"""Registry of symbolic identity checks.

Each entry constructs both sides of one identity exactly, as multivariate
polynomials in x, y, a, b (and t for the difference-operator suite) or as
truncated power series, and reports the canonical difference.  A check
passes iff the difference is identically zero.  Universally quantified
statements are checked on finite parameter ranges; the registry records the
range each entry has been verified on.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterable, Iterator

from . import abel
from .abel import FamilyId
from .mpoly import MPoly, Symbol
from .operators import (
    DSeries,
    L_functional,
    Qn_apply,
    delta_op,
    dseries_apply,
    make_exp_dseries,
    pincherle_residual,
    qderiv,
)
from .qcomb import binom2, qbinom, qfac, qint, qpow, qprod
from .qfield import ONE as QR_ONE, QRat
from .series import PowerSeries, abel_sum, ps_exp


class UnknownIdentity(LookupError):
    """The identity id is not registered."""


class MissingParam(ValueError):
    """A parameter required by the identity was not supplied."""


X = MPoly.var(Symbol.x)
Y = MPoly.var(Symbol.y)
A = MPoly.var(Symbol.a)
B = MPoly.var(Symbol.b)
T = MPoly.var(Symbol.t)
ONE = MPoly.one()
ZERO = MPoly.zero()

_ONE_MINUS_Q = QR_ONE - qpow(1)


def _fam(family: FamilyId, n: int) -> MPoly:
    return abel.abel_poly(family, n)


def _shift_a(k: int) -> MPoly:
    """[k]a + q^k b."""
    return A.scale(qint(k)) + B.scale(qpow(k))


def _shift_g(k: int) -> MPoly:
    """[k]a + b."""
    return A.scale(qint(k)) + B


def _bracket_t() -> MPoly:
    """The q-integer of the running index written through t: (1 - t)/(1 - q)."""
    return (ONE - T).scale(_ONE_MINUS_Q.inv())


def _first_nonzero(*diffs: MPoly) -> MPoly:
    for d in diffs:
        if not d.is_zero():
            return d
    return ZERO


# --------------------------------------------------------------------------
# Checkers.  Each returns the difference of the two sides.
# --------------------------------------------------------------------------

def _chk_0_3(n: int) -> MPoly:
    rhs = ZERO
    for k in range(n + 1):
        rhs = rhs + (_fam(FamilyId.CLASSICAL, k) * (Y + A.scale(k) + B) ** (n - k)).scale(comb(n, k))
    return (X + Y) ** n - rhs


def _chk_0_17(n: int) -> MPoly:
    rhs = ZERO
    for k in range(n + 1):
        rhs = rhs + ((X + A.scale(k)) ** n).scale((-1) ** (n - k) * comb(n, k))
    return (A ** n).scale(factorial(n)) - rhs


def _chk_limit(family: FamilyId) -> Callable[[int], MPoly]:
    def run(n: int) -> MPoly:
        return _fam(family, n).eval_q1() - _fam(FamilyId.CLASSICAL, n)

    return run


def _chk_1_3(n: int) -> MPoly:
    rhs = ZERO
    for k in range(n + 1):
        term = _fam(FamilyId.A, k) * qprod(Y, _shift_a(k), n - k, "plus")
        rhs = rhs + term.scale(qbinom(n, k))
    return qprod(Y, X, n, "plus") - rhs


def _chk_1_6(n: int) -> MPoly:
    rhs = ZERO
    for k in range(n + 1):
        ak = _fam(FamilyId.A, k).subst(Symbol.b, ZERO)
        term = ak * qprod(Y, A.scale(qint(k)), n - k, "plus")
        rhs = rhs + term.scale(qbinom(n, k))
    return qprod(Y, X, n, "plus") - rhs


def _chk_1_5(order: int) -> PowerSeries:
    lhs = abel_sum(lambda k: _fam(FamilyId.A, k), _shift_a, order)
    return lhs - ps_exp("big_E", X, order)


def _chk_1_7(n: int) -> MPoly:
    widened = A + B.scale(_ONE_MINUS_Q)
    return _fam(FamilyId.G, n) - _fam(FamilyId.A, n).subst(Symbol.a, widened)


def _chk_1_8(n: int) -> MPoly:
    rhs = ZERO
    for k in range(n + 1):
        term = _fam(FamilyId.G, k) * qprod(Y, _shift_g(k), n - k, "plus")
        rhs = rhs + term.scale(qbinom(n, k))
    return qprod(Y, X, n, "plus") - rhs


def _chk_1_9(order: int) -> PowerSeries:
    lhs = abel_sum(lambda k: _fam(FamilyId.G, k), _shift_g, order)
    return lhs - ps_exp("big_E", X, order)


def _chk_eE(order: int) -> PowerSeries:
    prod = ps_exp("small_e", ONE, order) * ps_exp("big_E", -ONE, order)
    return prod - PowerSeries.constant(ONE, order)


def _chk_e_ratio(order: int) -> PowerSeries:
    lhs = PowerSeries(
        order, [qprod(X, Y, k, "minus").scale(qfac(k).inv()) for k in range(order + 1)]
    )
    return lhs - ps_exp("small_e", X, order) / ps_exp("small_e", Y, order)


def _chk_EaD(n: int) -> MPoly:
    applied = dseries_apply(make_exp_dseries("big_E", A), Y ** n, Symbol.y)
    return applied - qprod(Y, A, n, "plus")


def _chk_2_1(n: int, k: int) -> MPoly:
    lhs = qderiv(_fam(FamilyId.G, n), Symbol.x, k)
    target = _fam(FamilyId.G, n - k).subst_many(
        {
            Symbol.x: X.scale(qpow(k)),
            Symbol.a: A.scale(qpow(k)),
            Symbol.b: B + A.scale(qint(k)),
        }
    )
    return lhs - target.scale(qpow(binom2(k)) * qfac(n) * qfac(n - k).inv())


def _chk_2_2(n: int, k: int) -> MPoly:
    point = (B + A.scale(qint(k))).scale(qpow(-k))
    val = qderiv(_fam(FamilyId.G, n), Symbol.x, k).subst(Symbol.x, point)
    if k == n:
        return val - MPoly.const(qpow(binom2(k)) * qfac(k))
    return val


def _chk_2_3(n: int) -> MPoly:
    f = X ** n
    return abel.abel_expand(f).reconstruct() - f


def _chk_2_4(n: int) -> MPoly:
    lhs = _fam(FamilyId.G, n).subst_many({Symbol.a: -A, Symbol.b: -Y - B})
    rhs = ZERO
    for k in range(n + 1):
        gk = _fam(FamilyId.G, k).subst_many({Symbol.a: -A, Symbol.b: -B})
        if k == n:
            u = ONE
        else:
            u = Y
            for j in range(1, n - k):
                u = u * (Y + B.scale(QR_ONE - qpow(j)) + A.scale(qint(n) - qpow(j) * qint(k)))
        rhs = rhs + (gk * u).scale(qbinom(n, k))
    return lhs - rhs


def _chk_post_2_4(n: int, order: int) -> PowerSeries:
    base = _shift_g(n)

    def coeff(k: int) -> MPoly:
        if k == 0:
            return ONE
        return (base * _shift_g(n + k) ** (k - 1)).scale((-1) ** k)

    zn = PowerSeries.monomial(n, order)
    rhs = zn * abel_sum(coeff, lambda k: _shift_g(n + k), order)
    return zn - rhs


def _chk_3_1(n: int) -> MPoly:
    w = _fam(FamilyId.W, n)
    shift = _shift_g(n)
    sum_form = ZERO
    for k in range(n + 1):
        term = (shift ** k * X ** (n - k)).scale(
            qbinom(n, k) * qpow(binom2(n - k)) * QRat.from_scalar((-1) ** k)
        )
        sum_form = sum_form + term
    op_form = dseries_apply(
        make_exp_dseries("big_E", -shift.scale(qpow(-(n - 1)))), X ** n
    ).scale(qpow(binom2(n)))
    return _first_nonzero(w - sum_form, w - op_form)


def _chk_3_2(n: int) -> MPoly:
    one_plus_aD = DSeries.from_coeffs([ONE, A])
    return _fam(FamilyId.G, n) - dseries_apply(one_plus_aD, _fam(FamilyId.W, n))


def _chk_S_ladder(n: int) -> MPoly:
    recovered = dseries_apply(
        make_exp_dseries("small_e", _shift_g(n).scale(qpow(-(n - 1)))), _fam(FamilyId.G, n)
    ).scale(qpow(-binom2(n)))
    d1 = recovered - _fam(FamilyId.S, n)
    if not d1.is_zero() or n == 0:
        return d1
    ladder = qderiv(_fam(FamilyId.S, n), Symbol.x, 1) - _fam(FamilyId.S, n - 1).scale(qint(n))
    return ladder


def _chk_3_4(n: int) -> MPoly:
    lhs = Qn_apply(n, _fam(FamilyId.G, n), "closed")
    return lhs - _fam(FamilyId.G, n - 1).scale(qint(n))


def _chk_3_3_vs_3_5(n: int, d: int) -> MPoly:
    p = X ** d
    return Qn_apply(n, p, "closed") - Qn_apply(n, p, "series")


def _chk_4_2(order: int) -> MPoly:
    cs = abel.lagrange_coeffs(ps_exp("small_e", X, order), "plain", order)
    return _first_nonzero(*[cs[k] - _fam(FamilyId.B_PLAIN, k) for k in range(order + 1)])


def _chk_4_3(n: int) -> MPoly:
    bn = _fam(FamilyId.B_PLAIN, n)
    if n == 0:
        return bn - ONE
    op = X * dseries_apply(make_exp_dseries("small_e", -A.scale(qint(n))), X ** (n - 1))
    return bn - op


def _chk_4_4(n: int, k: int) -> MPoly:
    op = make_exp_dseries("big_E", A.scale(qint(k)))
    val = L_functional(dseries_apply(op, qderiv(_fam(FamilyId.B_PLAIN, n), Symbol.x, k)))
    expected = MPoly.const(qfac(n)) if k == n else ZERO
    return val - expected


def _chk_4_B_forms(n: int) -> MPoly:
    bg = _fam(FamilyId.B_GENERAL, n)
    closed = X ** n
    big = _shift_a(n)
    for k in range(1, n + 1):
        term = (big ** (k - 1) * _shift_a(n - k) * X ** (n - k)).scale(
            qbinom(n, k) * QRat.from_scalar((-1) ** k)
        )
        closed = closed + term
    d1 = bg - closed
    if not d1.is_zero() or n == 0:
        return d1
    t1 = X * dseries_apply(make_exp_dseries("small_e", -big), X ** (n - 1))
    t2 = (B * dseries_apply(make_exp_dseries("small_e", -big.scale(qpow(-1))), X ** (n - 1))).scale(
        qpow(n - 1)
    )
    return bg - (t1 - t2)


def _chk_4_7(m: int, n: int) -> MPoly:
    return pincherle_residual(m, n)


def _chk_4_8(order: int) -> PowerSeries:
    f = ps_exp("small_e", X, order)
    cs = abel.lagrange_coeffs(f, "general_b", order)
    return abel_sum(lambda k: cs[k], _shift_a, order) - f


def _chk_4_9(n: int, k: int) -> MPoly:
    op = make_exp_dseries("big_E", _shift_a(k))
    val = L_functional(dseries_apply(op, qderiv(_fam(FamilyId.B_GENERAL, n), Symbol.x, k)))
    expected = MPoly.const(qfac(n)) if k == n else ZERO
    return val - expected


def _chk_4_10(n: int) -> MPoly:
    c = _shift_a(n).scale(qpow(-1))
    inner = dseries_apply(make_exp_dseries("small_e", -c), X ** n)
    out = inner + (A * qderiv(inner, Symbol.x, 1)).scale(qpow(-1))
    return _fam(FamilyId.B_GENERAL, n) - out


def _chk_4_12(n: int) -> MPoly:
    f = ps_exp("big_E", -Y, n)
    cs = abel.lagrange_coeffs(f, "buermann", n)
    expected = qprod(-_shift_a(n).scale(qpow(-1)), Y, n, "minus")
    return cs[n] - expected


def _chk_4_13(order: int) -> PowerSeries:
    den = PowerSeries.constant(ONE, order) - PowerSeries.monomial(1, order, A)
    lhs = ps_exp("big_E", X, order) / den
    rhs = abel_sum(
        lambda k: qprod(_shift_a(k), X, k, "plus"),
        lambda k: -_shift_a(k).scale(qpow(1)),
        order,
    )
    return lhs - rhs


def _chk_5_3(i: int, k: int) -> MPoly:
    return delta_op(T ** i, k)


def _chk_5_4(k: int) -> MPoly:
    return delta_op(ONE, k) - MPoly.const(_ONE_MINUS_Q ** k * qfac(k))


def _chk_5_5(m: int, k: int) -> MPoly:
    return delta_op(_bracket_t() ** m, k) - MPoly.const(qfac(k) * _ONE_MINUS_Q ** (k - m))


def _chk_5_6(i: int, m: int, k: int) -> MPoly:
    return delta_op(T ** i * _bracket_t() ** m, k)


def _chk_5_7(n: int, j: int) -> MPoly:
    body = T * X + _bracket_t() * A
    return delta_op(T ** j * body ** (n - j), n)


def _chk_5_8(n: int) -> MPoly:
    body = T * X + _bracket_t() * A
    return delta_op(body ** n, n) - (A ** n).scale(qfac(n))


def _chk_5_9(n: int) -> MPoly:
    lhs = ZERO
    for k in range(n + 1):
        c = B.scale(qpow(n - k)) + A.scale(qint(n - k))
        term = qprod(c, X, n - k, "plus") * qprod(X, c.scale(qpow(1)), k, "plus")
        lhs = lhs + term.scale(qbinom(n, k) * QRat.from_scalar((-1) ** k))
    base = T * B + _bracket_t() * A
    rhs = ZERO
    for j in range(n + 1):
        d = delta_op(T ** j * base ** (n - j), n)
        if not d.is_zero():
            rhs = rhs + (X ** j * d).scale(qbinom(n, j) * qpow(binom2(j) - n * j))
    return lhs - rhs


def _chk_5_10(n: int, order: int) -> PowerSeries:
    geom = PowerSeries(order, [A ** k for k in range(order + 1)])
    zn = PowerSeries.monomial(n, order)
    lhs = zn * geom

    def shift(k: int) -> MPoly:
        return -_shift_a(n + k).scale(qpow(1))

    rhs = zn * abel_sum(lambda k: _shift_a(n + k) ** k, shift, order)
    return lhs - rhs


def _chk_5_11(n: int) -> MPoly:
    rhs = ZERO
    tail = Y - B.scale(qpow(n)) - A.scale(qint(n))
    for k in range(n + 1):
        c = _shift_a(k)
        if k == n:
            v = ONE
        else:
            v = qprod(Y, c.scale(qpow(1)), n - k - 1, "minus") * tail
        rhs = rhs + (qprod(c, X, k, "plus") * v).scale(qbinom(n, k))
    return qprod(Y, X, n, "plus") - rhs


def _chk_5_12(order: int) -> PowerSeries:
    rate = A + B.scale(_ONE_MINUS_Q)
    den = PowerSeries.constant(ONE, order) - PowerSeries.monomial(1, order, rate)
    lhs = ps_exp("big_E", X, order) / den
    rhs = abel_sum(
        lambda k: qprod(_shift_g(k), X, k, "plus"),
        lambda k: -_shift_g(k).scale(qpow(1)),
        order,
    )
    return lhs - rhs


# --------------------------------------------------------------------------
# Registry table.
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    id: str
    params: tuple[str, ...]
    description: str
    verified: str
    enumerate_params: Callable[[int, int], Iterator[dict[str, int]]]
    compute: Callable[..., object]


@dataclass(frozen=True)
class CheckResult:
    identity_id: str
    params: dict[str, int]
    status: str
    difference: str | None
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _each_n(lo: int = 0):
    def gen(max_n: int, order: int):
        for n in range(lo, max_n + 1):
            yield {"n": n}

    return gen


def _triangular_nk(max_n: int, order: int):
    for n in range(max_n + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}


def _grid_nk(max_n: int, order: int):
    for n in range(max_n + 1):
        for k in range(max_n + 1):
            yield {"n": n, "k": k}


def _order_only(max_n: int, order: int):
    yield {"N": order}


def _n_capped_with_order(cap: int):
    def gen(max_n: int, order: int):
        for n in range(min(cap, max_n) + 1):
            yield {"n": n, "N": order}

    return gen


def _grid_nd(max_n: int, order: int):
    for n in range(1, max_n + 1):
        for d in range(max_n + 1):
            yield {"n": n, "d": d}


def _grid_mn_pincherle(max_n: int, order: int):
    for m in range(min(5, max_n) + 1):
        for n in range(max_n + 1):
            yield {"m": m, "n": n}


def _grid_ik(max_n: int, order: int):
    for i in range(1, min(4, max_n) + 1):
        for k in range(i, max_n + 1):
            yield {"i": i, "k": k}


def _each_k(max_n: int, order: int):
    for k in range(max_n + 1):
        yield {"k": k}


def _grid_mk(max_n: int, order: int):
    for m in range(min(4, max_n) + 1):
        for k in range(m, max_n + 1):
            yield {"m": m, "k": k}


def _grid_imk(max_n: int, order: int):
    for i in range(1, 5):
        for m in range(5):
            for k in range(i + m, max_n + 1):
                yield {"i": i, "m": m, "k": k}


def _grid_nj(max_n: int, order: int):
    for n in range(1, max_n + 1):
        for j in range(1, n + 1):
            yield {"n": n, "j": j}


_TABLE: list[Identity] = [
    Identity("0.3", ("n",), "classical Abel binomial expansion", "n <= 6", _each_n(), _chk_0_3),
    Identity("0.17", ("n",), "classical alternating evaluation sum", "n <= 6", _each_n(), _chk_0_17),
    Identity("limit-A", ("n",), "A family degenerates to the classical family at q = 1", "n <= 8",
             _each_n(), _chk_limit(FamilyId.A)),
    Identity("limit-G", ("n",), "G family degenerates to the classical family at q = 1", "n <= 8",
             _each_n(), _chk_limit(FamilyId.G)),
    Identity("1.3", ("n",), "q-Abel expansion of the rising product, A family", "n <= 8",
             _each_n(), _chk_1_3),
    Identity("1.5", ("N",), "series form of the A-family expansion", "order 8", _order_only, _chk_1_5),
    Identity("1.6", ("n",), "q-Abel expansion of the rising product at b = 0", "n <= 8",
             _each_n(), _chk_1_6),
    Identity("1.7", ("n",), "G arises from A by widening a", "n <= 8", _each_n(), _chk_1_7),
    Identity("1.8", ("n",), "q-Abel expansion of the rising product, G family", "n <= 8",
             _each_n(), _chk_1_8),
    Identity("1.9", ("N",), "series form of the G-family expansion", "order 8", _order_only, _chk_1_9),
    Identity("eE", ("N",), "the two q-exponentials are reciprocal", "order 16", _order_only, _chk_eE),
    Identity("e-ratio", ("N",), "falling products generate the exponential quotient", "order 16",
             _order_only, _chk_e_ratio),
    Identity("EaD", ("n",), "operator exponential produces the rising product", "n <= 8",
             _each_n(), _chk_EaD),
    Identity("2.1", ("n", "k"), "derivative ladder for the G family", "0 <= k <= n <= 6",
             _triangular_nk, _chk_2_1),
    Identity("2.2", ("n", "k"), "orthogonality evaluations of G derivatives", "0 <= k <= n <= 6",
             _triangular_nk, _chk_2_2),
    Identity("2.3", ("n",), "Abel expansion of x^n reconstructs exactly", "n <= 6",
             _each_n(), _chk_2_3),
    Identity("2.4", ("n",), "expansion of the reflected G polynomial", "n <= 6", _each_n(), _chk_2_4),
    Identity("post-2.4", ("n", "N"), "series expansion of z^n over the shifted basis",
             "n <= 3, order 8", _n_capped_with_order(3), _chk_post_2_4),
    Identity("3.1", ("n",), "product, sum and operator forms of w agree", "n <= 8",
             _each_n(), _chk_3_1),
    Identity("3.2", ("n",), "G arises from w by 1 + aD", "n <= 8", _each_n(), _chk_3_2),
    Identity("S-ladder", ("n",), "two-term family S and its derivative ladder", "n <= 8",
             _each_n(), _chk_S_ladder),
    Identity("3.4", ("n",), "ladder operator lowers G by one degree", "1 <= n <= 6",
             _each_n(1), _chk_3_4),
    Identity("3.3-vs-3.5", ("n", "d"), "closed and series forms of the ladder operator agree",
             "n, d <= 6", _grid_nd, _chk_3_3_vs_3_5),
    Identity("4.2", ("N",), "plain extraction on e(xz) yields the plain B family", "k <= 6",
             _order_only, _chk_4_2),
    Identity("4.3", ("n",), "operator form of the plain B family", "n <= 8", _each_n(), _chk_4_3),
    Identity("4.4", ("n", "k"), "biorthogonality of the plain B family", "n, k <= 6",
             _grid_nk, _chk_4_4),
    Identity("4.B-forms", ("n",), "closed-sum and two-term forms of the general B family", "n <= 8",
             _each_n(), _chk_4_B_forms),
    Identity("4.7", ("m", "n"), "q-Pincherle commutation residual vanishes", "m <= 5, n <= 8",
             _grid_mn_pincherle, _chk_4_7),
    Identity("4.8", ("N",), "general-b coefficients reconstruct e(xz)", "order 8",
             _order_only, _chk_4_8),
    Identity("4.9", ("n", "k"), "biorthogonality of the general B family", "n, k <= 6",
             _grid_nk, _chk_4_9),
    Identity("4.10", ("n",), "single-operator form of the general B family", "n <= 8",
             _each_n(), _chk_4_10),
    Identity("4.12", ("n",), "Buermann coefficients of the falling exponential", "n <= 6",
             _each_n(), _chk_4_12),
    Identity("4.13", ("N",), "geometric-weighted expansion of the big exponential", "order 8",
             _order_only, _chk_4_13),
    Identity("5.3", ("i", "k"), "difference operator annihilates powers of t", "i <= 4, k <= 6",
             _grid_ik, _chk_5_3),
    Identity("5.4", ("k",), "difference operator on 1", "k <= 6", _each_k, _chk_5_4),
    Identity("5.5", ("m", "k"), "difference operator on bracket powers", "m <= 4, k <= 6",
             _grid_mk, _chk_5_5),
    Identity("5.6", ("i", "m", "k"), "difference operator annihilates mixed terms",
             "i, m <= 4, k <= 6", _grid_imk, _chk_5_6),
    Identity("5.7", ("n", "j"), "difference operator annihilates the shifted binomial expansion",
             "j <= n <= 6", _grid_nj, _chk_5_7),
    Identity("5.8", ("n",), "difference operator extracts the factorial times a^n", "n <= 6",
             _each_n(), _chk_5_8),
    Identity("5.9", ("n",), "alternating product sum collapses to the factorial times a^n",
             "n <= 6", _each_n(), _chk_5_9),
    Identity("5.10", ("n", "N"), "geometric-weighted series expansion of z^n", "n <= 3, order 8",
             _n_capped_with_order(3), _chk_5_10),
    Identity("5.11", ("n",), "polynomial shadow of the geometric-weighted expansion", "n <= 6",
             _each_n(), _chk_5_11),
    Identity("5.12", ("N",), "geometric-weighted expansion, widened parameter", "order 8",
             _order_only, _chk_5_12),
]

REGISTRY: dict[str, Identity] = {ident.id: ident for ident in _TABLE}


def identity_ids() -> list[str]:
    """Registered identity ids in registry order."""
    return [ident.id for ident in _TABLE]


def get_identity(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def check_identity(identity_id: str, params: dict[str, int]) -> CheckResult:
    """Run one identity check; passes iff both sides agree exactly."""
    ident = get_identity(identity_id)
    kwargs = {}
    for name in ident.params:
        if name not in params:
            raise MissingParam(f"identity {identity_id} needs parameter {name!r}")
        kwargs[name] = params[name]
    start = time.perf_counter()
    diff = ident.compute(**_map_kwargs(ident, kwargs))
    elapsed = time.perf_counter() - start
    if diff.is_zero():
        return CheckResult(identity_id, kwargs, "pass", None, elapsed)
    return CheckResult(identity_id, kwargs, "fail", str(diff), elapsed)


def _map_kwargs(ident: Identity, kwargs: dict[str, int]) -> dict[str, int]:
    """Map public parameter names onto checker argument names (N -> order)."""
    return {("order" if k == "N" else k): v for k, v in kwargs.items()}


def enumerate_checks(
    ids: Iterable[str] | None = None, max_n: int = 6, order: int = 8
) -> list[tuple[str, dict[str, int]]]:
    """The (id, params) pairs a verification run will execute."""
    selected = identity_ids() if ids is None else list(ids)
    tasks = []
    for identity_id in selected:
        ident = get_identity(identity_id)
        for params in ident.enumerate_params(max_n, order):
            tasks.append((identity_id, params))
    return tasks


def verify(
    ids: Iterable[str] | None = None, max_n: int = 6, order: int = 8, jobs: int = 1
) -> list[CheckResult]:
    """Run registry checks and return results sorted by (id, params)."""
    tasks = enumerate_checks(ids, max_n=max_n, order=order)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda t: check_identity(t[0], t[1]), tasks))
    else:
        results = [check_identity(i, p) for i, p in tasks]
    results.sort(key=lambda r: (r.identity_id, tuple(sorted(r.params.items()))))
    return results
