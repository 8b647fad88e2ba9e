"""Independent oracles and fault-injection helpers used by the test suite.

The oracles deliberately avoid the closed formulas under test: expansions
are recovered by triangular back-substitution against explicitly
constructed basis elements, and operator functionals are applied term by
term.
"""
from __future__ import annotations

import contextlib
import random

import qabel.abel as abel_module
from qabel.abel import FamilyId, abel_poly
from qabel.mpoly import MPoly, Symbol
from qabel.operators import L_functional, qderiv
from qabel.qcomb import qfac, qpow
from qabel.qfield import QRat
from qabel.series import PowerSeries, abel_sum


def triangular_expand(f: MPoly, basis: FamilyId = FamilyId.G) -> list[MPoly]:
    """Solve f = sum c_k basis_k by eliminating the top x-degree first."""
    d = f.degree_in(Symbol.x)
    out = [MPoly.zero()] * (d + 1)
    rem = f
    for k in range(d, -1, -1):
        parts = rem.coeffs_in(Symbol.x)
        top = parts[k] if k < len(parts) else MPoly.zero()
        if top.is_zero():
            continue
        basis_k = abel_poly(basis, k)
        lead = basis_k.coeffs_in(Symbol.x)[k].constant_coeff()
        c = top.scale(lead.inv())
        out[k] = c
        rem = rem - c * basis_k
    assert rem.is_zero(), f"triangular solve left a remainder: {rem}"
    return out


def triangular_series_coeffs(f: PowerSeries, shift, order: int) -> list[MPoly]:
    """Solve f = sum c_k/[k]! z^k E(shift(k) z) by back-substitution."""
    rem = f
    out: list[MPoly] = []
    for k in range(order + 1):
        ck = rem.coeffs[k].scale(qfac(k))
        out.append(ck)
        if not ck.is_zero():
            term = abel_sum(
                lambda j, ck=ck, k=k: ck if j == k else MPoly.zero(),
                lambda j, k=k: shift(k),
                f.order,
            )
            rem = rem - term
    for k in range(order + 1):
        assert rem.coeffs[k].is_zero(), f"solve left z^{k} residue: {rem.coeffs[k]}"
    return out


def apply_series_of_D(f: PowerSeries, p: MPoly) -> MPoly:
    """f(D) applied to p: sum_k f_k D^k p, an exact finite sum.

    D acts on x, so the coefficients of f must be free of x.
    """
    out = MPoly.zero()
    dk = p
    for k in range(p.degree_in(Symbol.x) + 1):
        if k:
            dk = qderiv(dk, Symbol.x, 1)
        if k <= f.order:
            out = out + f.coeffs[k] * dk
    return out


def eval_functional(f: PowerSeries, p: MPoly) -> MPoly:
    """L f(D) p."""
    return L_functional(apply_series_of_D(f, p))


def scale_leading_coefficient(p: MPoly, factor=None) -> MPoly:
    """Return p with its graded-lex leading coefficient multiplied by q."""
    factor = qpow(1) if factor is None else factor
    items = sorted(p._t.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
    key, coeff = items[0]
    terms = dict(p._t)
    terms[key] = coeff * factor
    return MPoly._raw(terms)


@contextlib.contextmanager
def corrupt_family(family: FamilyId, n: int = 2):
    """Swap in a family builder whose member n has one wrong coefficient.

    The family cache is cleared on entry and exit so derived members are
    rebuilt consistently inside the context and no corrupted value leaks
    out of it.
    """
    plain = abel_module.abel_poly
    plain.cache_clear()

    def mutated(fam, m):
        p = plain(fam, m)
        if fam is family and m == n:
            return scale_leading_coefficient(p)
        return p

    abel_module.abel_poly = mutated
    try:
        yield
    finally:
        abel_module.abel_poly = plain
        plain.cache_clear()


def random_q_monomial_poly(rng: random.Random, max_deg: int = 6,
                           max_mag: int = 9, max_exp: int = 3) -> MPoly:
    """Polynomial in x whose coefficients are m q^e with |m| <= max_mag."""
    x = MPoly.var(Symbol.x)
    out = MPoly.zero()
    for d in range(max_deg + 1):
        m = rng.randint(-max_mag, max_mag)
        e = rng.randint(0, max_exp)
        if m:
            out = out + (x ** d).scale(QRat.from_scalar(m) * qpow(e))
    return out
