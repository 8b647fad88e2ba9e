"""Exact symbolic toolkit for q-Abel polynomial families.

Builds the polynomial families over the field of rational functions in q,
expands polynomials in the Abel-type basis, extracts q-Lagrange and
q-Lagrange-Buermann coefficients, and verifies a registry of identities
symbolically.  Everything is exact: no floats anywhere.
"""
from .qfield import QPoly, QRat, DivisionByZero, PoleAtPoint, qrat_arith, qrat_equal, qrat_eval
from .mpoly import MPoly, Monomial, Symbol, mp_arith, mp_coeffs_in, mp_eval_q1, mp_subst
from .qcomb import qbinom, qfac, qint, qpoch, qprod
from .series import NonUnitConstantTerm, OrderMismatch, PowerSeries, abel_sum, ps_arith, ps_equal, ps_exp
from .operators import (
    DSeries,
    InvalidIndex,
    L_functional,
    Qn_apply,
    V_op,
    delta_op,
    dseries_apply,
    make_exp_dseries,
    pincherle_residual,
    qderiv,
)
from .abel import AbelCoefficients, FamilyId, OrderTooSmall, abel_expand, abel_poly, lagrange_coeffs
from .registry import CheckResult, MissingParam, UnknownIdentity, check_identity, identity_ids

__version__ = "0.1.0"

__all__ = [
    "QPoly", "QRat", "DivisionByZero", "PoleAtPoint", "qrat_arith", "qrat_equal", "qrat_eval",
    "MPoly", "Monomial", "Symbol", "mp_arith", "mp_coeffs_in", "mp_eval_q1", "mp_subst",
    "qbinom", "qfac", "qint", "qpoch", "qprod",
    "NonUnitConstantTerm", "OrderMismatch", "PowerSeries", "abel_sum", "ps_arith", "ps_equal", "ps_exp",
    "DSeries", "InvalidIndex", "L_functional", "Qn_apply", "V_op", "delta_op",
    "dseries_apply", "make_exp_dseries", "pincherle_residual", "qderiv",
    "AbelCoefficients", "FamilyId", "OrderTooSmall", "abel_expand", "abel_poly", "lagrange_coeffs",
    "CheckResult", "MissingParam", "UnknownIdentity", "check_identity", "identity_ids",
    "__version__",
]
