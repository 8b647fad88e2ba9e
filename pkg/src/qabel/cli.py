"""Command-line front end.

Subcommands: verify (run identity checks), poly (print a family member),
expand (Abel-basis coefficients of an expression), lagrange (coefficient
extraction for the built-in series), eval (exact rational evaluation), and
list (registered identities).  Exit codes: 0 all checks passed, 1 any check
failed, 2 usage or parse errors.

The expression language covers integers, the symbols x y a b q, the
operators + - * / ^ with the usual precedence, and the function calls
qnum, qfac, qbinom, qpoch, A, G, B, Bg, w, S, abelc.  Exponents are
nonnegative integer literals and division is only by q-only expressions.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import registry
from .abel import FamilyId, abel_expand, abel_poly, lagrange_coeffs
from .mpoly import MPoly, Symbol
from .operators import InvalidIndex
from .qcomb import qbinom, qfac, qint, qpoch
from .qfield import DivisionByZero, PoleAtPoint, QRat
from .registry import CheckResult, MissingParam, UnknownIdentity
from .series import PowerSeries, ps_exp


class ParseError(ValueError):
    """Syntax error with byte offset and the set of tokens that would fit."""

    def __init__(self, message: str, offset: int, expected: set[str]):
        hint = f" (expected {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at offset {offset}{hint}")
        self.offset = offset
        self.expected = frozenset(expected)


class UnknownFunction(ValueError):
    pass


class ArityError(ValueError):
    pass


class NonScalarDenominator(ArithmeticError):
    """Division by an expression involving x, y, a or b."""


# --------------------------------------------------------------------------
# Expression language.
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class SymRef:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Expr", ...]


Expr = Union[IntLit, SymRef, BinOp, Call]

_FUNCTIONS = {
    "qnum": 1,
    "qfac": 1,
    "qbinom": 2,
    "qpoch": 2,
    "A": 1,
    "G": 1,
    "B": 1,
    "Bg": 1,
    "w": 1,
    "S": 1,
    "abelc": 1,
}

_SYMBOLS = ("x", "y", "a", "b", "q")

_FAMILY_BY_NAME = {
    "A": FamilyId.A,
    "G": FamilyId.G,
    "B": FamilyId.B_PLAIN,
    "Bg": FamilyId.B_GENERAL,
    "w": FamilyId.W,
    "S": FamilyId.S,
    "abelc": FamilyId.CLASSICAL,
}


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^(),":
            toks.append(("OP", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i, set())
    toks.append(("EOF", None, n))
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def advance(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "OP" and value in ops

    def expect_op(self, op: str):
        kind, value, pos = self.peek()
        if kind != "OP" or value != op:
            raise ParseError("unexpected token", pos, {repr(op)})
        return self.advance()

    def expr(self) -> Expr:
        if self.at_op("-"):
            self.advance()
            left: Expr = BinOp("-", IntLit(0), self.term())
        else:
            left = self.term()
        while self.at_op("+", "-"):
            op = self.advance()[1]
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.at_op("*", "/"):
            op = self.advance()[1]
            left = BinOp(op, left, self.factor())
        return left

    def factor(self) -> Expr:
        base = self.base()
        if self.at_op("^"):
            self.advance()
            kind, value, pos = self.peek()
            if kind != "INT":
                raise ParseError("exponent must be an integer literal", pos, {"integer"})
            self.advance()
            return BinOp("^", base, IntLit(value))
        return base

    def base(self) -> Expr:
        kind, value, pos = self.peek()
        if kind == "INT":
            self.advance()
            return IntLit(value)
        if kind == "NAME":
            self.advance()
            if self.at_op("("):
                return self.call(value, pos)
            if value in _SYMBOLS:
                return SymRef(value)
            if value in _FUNCTIONS:
                raise ParseError(f"function {value!r} needs arguments", pos, {"("})
            raise ParseError(f"unknown symbol {value!r}", pos, set(_SYMBOLS))
        if kind == "OP" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError("expected a value", pos, {"integer", "symbol", "(", "function"})

    def call(self, name: str, pos: int) -> Expr:
        if name not in _FUNCTIONS:
            raise UnknownFunction(f"unknown function {name!r}")
        self.expect_op("(")
        args = [self.expr()]
        while self.at_op(","):
            self.advance()
            args.append(self.expr())
        self.expect_op(")")
        if len(args) != _FUNCTIONS[name]:
            raise ArityError(f"{name} takes {_FUNCTIONS[name]} argument(s), got {len(args)}")
        return Call(name, tuple(args))


def parse_expr(text: str) -> Expr:
    """Parse the expression language into an abstract syntax tree."""
    parser = _Parser(_tokenize(text))
    tree = parser.expr()
    kind, _, pos = parser.peek()
    if kind != "EOF":
        raise ParseError("unexpected trailing input", pos, {"end of input"})
    return tree


def _index_arg(value: MPoly, what: str, allow_negative: bool = False) -> int:
    if not value.is_constant():
        raise InvalidIndex(f"{what} must be a constant integer")
    c = value.constant_coeff()
    if not c.is_constant():
        raise InvalidIndex(f"{what} must be free of q")
    f = c.as_fraction()
    if f.denominator != 1:
        raise InvalidIndex(f"{what} must be an integer")
    n = int(f)
    if n < 0 and not allow_negative:
        raise InvalidIndex(f"{what} must be nonnegative")
    return n


def eval_expr(tree: Expr) -> MPoly:
    """Evaluate a parsed expression to a polynomial over the q-field."""
    if isinstance(tree, IntLit):
        return MPoly.const(tree.value)
    if isinstance(tree, SymRef):
        if tree.name == "q":
            return MPoly.const(QRat.q_power(1))
        return MPoly.var(Symbol[tree.name])
    if isinstance(tree, BinOp):
        left = eval_expr(tree.left)
        if tree.op == "^":
            return left ** tree.right.value
        right = eval_expr(tree.right)
        if tree.op == "+":
            return left + right
        if tree.op == "-":
            return left - right
        if tree.op == "*":
            return left * right
        if tree.op == "/":
            if not right.is_constant():
                raise NonScalarDenominator("denominator must be a q-only expression")
            c = right.constant_coeff()
            if c.is_zero():
                raise DivisionByZero("division by zero")
            return left.scale(c.inv())
        raise ValueError(f"unknown operator {tree.op!r}")
    if isinstance(tree, Call):
        args = [eval_expr(arg) for arg in tree.args]
        name = tree.name
        if name == "qnum":
            return MPoly.const(qint(_index_arg(args[0], "q-integer index")))
        if name == "qfac":
            return MPoly.const(qfac(_index_arg(args[0], "q-factorial index")))
        if name == "qbinom":
            n = _index_arg(args[0], "upper index")
            k = _index_arg(args[1], "lower index", allow_negative=True)
            return MPoly.const(qbinom(n, k))
        if name == "qpoch":
            return qpoch(args[0], _index_arg(args[1], "product length"))
        family = _FAMILY_BY_NAME[name]
        return abel_poly(family, _index_arg(args[0], "family index"))
    raise TypeError(f"not an expression node: {tree!r}")


# --------------------------------------------------------------------------
# Reports.
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Report:
    entries: tuple[CheckResult, ...]
    format: str = "text"

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def passed(self) -> int:
        return sum(1 for e in self.entries if e.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def render(self) -> str:
        return self.to_json() if self.format == "json" else self.to_text()

    def _param_text(self, entry: CheckResult) -> str:
        return " ".join(f"{k}={v}" for k, v in entry.params.items())

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            status = "pass" if e.passed else "FAIL"
            line = f"{status}  {e.identity_id}  {self._param_text(e)}  ({e.elapsed * 1000:.1f} ms)"
            if e.difference is not None:
                line += f"  difference: {e.difference}"
            lines.append(line)
        lines.append(f"total {self.total}  passed {self.passed}  failed {self.failed}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "entries": [
                {
                    "identity": e.identity_id,
                    "params": e.params,
                    "status": e.status,
                    "difference": e.difference,
                    "elapsed_ms": round(e.elapsed * 1000, 3),
                }
                for e in self.entries
            ],
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
        }
        return json.dumps(payload, indent=2) + "\n"


# --------------------------------------------------------------------------
# Command execution.
# --------------------------------------------------------------------------

class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="qabel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("--id", action="append", dest="ids", metavar="ID")
    p_verify.add_argument("--max-n", type=int, default=6)
    p_verify.add_argument("--order", type=int, default=8)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--jobs", type=int, default=1)

    p_poly = sub.add_parser("poly", help="print a family polynomial")
    p_poly.add_argument("family", choices=sorted(_FAMILY_BY_NAME))
    p_poly.add_argument("n", type=int)

    p_expand = sub.add_parser("expand", help="Abel-basis coefficients of an expression")
    p_expand.add_argument("expression")

    p_lagrange = sub.add_parser("lagrange", help="coefficient extraction for built-in series")
    p_lagrange.add_argument("--mode", required=True, choices=["plain", "general", "buermann"])
    p_lagrange.add_argument("--f", required=True, dest="builtin",
                            choices=["e_xz", "E_xz", "E_neg_yz", "z"])
    p_lagrange.add_argument("--terms", required=True, type=int)

    p_eval = sub.add_parser("eval", help="exact rational evaluation of an expression")
    p_eval.add_argument("expression")
    p_eval.add_argument("--q", required=True)
    for name in ("x", "y", "a", "b"):
        p_eval.add_argument(f"--{name}")

    sub.add_parser("list", help="list registered identities")
    return parser


def _parse_rational(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"{what} must be an integer or p/r rational, got {text!r}") from None


def _cmd_verify(ns) -> tuple[str, int]:
    if ns.ids:
        for identity_id in ns.ids:
            registry.get_identity(identity_id)
    if ns.max_n < 0 or ns.order < 0 or ns.jobs < 1:
        raise _UsageError("--max-n and --order must be nonnegative, --jobs positive")
    results = registry.verify(ns.ids, max_n=ns.max_n, order=ns.order, jobs=ns.jobs)
    report = Report(tuple(results), format="json" if ns.json else "text")
    return report.render(), 0 if report.all_passed else 1


def _cmd_poly(ns) -> tuple[str, int]:
    if ns.n < 0:
        raise _UsageError("family index must be nonnegative")
    return str(abel_poly(_FAMILY_BY_NAME[ns.family], ns.n)) + "\n", 0


def _cmd_expand(ns) -> tuple[str, int]:
    poly = eval_expr(parse_expr(ns.expression))
    coeffs = abel_expand(poly).coeffs
    lines = [f"{k}: {c}" for k, c in enumerate(coeffs)]
    return "\n".join(lines) + "\n", 0


def _cmd_lagrange(ns) -> tuple[str, int]:
    if ns.terms < 0:
        raise _UsageError("--terms must be nonnegative")
    order = ns.terms
    x = MPoly.var(Symbol.x)
    y = MPoly.var(Symbol.y)
    if ns.builtin == "e_xz":
        series = ps_exp("small_e", x, order)
    elif ns.builtin == "E_xz":
        series = ps_exp("big_E", x, order)
    elif ns.builtin == "E_neg_yz":
        series = ps_exp("big_E", -y, order)
    else:
        series = PowerSeries.monomial(1, order)
    mode = "general_b" if ns.mode == "general" else ns.mode
    coeffs = lagrange_coeffs(series, mode, order)
    lines = [f"{k}: {c}" for k, c in enumerate(coeffs)]
    return "\n".join(lines) + "\n", 0


def _cmd_eval(ns) -> tuple[str, int]:
    poly = eval_expr(parse_expr(ns.expression))
    q0 = _parse_rational(ns.q, "--q")
    values: dict[Symbol, Fraction] = {}
    for name in ("x", "y", "a", "b"):
        given = getattr(ns, name)
        sym = Symbol[name]
        if given is not None:
            values[sym] = _parse_rational(given, f"--{name}")
        elif not poly.free_of(sym):
            raise _UsageError(f"expression uses {name} but --{name} was not given")
    return str(poly.eval_at(q0, values)) + "\n", 0


def _cmd_list(ns) -> tuple[str, int]:
    lines = []
    for identity_id in registry.identity_ids():
        ident = registry.get_identity(identity_id)
        params = ", ".join(ident.params)
        lines.append(f"{identity_id:12s} params: {params:8s} verified: {ident.verified:18s} {ident.description}")
    return "\n".join(lines) + "\n", 0


_DISPATCH = {
    "verify": _cmd_verify,
    "poly": _cmd_poly,
    "expand": _cmd_expand,
    "lagrange": _cmd_lagrange,
    "eval": _cmd_eval,
    "list": _cmd_list,
}


def run_command(argv: list[str], stderr=None) -> tuple[str, int]:
    """Execute one CLI invocation; returns (stdout text, exit code).

    Error text goes to stderr (or the supplied stream).  Exit codes: 0 all
    checks passed, 1 a verification entry failed, 2 usage or input errors.
    """
    err = stderr if stderr is not None else sys.stderr
    parser = _build_arg_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return "", 2
    except SystemExit as exc:
        return "", int(exc.code or 0)
    try:
        return _DISPATCH[ns.command](ns)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return "", 2
    except (ParseError, UnknownFunction, ArityError, NonScalarDenominator, InvalidIndex,
            DivisionByZero, PoleAtPoint, UnknownIdentity, MissingParam, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return "", 2


def main(argv: list[str] | None = None) -> None:
    out, code = run_command(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    raise SystemExit(code)


if __name__ == "__main__":
    main()
