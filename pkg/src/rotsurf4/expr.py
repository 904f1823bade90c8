"""Meridian profile expressions: parsing, exact symbolic derivatives, evaluation.

Accepted grammar, lowest to highest precedence::

    sum    := term  (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom (('^' | '**') unary)?        # right associative
    atom   := NUMBER | 'u' | NAME '(' sum ')' | '(' sum ')'

``NAME`` is one of ``sin cos exp log sqrt`` and ``u`` is the only variable.
``NUMBER`` covers decimal and scientific notation.

Trees are immutable dataclasses compared structurally.  ``differentiate``
returns a fresh tree and performs no simplification; correctness is judged
by evaluation, not by normal form.  Exponentiation with a negative base is
exact for integer exponents and a domain error otherwise.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

__all__ = [
    "Constant",
    "Variable",
    "Unary",
    "Binary",
    "Expr",
    "Interval",
    "Profile",
    "ExprError",
    "ExprSyntaxError",
    "UnknownIdentifierError",
    "EvalDomainError",
    "parse",
    "unparse",
    "evaluate",
    "differentiate",
    "format_number",
    "constant_profile",
]


class ExprError(Exception):
    """Base class for expression parsing and evaluation failures."""


class ExprSyntaxError(ExprError):
    """Malformed input text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnknownIdentifierError(ExprSyntaxError):
    pass


class EvalDomainError(ExprError):
    """Evaluation left the real domain; carries the offending subtree."""

    def __init__(self, node: "Expr | None", reason: str):
        if node is not None:
            super().__init__(f"domain error in `{unparse(node)}`: {reason}")
        else:
            super().__init__(reason)
        self.node = node


@dataclass(frozen=True)
class Constant:
    value: float


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class Unary:
    op: str  # neg, sin, cos, exp, log, sqrt
    child: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str  # + - * / ^
    left: "Expr"
    right: "Expr"


Expr = Union[Constant, Variable, Unary, Binary]

UNARY_FUNCTIONS = ("sin", "cos", "exp", "log", "sqrt")


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<pow>\*\*|\^)"
    r"|(?P<op>[-+*/()])"
    r"|(?P<space>\s+)"
    r"|(?P<bad>.)"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "space":
            continue
        if kind == "bad":
            raise ExprSyntaxError(f"unexpected character {m.group()!r}", m.start())
        tokens.append(_Token(kind, m.group(), m.start()))
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse_sum(self) -> Expr:
        node = self.parse_term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            node = Binary(op, node, self.parse_term())
        return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            node = Binary(op, node, self.parse_unary())
        return node

    def parse_unary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            start = self.pos
            operand = self.parse_unary()
            # "-2" becomes a negative literal; "-(2)" keeps the negation node,
            # and "-2^3" never reaches here as a Constant (pow binds tighter).
            if isinstance(operand, Constant) and self.pos == start + 1:
                return Constant(-operand.value)
            return Unary("neg", operand)
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self.peek().kind == "pow":
            self.advance()
            return Binary("^", base, self.parse_unary())
        return base

    def parse_atom(self) -> Expr:
        tok = self.advance()
        if tok.kind == "num":
            value = float(tok.text)
            if not math.isfinite(value):
                raise ExprSyntaxError("numeric literal overflows a double", tok.offset)
            return Constant(value)
        if tok.kind == "name":
            if tok.text == "u":
                return Variable()
            if tok.text in UNARY_FUNCTIONS:
                opener = self.advance()
                if not (opener.kind == "op" and opener.text == "("):
                    raise ExprSyntaxError(f"expected '(' after {tok.text!r}", opener.offset)
                arg = self.parse_sum()
                self.expect_close()
                return Unary(tok.text, arg)
            raise UnknownIdentifierError(f"unknown identifier {tok.text!r}", tok.offset)
        if tok.kind == "op" and tok.text == "(":
            node = self.parse_sum()
            self.expect_close()
            return node
        if tok.kind == "end":
            raise ExprSyntaxError("unexpected end of input", tok.offset)
        raise ExprSyntaxError(f"expected a value, found {tok.text!r}", tok.offset)

    def expect_close(self) -> None:
        tok = self.advance()
        if not (tok.kind == "op" and tok.text == ")"):
            raise ExprSyntaxError("expected ')'", tok.offset)


def parse(text: str) -> Expr:
    """Parse ``text`` into an expression tree.

    Raises :class:`ExprSyntaxError` (with byte offset) on malformed input,
    :class:`UnknownIdentifierError` for names other than ``u`` and the five
    supported functions, and rejects empty input.
    """
    if not text or text.strip() == "":
        raise ExprSyntaxError("empty expression", 0)
    parser = _Parser(_tokenize(text))
    node = parser.parse_sum()
    tail = parser.peek()
    if tail.kind != "end":
        raise ExprSyntaxError(f"unexpected trailing input {tail.text!r}", tail.offset)
    return node


# ---------------------------------------------------------------------------
# printing

_PREC_SUM, _PREC_TERM, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def format_number(v: float) -> str:
    """Shortest text that parses back to exactly ``v``."""
    if not math.isfinite(v):
        raise ValueError(f"cannot format non-finite constant {v!r}")
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def unparse(e: Expr) -> str:
    """Render a tree as text; ``parse(unparse(e))`` reproduces ``e`` exactly."""
    return _render(e, 0)


def _render(e: Expr, context: int) -> str:
    text, prec = _render_prec(e)
    return f"({text})" if prec < context else text


def _render_prec(e: Expr) -> tuple[str, int]:
    match e:
        case Constant(v):
            return format_number(v), (_PREC_NEG if v < 0 else _PREC_ATOM)
        case Variable():
            return "u", _PREC_ATOM
        case Unary("neg", Constant(v)) if v >= 0:
            # keep distinct from the folded negative literal
            return f"-({format_number(v)})", _PREC_NEG
        case Unary("neg", child):
            return "-" + _render(child, _PREC_NEG), _PREC_NEG
        case Unary(op, child):
            return f"{op}({_render(child, 0)})", _PREC_ATOM
        case Binary("+" | "-" as op, a, b):
            return _render(a, _PREC_SUM) + op + _render(b, _PREC_SUM + 1), _PREC_SUM
        case Binary("*" | "/" as op, a, b):
            return _render(a, _PREC_TERM) + op + _render(b, _PREC_TERM + 1), _PREC_TERM
        case Binary("^", a, b):
            return _render(a, _PREC_POW + 1) + "^" + _render(b, _PREC_NEG), _PREC_POW
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# evaluation

def evaluate(e: Expr, u: float) -> float:
    """Evaluate at ``u``; raises :class:`EvalDomainError` when the result
    leaves the reals (log/sqrt of a negative, division by zero, overflow)."""
    match e:
        case Constant(v):
            return v
        case Variable():
            return u
        case Unary("neg", child):
            return -evaluate(child, u)
        case Unary("sin", child):
            return math.sin(evaluate(child, u))
        case Unary("cos", child):
            return math.cos(evaluate(child, u))
        case Unary("exp", child):
            try:
                return math.exp(evaluate(child, u))
            except OverflowError:
                raise EvalDomainError(e, "overflow") from None
        case Unary("log", child):
            v = evaluate(child, u)
            if v <= 0.0:
                raise EvalDomainError(e, f"log of non-positive value {v!r}")
            return math.log(v)
        case Unary("sqrt", child):
            v = evaluate(child, u)
            if v < 0.0:
                raise EvalDomainError(e, f"square root of negative value {v!r}")
            return math.sqrt(v)
        case Binary("+", a, b):
            return _finite(e, evaluate(a, u) + evaluate(b, u))
        case Binary("-", a, b):
            return _finite(e, evaluate(a, u) - evaluate(b, u))
        case Binary("*", a, b):
            return _finite(e, evaluate(a, u) * evaluate(b, u))
        case Binary("/", a, b):
            num = evaluate(a, u)
            den = evaluate(b, u)
            if den == 0.0:
                raise EvalDomainError(e, "division by zero")
            return _finite(e, num / den)
        case Binary("^", a, b):
            return _power(e, evaluate(a, u), evaluate(b, u))
    raise TypeError(f"not an expression node: {e!r}")


def _finite(e: Expr, v: float) -> float:
    if not math.isfinite(v):
        raise EvalDomainError(e, "non-finite result")
    return v


def _power(e: Expr, base: float, p: float) -> float:
    if base > 0.0:
        try:
            return _finite(e, math.pow(base, p))
        except OverflowError:
            raise EvalDomainError(e, "overflow") from None
    if base == 0.0:
        if p > 0.0:
            return 0.0
        if p == 0.0:
            return 1.0
        raise EvalDomainError(e, "zero raised to a negative power")
    # negative base is exact for integer exponents only
    if p != math.floor(p):
        raise EvalDomainError(e, f"negative base {base!r} with non-integer exponent {p!r}")
    try:
        return _finite(e, math.pow(base, p))
    except OverflowError:
        raise EvalDomainError(e, "overflow") from None


# ---------------------------------------------------------------------------
# differentiation

def differentiate(e: Expr) -> Expr:
    """Symbolic derivative with respect to ``u``.

    The power rule covers any constant real exponent (the rotational
    meridians use non-integer powers); a non-constant exponent falls back to
    ``a^b * (b' log a + b a'/a)``, whose domain is enforced at eval time.
    """
    match e:
        case Constant(_):
            return Constant(0.0)
        case Variable():
            return Constant(1.0)
        case Unary("neg", child):
            return Unary("neg", differentiate(child))
        case Unary("sin", child):
            return Binary("*", Unary("cos", child), differentiate(child))
        case Unary("cos", child):
            return Unary("neg", Binary("*", Unary("sin", child), differentiate(child)))
        case Unary("exp", child):
            return Binary("*", e, differentiate(child))
        case Unary("log", child):
            return Binary("/", differentiate(child), child)
        case Unary("sqrt", child):
            return Binary("/", differentiate(child), Binary("*", Constant(2.0), e))
        case Binary("+" | "-" as op, a, b):
            return Binary(op, differentiate(a), differentiate(b))
        case Binary("*", a, b):
            return Binary(
                "+",
                Binary("*", differentiate(a), b),
                Binary("*", a, differentiate(b)),
            )
        case Binary("/", a, b):
            return Binary(
                "/",
                Binary(
                    "-",
                    Binary("*", differentiate(a), b),
                    Binary("*", a, differentiate(b)),
                ),
                Binary("^", b, Constant(2.0)),
            )
        case Binary("^", a, Constant(p)):
            if p == 0.0:
                return Constant(0.0)
            return Binary(
                "*",
                Binary("*", Constant(p), Binary("^", a, Constant(p - 1.0))),
                differentiate(a),
            )
        case Binary("^", a, b):
            inner = Binary(
                "+",
                Binary("*", differentiate(b), Unary("log", a)),
                Binary("/", Binary("*", b, differentiate(a)), a),
            )
            return Binary("*", e, inner)
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# profiles

@dataclass(frozen=True)
class Interval:
    """A real interval; bounds default to the whole line."""

    lo: float = -math.inf
    hi: float = math.inf
    open_lo: bool = False
    open_hi: bool = False

    def contains(self, u: float) -> bool:
        if self.open_lo:
            if u <= self.lo:
                return False
        elif u < self.lo:
            return False
        if self.open_hi:
            if u >= self.hi:
                return False
        elif u > self.hi:
            return False
        return True


@dataclass(frozen=True)
class Profile:
    """A scalar function of ``u`` with exact symbolic first and second
    derivatives, carried as expression trees."""

    expr: Expr
    d1: Expr
    d2: Expr
    domain: Interval = Interval()

    @classmethod
    def from_expr(cls, expr: Expr, domain: Interval = Interval()) -> "Profile":
        d1 = differentiate(expr)
        return cls(expr, d1, differentiate(d1), domain)

    @classmethod
    def from_text(cls, text: str, domain: Interval = Interval()) -> "Profile":
        return cls.from_expr(parse(text), domain)

    def _check_domain(self, u: float) -> None:
        if not self.domain.contains(u):
            raise EvalDomainError(
                None,
                f"u={u!r} outside the profile domain "
                f"({self.domain.lo!r}, {self.domain.hi!r})",
            )

    def value(self, u: float) -> float:
        self._check_domain(u)
        return evaluate(self.expr, u)

    def deriv1(self, u: float) -> float:
        self._check_domain(u)
        return evaluate(self.d1, u)

    def deriv2(self, u: float) -> float:
        self._check_domain(u)
        return evaluate(self.d2, u)


def constant_profile(v: float) -> Profile:
    return Profile.from_expr(Constant(float(v)))
