"""Complex-valued test-function expressions in one variable ``z``.

Grammar, loosest binding first::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" unary)?          # right associative
    atom   := NUMBER | NUMBER "i" | NAME | NAME "(" expr ")" | "(" expr ")"

Names are the variable ``z``, the constants ``i``, ``pi``, ``e`` and the
functions ``exp log sin cos sinh cosh sqrt``.  ``log``, ``sqrt`` and
non-integer powers use principal branches.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

__all__ = [
    "ExprError",
    "Num",
    "Var",
    "Const",
    "Neg",
    "BinOp",
    "Call",
    "FunctionExpr",
    "parse_expr",
    "to_source",
]


class ExprError(ParameterError):
    """Bad expression source.  ``offset`` is the byte offset of the problem."""

    code = "expr_syntax"

    def __init__(self, message, offset, code=None):
        super().__init__(f"{message} at offset {offset}", code)
        self.offset = offset


CONSTANTS = {"i": 1j, "pi": math.pi, "e": math.e}
FUNCTIONS = {
    "exp": np.exp,
    "log": np.log,
    "sin": np.sin,
    "cos": np.cos,
    "sinh": np.sinh,
    "cosh": np.cosh,
    "sqrt": np.sqrt,
}


@dataclass(frozen=True)
class Num:
    value: complex


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?P<imag>i(?![A-Za-z_0-9]))?
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ExprError(f"unexpected character {src[pos]!r}", _offset(src, pos))
        if m.lastgroup != "ws":
            kind = m.lastgroup if m.lastgroup != "imag" else "num"
            tokens.append((kind, m.group(0), pos, m))
        pos = m.end()
    tokens.append(("end", "", len(src), None))
    return tokens


def _offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None, code=None):
        tok = tok or self.peek()
        return ExprError(message, _offset(self.src, tok[2]), code)

    def expect(self, text):
        tok = self.peek()
        if tok[1] != text:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise self.error(f"expected {text!r}, found {found}")
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.advance()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.advance()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[1] == "-":
            self.advance()
            return Neg(self.unary())
        if self.peek()[1] == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.advance()
            return BinOp("^", base, self.unary())
        return base

    def atom(self):
        tok = self.peek()
        kind, text = tok[0], tok[1]
        if kind == "num":
            self.advance()
            m = tok[3]
            value = float(m.group("num"))
            return Num(complex(0.0, value) if m.group("imag") else complex(value))
        if kind == "name":
            self.advance()
            if self.peek()[1] == "(":
                if text not in FUNCTIONS:
                    raise self.error(f"unknown function {text!r}", tok, "unknown_identifier")
                self.advance()
                args = []
                if self.peek()[1] != ")":
                    args.append(self.expr())
                    while self.peek()[1] == ",":
                        self.advance()
                        args.append(self.expr())
                self.expect(")")
                if len(args) != 1:
                    raise self.error(
                        f"{text} takes 1 argument, got {len(args)}", tok, "arity_mismatch"
                    )
                return Call(text, tuple(args))
            if text == "z":
                return Var()
            if text in CONSTANTS:
                return Const(text)
            if text in FUNCTIONS:
                raise self.error(f"function {text!r} needs an argument", tok, "arity_mismatch")
            raise self.error(f"unknown identifier {text!r}", tok, "unknown_identifier")
        if text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(text)
        raise self.error(f"expected an operand, found {found}")


def _integer_exponent(value):
    v = np.asarray(value)
    if v.ndim != 0:
        return None
    v = complex(v)
    if v.imag == 0 and v.real == int(v.real) and abs(v.real) <= 1024:
        return int(v.real)
    return None


def _evaluate(node, z):
    if isinstance(node, Var):
        return z
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Const):
        return CONSTANTS[node.name]
    if isinstance(node, Neg):
        return -_evaluate(node.operand, z)
    if isinstance(node, Call):
        return FUNCTIONS[node.name](np.asarray(_evaluate(node.args[0], z), dtype=complex))
    left = _evaluate(node.left, z)
    right = _evaluate(node.right, z)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if node.op == "/":
        return np.asarray(left, dtype=complex) / right
    k = _integer_exponent(right)
    base = np.asarray(left, dtype=complex)
    if k is not None:
        return base**k if k >= 0 else 1.0 / base ** (-k)
    return np.power(base, np.asarray(right, dtype=complex))


@dataclass(frozen=True)
class FunctionExpr:
    """Parsed expression; call it with a complex scalar or array."""

    source: str
    ast: object

    def __call__(self, z):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = np.asarray(_evaluate(self.ast, np.asarray(z, dtype=complex)), dtype=complex)
            shape = np.shape(z)
            if out.shape != shape:
                out = np.broadcast_to(out, shape).copy()
        return complex(out) if out.ndim == 0 else out

    def real(self, x):
        """Real part on real input, for building approximations on ``[-1, 1]``."""
        return np.real(self(np.asarray(x, dtype=float)))


def parse_expr(src: str) -> FunctionExpr:
    """Parse ``src`` into a :class:`FunctionExpr`.

    Raises:
        ExprError: with code ``expr_syntax``, ``unknown_identifier`` or
            ``arity_mismatch`` and the byte offset of the offending token.
    """
    return FunctionExpr(src, _Parser(src).parse())


def _num_source(value: complex) -> str:
    if value.imag == 0:
        return repr(value.real)
    if value.real == 0:
        return repr(value.imag) + "i"
    return f"({value.real!r} + {value.imag!r}i)"


def to_source(node) -> str:
    """Render an AST back to source; parsing the result gives the same tree."""
    if isinstance(node, FunctionExpr):
        node = node.ast
    if isinstance(node, Var):
        return "z"
    if isinstance(node, Num):
        return _num_source(node.value)
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Neg):
        return f"(-{to_source(node.operand)})"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_source(a) for a in node.args)})"
    return f"({to_source(node.left)} {node.op} {to_source(node.right)})"
