"""Surface syntax for elements and identities.

    expr := ['+'|'-'] term (('+'|'-') term)*
    term := rational ['*'] atom ('*' atom)* | rational | atom ('*' atom)*
    atom := ident | 'Y[' names '|' names ']' | '(' expr ')'
          | '[' expr ',' expr ']' | '{' expr ',' expr '}'
          | 'assoc(' expr ',' expr ',' expr ')'

``*`` is left-associative and juxtaposition is not a product.  A bare
rational term is only allowed when it is zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import Element, Pair, multiply
from .magma import MagmaPoly
from .operators import anticommutator, associator, commutator
from .oracle import pattern_word


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BasisLit:
    word: Pair


@dataclass(frozen=True)
class BinOp:
    op: str  # "mul", "com", "anti"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Assoc:
    a: "Expr"
    b: "Expr"
    c: "Expr"


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (Fraction, Expr | None); None marks a zero scalar


Expr = Union[Var, BasisLit, BinOp, Assoc, Sum]


# -- lexer ------------------------------------------------------------------------

TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<sym>[-+*/()\[\]{},|=]))")


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def where(p):
        line = max(i for i, s in enumerate(line_starts) if s <= p)
        return line + 1, p - line_starts[line] + 1

    while pos < len(text):
        m = TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            p = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[p]!r}", *where(p))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(Token(kind, m.group(kind), *where(start)))
        pos = m.end()
    end = where(len(text))
    tokens.append(Token("eof", "", *end))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def error(self, message, tok=None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.column)

    def accept(self, text) -> bool:
        if self.tok.kind == "sym" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")

    def expr(self) -> Sum:
        terms = []
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        terms.append(self.term(sign))
        while True:
            if self.accept("+"):
                terms.append(self.term(1))
            elif self.accept("-"):
                terms.append(self.term(-1))
            else:
                break
        return Sum(tuple(terms))

    def rational(self) -> Fraction:
        num = int(self.tok.text)
        self.i += 1
        if self.tok.kind == "sym" and self.tok.text == "/" and self.peek().kind == "num":
            self.i += 1
            tok = self.tok
            den = int(tok.text)
            self.i += 1
            if den == 0:
                self.error("zero denominator", tok)
            return Fraction(num, den)
        return Fraction(num)

    def term(self, sign: int):
        coeff = Fraction(sign)
        start = self.tok
        if self.tok.kind == "num":
            coeff *= self.rational()
            self.accept("*")
            if not self._atom_starts():
                if coeff != 0:
                    self.error("scalar without a monomial", start)
                return (Fraction(0), None)
        node = self.atom()
        while self.accept("*"):
            node = BinOp("mul", node, self.atom())
        return (coeff, node)

    def _atom_starts(self) -> bool:
        t = self.tok
        return t.kind == "ident" or (t.kind == "sym" and t.text in "([{")

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "ident":
            nxt = self.peek()
            if t.text == "assoc" and nxt.kind == "sym" and nxt.text == "(":
                self.i += 2
                a = self.expr()
                self.expect(",")
                b = self.expr()
                self.expect(",")
                c = self.expr()
                self.expect(")")
                return Assoc(a, b, c)
            if t.text == "Y" and nxt.kind == "sym" and nxt.text == "[":
                self.i += 2
                col = self.names()
                self.expect("|")
                row = self.names()
                self.expect("]")
                return BasisLit(Pair(tuple(col), tuple(row)))
            self.i += 1
            return Var(t.text)
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        if self.accept("["):
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return BinOp("com", a, b)
        if self.accept("{"):
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("}")
            return BinOp("anti", a, b)
        if t.kind == "eof":
            self.error("unexpected end of input")
        self.error(f"unexpected token {t.text!r}")

    def names(self) -> list[str]:
        out = []
        while True:
            if self.tok.kind != "ident":
                self.error("expected a generator name")
            out.append(self.tok.text)
            self.i += 1
            if not self.accept(","):
                return out

    def finish(self):
        if self.tok.kind != "eof":
            t = self.tok
            if t.kind == "sym" and t.text in ")]}":
                self.error(f"unbalanced {t.text!r}")
            self.error(f"unexpected token {t.text!r}")


def parse(text: str) -> Sum:
    p = _Parser(text)
    e = p.expr()
    p.finish()
    return e


def parse_identity(text: str) -> tuple[Sum, Sum]:
    """``lhs = rhs``; a missing right-hand side means ``= 0``."""
    p = _Parser(text)
    lhs = p.expr()
    if p.accept("="):
        rhs = p.expr()
    else:
        rhs = Sum(((Fraction(0), None),))
    p.finish()
    return lhs, rhs


# -- interpretation -----------------------------------------------------------------


def to_element(e: Expr) -> Element:
    """Interpret in the free bicommutative algebra; [,] and {,} expand."""
    if isinstance(e, Var):
        return Element.gen(e.name)
    if isinstance(e, BasisLit):
        return Element.word(e.word)
    if isinstance(e, BinOp):
        a, b = to_element(e.left), to_element(e.right)
        if e.op == "mul":
            return multiply(a, b)
        if e.op == "com":
            return commutator(a, b)
        return anticommutator(a, b)
    if isinstance(e, Assoc):
        return associator(to_element(e.a), to_element(e.b), to_element(e.c))
    out = Element()
    for c, node in e.terms:
        if node is not None:
            out = out + to_element(node).scale(c)
    return out


def to_magma(e: Expr) -> MagmaPoly:
    """Interpret as a polynomial in one binary operation.

    ``a*b``, ``[a,b]`` and ``{a,b}`` all denote that operation;
    ``assoc(a,b,c)`` is ``a(bc) - (ab)c``.
    """
    if isinstance(e, Var):
        return MagmaPoly.var(e.name)
    if isinstance(e, BasisLit):
        return MagmaPoly.word(pattern_word(e.word))
    if isinstance(e, BinOp):
        return to_magma(e.left) * to_magma(e.right)
    if isinstance(e, Assoc):
        a, b, c = to_magma(e.a), to_magma(e.b), to_magma(e.c)
        return a * (b * c) - (a * b) * c
    out = MagmaPoly()
    for c, node in e.terms:
        if node is not None:
            out = out + to_magma(node).scale(c)
    return out


def parse_element(text: str) -> Element:
    return to_element(parse(text))


def parse_magma(text: str) -> MagmaPoly:
    return to_magma(parse(text))


def parse_identity_poly(text: str) -> MagmaPoly:
    lhs, rhs = parse_identity(text)
    return to_magma(lhs) - to_magma(rhs)
