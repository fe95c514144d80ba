"""Lexer, recursive-descent parser and printer for the expression language.

Grammar (whitespace-insensitive)::

    program  := stmt (";" stmt)* [";"]
    stmt     := ident "=" expr | expr
    expr     := atom | ident | set | pair | call | fn
    atom     := ident "*" | ident "_T"
    set      := "{" [expr ("," expr)*] "}"
    pair     := "(" expr "," expr ")"
    call     := opname "(" [expr ("," expr)*] ")"
    fn       := "fn" "(" expr "," expr "," "{" [expr "->" expr ("," ...)*] "}" ")"
    ident    := [A-Za-z0-9]+

A bare identifier is a binding when the environment defines it and a plain
atom otherwise.  On input ``∅`` means ``{}``, ``Θ``/``_Θ`` mean ``_T`` and
``↦`` means ``->``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import Atom, Polarity, render
from .errors import SigmaError

__all__ = [
    "ParseError",
    "AtomLit",
    "Name",
    "SetLit",
    "PairLit",
    "Call",
    "FnLit",
    "Let",
    "Program",
    "OPERATIONS",
    "parse",
    "unparse",
    "tokenize",
]

# operation name -> arity
OPERATIONS = {
    "fuse": 2,
    "int": 2,
    "aint": 2,
    "diff": 2,
    "sdiff": 2,
    "fsing": 2,
    "star": 1,
    "antiset": 1,
    "pow": 1,
    "gen": 2,
    "ispace": 1,
    "pair": 2,
    "unpair": 1,
    "prod": 2,
    "member": 2,
    "subset": 2,
    "card": 1,
    "compose": 2,
    "inverse": 1,
    "antifn": 1,
    "antinv": 1,
    "id": 1,
    "antid": 1,
    "image": 1,
    "preimage": 2,
    "classify": 1,
    "diagram": 1,
}


class ParseError(SigmaError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        detail = f"; expected one of: {', '.join(sorted(self.expected))}" if self.expected else ""
        super().__init__(f"syntax error at line {line}, column {column}: {message}{detail}")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


_PUNCT = {"{": "{", "}": "}", "(": "(", ")": ")", ",": ",", ";": ";", "=": "=", "*": "*", "↦": "->"}


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if c.isspace():
            i, col = i + 1, col + 1
            continue
        start_col = col
        if c.isascii() and c.isalnum():
            j = i
            while j < n and text[j].isascii() and text[j].isalnum():
                j += 1
            tokens.append(Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
        elif text.startswith("->", i):
            tokens.append(Token("->", "->", line, start_col))
            i, col = i + 2, col + 2
        elif text.startswith("_T", i) or text.startswith("_Θ", i):
            tokens.append(Token("_T", "_T", line, start_col))
            i, col = i + 2, col + 2
        elif c == "Θ":
            tokens.append(Token("_T", "_T", line, start_col))
            i, col = i + 1, col + 1
        elif c == "∅":
            tokens.append(Token("{", "{", line, start_col))
            tokens.append(Token("}", "}", line, start_col))
            i, col = i + 1, col + 1
        elif c in _PUNCT:
            tokens.append(Token(_PUNCT[c], c, line, start_col))
            i, col = i + 1, col + 1
        else:
            raise ParseError(f"unexpected character {c!r}", line, start_col)
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass(frozen=True)
class AtomLit:
    atom: Atom


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class SetLit:
    items: tuple


@dataclass(frozen=True)
class PairLit:
    first: "Expr"
    second: "Expr"


@dataclass(frozen=True)
class Call:
    op: str
    args: tuple


@dataclass(frozen=True)
class FnLit:
    domain: "Expr"
    codomain: "Expr"
    maps: tuple


@dataclass(frozen=True)
class Let:
    name: str
    expr: "Expr"


@dataclass(frozen=True)
class Program:
    statements: tuple


Expr = Union[AtomLit, Name, SetLit, PairLit, Call, FnLit, Let, Program]

_EXPR_START = {"ident", "{", "("}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def fail(self, expected) -> None:
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"unexpected {found}", t.line, t.column, expected)

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail({kind})
        t = self.tok
        self.pos += 1
        return t

    def program(self) -> Expr:
        stmts = [self.statement()]
        while self.tok.kind == ";":
            self.pos += 1
            if self.tok.kind == "eof":
                break
            stmts.append(self.statement())
        if self.tok.kind != "eof":
            self.fail({";", "end of input"})
        if len(stmts) == 1 and not isinstance(stmts[0], Let):
            return stmts[0]
        return Program(tuple(stmts))

    def statement(self) -> Expr:
        if self.tok.kind == "ident" and self.peek().kind == "=":
            name = self.tok.text
            self.pos += 2
            return Let(name, self.expr())
        return self.expr()

    def expr(self) -> Expr:
        t = self.tok
        if t.kind == "{":
            return self.set_literal()
        if t.kind == "(":
            self.pos += 1
            first = self.expr()
            self.expect(",")
            second = self.expr()
            self.expect(")")
            return PairLit(first, second)
        if t.kind == "ident":
            nxt = self.peek()
            if nxt.kind == "*":
                self.pos += 2
                return AtomLit(Atom(t.text, Polarity.STARRED))
            if nxt.kind == "_T":
                self.pos += 2
                return AtomLit(Atom(t.text, Polarity.THETA))
            if nxt.kind == "(":
                if t.text == "fn":
                    return self.fn_literal()
                if t.text not in OPERATIONS:
                    raise ParseError(f"unknown operation {t.text!r}", t.line, t.column, set(OPERATIONS) | {"fn"})
                return self.call()
            self.pos += 1
            return Name(t.text)
        self.fail(_EXPR_START)

    def set_literal(self) -> SetLit:
        self.expect("{")
        items = []
        if self.tok.kind != "}":
            items.append(self.expr())
            while self.tok.kind == ",":
                self.pos += 1
                items.append(self.expr())
        if self.tok.kind != "}":
            self.fail({",", "}"})
        self.pos += 1
        return SetLit(tuple(items))

    def call(self) -> Call:
        name = self.expect("ident")
        self.expect("(")
        args = []
        if self.tok.kind != ")":
            args.append(self.expr())
            while self.tok.kind == ",":
                self.pos += 1
                args.append(self.expr())
        if self.tok.kind != ")":
            self.fail({",", ")"})
        self.pos += 1
        arity = OPERATIONS[name.text]
        if len(args) != arity:
            raise ParseError(
                f"{name.text} takes {arity} argument(s), got {len(args)}", name.line, name.column
            )
        return Call(name.text, tuple(args))

    def fn_literal(self) -> FnLit:
        self.expect("ident")
        self.expect("(")
        domain = self.expr()
        self.expect(",")
        codomain = self.expr()
        self.expect(",")
        self.expect("{")
        maps = []
        if self.tok.kind != "}":
            maps.append(self.mapping())
            while self.tok.kind == ",":
                self.pos += 1
                maps.append(self.mapping())
        if self.tok.kind != "}":
            self.fail({",", "}"})
        self.pos += 1
        self.expect(")")
        return FnLit(domain, codomain, tuple(maps))

    def mapping(self) -> tuple:
        x = self.expr()
        self.expect("->")
        return (x, self.expr())


def parse(text: str) -> Expr:
    """Parse one expression, or a ``;``-separated program with bindings."""
    return _Parser(text).program()


def unparse(e: Expr) -> str:
    if isinstance(e, AtomLit):
        return render(e.atom)
    if isinstance(e, Name):
        return e.name
    if isinstance(e, SetLit):
        return "{" + ", ".join(unparse(i) for i in e.items) + "}"
    if isinstance(e, PairLit):
        return f"({unparse(e.first)}, {unparse(e.second)})"
    if isinstance(e, Call):
        return f"{e.op}(" + ", ".join(unparse(a) for a in e.args) + ")"
    if isinstance(e, FnLit):
        maps = ", ".join(f"{unparse(x)} -> {unparse(y)}" for x, y in e.maps)
        return f"fn({unparse(e.domain)}, {unparse(e.codomain)}, {{{maps}}})"
    if isinstance(e, Let):
        return f"{e.name} = {unparse(e.expr)}"
    if isinstance(e, Program):
        return "; ".join(unparse(s) for s in e.statements)
    raise TypeError(f"not an expression: {e!r}")
