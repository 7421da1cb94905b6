"""Reader for the plain-text program format.

One clause per statement, terminated by ``.``::

    % comment
    a :- not -a.
    p(X) :- q(X), not r(X).
    e.
"""
from __future__ import annotations

import re
from typing import Iterator, NamedTuple

from .errors import ParseError
from .program import Clause, Literal, LogicProgram

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>%[^\n]*)
  | (?P<if>:-)
  | (?P<ident>[a-zA-Z][a-zA-Z0-9_]*)
  | (?P<number>[0-9]+)
  | (?P<punct>[().,\-])
    """,
    re.VERBOSE,
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> Iterator[Token]:
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "ident" and m.group() == "not":
            yield Token("not", "not", line, col)
        elif kind not in ("ws", "comment"):
            yield Token(kind if kind != "punct" else m.group(), m.group(), line, col)
        pos = m.end()
    yield Token("eof", "", line, pos - line_start + 1)


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(tokenize(text))
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            self.fail(f"expected {what}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.column)

    def program(self) -> list[Clause]:
        clauses = []
        while self.tok.kind != "eof":
            clauses.append(self.clause())
        return clauses

    def clause(self) -> Clause:
        start = self.tok
        if start.kind == "if":
            self.fail("constraints (headless rules) are not supported")
        if start.kind == "not":
            self.fail("NAF literal in clause head")
        head = self.classical()
        body = []
        if self.tok.kind == "if":
            self.advance()
            body.append(self.body_literal())
            while self.tok.kind == ",":
                self.advance()
                body.append(self.body_literal())
        elif self.tok.kind == "not":
            self.fail("NAF literal in clause head")
        self.expect(".", "'.' or ':-'")
        return Clause(head, tuple(body))

    def body_literal(self) -> Literal:
        if self.tok.kind == "not":
            self.advance()
            if self.tok.kind == "not":
                self.fail("'not not' is not allowed")
            return self.classical().as_naf()
        return self.classical()

    def classical(self) -> Literal:
        negated = False
        if self.tok.kind == "-":
            self.advance()
            negated = True
            if self.tok.kind == "-":
                self.fail("double classical negation")
        return Literal(self.atom(), negated)

    def atom(self) -> str:
        name = self.expect("ident", "an atom").text
        if self.tok.kind != "(":
            return name
        self.advance()
        terms = [self.term()]
        while self.tok.kind == ",":
            self.advance()
            terms.append(self.term())
        self.expect(")", "')'")
        return f"{name}({','.join(terms)})"

    def term(self) -> str:
        if self.tok.kind in ("ident", "number"):
            return self.advance().text
        self.fail(f"expected a term, found {self.tok.text or 'end of input'!r}")


def parse_program(text: str) -> LogicProgram:
    return LogicProgram(tuple(_Parser(text).program()))


def parse_literal(text: str) -> Literal:
    """Parse a single literal as spelled on the command line.

    Accepts ``a``, ``-a``, ``not:a``, ``not:-a`` and also ``not a``.
    """
    text = text.strip()
    naf = False
    if text.startswith("not:"):
        naf, text = True, text[4:]
    elif text.startswith("not "):
        naf, text = True, text[4:]
    p = _Parser(text)
    if p.tok.kind == "not":
        p.fail("'not not' is not allowed")
    literal = p.classical()
    if p.tok.kind != "eof":
        p.fail(f"trailing input {p.tok.text!r}")
    return literal.as_naf() if naf else literal


def load_program(path) -> LogicProgram:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read())
