"""Parsers for the presentation DSL and the complex input formats.

Presentation grammar (whitespace insignificant, "inf" reserved):

    presentation := "free" "(" [ident ("," ident)*] ")"
                      ["/" "(" relation ("," relation)* ")"]
    relation     := term "=" term
    term         := "inf" | "0" | summand ("+" summand)*
    summand      := [integer] ident

Complexes are accepted either as ``complex{a,b,c; {a,b},{b,c}}`` or as JSON
``{"vertices": [...], "facets": [[...]]}``.
"""

from __future__ import annotations

import json
import re

from .errors import ParseError, PresentationError
from .presentation import Presentation, make_presentation
from .simplicial import SimplicialComplex, from_facets
from .words import Word

_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|\d+|[(),+=/{};]|\S")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, int, int]] = []
        line, col = 1, 1
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "\n":
                line += 1
                col = 1
                i += 1
                continue
            if ch.isspace():
                col += 1
                i += 1
                continue
            m = _TOKEN.match(text, i)
            tok = m.group(0)
            self.items.append((tok, line, col))
            i += len(tok)
            col += len(tok)
        self.pos = 0

    def peek(self) -> str | None:
        if self.pos < len(self.items):
            return self.items[self.pos][0]
        return None

    def where(self) -> tuple[int, int]:
        if self.pos < len(self.items):
            _, line, col = self.items[self.pos]
            return line, col
        if self.items:
            tok, line, col = self.items[-1]
            return line, col + len(tok)
        return 1, 1

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", *self.where())
        self.pos += 1
        return tok

    def expect(self, token: str) -> None:
        line, col = self.where()
        got = self.peek()
        if got != token:
            shown = "end of input" if got is None else repr(got)
            raise ParseError(f"expected {token!r}, found {shown}", line, col)
        self.pos += 1

    def done(self) -> None:
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r}", *self.where())


_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_INT = re.compile(r"^\d+$")


def _parse_term(tokens: _Tokens, index: dict[str, int]) -> Word:
    tok = tokens.peek()
    if tok == "inf":
        tokens.next()
        return Word.inf()
    if tok == "0":
        tokens.next()
        return Word.zero()
    word = Word.zero()
    while True:
        line, col = tokens.where()
        tok = tokens.next()
        coefficient = 1
        if _INT.match(tok):
            if int(tok) < 1:
                raise ParseError("coefficients must be >= 1", line, col)
            coefficient = int(tok)
            line, col = tokens.where()
            tok = tokens.next()
        if not _IDENT.match(tok) or tok == "inf":
            raise ParseError(f"expected a generator name, found {tok!r}", line, col)
        if tok not in index:
            raise ParseError(f"undeclared generator {tok!r}", line, col)
        word = word + Word.generator(index[tok], coefficient)
        if tokens.peek() != "+":
            return word
        tokens.next()


def parse_term(text: str, p: Presentation) -> Word:
    """Parse a single word over the generators of an existing presentation."""
    tokens = _Tokens(text)
    index = {name: i for i, name in enumerate(p.generators)}
    w = _parse_term(tokens, index)
    tokens.done()
    return w


def parse_presentation(text: str) -> Presentation:
    tokens = _Tokens(text)
    line, col = tokens.where()
    if tokens.next() != "free":
        raise ParseError("a presentation starts with 'free'", line, col)
    tokens.expect("(")
    names: list[str] = []
    if tokens.peek() != ")":
        while True:
            line, col = tokens.where()
            tok = tokens.next()
            if not _IDENT.match(tok) or tok == "inf":
                raise ParseError(f"invalid generator name {tok!r}", line, col)
            names.append(tok)
            if tokens.peek() == ",":
                tokens.next()
                continue
            break
    tokens.expect(")")
    index = {name: i for i, name in enumerate(names)}
    if len(index) != len(names):
        raise ParseError("duplicate generator name", 1, 1)
    relations: list[tuple[Word, Word]] = []
    if tokens.peek() == "/":
        tokens.next()
        tokens.expect("(")
        while True:
            lhs = _parse_term(tokens, index)
            tokens.expect("=")
            rhs = _parse_term(tokens, index)
            relations.append((lhs, rhs))
            if tokens.peek() == ",":
                tokens.next()
                continue
            break
        tokens.expect(")")
    tokens.done()
    try:
        return make_presentation(names, relations)
    except PresentationError as exc:
        raise ParseError(str(exc), 1, 1) from exc


def _parse_complex_literal(text: str) -> SimplicialComplex:
    tokens = _Tokens(text)
    line, col = tokens.where()
    if tokens.next() != "complex":
        raise ParseError("a complex starts with 'complex'", line, col)
    tokens.expect("{")
    names: list[str] = []
    while tokens.peek() not in (";", "}"):
        names.append(tokens.next())
        if tokens.peek() == ",":
            tokens.next()
    facets: list[list[str]] = []
    if tokens.peek() == ";":
        tokens.next()
        while tokens.peek() == "{":
            tokens.next()
            facet: list[str] = []
            while tokens.peek() != "}":
                facet.append(tokens.next())
                if tokens.peek() == ",":
                    tokens.next()
            tokens.expect("}")
            facets.append(facet)
            if tokens.peek() == ",":
                tokens.next()
    tokens.expect("}")
    tokens.done()
    try:
        return from_facets(names, facets)
    except PresentationError as exc:
        raise ParseError(str(exc), 1, 1) from exc


def parse_complex(text: str) -> SimplicialComplex:
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON complex: {exc.msg}", exc.lineno, exc.colno)
        if not isinstance(data, dict) or set(data) != {"vertices", "facets"}:
            raise ParseError("JSON complex needs 'vertices' and 'facets'", 1, 1)
        try:
            return from_facets(
                [str(v) for v in data["vertices"]],
                [[str(v) for v in f] for f in data["facets"]],
            )
        except PresentationError as exc:
            raise ParseError(str(exc), 1, 1) from exc
    return _parse_complex_literal(stripped)
