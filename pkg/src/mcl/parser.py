"""Text format for modular knowledge bases and queries.

Grammar (``#`` starts a line comment)::

    kb        := section+
    section   := "strict:" axiom* | "module" NAME "subject" concept ":" default* | "abox:" assertion*
    axiom     := concept "<=" concept "."
    default   := "T(" concept ")" "<=" concept "."
    assertion := NAME "(" NAME ")" "." | NAME "(" NAME "," NAME ")" "."
    concept   := "Top" | "Bot" | NAME | "not" concept | concept "and" concept
               | concept "or" concept | "exists" NAME "." concept
               | "forall" NAME "." concept | "(" concept ")"

``not`` binds tighter than ``and``, which binds tighter than ``or``; a
quantifier takes the longest concept that follows it. As a small extension
an assertion may also name a parenthesised concept: ``(not A)(a).``
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .concepts import BOT, TOP, And, Concept, Exists, Forall, Name, Not, Or, to_string
from .kb import (
    ConceptAssertion,
    DefModule,
    ModularKB,
    Query,
    RoleAssertion,
    StrictInclusion,
    TypicalityInclusion,
)

KEYWORDS = {"not", "and", "or", "exists", "forall", "Top", "Bot", "strict", "abox", "module", "subject", "T"}

_TOKEN = re.compile(r"\s+|#[^\n]*|(?P<sub><=)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[().,:])")


class KBSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # "name" | "punct" | "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise KBSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        if m.lastgroup == "name":
            tokens.append(Token("name", m.group(), line, pos - line_start + 1))
        elif m.lastgroup in ("sub", "punct"):
            tokens.append(Token("punct", m.group(), line, pos - line_start + 1))
        chunk = m.group()
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise KBSyntaxError(message, tok.line, tok.col)

    def at(self, text: str) -> bool:
        return self.tok.kind != "eof" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")
        tok = self.tok
        self.i += 1
        return tok

    def identifier(self, what: str) -> str:
        tok = self.tok
        if tok.kind != "name" or tok.text in KEYWORDS:
            self.error(f"expected {what}, found {tok.text or 'end of input'!r}")
        self.i += 1
        return tok.text

    # concepts

    def concept(self) -> Concept:
        left = self.conj()
        while self.at("or"):
            self.i += 1
            left = Or(left, self.conj())
        return left

    def conj(self) -> Concept:
        left = self.unary()
        while self.at("and"):
            self.i += 1
            left = And(left, self.unary())
        return left

    def unary(self) -> Concept:
        tok = self.tok
        if self.at("not"):
            self.i += 1
            return Not(self.unary())
        if self.at("exists") or self.at("forall"):
            self.i += 1
            role = self.identifier("role name")
            self.expect(".")
            filler = self.concept()
            return Exists(role, filler) if tok.text == "exists" else Forall(role, filler)
        if self.at("("):
            self.i += 1
            c = self.concept()
            self.expect(")")
            return c
        if self.at("Top"):
            self.i += 1
            return TOP
        if self.at("Bot"):
            self.i += 1
            return BOT
        if self.at("T") and self.peek().text == "(":
            self.error("typicality T(...) is only allowed on the left-hand side of a default")
        return Name(self.identifier("concept"))

    # statements

    def section_start(self) -> bool:
        if self.tok.kind == "eof" or self.at("module"):
            return True
        return (self.at("strict") or self.at("abox")) and self.peek().text == ":"

    def axiom(self) -> StrictInclusion:
        if self.at("T") and self.peek().text == "(":
            self.error("typicality T(...) is only allowed on the left-hand side of a default")
        lhs = self.concept()
        self.expect("<=")
        rhs = self.concept()
        self.expect(".")
        return StrictInclusion(lhs, rhs)

    def default(self) -> TypicalityInclusion:
        if not (self.at("T") and self.peek().text == "("):
            self.error("module sections may only contain defaults of the form T(C) <= D.")
        self.i += 2
        ante = self.concept()
        self.expect(")")
        self.expect("<=")
        cons = self.concept()
        self.expect(".")
        return TypicalityInclusion(ante, cons)

    def assertion(self):
        if self.at("("):
            self.i += 1
            concept = self.concept()
            self.expect(")")
            self.expect("(")
            ind = self.identifier("individual name")
            self.expect(")")
            self.expect(".")
            return ConceptAssertion(concept, ind)
        head = self.identifier("concept or role name")
        self.expect("(")
        first = self.identifier("individual name")
        if self.at(","):
            self.i += 1
            second = self.identifier("individual name")
            self.expect(")")
            self.expect(".")
            return RoleAssertion(head, first, second)
        self.expect(")")
        self.expect(".")
        return ConceptAssertion(Name(head), first)

    def kb(self) -> ModularKB:
        strict, modules, abox = [], [], []
        names: set[str] = set()
        if self.tok.kind == "eof":
            self.error("empty knowledge base")
        while self.tok.kind != "eof":
            if self.at("strict") and self.peek().text == ":":
                self.i += 2
                while not self.section_start():
                    strict.append(self.axiom())
            elif self.at("abox") and self.peek().text == ":":
                self.i += 2
                while not self.section_start():
                    abox.append(self.assertion())
            elif self.at("module"):
                self.i += 1
                name_tok = self.tok
                name = self.identifier("module name")
                if name in names:
                    self.error(f"duplicate module name {name!r}", name_tok)
                names.add(name)
                self.expect("subject")
                subject = self.concept()
                self.expect(":")
                defaults = []
                while not self.section_start():
                    tok = self.tok
                    d = self.default()
                    if d in defaults:
                        self.error(f"default {d} listed twice in module {name}", tok)
                    defaults.append(d)
                modules.append(DefModule(name, subject, tuple(defaults)))
            else:
                self.error("expected 'strict:', 'module' or 'abox:'")
        return ModularKB(tuple(strict), tuple(modules), tuple(abox))

    def query(self) -> Query:
        if self.at("T") and self.peek().text == "(":
            q = self._statement(self.default)
        else:
            # an assertion looks like NAME "(" NAME ... ; anything else is an axiom
            start = self.i
            try:
                q = self._statement(self.assertion)
            except KBSyntaxError:
                self.i = start
                q = self._statement(self.axiom)
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r} after query")
        return q

    def _statement(self, rule):
        # the closing period is optional on the command line
        self.tokens = [t for t in self.tokens if t.kind != "eof"]
        if not self.tokens or self.tokens[-1].text != ".":
            last = self.tokens[-1] if self.tokens else Token("eof", "", 1, 1)
            self.tokens.append(Token("punct", ".", last.line, last.col + len(last.text)))
        self.tokens.append(Token("eof", "", self.tokens[-1].line, self.tokens[-1].col + 1))
        return rule()


def parse_kb(text: str) -> ModularKB:
    return _Parser(text).kb()


def load_kb(path) -> ModularKB:
    with open(path, encoding="utf-8") as fh:
        return parse_kb(fh.read())


def parse_concept(text: str) -> Concept:
    p = _Parser(text)
    c = p.concept()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r} after concept")
    return c


def parse_query(text: str) -> Query:
    """Parse ``T(C) <= D.``, ``C <= D.`` or an assertion; the final period may be omitted."""
    return _Parser(text).query()


def format_kb(kb: ModularKB) -> str:
    lines = []
    if kb.strict:
        lines.append("strict:")
        lines.extend(f"  {ax}" for ax in kb.strict)
    for m in kb.modules:
        lines.append(f"module {m.name} subject {to_string(m.subject)}:")
        lines.extend(f"  {d}" for d in m.defaults)
    if kb.abox:
        lines.append("abox:")
        lines.extend(f"  {a}" for a in kb.abox)
    return "\n".join(lines) + "\n"
