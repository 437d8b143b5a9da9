"""Reader and writer for the `.delp` text format.

    % comments run to end of line
    penguin(tweety).                  fact
    bird(X) <- penguin(X).            strict rule
    r1: flies(X) -< bird(X).          labelled defeasible rule
    safe -< not danger.               default negation (defeasible bodies only)
    sunny -< true.                    presumption
    r2 > r1.                          priority between defeasible labels
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .model import (
    DEFEASIBLE,
    STRICT,
    BodyAtom,
    DelpError,
    Literal,
    Mode,
    Program,
    Rule,
    check_range_restriction,
)

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class SourceSpan:
    filename: str
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __str__(self) -> str:
        return f"{self.filename}:{self.start_line}:{self.start_col}"


@dataclass(frozen=True)
class ParseDiagnostic:
    severity: str
    message: str
    span: SourceSpan

    def __str__(self) -> str:
        return f"{self.span}: {self.severity}: {self.message}"


class ParseError(DelpError):
    def __init__(self, diagnostics: list[ParseDiagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<strict><-)
  | (?P<defeasible>-<)
  | (?P<ident>[A-Za-z0-9_][A-Za-z0-9_]*)
  | (?P<punct>[~(),.:>])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, strict, defeasible, punct, eof
    text: str
    line: int
    col: int

    @property
    def end_col(self) -> int:
        return self.col + len(self.text)


def tokenize(text: str, filename: str = "<input>"):
    """Split `text` into tokens; returns (tokens, diagnostics)."""
    tokens, diags = [], []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            col = pos - line_start + 1
            diags.append(ParseDiagnostic(
                ERROR, f"unexpected character {text[pos]!r}",
                SourceSpan(filename, line, col, line, col + 1),
            ))
            pos += 1
            continue
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens, diags


class _Syntax(Exception):
    def __init__(self, message: str, token: Token):
        self.message = message
        self.token = token


class _Parser:
    def __init__(self, tokens: list[Token], filename: str):
        self.tokens = tokens
        self.pos = 0
        self.filename = filename

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tok
        if t.kind != "eof":
            self.pos += 1
        return t

    def accept(self, text: str) -> bool:
        if self.tok.kind != "ident" and self.tok.text == text:
            self.advance()
            return True
        return False

    def expect(self, text: str, what: Optional[str] = None) -> Token:
        if self.tok.kind == "ident" or self.tok.text != text:
            raise _Syntax(f"expected {what or repr(text)}, found {self.describe(self.tok)}", self.tok)
        return self.advance()

    def ident(self, what: str) -> Token:
        if self.tok.kind != "ident":
            raise _Syntax(f"expected {what}, found {self.describe(self.tok)}", self.tok)
        return self.advance()

    @staticmethod
    def describe(t: Token) -> str:
        return "end of input" if t.kind == "eof" else repr(t.text)

    def span(self, start: Token, end: Optional[Token] = None) -> SourceSpan:
        end = end or start
        return SourceSpan(self.filename, start.line, start.col, end.line, end.end_col)

    def recover(self) -> None:
        while self.tok.kind != "eof" and self.tok.text != ".":
            self.advance()
        self.advance()

    # grammar

    def literal(self) -> Literal:
        negated = self.accept("~")
        name = self.ident("a predicate name")
        if name.text[0].isupper() or name.text[0] == "_":
            raise _Syntax(f"predicate names must start with a lowercase letter: {name.text!r}", name)
        if name.text in ("not", "true"):
            raise _Syntax(f"{name.text!r} is reserved and cannot be a predicate", name)
        args = []
        if self.accept("("):
            args.append(self.ident("a term").text)
            while self.accept(","):
                args.append(self.ident("a term").text)
            self.expect(")")
        return Literal(name.text, tuple(args), negated)

    def body(self) -> tuple[BodyAtom, ...]:
        atoms = [self.body_atom()]
        while self.accept(","):
            atoms.append(self.body_atom())
        return tuple(atoms)

    def body_atom(self) -> BodyAtom:
        if self.tok.kind == "ident" and self.tok.text == "not" and self.peek().text not in ("(", ",", "."):
            self.advance()
            return BodyAtom(self.literal(), True)
        return BodyAtom(self.literal())

    def clause(self):
        """One clause up to and including its terminating dot.

        Returns ("fact", lit) | ("rule", rule) | ("priority", (hi, lo)).
        """
        start = self.tok
        if start.kind == "ident" and self.peek().text == ">" and self.peek().kind == "punct":
            hi = self.advance().text
            self.advance()
            lo = self.ident("a rule label").text
            self.expect(".", "'.' after priority")
            return "priority", (hi, lo)
        label = None
        if start.kind == "ident" and self.peek().text == ":":
            label = self.advance().text
            self.advance()
        head = self.literal()
        if self.tok.kind == "strict":
            self.advance()
            rule = Rule(head, self.body(), STRICT, label)
        elif self.tok.kind == "defeasible":
            self.advance()
            if self.tok.kind == "ident" and self.tok.text == "true" and self.peek().text in (".",):
                self.advance()
                body = ()
            else:
                body = self.body()
            rule = Rule(head, body, DEFEASIBLE, label)
        else:
            if label is not None:
                raise _Syntax("labels are only allowed on rules", start)
            self.expect(".", "'.', '<-' or '-<'")
            return "fact", head
        self.expect(".", "',' or '.'")
        return "rule", rule


def parse_program(text: str, mode: Mode = Mode(), filename: str = "<input>") -> Program:
    """Parse a program, raising ParseError with every diagnostic found."""
    program, diags = parse_program_diagnostics(text, mode, filename)
    if any(d.severity == ERROR for d in diags):
        raise ParseError(diags)
    return program


def parse_program_diagnostics(text: str, mode: Mode = Mode(), filename: str = "<input>"):
    tokens, diags = tokenize(text, filename)
    p = _Parser(tokens, filename)
    facts, strict, defeasible, priorities = [], [], [], []
    rule_spans: dict[Rule, SourceSpan] = {}
    priority_spans = []

    def error(message, span):
        diags.append(ParseDiagnostic(ERROR, message, span))

    while p.tok.kind != "eof":
        start = p.tok
        try:
            kind, value = p.clause()
        except _Syntax as exc:
            error(exc.message, p.span(exc.token))
            p.recover()
            continue
        span = p.span(start, p.tokens[p.pos - 1])
        if kind == "fact":
            if not value.is_ground:
                error(f"facts must be ground: {value}", span)
            facts.append(value)
        elif kind == "priority":
            priorities.append(value)
            priority_spans.append((value, span))
        else:
            rule = value
            rule_spans[rule] = span
            problem = check_range_restriction(rule)
            if problem:
                error(problem, span)
            if rule.assumptions and rule.is_strict:
                error("default negation not allowed in strict rules", span)
            elif rule.assumptions and not mode.default_negation:
                error("default negation requires the default-negation mode", span)
            if rule.is_presumption and not mode.presumptions:
                error("presumptions require the presumptions mode", span)
            (strict if rule.is_strict else defeasible).append(rule)

    labels: dict[str, Rule] = {}
    for rule in strict + defeasible:
        if rule.label is None:
            continue
        if rule.label in labels and labels[rule.label] != rule:
            error(f"duplicate rule label {rule.label!r}", rule_spans[rule])
        labels.setdefault(rule.label, rule)
    for (hi, lo), span in priority_spans:
        for name in (hi, lo):
            if name not in labels:
                error(f"priority refers to unknown or unlabeled rule {name!r}", span)
            elif labels[name].is_strict:
                error(f"priorities may only relate defeasible rules; {name!r} is strict", span)

    program = Program(tuple(facts), tuple(strict), tuple(defeasible), tuple(priorities), mode)
    if not any(d.severity == ERROR for d in diags):
        for a, b in program.priority_order:
            if a == b:
                error(f"priorities are cyclic through {a!r}", priority_spans[0][1])
                break
    return program, diags


def parse_query(text: str) -> Literal:
    """Parse a single ground literal such as ``~flies(tweety)``."""
    tokens, diags = tokenize(text, "<query>")
    if diags:
        raise ParseError(diags)
    p = _Parser(tokens, "<query>")
    try:
        lit = p.literal()
        p.accept(".")
        if p.tok.kind != "eof":
            raise _Syntax(f"unexpected {p.describe(p.tok)} after query", p.tok)
    except _Syntax as exc:
        raise ParseError([ParseDiagnostic(ERROR, exc.message, p.span(exc.token))]) from None
    if not lit.is_ground:
        span = SourceSpan("<query>", 1, 1, 1, len(text) + 1)
        raise ParseError([ParseDiagnostic(ERROR, "queries must be ground", span)])
    return lit


def format_rule(rule: Rule) -> str:
    prefix = f"{rule.label}: " if rule.label else ""
    return f"{prefix}{rule}."


def format_program(program: Program) -> str:
    """Canonical text: facts, strict rules, defeasible rules, priorities, each sorted."""
    lines = [f"{f}." for f in sorted(program.facts, key=Literal.sort_key)]
    lines += [format_rule(r) for r in sorted(program.strict, key=Rule.sort_key)]
    lines += [format_rule(r) for r in sorted(program.defeasible, key=Rule.sort_key)]
    lines += [f"{hi} > {lo}." for hi, lo in sorted(program.priorities)]
    return "\n".join(lines) + ("\n" if lines else "")


def load_program(path, mode: Mode = Mode()) -> Program:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read(), mode, str(path))
