"""Abstract syntax for defeasible logic programs, grounding and validation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional

STRICT = "strict"
DEFEASIBLE = "defeasible"


class DelpError(Exception):
    """Base class for every error raised by this package."""


class GroundingError(DelpError):
    pass


class ValidationError(DelpError):
    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def is_variable(name: str) -> bool:
    return name[:1].isupper()


@dataclass(frozen=True, order=True)
class Literal:
    predicate: str
    args: tuple[str, ...] = ()
    negated: bool = False

    def __post_init__(self):
        # literals are hashed constantly during closure computation
        object.__setattr__(self, "_hash", hash((self.predicate, self.args, self.negated)))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        sign = "~" if self.negated else ""
        if not self.args:
            return f"{sign}{self.predicate}"
        return f"{sign}{self.predicate}({','.join(self.args)})"

    __repr__ = __str__

    @property
    def is_ground(self) -> bool:
        return not any(is_variable(a) for a in self.args)

    @property
    def signature(self) -> tuple[str, int]:
        return (self.predicate, len(self.args))

    def variables(self) -> set[str]:
        return {a for a in self.args if is_variable(a)}

    def substitute(self, binding: dict[str, str]) -> "Literal":
        return Literal(self.predicate, tuple(binding.get(a, a) for a in self.args), self.negated)

    def sort_key(self) -> tuple:
        # ~p sorts right after p
        return (self.predicate, self.args, self.negated)


def complement(lit: Literal) -> Literal:
    if not lit.is_ground:
        raise ValueError(f"complement of non-ground literal {lit}")
    return Literal(lit.predicate, lit.args, not lit.negated)


@dataclass(frozen=True, order=True)
class BodyAtom:
    literal: Literal
    default_negated: bool = False

    def __str__(self) -> str:
        return f"not {self.literal}" if self.default_negated else str(self.literal)

    __repr__ = __str__

    def sort_key(self) -> tuple:
        return (self.default_negated, self.literal.sort_key())


@dataclass(frozen=True)
class Rule:
    """A strict or defeasible rule; a defeasible rule with no body is a presumption.

    Bodies are sets, so they are stored deduplicated and canonically ordered.
    """

    head: Literal
    body: tuple[BodyAtom, ...]
    kind: str = DEFEASIBLE
    label: Optional[str] = None

    def __post_init__(self):
        if self.kind not in (STRICT, DEFEASIBLE):
            raise ValueError(f"unknown rule kind {self.kind!r}")
        canonical = tuple(sorted(set(self.body), key=BodyAtom.sort_key))
        object.__setattr__(self, "body", canonical)
        object.__setattr__(self, "_hash", hash((self.head, canonical, self.kind, self.label)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def is_strict(self) -> bool:
        return self.kind == STRICT

    @property
    def is_defeasible(self) -> bool:
        return self.kind == DEFEASIBLE

    @property
    def is_presumption(self) -> bool:
        return self.kind == DEFEASIBLE and not self.body

    @cached_property
    def positive_body(self) -> tuple[Literal, ...]:
        return tuple(b.literal for b in self.body if not b.default_negated)

    @cached_property
    def assumptions(self) -> tuple[Literal, ...]:
        """Literals appearing under `not` in the body."""
        return tuple(b.literal for b in self.body if b.default_negated)

    @property
    def is_ground(self) -> bool:
        return self.head.is_ground and all(b.literal.is_ground for b in self.body)

    def variables(self) -> set[str]:
        out = self.head.variables()
        for b in self.body:
            out |= b.literal.variables()
        return out

    def substitute(self, binding: dict[str, str]) -> "Rule":
        return Rule(
            self.head.substitute(binding),
            tuple(BodyAtom(b.literal.substitute(binding), b.default_negated) for b in self.body),
            self.kind,
            self.label,
        )

    def __str__(self) -> str:
        arrow = "<-" if self.is_strict else "-<"
        body = ", ".join(str(b) for b in self.body) if self.body else "true"
        return f"{self.head} {arrow} {body}"

    __repr__ = __str__

    def sort_key(self) -> tuple:
        return (
            self.head.sort_key(),
            tuple(b.sort_key() for b in self.body),
            self.kind,
            self.label or "",
        )


@dataclass(frozen=True)
class Mode:
    default_negation: bool = False
    presumptions: bool = False

    @classmethod
    def parse(cls, text: Optional[str]) -> "Mode":
        """Parse a comma-separated flag list such as ``"default-negation,presumptions"``."""
        if not text or text == "core":
            return cls()
        flags = {f.strip() for f in text.split(",") if f.strip()}
        unknown = flags - {"core", "default-negation", "presumptions"}
        if unknown:
            raise ValueError(f"unknown mode flag(s): {', '.join(sorted(unknown))}")
        return cls("default-negation" in flags, "presumptions" in flags)

    def __str__(self) -> str:
        flags = []
        if self.default_negation:
            flags.append("default-negation")
        if self.presumptions:
            flags.append("presumptions")
        return ",".join(flags) or "core"


@dataclass(frozen=True, eq=False)
class Program:
    """A (possibly schematic) program split into Pi and Delta.

    Equality is set based: source order is kept for reproducible derivations
    but two programs with the same clauses compare equal.
    """

    facts: tuple[Literal, ...] = ()
    strict: tuple[Rule, ...] = ()
    defeasible: tuple[Rule, ...] = ()
    priorities: tuple[tuple[str, str], ...] = ()
    mode: Mode = field(default_factory=Mode)

    def __post_init__(self):
        object.__setattr__(self, "facts", _dedupe(self.facts))
        object.__setattr__(self, "strict", _dedupe(self.strict))
        object.__setattr__(self, "defeasible", _dedupe(self.defeasible))
        object.__setattr__(self, "priorities", _dedupe(self.priorities))

    def _key(self):
        return (
            frozenset(self.facts),
            frozenset(self.strict),
            frozenset(self.defeasible),
            frozenset(self.priorities),
            self.mode,
        )

    def __eq__(self, other):
        if not isinstance(other, Program):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def rules(self) -> tuple[Rule, ...]:
        return self.strict + self.defeasible

    def labels(self) -> dict[str, Rule]:
        return {r.label: r for r in self.rules if r.label is not None}

    def literals(self) -> Iterator[Literal]:
        yield from self.facts
        for r in self.rules:
            yield r.head
            for b in r.body:
                yield b.literal

    @cached_property
    def constants(self) -> frozenset[str]:
        return frozenset(a for lit in self.literals() for a in lit.args if not is_variable(a))

    @cached_property
    def signatures(self) -> frozenset[tuple[str, int]]:
        return frozenset(lit.signature for lit in self.literals())

    @property
    def is_ground(self) -> bool:
        return all(f.is_ground for f in self.facts) and all(r.is_ground for r in self.rules)

    @cached_property
    def priority_order(self) -> frozenset[tuple[str, str]]:
        """Transitive closure of the declared `hi > lo` label pairs."""
        closure = set(self.priorities)
        changed = True
        while changed:
            changed = False
            for (a, b), (c, d) in itertools.product(list(closure), repeat=2):
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
        return frozenset(closure)

    def outranks(self, r1: Rule, r2: Rule) -> bool:
        return (
            r1.label is not None
            and r2.label is not None
            and (r1.label, r2.label) in self.priority_order
        )


# Grounding keeps Program's shape; every rule of a GroundProgram is ground.
GroundProgram = Program


def _dedupe(items: Iterable) -> tuple:
    return tuple(dict.fromkeys(items))


def ground_rule(rule: Rule, constants: list[str]) -> list[Rule]:
    variables = sorted(rule.variables())
    if not variables:
        return [rule]
    if not constants:
        raise GroundingError(f"rule '{rule}' has variables but the program has no constants")
    return [
        rule.substitute(dict(zip(variables, values)))
        for values in itertools.product(constants, repeat=len(variables))
    ]


def ground_program(program: Program) -> Program:
    """Instantiate every schematic rule over the constants occurring in the program."""
    if program.is_ground:
        return program
    constants = sorted(program.constants)
    for fact in program.facts:
        if not fact.is_ground:
            raise GroundingError(f"fact {fact} is not ground")
    strict = [g for r in program.strict for g in ground_rule(r, constants)]
    defeasible = [g for r in program.defeasible for g in ground_rule(r, constants)]
    return Program(program.facts, tuple(strict), tuple(defeasible), program.priorities, program.mode)


def in_language(g: Program, lit: Literal) -> bool:
    return lit.signature in g.signatures and all(a in g.constants for a in lit.args)


def check_range_restriction(rule: Rule) -> Optional[str]:
    body_vars = set()
    for b in rule.body:
        body_vars |= b.literal.variables()
    missing = rule.head.variables() - body_vars
    if missing:
        names = ", ".join(sorted(missing))
        return f"rule '{rule}' is not range restricted: head variable(s) {names} do not occur in the body"
    return None


def violations(program: Program) -> list[str]:
    """Every reason the program is not a valid de.l.p.; empty when it is."""
    from .derivation import closure, find_complementary

    out: list[str] = []
    for fact in program.facts:
        if not fact.is_ground:
            out.append(f"fact {fact} is not ground")
    for rule in program.rules:
        problem = check_range_restriction(rule)
        if problem:
            out.append(problem)
        if rule.is_strict and not rule.body:
            out.append(f"strict rule '{rule}' has an empty body")
        if rule.is_strict and rule.assumptions:
            out.append(f"default negation not allowed in strict rules: '{rule}'")
        if rule.is_defeasible and rule.assumptions and not program.mode.default_negation:
            out.append(f"default negation used without default-negation mode: '{rule}'")
        if rule.is_presumption and not program.mode.presumptions:
            out.append(f"presumption used without presumptions mode: '{rule}'")

    labels: dict[str, Rule] = {}
    for rule in program.rules:
        if rule.label is None:
            continue
        if rule.label in labels and labels[rule.label] != rule:
            out.append(f"label {rule.label} is used by more than one rule")
        labels.setdefault(rule.label, rule)
    for hi, lo in program.priorities:
        for name in (hi, lo):
            if name not in labels:
                out.append(f"priority {hi} > {lo} references unknown label {name}")
            elif not labels[name].is_defeasible:
                out.append(f"priority {hi} > {lo} references strict rule {name}")
    for a, b in program.priority_order:
        if a == b:
            out.append(f"priorities are cyclic through {a}")

    if out:
        return out
    try:
        g = ground_program(program)
    except GroundingError as exc:
        return [str(exc)]
    pair = find_complementary(closure(g.facts, g.strict))
    if pair:
        out.append(f"Pi is contradictory: derives both {pair[0]} and {pair[1]}")
    return out


def validate(program: Program) -> Program:
    """Return the grounded program, raising ValidationError on any violation."""
    problems = violations(program)
    if problems:
        raise ValidationError(problems)
    return ground_program(program)
