"""Defeasible and strict derivation over finite sets of ground rules.

Forward chaining computes closures; a backward search produces witness
derivations. Default-negated body atoms never block a rule here, they are
only recorded as assumptions.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .model import Literal, Rule, complement

FACT = "fact"
PRESUMPTION = "presumption"
RULE = "rule"

Item = Union[Literal, Rule]


class ForwardChainer:
    """Counter-based forward chaining over a fixed rule set.

    Indexing is done once so the same rules can be closed over many fact sets.
    """

    def __init__(self, rules: Iterable[Rule]):
        self.rules = tuple(rules)
        self._watch: dict[Literal, list[int]] = defaultdict(list)
        self._needs = []
        self._unconditional = []
        for i, rule in enumerate(self.rules):
            body = set(rule.positive_body)
            self._needs.append(len(body))
            if not body:
                self._unconditional.append(i)
            for lit in body:
                self._watch[lit].append(i)

    def closure(self, facts: Iterable[Literal] = ()) -> frozenset[Literal]:
        derived = set(facts)
        queue = deque(derived)
        missing = list(self._needs)
        for i in self._unconditional:
            head = self.rules[i].head
            if head not in derived:
                derived.add(head)
                queue.append(head)
        watch = self._watch
        while queue:
            lit = queue.popleft()
            for i in watch.get(lit, ()):
                missing[i] -= 1
                if missing[i] == 0:
                    head = self.rules[i].head
                    if head not in derived:
                        derived.add(head)
                        queue.append(head)
        return frozenset(derived)


def split(items: Iterable[Item]) -> tuple[list[Literal], list[Rule]]:
    facts, rules = [], []
    for item in items:
        (rules if isinstance(item, Rule) else facts).append(item)
    return facts, rules


def closure(facts: Iterable[Literal], rules: Iterable[Rule] = ()) -> frozenset[Literal]:
    """Every literal with a defeasible derivation from the facts and rules."""
    return ForwardChainer(rules).closure(facts)


def closure_of(items: Iterable[Item]) -> frozenset[Literal]:
    facts, rules = split(items)
    return closure(facts, rules)


def find_complementary(literals: Iterable[Literal]) -> Optional[tuple[Literal, Literal]]:
    lits = set(literals)
    for lit in sorted(lits, key=Literal.sort_key):
        if not lit.negated and complement(lit) in lits:
            return (lit, complement(lit))
    return None


def is_contradictory(items: Iterable[Item]) -> Optional[tuple[Literal, Literal]]:
    return find_complementary(closure_of(items))


@dataclass(frozen=True)
class Step:
    literal: Literal
    justification: str  # FACT, PRESUMPTION or RULE
    rule: Optional[Rule] = None


@dataclass(frozen=True)
class Derivation:
    steps: tuple[Step, ...]

    @property
    def literals(self) -> tuple[Literal, ...]:
        return tuple(s.literal for s in self.steps)

    @property
    def rules(self) -> frozenset[Rule]:
        return frozenset(s.rule for s in self.steps if s.rule is not None)

    @property
    def assumptions(self) -> frozenset[Literal]:
        """Literals that were assumed under `not` along the way."""
        return frozenset(a for s in self.steps if s.rule is not None for a in s.rule.assumptions)

    @property
    def uses_presumption(self) -> bool:
        return any(s.justification == PRESUMPTION for s in self.steps)

    def replay(self) -> bool:
        """Check every step is licensed by the ones before it."""
        seen: set[Literal] = set()
        for step in self.steps:
            if step.justification == RULE:
                if step.rule is None or step.rule.head != step.literal:
                    return False
                if not all(b in seen for b in step.rule.positive_body):
                    return False
            elif step.justification == PRESUMPTION:
                if step.rule is None or not step.rule.is_presumption:
                    return False
            seen.add(step.literal)
        return True

    def __str__(self) -> str:
        return ", ".join(str(lit) for lit in self.literals)


def defeasibly_derives(items: Iterable[Item], lit: Literal) -> Optional[Derivation]:
    """A witness derivation for `lit`, or None.

    The witness is the first proof found by depth-first backward chaining
    with rules tried in the order given, so source order decides ties.
    """
    facts, rules = split(items)
    facts_set = set(facts)
    reachable = closure(facts_set, rules)
    if lit not in reachable:
        return None
    by_head: dict[Literal, list[Rule]] = defaultdict(list)
    for rule in rules:
        if all(b in reachable for b in rule.positive_body):
            by_head[rule.head].append(rule)

    def prove(goal: Literal, ancestors: frozenset) -> Optional[list[Step]]:
        if goal in facts_set:
            return [Step(goal, FACT)]
        for rule in by_head.get(goal, ()):
            if rule.is_presumption:
                return [Step(goal, PRESUMPTION, rule)]
            if any(b in ancestors for b in rule.positive_body):
                continue
            steps: list[Step] = []
            seen: set[Literal] = set()
            for b in rule.positive_body:
                sub = prove(b, ancestors | {goal})
                if sub is None:
                    break
                for s in sub:
                    if s.literal not in seen:
                        seen.add(s.literal)
                        steps.append(s)
            else:
                return steps + [Step(goal, RULE, rule)]
        return None

    steps = prove(lit, frozenset())
    return Derivation(tuple(steps)) if steps is not None else None


def strictly_derives(items: Iterable[Item], lit: Literal) -> bool:
    """True when `lit` follows from the facts and strict rules alone."""
    facts, rules = split(items)
    return lit in closure(facts, [r for r in rules if r.is_strict])
