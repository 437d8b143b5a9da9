"""Argument structures and the attacks between them."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .derivation import ForwardChainer, find_complementary
from .model import Literal, Program, Rule, complement

DISAGREEMENT = "disagreement"
ASSUMPTION_ATTACK = "assumption-attack"


@dataclass(frozen=True)
class Argument:
    rules: frozenset[Rule]
    conclusion: Literal

    @cached_property
    def rule_keys(self) -> tuple[str, ...]:
        return tuple(sorted(str(r) for r in self.rules))

    @cached_property
    def assumptions(self) -> frozenset[Literal]:
        return frozenset(a for r in self.rules for a in r.assumptions)

    @property
    def uses_presumption(self) -> bool:
        return any(r.is_presumption for r in self.rules)

    def sort_key(self) -> tuple:
        return (len(self.rules), self.rule_keys, self.conclusion.sort_key())

    def __str__(self) -> str:
        return "<{" + "; ".join(self.rule_keys) + "}, " + str(self.conclusion) + ">"

    __repr__ = __str__


def is_subargument(b: Argument, a: Argument) -> bool:
    return b.rules <= a.rules


@dataclass(frozen=True)
class AttackReport:
    attacker: Argument
    attacked: Argument
    point: Literal
    subargument: Optional[Argument]  # None for assumption attacks
    kind: str = DISAGREEMENT

    def __str__(self) -> str:
        return f"{self.attacker} attacks {self.attacked} at {self.point}"


def minimize(sets: Iterable[frozenset]) -> list[frozenset]:
    """Keep only the subset-minimal members, deduplicated."""
    unique = sorted(set(sets), key=len)
    kept: list[frozenset] = []
    for s in unique:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


class ArgumentBuilder:
    """Builds argument structures for one ground program.

    Candidate rule sets are harvested from every acyclic backward proof and
    reduced to the subset-minimal ones; ``minimal=False`` skips that
    reduction and exists only to sanity-check the differential harness.
    """

    def __init__(self, g: Program, minimal: bool = True):
        self.g = g
        self.minimal = minimal
        self.facts = frozenset(g.facts)
        self.strict = tuple(g.strict)
        self.strict_chainer = ForwardChainer(self.strict)
        self.pi_closure = self.strict_chainer.closure(self.facts)
        self.full_closure = ForwardChainer(self.strict + tuple(g.defeasible)).closure(self.facts)
        self.by_head: dict[Literal, list[Rule]] = defaultdict(list)
        for rule in self.strict + tuple(g.defeasible):
            if all(b in self.full_closure for b in rule.positive_body):
                self.by_head[rule.head].append(rule)
        self._supports: dict = {}
        self._closures: dict[frozenset, frozenset] = {}
        self._arguments: dict[Literal, list[Argument]] = {}
        self._disagree: dict[frozenset, bool] = {}
        self._counter: dict[Argument, list[AttackReport]] = {}

    # derivation helpers

    def closure_with(self, rules: frozenset[Rule]) -> frozenset[Literal]:
        """closure(Pi u rules)."""
        out = self._closures.get(rules)
        if out is None:
            out = ForwardChainer(self.strict + tuple(rules)).closure(self.facts)
            self._closures[rules] = out
        return out

    def is_consistent(self, rules: frozenset[Rule]) -> bool:
        return find_complementary(self.closure_with(rules)) is None

    def respects_assumptions(self, rules: frozenset[Rule]) -> bool:
        """No derived literal is assumed absent by a `not` in one of the rules."""
        assumed = {a for r in rules for a in r.assumptions}
        return not assumed or assumed.isdisjoint(self.closure_with(rules))

    def strictly_derived(self, lit: Literal) -> bool:
        return lit in self.pi_closure

    def supports(self, lit: Literal, allowed: Optional[frozenset] = None) -> list[frozenset]:
        """Defeasible rule sets that, together with Pi, derive `lit`."""
        return self._support(lit, frozenset(), allowed)

    def _support(self, lit: Literal, ancestors: frozenset, allowed) -> list[frozenset]:
        if lit in self.facts:
            return [frozenset()]
        key = (lit, ancestors, allowed)
        cached = self._supports.get(key)
        if cached is not None:
            return cached
        inner = ancestors | {lit}
        found: list[frozenset] = []
        for rule in self.by_head.get(lit, ()):
            if rule.is_defeasible and allowed is not None and rule not in allowed:
                continue
            if any(b in inner for b in rule.positive_body):
                continue
            partial = [frozenset([rule]) if rule.is_defeasible else frozenset()]
            for b in rule.positive_body:
                subs = self._support(b, inner, allowed)
                if not subs:
                    partial = []
                    break
                partial = self._reduce(p | s for p in partial for s in subs)
            found.extend(partial)
        result = self._reduce(found)
        self._supports[key] = result
        return result

    def _reduce(self, sets) -> list[frozenset]:
        return minimize(sets) if self.minimal else list(dict.fromkeys(sets))

    # argument structures

    def arguments_for(self, h: Literal) -> list[Argument]:
        cached = self._arguments.get(h)
        if cached is not None:
            return cached
        out = []
        if h in self.full_closure:
            for rules in self.supports(h):
                if self.is_consistent(rules) and self.respects_assumptions(rules):
                    out.append(Argument(rules, h))
        out.sort(key=Argument.sort_key)
        self._arguments[h] = out
        return out

    def subarguments_at(self, target: Argument, point: Literal) -> list[Argument]:
        """Minimal sub-arguments of `target` concluding `point`."""
        found = [Argument(rules, point) for rules in self.supports(point, target.rules)]
        return sorted(found, key=Argument.sort_key)

    def points(self, target: Argument) -> list[Literal]:
        """Literals of the argument that can be attacked: everything it derives beyond Pi."""
        derived = self.closure_with(target.rules) - self.pi_closure
        return sorted(derived, key=Literal.sort_key)

    def disagree(self, h: Literal, h1: Literal) -> bool:
        key = frozenset((h, h1))
        out = self._disagree.get(key)
        if out is None:
            if h1 == complement(h):
                out = True
            else:
                lits = self.strict_chainer.closure(self.facts | {h, h1})
                out = find_complementary(lits) is not None
            self._disagree[key] = out
        return out

    def counter_arguments(self, target: Argument) -> list[AttackReport]:
        cached = self._counter.get(target)
        if cached is not None:
            return cached
        reports = []
        candidates = sorted(self.full_closure, key=Literal.sort_key)
        for point in self.points(target):
            rivals = [q for q in candidates if self.disagree(q, point)]
            if not rivals:
                continue
            subs = self.subarguments_at(target, point)
            for q in rivals:
                for attacker in self.arguments_for(q):
                    for sub in subs:
                        reports.append(AttackReport(attacker, target, point, sub))
        self._counter[target] = reports
        return reports

    def assumption_attacks(self, target: Argument) -> list[AttackReport]:
        if not self.g.mode.default_negation:
            return []
        reports = []
        for lit in sorted(target.assumptions, key=Literal.sort_key):
            for attacker in self.arguments_for(lit):
                reports.append(AttackReport(attacker, target, lit, None, ASSUMPTION_ATTACK))
        return reports

    def all_arguments(self) -> list[Argument]:
        out = []
        for lit in sorted(self.full_closure, key=Literal.sort_key):
            out.extend(self.arguments_for(lit))
        return out


def arguments_for(g: Program, h: Literal) -> list[Argument]:
    return ArgumentBuilder(g).arguments_for(h)


def counter_arguments(g: Program, target: Argument) -> list[AttackReport]:
    return ArgumentBuilder(g).counter_arguments(target)


def assumption_attacks(g: Program, target: Argument) -> list[AttackReport]:
    return ArgumentBuilder(g).assumption_attacks(target)


def disagree(g: Program, h: Literal, h1: Literal) -> bool:
    return ArgumentBuilder(g).disagree(h, h1)
