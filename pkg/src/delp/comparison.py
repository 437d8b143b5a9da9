"""Argument preference criteria.

Generalized specificity quantifies over every subset H of the defeasibly
derivable literals F. The exhaustive mode does exactly that; the restricted
mode only enumerates subsets of the literals some rule of the two arguments
(or of Pi_G) reads, plus the two conclusions. Literals nobody reads can
only show up in a closure as themselves, so both modes agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .arguments import Argument
from .derivation import ForwardChainer
from .model import Literal, Program, Rule

FIRST = "first_strictly_preferred"
SECOND = "second_strictly_preferred"
EQUI = "equi_specific"
INCOMPARABLE = "incomparable"

SPECIFICITY = "specificity"
PRIORITIES = "priorities"
COMBINED = "combined"
CRITERIA = (SPECIFICITY, PRIORITIES, COMBINED)


@dataclass(frozen=True)
class CriterionConfig:
    criterion: str = SPECIFICITY
    presumption_penalty: bool = False
    exhaustive_specificity: bool = False

    def __post_init__(self):
        if self.criterion not in CRITERIA:
            raise ValueError(f"unknown criterion {self.criterion!r}; choose from {', '.join(CRITERIA)}")


@dataclass(frozen=True)
class ActivationContext:
    pi_g: tuple[Rule, ...]
    f: frozenset[Literal]

    @classmethod
    def of(cls, g: Program) -> "ActivationContext":
        f = ForwardChainer(tuple(g.strict) + tuple(g.defeasible)).closure(g.facts)
        return cls(tuple(g.strict), f)


def activates(ctx: ActivationContext, h_set: Iterable[Literal], a: Argument) -> bool:
    return a.conclusion in ForwardChainer(ctx.pi_g + tuple(a.rules)).closure(h_set)


def _universe(ctx: ActivationContext, a1: Argument, a2: Argument, exhaustive: bool) -> list[Literal]:
    if exhaustive:
        return sorted(ctx.f, key=Literal.sort_key)
    read = {a1.conclusion, a2.conclusion}
    for rule in ctx.pi_g + tuple(a1.rules) + tuple(a2.rules):
        read.update(rule.positive_body)
    return sorted(read & ctx.f, key=Literal.sort_key)


def more_specific(ctx: ActivationContext, a1: Argument, a2: Argument, exhaustive: bool = False) -> bool:
    """Is `a1` strictly more specific than `a2`?"""
    universe = _universe(ctx, a1, a2, exhaustive)
    act1 = ForwardChainer(ctx.pi_g + tuple(a1.rules))
    act2 = ForwardChainer(ctx.pi_g + tuple(a2.rules))
    strict = ForwardChainer(ctx.pi_g)
    h1, h2 = a1.conclusion, a2.conclusion
    witness = False
    for mask in range(1 << len(universe)):
        h_set = [lit for i, lit in enumerate(universe) if mask >> i & 1]
        by_a1 = h1 in act1.closure(h_set)
        by_a2 = h2 in act2.closure(h_set)
        if not (by_a1 or by_a2):
            continue
        trivial = strict.closure(h_set)
        if by_a1 and h1 not in trivial and not by_a2:
            return False
        if by_a2 and h2 not in trivial and not by_a1:
            witness = True
    return witness


def equi_specific(g: Program, a1: Argument, a2: Argument) -> bool:
    if a1.rules != a2.rules:
        return False
    strict = ForwardChainer(g.strict)
    facts = set(g.facts)
    return (
        a2.conclusion in strict.closure(facts | {a1.conclusion})
        and a1.conclusion in strict.closure(facts | {a2.conclusion})
    )


def priority_preferred(g: Program, a1: Argument, a2: Argument) -> bool:
    some_higher = any(g.outranks(ra, rb) for ra in a1.rules for rb in a2.rules)
    if not some_higher:
        return False
    return not any(g.outranks(rb, ra) for rb in a2.rules for ra in a1.rules)


class Comparator:
    """Caches preference outcomes for one ground program and criterion."""

    def __init__(self, g: Program, cfg: CriterionConfig = CriterionConfig()):
        self.g = g
        self.cfg = cfg
        self.ctx = ActivationContext.of(g)
        self._specific: dict[tuple[Argument, Argument], bool] = {}
        self._outcomes: dict[tuple[Argument, Argument], str] = {}

    def more_specific(self, a1: Argument, a2: Argument) -> bool:
        key = (a1, a2)
        out = self._specific.get(key)
        if out is None:
            out = more_specific(self.ctx, a1, a2, self.cfg.exhaustive_specificity)
            self._specific[key] = out
        return out

    def _by_specificity(self, a1: Argument, a2: Argument) -> str:
        if equi_specific(self.g, a1, a2):
            return EQUI
        m12 = self.more_specific(a1, a2)
        m21 = self.more_specific(a2, a1)
        if m12 and not m21:
            return FIRST
        if m21 and not m12:
            return SECOND
        return INCOMPARABLE

    def _by_priorities(self, a1: Argument, a2: Argument) -> str:
        if equi_specific(self.g, a1, a2):
            return EQUI
        if priority_preferred(self.g, a1, a2):
            return FIRST
        if priority_preferred(self.g, a2, a1):
            return SECOND
        return INCOMPARABLE

    def compare(self, a1: Argument, a2: Argument) -> str:
        key = (a1, a2)
        out = self._outcomes.get(key)
        if out is None:
            out = self._compare(a1, a2)
            self._outcomes[key] = out
        return out

    def _compare(self, a1: Argument, a2: Argument) -> str:
        if self.cfg.presumption_penalty and a1.uses_presumption != a2.uses_presumption:
            return SECOND if a1.uses_presumption else FIRST
        if self.cfg.criterion == PRIORITIES:
            return self._by_priorities(a1, a2)
        outcome = self._by_specificity(a1, a2)
        if self.cfg.criterion == COMBINED and outcome == INCOMPARABLE:
            tie_break = self._by_priorities(a1, a2)
            if tie_break in (FIRST, SECOND):
                return tie_break
        return outcome


def compare(cfg: CriterionConfig, g: Program, a1: Argument, a2: Argument) -> str:
    return Comparator(g, cfg).compare(a1, a2)
