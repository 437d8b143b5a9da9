"""Brute-force reference semantics and the differential harness.

Everything here is written straight from the definitions, favouring
obviousness over speed: arguments are found by enumerating subsets of the
defeasible rules, specificity by enumerating activation sets, and warrant
by building the whole dialectical tree. Only tiny programs are feasible.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .arguments import Argument, ArgumentBuilder
from .comparison import COMBINED, PRIORITIES, Comparator, CriterionConfig
from .dialectics import NO, UNDECIDED, UNKNOWN, YES, Dialectic
from .model import BodyAtom, DEFEASIBLE, STRICT, Literal, Mode, Program, Rule, complement, in_language, validate

MAX_RULES = 12
MAX_UNIVERSE = 14
EXHAUSTIVE_LIMIT = 10
P_NEGATION = 0.3
P_DEFEASIBLE = 0.7


class OracleLimit(Exception):
    """The program is too large for brute force."""


def naive_closure(facts: Iterable[Literal], rules: Iterable[Rule]) -> set[Literal]:
    known = set(facts)
    rules = list(rules)
    changed = True
    while changed:
        changed = False
        for r in rules:
            if r.head not in known and all(b in known for b in r.positive_body):
                known.add(r.head)
                changed = True
    return known


def contradictory(lits: set[Literal]) -> bool:
    return any(complement(l) in lits for l in lits)


class Oracle:
    def __init__(self, g: Program, cfg: CriterionConfig = CriterionConfig()):
        self.g = g
        self.cfg = cfg
        self.pi = list(g.strict)
        self.facts = set(g.facts)
        self.pi_closure = naive_closure(self.facts, self.pi)
        self.f = naive_closure(self.facts, self.pi + list(g.defeasible))
        # rules that can never fire cannot belong to a minimal argument
        self.relevant = [r for r in g.defeasible if all(b in self.f for b in r.positive_body)]
        if len(self.relevant) > MAX_RULES:
            raise OracleLimit(f"{len(self.relevant)} applicable defeasible rules")
        self._args: dict[Literal, list[Argument]] = {}
        self._specific: dict = {}
        self._defeaters: dict = {}

    def derives(self, rules, lit) -> bool:
        return lit in naive_closure(self.facts, self.pi + list(rules))

    # arguments

    def is_argument(self, rules: frozenset, h: Literal) -> bool:
        closed = naive_closure(self.facts, self.pi + list(rules))
        if h not in closed or contradictory(closed):
            return False
        if any(a in closed for r in rules for a in r.assumptions):
            return False
        return not any(self.derives(rules - {r}, h) for r in rules)

    def arguments_for(self, h: Literal) -> list[Argument]:
        if h in self._args:
            return self._args[h]
        out = []
        for n in range(len(self.relevant) + 1):
            for combo in itertools.combinations(self.relevant, n):
                s = frozenset(combo)
                if self.is_argument(s, h):
                    out.append(Argument(s, h))
        self._args[h] = out
        return out

    def all_arguments(self) -> list[Argument]:
        return [a for h in sorted(self.f) for a in self.arguments_for(h)]

    def disagree(self, h1: Literal, h2: Literal) -> bool:
        return contradictory(naive_closure(self.facts | {h1, h2}, self.pi))

    # comparison

    def more_specific(self, a1: Argument, a2: Argument) -> bool:
        key = (a1, a2)
        if key not in self._specific:
            self._specific[key] = self._more_specific(a1, a2)
        return self._specific[key]

    def _more_specific(self, a1: Argument, a2: Argument) -> bool:
        # Literals nobody reads can only activate an argument by being its
        # conclusion, so for larger programs the activation sets range over
        # the read literals; small ones get every subset of F.
        read = {b for r in self.pi + list(a1.rules) + list(a2.rules) for b in r.positive_body}
        universe = sorted((read | {a1.conclusion, a2.conclusion}) & self.f)
        if len(self.f) <= EXHAUSTIVE_LIMIT:
            universe = sorted(self.f)
        if len(universe) > MAX_UNIVERSE:
            raise OracleLimit(f"activation universe of {len(universe)} literals")
        witness = False
        for n in range(len(universe) + 1):
            for h_set in itertools.combinations(universe, n):
                h_set = set(h_set)
                trivial = naive_closure(h_set, self.pi)
                act1 = a1.conclusion in naive_closure(h_set, self.pi + list(a1.rules))
                act2 = a2.conclusion in naive_closure(h_set, self.pi + list(a2.rules))
                if act1 and a1.conclusion not in trivial and not act2:
                    return False
                if act2 and a2.conclusion not in trivial and not act1:
                    witness = True
        return witness

    def equi(self, a1: Argument, a2: Argument) -> bool:
        return (
            a1.rules == a2.rules
            and a2.conclusion in naive_closure(self.facts | {a1.conclusion}, self.pi)
            and a1.conclusion in naive_closure(self.facts | {a2.conclusion}, self.pi)
        )

    def _higher(self, r1: Rule, r2: Rule) -> bool:
        order = set(self.g.priorities)
        # transitive closure by repeated squaring
        while True:
            extra = {(a, d) for a, b in order for c, d in order if b == c} - order
            if not extra:
                break
            order |= extra
        return r1.label is not None and r2.label is not None and (r1.label, r2.label) in order

    def priority_better(self, a1: Argument, a2: Argument) -> bool:
        return any(self._higher(x, y) for x in a1.rules for y in a2.rules) and not any(
            self._higher(y, x) for x in a1.rules for y in a2.rules
        )

    def better(self, a1: Argument, a2: Argument) -> str:
        """"win", "lose", "equi" or "tie" (incomparable), from a1's side."""
        if self.cfg.presumption_penalty:
            p1 = any(r.is_presumption for r in a1.rules)
            p2 = any(r.is_presumption for r in a2.rules)
            if p1 != p2:
                return "lose" if p1 else "win"
        if self.equi(a1, a2):
            return "equi"
        if self.cfg.criterion != PRIORITIES:
            m12, m21 = self.more_specific(a1, a2), self.more_specific(a2, a1)
            if m12 != m21:
                return "win" if m12 else "lose"
            if self.cfg.criterion != COMBINED:
                return "tie"
        if self.priority_better(a1, a2):
            return "win"
        if self.priority_better(a2, a1):
            return "lose"
        return "tie"

    # defeat and warrant

    def defeaters(self, target: Argument) -> list[tuple[Argument, frozenset]]:
        if target not in self._defeaters:
            self._defeaters[target] = self._find_defeaters(target)
        return self._defeaters[target]

    def _find_defeaters(self, target: Argument) -> list[tuple[Argument, frozenset]]:
        closed = naive_closure(self.facts, self.pi + list(target.rules))
        kinds: dict[Argument, set] = {}
        for point in closed - self.pi_closure:
            subs = [
                frozenset(c)
                for n in range(len(target.rules) + 1)
                for c in itertools.combinations(sorted(target.rules, key=str), n)
                if self.derives(c, point)
                and not any(self.derives(set(c) - {r}, point) for r in c)
            ]
            for q in self.f:
                if not self.disagree(q, point):
                    continue
                for attacker in self.arguments_for(q):
                    for s in subs:
                        verdict = self.better(attacker, Argument(s, point))
                        if verdict == "win":
                            kinds.setdefault(attacker, set()).add("proper")
                        elif verdict == "tie":
                            kinds.setdefault(attacker, set()).add("blocking")
        if self.g.mode.default_negation:
            for r in target.rules:
                for lit in r.assumptions:
                    for attacker in self.arguments_for(lit):
                        kinds.setdefault(attacker, set()).add("assumption")
        return [(a, frozenset(k)) for a, k in kinds.items()]

    def undefeated(self, line: list[tuple[Argument, frozenset]]) -> bool:
        arg, kinds = line[-1]
        for d, dkinds in self.defeaters(arg):
            if self.acceptable(line, d, dkinds) and self.undefeated(line + [(d, dkinds)]):
                return False
        return True

    def acceptable(self, line, d: Argument, dkinds: frozenset) -> bool:
        same_side = [a for i, (a, _) in enumerate(line) if i % 2 == len(line) % 2]
        rules = set(d.rules).union(*(a.rules for a in same_side))
        if contradictory(naive_closure(self.facts, self.pi + list(rules))):
            return False
        if any(d.rules <= a.rules for a, _ in line):
            return False
        last = line[-1][1]
        if "blocking" in last and not ({"proper", "assumption"} & dkinds):
            return False
        return True

    def warranted(self, h: Literal) -> bool:
        return any(self.undefeated([(a, frozenset())]) for a in self.arguments_for(h))

    def answer(self, h: Literal) -> str:
        if not in_language(self.g, h):
            return UNKNOWN
        if self.warranted(h):
            return YES
        if self.warranted(complement(h)):
            return NO
        return UNDECIDED

    def warranted_literals(self) -> set[Literal]:
        return {h for h in self.f if self.warranted(h)}


# differential harness


@dataclass(frozen=True)
class OracleReport:
    """One comparison between the engine and the oracle."""

    program: str
    check: str  # arguments, specificity, answer or warranted
    subject: str
    engine: str
    oracle: str
    witness: str = ""

    @property
    def agree(self) -> bool:
        return self.engine == self.oracle

    def to_json(self) -> str:
        return json.dumps(
            {"program": self.program, "check": self.check, "subject": self.subject,
             "engine": self.engine, "oracle": self.oracle, "agree": self.agree,
             "witness": self.witness},
            sort_keys=True,
        )

    def __str__(self) -> str:
        status = "agree" if self.agree else "DISAGREE"
        line = f"{self.program}\t{self.check}\t{self.subject}\t{status}\tengine={self.engine}\toracle={self.oracle}"
        return line + (f"\t{self.witness}" if self.witness else "")


def disagreements(reports: Iterable[OracleReport]) -> list[OracleReport]:
    return [r for r in reports if not r.agree]


def render_text(reports: list[OracleReport]) -> str:
    bad = disagreements(reports)
    lines = [str(r) for r in bad]
    lines.append(f"{len(reports)} checks, {len(bad)} disagreement(s)")
    return "\n".join(lines) + "\n"


def render_jsonl(reports: list[OracleReport]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def _args_text(args) -> str:
    return "[" + ", ".join(sorted(str(a) for a in args)) + "]"


def differential_run(
    program: Program,
    cfg: CriterionConfig = CriterionConfig(),
    name: str = "program",
    builder_factory: Callable[[Program], ArgumentBuilder] = ArgumentBuilder,
) -> list[OracleReport]:
    """Compare pruned engine, exhaustive engine and oracle on one program.

    Raises OracleLimit when the program is too big to brute force.
    """
    g = validate(program)
    oracle = Oracle(g, cfg)
    engine = Dialectic(g, cfg, builder=builder_factory(g))
    reports = []
    literals = sorted(oracle.f | {complement(l) for l in oracle.f})

    for h in literals:
        reports.append(OracleReport(
            name, "arguments", str(h),
            _args_text(engine.builder.arguments_for(h)), _args_text(oracle.arguments_for(h)),
        ))
    if cfg.criterion != PRIORITIES:
        # the exhaustive mode enumerates every subset of F; only affordable when F is small
        full = None
        if len(oracle.f) <= EXHAUSTIVE_LIMIT:
            full = Comparator(g, CriterionConfig(exhaustive_specificity=True))
        for a1, a2 in itertools.permutations(oracle.all_arguments(), 2):
            ref = str(oracle.more_specific(a1, a2))
            fast = str(engine.comparator.more_specific(a1, a2))
            subject = f"{a1} > {a2}"
            reports.append(OracleReport(name, "specificity", subject, fast, ref, "restricted"))
            if full is not None:
                reports.append(OracleReport(
                    name, "specificity", subject, str(full.more_specific(a1, a2)), ref, "exhaustive"))
    for h in literals:
        ref = oracle.answer(h)
        pruned = engine.answer(h)
        witness = str(pruned.argument) if pruned.argument else ""
        reports.append(OracleReport(name, "answer", str(h), pruned.value, ref, witness))
        reports.append(OracleReport(name, "answer", str(h), engine.answer(h, pruned=False).value, ref, "exhaustive"))
    mine = engine.warranted_literals()
    ref = oracle.warranted_literals()
    fmt = lambda lits: "{" + ", ".join(sorted(map(str, lits))) + "}"
    reports.append(OracleReport(name, "warranted", "W", fmt(mine), fmt(ref)))
    return reports


# random programs


def _random_literal(rng: random.Random, atoms: list[Literal], p_neg: float) -> Literal:
    lit = rng.choice(atoms)
    return complement(lit) if rng.random() < p_neg else lit


def random_program(
    rng: random.Random,
    max_rules: int = 10,
    max_constants: int = 3,
    default_negation: bool = False,
    priorities: bool = False,
    p_negation: float = P_NEGATION,
    p_defeasible: float = P_DEFEASIBLE,
) -> Program:
    """A small ground program with a consistent Pi.

    A couple of atoms are facts; rule heads are drawn from the rest with
    either sign so that conflicting arguments are common.
    """
    consts = [f"c{i}" for i in range(rng.randint(1, max_constants))]
    atoms = []
    for i in range(rng.randint(4, 6)):
        name = "pqrstuv"[i]
        atoms.append(Literal(name, (rng.choice(consts),)) if rng.random() < 0.4 else Literal(name))
    while True:
        base = rng.sample(atoms, rng.randint(1, 3))
        derived = [a for a in atoms if a not in base]
        facts = list(base)
        strict, defeasible = [], []
        for i in range(rng.randint(3, max_rules)):
            head = _random_literal(rng, derived, p_negation)
            body = [BodyAtom(_random_literal(rng, atoms, p_negation)) for _ in range(rng.randint(1, 2))]
            if rng.random() < p_defeasible:
                if default_negation and rng.random() < 0.4:
                    # assuming a fact away would only make the rule useless
                    body.append(BodyAtom(_random_literal(rng, derived, p_negation), True))
                label = f"r{i}" if priorities else None
                defeasible.append(Rule(head, tuple(body), DEFEASIBLE, label))
            else:
                strict.append(Rule(head, tuple(body), STRICT))
        prio = ()
        if priorities and len(defeasible) > 1:
            labels = [r.label for r in defeasible]
            pairs = set()
            for _ in range(rng.randint(0, 3)):
                i, j = sorted(rng.sample(range(len(labels)), 2))
                pairs.add((labels[j], labels[i]))
            prio = tuple(sorted(pairs))
        p = Program(tuple(facts), tuple(strict), tuple(defeasible), prio, Mode(default_negation=default_negation))
        if not contradictory(naive_closure(p.facts, p.strict)):
            return p


def fuzz_programs(seed: int, count: int, **kw) -> list[Program]:
    rng = random.Random(seed)
    return [random_program(rng, **kw) for _ in range(count)]


def mutation_check(program: Program, cfg: CriterionConfig = CriterionConfig()) -> list[OracleReport]:
    """Run the harness against an engine with argument minimality disabled."""
    return differential_run(program, cfg, "mutant", lambda g: ArgumentBuilder(g, minimal=False))


def fuzz_campaign(seed: int, count: int, cfg: CriterionConfig = CriterionConfig(), **kw) -> list[OracleReport]:
    """Differential run over `count` random programs drawn from `seed`."""
    reports = []
    for i, program in enumerate(fuzz_programs(seed, count, **kw)):
        reports.extend(differential_run(program, cfg, f"random-{seed}-{i}"))
    return reports
