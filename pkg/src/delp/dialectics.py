"""Defeat, acceptable argumentation lines, dialectical trees and warrant."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .arguments import Argument, ArgumentBuilder, AttackReport
from .comparison import FIRST, INCOMPARABLE, Comparator, CriterionConfig
from .model import DelpError, Literal, Program, complement, in_language

PROPER = "proper"
BLOCKING = "blocking"
ASSUMPTION = "assumption"
_KIND_RANK = {PROPER: 0, BLOCKING: 1, ASSUMPTION: 2}

UNDEFEATED = "U"
DEFEATED = "D"

YES = "YES"
NO = "NO"
UNDECIDED = "UNDECIDED"
UNKNOWN = "UNKNOWN"

# names of the acceptability conditions, as reported in traces
NOT_CONCORDANT_SUPPORTING = "supporting arguments not concordant"
NOT_CONCORDANT_INTERFERING = "interfering arguments not concordant"
SUBARGUMENT_REINTRODUCED = "sub-argument of an earlier argument in the line"
BLOCKING_AFTER_BLOCKING = "blocking defeater answered by a non-proper defeater"

DEFAULT_MAX_NODES = 10_000


class ResourceLimitError(DelpError):
    pass


@dataclass(frozen=True)
class Defeater:
    """An argument defeating a target, with every attack that makes it one.

    A single argument can hit its target at several points and be proper at
    one and blocking at another; all classifications are kept.
    """

    argument: Argument
    attacks: tuple[tuple[AttackReport, str], ...]

    @property
    def kinds(self) -> frozenset[str]:
        return frozenset(kind for _, kind in self.attacks)

    @property
    def kind(self) -> str:
        return min(self.kinds, key=_KIND_RANK.__getitem__)

    @property
    def is_blocking(self) -> bool:
        return BLOCKING in self.kinds

    @property
    def is_proper_like(self) -> bool:
        # assumption attacks may follow a blocking defeater
        return PROPER in self.kinds or ASSUMPTION in self.kinds

    def sort_key(self) -> tuple:
        a = self.argument
        return (_KIND_RANK[self.kind], a.conclusion.sort_key(), len(a.rules), a.rule_keys)


@dataclass(frozen=True)
class ArgumentationLine:
    arguments: tuple[Argument, ...]
    defeaters: tuple[Optional[Defeater], ...]

    @classmethod
    def start(cls, root: Argument) -> "ArgumentationLine":
        return cls((root,), (None,))

    def extend(self, d: Defeater) -> "ArgumentationLine":
        return ArgumentationLine(self.arguments + (d.argument,), self.defeaters + (d,))

    @property
    def supporting(self) -> tuple[Argument, ...]:
        return self.arguments[0::2]

    @property
    def interfering(self) -> tuple[Argument, ...]:
        return self.arguments[1::2]

    def __len__(self) -> int:
        return len(self.arguments)


def line_violations(builder: ArgumentBuilder, line: ArgumentationLine, nxt: Defeater) -> list[str]:
    """Acceptability conditions broken by appending `nxt` to `line`."""
    problems = []
    supporting = len(line) % 2 == 0
    side = line.supporting if supporting else line.interfering
    rules = frozenset(nxt.argument.rules).union(*(a.rules for a in side))
    if not builder.is_consistent(rules):
        problems.append(NOT_CONCORDANT_SUPPORTING if supporting else NOT_CONCORDANT_INTERFERING)
    if any(nxt.argument.rules <= a.rules for a in line.arguments):
        problems.append(SUBARGUMENT_REINTRODUCED)
    last = line.defeaters[-1]
    if last is not None and last.is_blocking and not nxt.is_proper_like:
        problems.append(BLOCKING_AFTER_BLOCKING)
    return problems


def is_acceptable_extension(builder: ArgumentBuilder, line: ArgumentationLine, nxt: Defeater) -> bool:
    return not line_violations(builder, line, nxt)


@dataclass
class Node:
    argument: Argument
    defeater: Optional[Defeater] = None
    children: list["Node"] = field(default_factory=list)
    mark: Optional[str] = None
    pruned: bool = False
    rejected: list[tuple[Defeater, list[str]]] = field(default_factory=list)

    @property
    def live_children(self) -> list["Node"]:
        return [c for c in self.children if not c.pruned]

    def walk(self) -> Iterator["Node"]:
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass
class DialecticalTree:
    root: Node
    expanded: int = 0
    pruned: int = 0

    @property
    def mark(self) -> Optional[str]:
        return self.root.mark

    def nodes(self) -> list[Node]:
        return list(self.root.walk())

    def lines(self) -> list[list[Node]]:
        """Root-to-leaf paths, ignoring pruned placeholders."""
        out = []

        def visit(node, path):
            path = path + [node]
            live = node.live_children
            if not live:
                out.append(path)
            for c in live:
                visit(c, path)

        visit(self.root, [])
        return out


def mark_node(node: Node) -> str:
    live = node.live_children
    marks = [mark_node(c) for c in live]
    node.mark = UNDEFEATED if all(m == DEFEATED for m in marks) else DEFEATED
    return node.mark


def mark_tree(tree: DialecticalTree) -> DialecticalTree:
    mark_node(tree.root)
    return tree


@dataclass
class Answer:
    query: Literal
    value: str
    argument: Optional[Argument] = None
    tree: Optional[DialecticalTree] = None
    examined: list[DialecticalTree] = field(default_factory=list)

    def __str__(self) -> str:
        return self.value


class Dialectic:
    """The warrant procedure over one ground program and comparison criterion."""

    def __init__(
        self,
        g: Program,
        cfg: CriterionConfig = CriterionConfig(),
        max_nodes: int = DEFAULT_MAX_NODES,
        builder: Optional[ArgumentBuilder] = None,
        trace: Optional[Callable[[str], None]] = None,
    ):
        self.g = g
        self.trace = trace
        self.cfg = cfg
        self.max_nodes = max_nodes
        self.builder = builder or ArgumentBuilder(g)
        self.comparator = Comparator(g, cfg)
        self._defeaters: dict[Argument, list[Defeater]] = {}

    def defeaters_of(self, target: Argument) -> list[Defeater]:
        cached = self._defeaters.get(target)
        if cached is not None:
            return cached
        groups: dict[Argument, list] = defaultdict(list)
        for report in self.builder.counter_arguments(target):
            outcome = self.comparator.compare(report.attacker, report.subargument)
            if outcome == FIRST:
                groups[report.attacker].append((report, PROPER))
            elif outcome == INCOMPARABLE:
                groups[report.attacker].append((report, BLOCKING))
        for report in self.builder.assumption_attacks(target):
            groups[report.attacker].append((report, ASSUMPTION))
        out = sorted((Defeater(a, tuple(v)) for a, v in groups.items()), key=Defeater.sort_key)
        self._defeaters[target] = out
        return out

    def _admissible(self, node: Node, line: ArgumentationLine) -> list[Defeater]:
        ok = []
        for d in self.defeaters_of(node.argument):
            problems = line_violations(self.builder, line, d)
            if problems:
                node.rejected.append((d, problems))
                self._say(line, d, "rejected: " + "; ".join(problems))
            else:
                ok.append(d)
        return ok

    def _say(self, line: ArgumentationLine, d: Defeater, what: str) -> None:
        if self.trace is not None:
            shown = ", ".join(str(a) for a in line.arguments)
            self.trace(f"[{shown}] + {d.argument} ({d.kind}) {what}")

    def _count(self, tree: DialecticalTree) -> None:
        tree.expanded += 1
        if tree.expanded > self.max_nodes:
            raise ResourceLimitError(f"dialectical tree exceeded {self.max_nodes} nodes")

    def build_tree(self, root: Argument) -> DialecticalTree:
        """The full (unmarked) dialectical tree for `root`."""
        tree = DialecticalTree(Node(root))

        def expand(node: Node, line: ArgumentationLine):
            self._count(tree)
            for d in self._admissible(node, line):
                self._say(line, d, "extends the line")
                child = Node(d.argument, d)
                node.children.append(child)
                expand(child, line.extend(d))

        expand(tree.root, ArgumentationLine.start(root))
        return tree

    def pruned_tree(self, root: Argument) -> DialecticalTree:
        """Depth-first construction that stops at the first undefeated child."""
        tree = DialecticalTree(Node(root))

        def expand(node: Node, line: ArgumentationLine) -> str:
            self._count(tree)
            admissible = self._admissible(node, line)
            for i, d in enumerate(admissible):
                self._say(line, d, "extends the line")
                child = Node(d.argument, d)
                node.children.append(child)
                if expand(child, line.extend(d)) == UNDEFEATED:
                    for rest in admissible[i + 1:]:
                        self._say(line, rest, "pruned")
                        node.children.append(Node(rest.argument, rest, pruned=True))
                        tree.pruned += 1
                    node.mark = DEFEATED
                    return DEFEATED
            node.mark = UNDEFEATED
            return UNDEFEATED

        expand(tree.root, ArgumentationLine.start(root))
        return tree

    def _search(self, h: Literal, pruned: bool):
        examined = []
        for arg in self.builder.arguments_for(h):
            tree = self.pruned_tree(arg) if pruned else mark_tree(self.build_tree(arg))
            examined.append(tree)
            if tree.mark == UNDEFEATED:
                return (arg, tree), examined
        return None, examined

    def warrants(self, h: Literal) -> Optional[tuple[Argument, DialecticalTree]]:
        return self._search(h, pruned=False)[0]

    def warrants_pruned(self, h: Literal) -> Optional[tuple[Argument, DialecticalTree]]:
        return self._search(h, pruned=True)[0]

    def answer(self, h: Literal, pruned: bool = True) -> Answer:
        if not in_language(self.g, h):
            return Answer(h, UNKNOWN)
        found, examined = self._search(h, pruned)
        if found:
            return Answer(h, YES, found[0], found[1])
        found, more = self._search(complement(h), pruned)
        if found:
            return Answer(h, NO, found[0], found[1])
        return Answer(h, UNDECIDED, examined=examined + more)

    def warranted_literals(self, pruned: bool = True) -> set[Literal]:
        # only literals with a derivation can have an argument
        return {
            lit
            for lit in sorted(self.builder.full_closure, key=Literal.sort_key)
            if self._search(lit, pruned)[0] is not None
        }


def answer(g: Program, cfg: CriterionConfig, h: Literal, pruned: bool = True) -> Answer:
    return Dialectic(g, cfg).answer(h, pruned)


def warranted_literals(g: Program, cfg: CriterionConfig = CriterionConfig()) -> set[Literal]:
    return Dialectic(g, cfg).warranted_literals()
