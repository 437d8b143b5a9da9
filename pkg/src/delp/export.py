"""Serialising dialectical trees: Graphviz DOT and line-delimited JSON records."""

from __future__ import annotations

import json
from typing import Iterable

from .arguments import Argument
from .dialectics import DialecticalTree, Node, mark_tree
from .model import Mode
from .parser import parse_program, parse_query

_EDGE_STYLE = {
    "proper": "solid",
    "blocking": "bold",
    "assumption": "dotted",
}


def _numbered(tree: DialecticalTree) -> list[tuple[int, Node, int | None]]:
    """(id, node, parent id) in depth-first order."""
    out = []

    def visit(node, parent):
        ident = len(out)
        out.append((ident, node, parent))
        for c in node.children:
            visit(c, ident)

    visit(tree.root, None)
    return out


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(trees: Iterable[DialecticalTree], name: str = "dialectical_trees") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=box, fontname="monospace"];']
    for t, tree in enumerate(trees):
        for ident, node, parent in _numbered(tree):
            nid = f"t{t}n{ident}"
            if node.pruned:
                label = _dot_escape(str(node.argument)) + "\\npruned"
                lines.append(f'  {nid} [label="{label}", style=dashed, color=gray];')
            else:
                label = _dot_escape(str(node.argument)) + "\\n" + (node.mark or "?")
                lines.append(f'  {nid} [label="{label}"];')
            if parent is not None:
                kind = node.defeater.kind if node.defeater else "proper"
                style = "dashed" if node.pruned else _EDGE_STYLE[kind]
                lines.append(f'  {nid} -> t{t}n{parent} [label="{kind}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_records(trees: Iterable[DialecticalTree]) -> list[dict]:
    records = []
    for t, tree in enumerate(trees):
        for ident, node, parent in _numbered(tree):
            records.append({
                "tree": t,
                "id": ident,
                "parent": parent,
                "conclusion": str(node.argument.conclusion),
                "rules": list(node.argument.rule_keys),
                "mark": node.mark,
                "kind": node.defeater.kind if node.defeater else None,
                "pruned": node.pruned,
                "rejected": [
                    {"argument": str(d.argument), "reasons": reasons}
                    for d, reasons in node.rejected
                ],
            })
    return records


def to_jsonl(trees: Iterable[DialecticalTree]) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in to_records(trees))


_ANY_MODE = Mode(default_negation=True, presumptions=True)


def _argument(record: dict) -> Argument:
    text = "".join(f"{r}." for r in record["rules"])
    program = parse_program(text, _ANY_MODE)
    return Argument(frozenset(program.rules), parse_query(record["conclusion"]))


def from_jsonl(text: str) -> list[DialecticalTree]:
    """Rebuild trees from records; marks are kept as recorded."""
    trees: dict[int, dict[int, Node]] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        nodes = trees.setdefault(rec["tree"], {})
        node = Node(_argument(rec), mark=rec["mark"], pruned=rec["pruned"])
        nodes[rec["id"]] = node
        if rec["parent"] is not None:
            nodes[rec["parent"]].children.append(node)
    return [DialecticalTree(nodes[0]) for _, nodes in sorted(trees.items())]


def remark_matches(text: str) -> bool:
    """Re-mark trees read from records and check every mark is reproduced."""
    for tree in from_jsonl(text):
        recorded = [n.mark for n in tree.nodes()]
        mark_tree(tree)
        for node in tree.nodes():
            if node.pruned:
                node.mark = None
        if recorded != [n.mark for n in tree.nodes()]:
            return False
    return True
