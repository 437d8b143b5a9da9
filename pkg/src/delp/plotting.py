"""Render dialectical trees to image files with matplotlib."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .dialectics import DEFEATED, UNDEFEATED, DialecticalTree, Node  # noqa: E402

_FILL = {UNDEFEATED: "#d8f0d2", DEFEATED: "#f6d4d2", None: "#eeeeee"}


def _layout(tree: DialecticalTree) -> dict[int, tuple[float, float]]:
    """Leaves get consecutive x slots; parents sit above the middle of their children."""
    pos: dict[int, tuple[float, float]] = {}
    next_x = [0.0]

    def place(node: Node, depth: int) -> float:
        if not node.children:
            x = next_x[0]
            next_x[0] += 1
        else:
            xs = [place(c, depth + 1) for c in node.children]
            x = (xs[0] + xs[-1]) / 2
        pos[id(node)] = (x, -depth)
        return x

    place(tree.root, 0)
    return pos


def _label(node: Node) -> str:
    rules = "\n".join(node.argument.rule_keys) or "(no rules)"
    status = "pruned" if node.pruned else (node.mark or "?")
    return f"{node.argument.conclusion}  [{status}]\n{rules}"


def plot_trees(trees: list[DialecticalTree], path, title: str = "") -> None:
    """Draw each tree in its own panel and save the figure to `path`."""
    n = max(len(trees), 1)
    widths = [max(1, sum(1 for x in t.nodes() if not x.children)) for t in trees] or [1]
    fig, axes = plt.subplots(1, n, figsize=(max(4.0, 3.2 * sum(widths)), 4.5), squeeze=False)
    for ax, tree in zip(axes[0], trees):
        pos = _layout(tree)
        for node in tree.nodes():
            x, y = pos[id(node)]
            for child in node.children:
                cx, cy = pos[id(child)]
                kind = child.defeater.kind if child.defeater else ""
                ax.annotate(
                    "", xy=(x, y - 0.18), xytext=(cx, cy + 0.18),
                    arrowprops=dict(arrowstyle="->", linestyle="--" if child.pruned else "-", color="0.35"),
                )
                ax.text((x + cx) / 2, (y + cy) / 2, kind, fontsize=7, color="0.3", ha="center")
        for node in tree.nodes():
            x, y = pos[id(node)]
            ax.text(
                x, y, _label(node), ha="center", va="center", fontsize=7, family="monospace",
                bbox=dict(boxstyle="round", fc=_FILL[None if node.pruned else node.mark],
                          ec="0.4", ls="--" if node.pruned else "-"),
            )
        xs = [p[0] for p in pos.values()]
        ys = [p[1] for p in pos.values()]
        ax.set_xlim(min(xs) - 0.7, max(xs) + 0.7)
        ax.set_ylim(min(ys) - 0.6, 0.6)
        ax.set_title(f"{tree.root.argument.conclusion}: root {tree.mark}", fontsize=9)
        ax.axis("off")
    if not trees:
        axes[0][0].text(0.5, 0.5, "no argument", ha="center")
        axes[0][0].axis("off")
    if title:
        fig.suptitle(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
