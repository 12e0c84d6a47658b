"""Matplotlib rendering: derivation trees and corpus report figures.

Matplotlib is imported lazily with the Agg backend so the rest of the
package works in contexts where rendering is never requested.
"""
from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

from .trees import DerivationTree

if TYPE_CHECKING:
    from .corpus import CaseResult


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def _layout(tree: DerivationTree) -> dict[int, tuple[float, float]]:
    """Leaves take consecutive x slots, inner nodes center over their
    children, depth grows downward from the root."""
    pos: dict[int, tuple[float, float]] = {}
    next_x = [0.0]

    def place(node: DerivationTree, depth: int) -> float:
        if node.is_leaf:
            x = next_x[0]
            next_x[0] += 1.0
        else:
            xs = [place(child, depth + 1) for child in node.children]
            x = sum(xs) / len(xs)
        pos[id(node)] = (x, -float(depth))
        return x

    place(tree, 0)
    return pos


def save_tree_figure(tree: DerivationTree, path: Path) -> None:
    """Draw one derivation tree: literals as node labels, edges from body
    to head, strict steps doubled like the usual diagrams."""
    plt = _pyplot()
    pos = _layout(tree)
    depth = max(-y for _, y in pos.values()) + 1
    width = max(x for x, _ in pos.values()) + 1
    fig, ax = plt.subplots(figsize=(max(3.0, 1.8 * width), max(2.2, 1.2 * depth)))
    ax.axis("off")

    def draw(node: DerivationTree) -> None:
        x, y = pos[id(node)]
        strict = node.rule.kind.value != "defeasible"
        for child in node.children:
            cx, cy = pos[id(child)]
            if strict:
                for off in (-0.02, 0.02):
                    ax.plot([cx + off, x + off], [cy + 0.12, y - 0.12], color="black", lw=1.0)
            else:
                ax.annotate(
                    "",
                    xy=(x, y - 0.12),
                    xytext=(cx, cy + 0.12),
                    arrowprops={"arrowstyle": "->", "lw": 1.0},
                )
            draw(child)
        ax.text(
            x,
            y,
            str(node.label),
            ha="center",
            va="center",
            fontsize=11,
            bbox={"boxstyle": "round,pad=0.25", "fc": "white", "ec": "black", "lw": 0.8},
        )

    draw(tree)
    ax.set_xlim(-0.7, width - 0.3)
    ax.set_ylim(-depth + 0.3, 0.7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_corpus_figures(results: "tuple[CaseResult, ...]", outdir: Path) -> list[Path]:
    """Two report figures next to the delimited results: pass/fail counts
    per relation, and a case-by-case grid."""
    plt = _pyplot()
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    relations = sorted({r.case.relation for r in results})
    passed = [sum(1 for r in results if r.case.relation == rel and r.ok) for rel in relations]
    failed = [sum(1 for r in results if r.case.relation == rel and not r.ok) for rel in relations]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    ax.bar(relations, passed, color="#2a9d4e", label="pass")
    ax.bar(relations, failed, bottom=passed, color="#c83737", label="fail")
    ax.set_ylabel("judgments")
    ax.set_title("corpus judgments by relation")
    ax.legend()
    fig.tight_layout()
    summary = outdir / "summary.png"
    fig.savefig(summary, dpi=150)
    plt.close(fig)
    written.append(summary)

    fig, ax = plt.subplots(figsize=(8.5, max(2.0, 0.28 * len(results))))
    ax.set_xlim(0, 1)
    ax.set_ylim(0, len(results))
    ax.axis("off")
    for i, r in enumerate(reversed(results)):
        color = "#2a9d4e" if r.ok else "#c83737"
        ax.add_patch(plt.Rectangle((0, i), 0.035, 0.9, color=color))
        mark = "=" if r.ok else "!"
        ax.text(
            0.05,
            i + 0.45,
            f"{r.case.spec_name}  {r.case.relation}  expected {r.case.expected} "
            f"{mark} computed {r.computed}",
            va="center",
            fontsize=8,
            family="monospace",
        )
    ax.set_title("corpus cases")
    fig.tight_layout()
    grid = outdir / "outcomes.png"
    fig.savefig(grid, dpi=150)
    plt.close(fig)
    written.append(grid)
    return written
