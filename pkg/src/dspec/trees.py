"""Derivation trees, their path sets, and the syntactic comparison of
arguments built on them.

A derivation tree certifies one way of deriving a literal: every node is
the substituted head of a rule and its children are the substituted body
literals, so leaves stand on unconditional rules.  Trees for an argument
draw on the strict rules and the argument's own support only; admitting
unrelated defeasible rules would change the tree counts of an argument.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .arguments import Argument
from .core import Literal, Rule, Specification
from .engine import engine_for
from .errors import ResourceCapError

DEFAULT_TREE_CAP = 10_000


@dataclass(frozen=True)
class DerivationTree:
    label: Literal
    rule: Rule
    children: tuple["DerivationTree", ...] = ()

    def __post_init__(self) -> None:
        if self.label != self.rule.head:
            raise ValueError(f"node label {self.label} is not the head of {self.rule}")
        if tuple(c.label for c in self.children) != self.rule.body:
            raise ValueError(f"children do not spell the body of {self.rule}")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def nodes(self) -> Iterator["DerivationTree"]:
        yield self
        for child in self.children:
            yield from child.nodes()

    def key(self) -> tuple:
        return (self.label.key(), self.rule.key(), tuple(c.key() for c in self.children))


def derivation_trees(
    spec: Specification, argument: Argument, *, max_trees: int = DEFAULT_TREE_CAP
) -> tuple[DerivationTree, ...]:
    """All derivation trees for the argument's conclusion.

    Rules available: the strict part plus the argument's support.  A
    literal never repeats along a root-to-leaf path, which keeps the
    enumeration finite on cyclic programs without affecting acyclic ones.
    """
    eng = engine_for(spec)
    by_head: dict[Literal, list[Rule]] = {}
    for rule in sorted(eng.spec.strict | argument.support, key=Rule.key):
        by_head.setdefault(rule.head, []).append(rule)

    budget = [max_trees]

    def build(goal: Literal, path: frozenset[Literal]) -> list[DerivationTree]:
        if goal in path:
            return []
        deeper = path | {goal}
        out: list[DerivationTree] = []
        for rule in by_head.get(goal, ()):
            child_options = [build(b, deeper) for b in rule.body]
            if any(not opts for opts in child_options):
                continue
            combos: list[tuple[DerivationTree, ...]] = [()]
            for opts in child_options:
                combos = [c + (o,) for c in combos for o in opts]
            for combo in combos:
                out.append(DerivationTree(goal, rule, combo))
                budget[0] -= 1
                if budget[0] < 0:
                    raise ResourceCapError("derivation trees", max_trees + 1, max_trees)
        return out

    return tuple(sorted(build(argument.conclusion, frozenset()), key=DerivationTree.key))


def paths_of(tree: DerivationTree) -> frozenset[frozenset[Literal]]:
    """One path per leaf: the leaf's label and its ancestors' labels with
    the root excluded; a root-only tree yields the single empty path."""
    out: set[frozenset[Literal]] = set()

    def walk(node: DerivationTree, above: frozenset[Literal]) -> None:
        if node.is_leaf:
            out.add(above | {node.label} if node is not tree else frozenset())
            return
        here = above | {node.label} if node is not tree else frozenset()
        for child in node.children:
            walk(child, here)

    walk(tree, frozenset())
    return frozenset(out)


def tree_leq(t1: DerivationTree, t2: DerivationTree) -> bool:
    """Every path of the second tree contains some path of the first."""
    paths1 = paths_of(t1)
    return all(any(p1 <= p2 for p1 in paths1) for p2 in paths_of(t2))


def syntactic_leq(spec: Specification, a1: Argument, a2: Argument) -> bool:
    """Tree-level comparison: every tree of a1 is covered by some tree of a2."""
    trees2 = derivation_trees(spec, a2)
    return all(any(tree_leq(t1, t2) for t2 in trees2) for t1 in derivation_trees(spec, a1))


def format_tree(tree: DerivationTree) -> str:
    """Indented text form, one node per line with the rule that justifies it."""
    lines: list[str] = []

    def walk(node: DerivationTree, depth: int) -> None:
        via = str(node.rule) if node.rule.body else f"{node.rule.kind.value}"
        lines.append(f"{'  ' * depth}{node.label}   [{via}]")
        for child in node.children:
            walk(child, depth + 1)

    walk(tree, 0)
    return "\n".join(lines)


def tree_graph(tree: DerivationTree) -> str:
    """Graph description (DOT): node labels are literals, edges run from a
    body literal up to its head, doubled for strict rules."""
    lines = ["digraph derivation {", "  rankdir=BT;", '  node [shape=plaintext];']
    counter = [0]

    def walk(node: DerivationTree) -> str:
        name = f"n{counter[0]}"
        counter[0] += 1
        lines.append(f'  {name} [label="{node.label}"];')
        strict = node.rule.kind.value != "defeasible"
        style = ' [color="black:invis:black"]' if strict else ""
        for child in node.children:
            lines.append(f"  {walk(child)} -> {name}{style};")
        return name

    walk(tree)
    lines.append("}")
    return "\n".join(lines)
