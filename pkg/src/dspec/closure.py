"""Least-fixpoint closure of ground rule sets.

The theory of a rule set is the least set of literals containing the heads
of all unconditional rules and closed under every rule whose body is
already contained.  Rule kinds play no role here: strict and defeasible
rules derive alike.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Atom, Literal, Rule
from .errors import GroundingError


@dataclass(frozen=True)
class Theory:
    """The closure of a ground rule set, together with its source."""

    literals: frozenset[Literal]
    rules: frozenset[Rule]

    def __contains__(self, literal: Literal) -> bool:
        return literal in self.literals

    def sorted(self) -> tuple[Literal, ...]:
        return tuple(sorted(self.literals, key=Literal.key))


def theory(rules: Iterable[Rule], *, order: str = "fifo") -> Theory:
    """Close a ground rule set under forward application of its rules.

    Semi-naive worklist evaluation: rules are indexed by body literal and a
    rule fires once its last missing body literal arrives.  The result does
    not depend on the worklist discipline; `order` ("fifo" or "lifo") only
    exists so tests can demonstrate that.
    """
    frozen = frozenset(rules)
    for rule in frozen:
        if not rule.is_ground:
            raise GroundingError(f"theory of a non-ground rule: {rule}")

    ordered = sorted(frozen, key=Rule.key)
    missing = [len(r.body) for r in ordered]
    by_body: dict[Literal, list[int]] = {}
    for i, rule in enumerate(ordered):
        for b in rule.body:
            by_body.setdefault(b, []).append(i)

    derived: set[Literal] = set()
    queue: deque[Literal] = deque()

    def add(lit: Literal) -> None:
        if lit not in derived:
            derived.add(lit)
            queue.append(lit)

    for i, rule in enumerate(ordered):
        if missing[i] == 0:
            add(rule.head)
    while queue:
        lit = queue.popleft() if order == "fifo" else queue.pop()
        for i in by_body.get(lit, ()):
            missing[i] -= 1
            if missing[i] == 0:
                add(ordered[i].head)
    return Theory(frozenset(derived), frozen)


def derives(rules: Iterable[Rule], goal: Iterable[Literal]) -> bool:
    """True iff every goal literal is in the theory of the rule set."""
    return set(goal) <= theory(rules).literals


def contradiction_witness(rules: Iterable[Rule]) -> Optional[Atom]:
    """Some atom derivable in both polarities, if any; canonical-least pick."""
    lits = theory(rules).literals
    witnesses = sorted(
        (lit.atom for lit in lits if lit.negated and lit.complement() in lits),
        key=Atom.key,
    )
    return witnesses[0] if witnesses else None
