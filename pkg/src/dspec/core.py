"""Terms, literals, rules and defeasible specifications.

A specification is a triple of rule sets: facts (unconditional, never
doubted), general rules (strict implications holding in all worlds) and
defeasible rules (defaults that may be overridden).  Facts and general
rules together form the strict part.  Rule schemas may contain variables;
grounding instantiates them over the constants of the specification.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping

from .errors import ArityError, GroundingError


@dataclass(frozen=True, order=True)
class Constant:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return self.name


Term = Constant | Variable


def _term_key(term: Term) -> tuple[bool, str]:
    # constants sort before variables
    return (isinstance(term, Variable), term.name)


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        if not self.predicate:
            raise ValueError("empty predicate symbol")

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def is_ground(self) -> bool:
        return all(isinstance(t, Constant) for t in self.args)

    def key(self) -> tuple:
        return (self.predicate, tuple(_term_key(t) for t in self.args))

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({', '.join(str(t) for t in self.args)})"


@dataclass(frozen=True)
class Literal:
    """An atom, possibly under classical negation (never nested)."""

    atom: Atom
    negated: bool = False

    @property
    def is_ground(self) -> bool:
        return self.atom.is_ground

    def complement(self) -> Literal:
        return Literal(self.atom, not self.negated)

    def substitute(self, binding: Mapping[Variable, Constant]) -> Literal:
        args = tuple(binding.get(t, t) if isinstance(t, Variable) else t for t in self.atom.args)
        return Literal(Atom(self.atom.predicate, args), self.negated)

    def variables(self) -> frozenset[Variable]:
        return frozenset(t for t in self.atom.args if isinstance(t, Variable))

    def key(self) -> tuple:
        return (*self.atom.key(), self.negated)

    def __str__(self) -> str:
        return ("~" if self.negated else "") + str(self.atom)


def complement(literal: Literal) -> Literal:
    """Flip the polarity of a literal; an involution."""
    return literal.complement()


class RuleKind(Enum):
    FACT = "fact"
    STRICT = "strict"
    DEFEASIBLE = "defeasible"


_ARROW = {RuleKind.FACT: "", RuleKind.STRICT: "<-", RuleKind.DEFEASIBLE: "<~"}


@dataclass(frozen=True)
class Rule:
    """A head literal with a (possibly empty) conjunction of body literals.

    The body is stored in canonical order with duplicates collapsed: a body
    is a conjunction, so order carries no meaning.  Facts must have empty
    bodies; general rules may be bare literals (empty body) in memory even
    though the text format spells those as facts.
    """

    head: Literal
    body: tuple[Literal, ...] = ()
    kind: RuleKind = RuleKind.FACT

    def __post_init__(self) -> None:
        canonical = tuple(sorted(set(self.body), key=Literal.key))
        object.__setattr__(self, "body", canonical)
        if self.kind is RuleKind.FACT and self.body:
            raise ValueError(f"fact with non-empty body: {self}")

    @property
    def is_ground(self) -> bool:
        return self.head.is_ground and all(b.is_ground for b in self.body)

    def variables(self) -> frozenset[Variable]:
        out = set(self.head.variables())
        for b in self.body:
            out |= b.variables()
        return frozenset(out)

    def substitute(self, binding: Mapping[Variable, Constant]) -> Rule:
        return Rule(
            self.head.substitute(binding),
            tuple(b.substitute(binding) for b in self.body),
            self.kind,
        )

    def key(self) -> tuple:
        return (self.head.key(), tuple(b.key() for b in self.body), self.kind.value)

    def __str__(self) -> str:
        if not self.body:
            return str(self.head)
        arrow = _ARROW[self.kind] or "<-"
        return f"{self.head} {arrow} {', '.join(str(b) for b in self.body)}"


def _match_literal(
    ground: Literal, schema: Literal, binding: dict[Variable, Constant]
) -> dict[Variable, Constant] | None:
    if ground.negated != schema.negated:
        return None
    if ground.atom.predicate != schema.atom.predicate:
        return None
    if ground.atom.arity != schema.atom.arity:
        return None
    out = dict(binding)
    for g, s in zip(ground.atom.args, schema.atom.args):
        if not isinstance(g, Constant):
            return None
        if isinstance(s, Constant):
            if s != g:
                return None
        else:
            if out.get(s, g) != g:
                return None
            out[s] = g
    return out


def is_instance_of(ground: Rule, schema: Rule) -> bool:
    """True iff `ground` is a ground substitution instance of `schema`.

    Bodies are conjunctions, so matching is order-insensitive; a small
    backtracking search keeps the substitution consistent across the rule.
    """
    if not ground.is_ground or ground.kind is not schema.kind:
        return False
    if len(ground.body) != len(schema.body):
        return False
    binding = _match_literal(ground.head, schema.head, {})
    if binding is None:
        return False

    def match_body(i: int, used: int, binding: dict[Variable, Constant]) -> bool:
        if i == len(schema.body):
            return True
        for j, g in enumerate(ground.body):
            if used & (1 << j):
                continue
            nxt = _match_literal(g, schema.body[i], binding)
            if nxt is not None and match_body(i + 1, used | (1 << j), nxt):
                return True
        return False

    return match_body(0, 0, binding)


@dataclass(frozen=True)
class Specification:
    """The triple of fact, general and defeasible rule sets."""

    facts: frozenset[Rule] = frozenset()
    general: frozenset[Rule] = frozenset()
    defeasible: frozenset[Rule] = frozenset()

    def __post_init__(self) -> None:
        for container, kind in (
            (self.facts, RuleKind.FACT),
            (self.general, RuleKind.STRICT),
            (self.defeasible, RuleKind.DEFEASIBLE),
        ):
            for rule in container:
                if rule.kind is not kind:
                    raise ValueError(f"{kind.value} section holds {rule.kind.value} rule: {rule}")
        arities: dict[str, int] = {}
        for rule in self.rules():
            for lit in (rule.head, *rule.body):
                seen = arities.setdefault(lit.atom.predicate, lit.atom.arity)
                if seen != lit.atom.arity:
                    raise ArityError(
                        f"predicate {lit.atom.predicate!r} used with arities {seen} and {lit.atom.arity}"
                    )

    @property
    def strict(self) -> frozenset[Rule]:
        """The strict part: facts plus general rules."""
        return self.facts | self.general

    def rules(self) -> Iterator[Rule]:
        yield from self.facts
        yield from self.general
        yield from self.defeasible

    @property
    def is_ground(self) -> bool:
        return all(r.is_ground for r in self.rules())


def herbrand_universe(spec: Specification) -> tuple[str, ...]:
    """All constant symbols occurring in the specification, sorted."""
    names = {
        t.name
        for rule in spec.rules()
        for lit in (rule.head, *rule.body)
        for t in lit.atom.args
        if isinstance(t, Constant)
    }
    return tuple(sorted(names))


def ground_rule(rule: Rule, universe: Iterable[str]) -> frozenset[Rule]:
    """All ground instances of a rule over the given constants.

    A variable-free rule maps to itself regardless of the universe; a rule
    with variables over an empty universe has no instances and is an error.
    """
    variables = sorted(rule.variables(), key=lambda v: v.name)
    if not variables:
        return frozenset({rule})
    constants = sorted(set(universe))
    if not constants:
        raise GroundingError(f"cannot ground {rule}: no constants in scope")
    out = set()
    for combo in itertools.product(constants, repeat=len(variables)):
        binding = {v: Constant(c) for v, c in zip(variables, combo)}
        out.add(rule.substitute(binding))
    return frozenset(out)


def ground_spec(spec: Specification) -> Specification:
    """Replace every rule set by its ground instances; idempotent."""
    universe = herbrand_universe(spec)

    def expand(rules: frozenset[Rule]) -> frozenset[Rule]:
        out: set[Rule] = set()
        for rule in rules:
            out |= ground_rule(rule, universe)
        return frozenset(out)

    return Specification(expand(spec.facts), expand(spec.general), expand(spec.defeasible))
