"""Activation sets: the literal sets that trigger a defeasible derivation.

A derivation splits into three phases: literals available up front, the
defeasible phase (support rules plus general rules, but no facts), and an
optional final strict phase where facts may be used again.  A simplified
activation set must reach the conclusion within the defeasible phase; a
plain activation set may finish with the full strict part.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .arguments import Argument
from .core import Literal, Rule, Specification
from .engine import DEFAULT_DOMAIN_CAP, engine_for
from .errors import GroundingError


class ActivationDomain(Enum):
    """Where candidate sets are drawn from: the strict theory, or the theory
    of the whole program including defeasible rules."""

    STRICT = "strict"
    DEFEASIBLE_CLOSURE = "defeasible-closure"


@dataclass(frozen=True)
class ActivationQuery:
    spec: Specification
    argument: Argument
    domain: ActivationDomain
    simplified: bool = True
    minimal: bool = True


def _check_ground(literals: Iterable[Literal]) -> None:
    for lit in literals:
        if not lit.is_ground:
            raise GroundingError(f"activation sets must be ground: {lit}")


def simplified_activates(
    spec: Specification, h: Iterable[Literal], support: Iterable[Rule], conclusion: Literal
) -> bool:
    """Does H reach the conclusion using only the support and general rules?"""
    eng = engine_for(spec)
    return eng.simplified_activates(
        eng.mask_of(h), eng.delta_mask_of(support), eng.lit_bit(conclusion)
    )


def activates(
    spec: Specification, h: Iterable[Literal], support: Iterable[Rule], conclusion: Literal
) -> bool:
    """As simplified_activates, plus a final phase with the full strict part.

    The definition asks for an intermediate literal set between the
    defeasible-phase closure and the final strict derivation; taking the
    whole closure is equivalent by monotonicity (tested against a
    brute-force oracle over all intermediate sets).
    """
    eng = engine_for(spec)
    return eng.activates(eng.mask_of(h), eng.delta_mask_of(support), eng.lit_bit(conclusion))


def is_simplified_activation_set(
    spec: Specification, h: Iterable[Literal], argument: Argument
) -> bool:
    h = frozenset(h)
    _check_ground(h)
    return simplified_activates(spec, h, argument.support, argument.conclusion)


def is_activation_set(spec: Specification, h: Iterable[Literal], argument: Argument) -> bool:
    h = frozenset(h)
    _check_ground(h)
    return activates(spec, h, argument.support, argument.conclusion)


def domain_mask(spec: Specification, domain: ActivationDomain) -> int:
    eng = engine_for(spec)
    return eng.t_pi if domain is ActivationDomain.STRICT else eng.t_pi_delta


def minimal_activation_sets(
    query: ActivationQuery, *, max_domain: int = DEFAULT_DOMAIN_CAP
) -> tuple[frozenset[Literal], ...]:
    """The activation sets of an argument within the query's domain.

    With minimal=True, exactly the inclusion-minimal sets (an antichain);
    otherwise every activating subset of the domain.  Enumeration ascends
    by cardinality over bit masks, so minimal sets are found first.  Any
    reference-argument exclusions (as the P-relations need) are the
    caller's business, applied on the returned sets.
    """
    eng = engine_for(query.spec)
    dmask = domain_mask(query.spec, query.domain)
    delta = eng.delta_mask_of(query.argument.support)
    lit = eng.lit_bit(query.argument.conclusion)
    pred = eng.simplified_activates if query.simplified else eng.activates
    if query.minimal:
        masks = eng.minimal_activation_masks(delta, lit, dmask, query.simplified, max_domain)
    else:
        masks = tuple(
            h for h in eng.submasks_ascending(dmask, max_domain) if pred(h, delta, lit)
        )
    return tuple(eng.literals_of(m) for m in masks)
