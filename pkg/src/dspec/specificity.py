"""The four specificity relations between arguments.

All four relations compare the sets that activate each argument.  P1, P2
and P3 quantify over simplified activation sets drawn from the theory of
the whole program and differ in a reference argument that discounts sets
already sufficient on their own; P3 additionally blocks defeasible
arguments from ranking above purely strict ones.  CP quantifies over plain
activation sets drawn from the strict theory only, which makes it a
quasi-ordering, unlike the other three.
"""
from __future__ import annotations

import itertools
from enum import Enum
from typing import Iterable, Optional

from .arguments import Argument
from .core import Rule, Specification
from .engine import DEFAULT_DELTA_CAP, DEFAULT_DOMAIN_CAP, Engine, engine_for
from .errors import ResourceCapError


class RelationKind(Enum):
    P1 = "p1"
    P2 = "p2"
    P3 = "p3"
    CP = "cp"


class ComparisonOutcome(Enum):
    MORE_SPECIFIC = "strictly-more-specific"
    LESS_SPECIFIC = "strictly-less-specific"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"

    @staticmethod
    def from_directions(forward: bool, backward: bool) -> "ComparisonOutcome":
        if forward and backward:
            return ComparisonOutcome.EQUIVALENT
        if forward:
            return ComparisonOutcome.MORE_SPECIFIC
        if backward:
            return ComparisonOutcome.LESS_SPECIFIC
        return ComparisonOutcome.INCOMPARABLE


def _candidate_masks(
    eng: Engine,
    delta_mask: int,
    lit_bit: int,
    domain: int,
    simplified: bool,
    minimal: bool,
    max_domain: int,
) -> Iterable[int]:
    """The activation sets of (support, conclusion) to quantify over.

    Restricting to minimal sets never changes any of the relations: the
    activation predicates and the reference-argument exclusions are all
    upward-closed in H, so a non-minimal candidate passes the exclusion
    and meets the target exactly when some minimal subset does.
    """
    if minimal:
        return eng.minimal_activation_masks(delta_mask, lit_bit, domain, simplified, max_domain)
    pred = eng.simplified_activates if simplified else eng.activates
    return (h for h in eng.submasks_ascending(domain, max_domain) if pred(h, delta_mask, lit_bit))


def leq(
    spec: Specification,
    kind: RelationKind,
    a1: Argument,
    a2: Argument,
    *,
    minimal: bool = True,
    max_domain: int = DEFAULT_DOMAIN_CAP,
) -> bool:
    """Is a1 more or equivalently specific than a2 under the given relation?"""
    eng = engine_for(spec)
    l1 = eng.lit_bit(a1.conclusion)
    l2 = eng.lit_bit(a2.conclusion)
    d1 = eng.delta_mask_of(a1.support)
    d2 = eng.delta_mask_of(a2.support)

    if kind is RelationKind.CP:
        if eng.t_pi & l1:
            return True
        if eng.t_pi & l2:
            return False
        for h in _candidate_masks(eng, d1, l1, eng.t_pi, False, minimal, max_domain):
            if not eng.activates(h, d2, l2):
                return False
        return True

    if kind is RelationKind.P3 and eng.t_pi & l2 and not eng.t_pi & l1:
        return False
    ref_support = d2 if kind is RelationKind.P1 else 0
    for h in _candidate_masks(eng, d1, l1, eng.t_pi_delta, True, minimal, max_domain):
        if eng.simplified_activates(h, ref_support, l1):
            continue
        if not eng.simplified_activates(h, d2, l2):
            return False
    return True


def compare(
    spec: Specification,
    kind: RelationKind,
    a1: Argument,
    a2: Argument,
    *,
    minimal: bool = True,
    max_domain: int = DEFAULT_DOMAIN_CAP,
) -> ComparisonOutcome:
    """Combine the two directed checks; each direction is evaluated on its
    own, never inferred from the other."""
    forward = leq(spec, kind, a1, a2, minimal=minimal, max_domain=max_domain)
    backward = leq(spec, kind, a2, a1, minimal=minimal, max_domain=max_domain)
    return ComparisonOutcome.from_directions(forward, backward)


def _strict_arity_split(eng: Engine) -> tuple[list[Rule], list[Rule]]:
    """Strict rules split into (at most one body literal, two or more)."""
    small: list[Rule] = []
    wide: list[Rule] = []
    for rule in sorted(eng.spec.strict, key=Rule.key):
        (wide if len(rule.body) >= 2 else small).append(rule)
    return small, wide


def check_theorem_condition(
    spec: Specification,
    n: int,
    *,
    max_delta: int = DEFAULT_DELTA_CAP,
    max_domain: int = DEFAULT_DOMAIN_CAP,
) -> bool:
    """The four conditions under which P3 is contained in CP.

    4: no strict rule has two or more body literals.
    3: no body literal of such a rule lies in the strict theory.
    2: as 3, but relative to the theory of the narrow strict rules, and
       only for rules whose head is outside that theory.
    1: brute force over every candidate H and every support set: the final
       strict phase adds nothing beyond the defeasible-phase closure and
       the strict theory.  Condition 1 may exceed the enumeration caps.
    """
    eng = engine_for(spec)
    small, wide = _strict_arity_split(eng)
    if n == 4:
        return not wide
    if n == 3:
        return all(not eng.t_pi & eng.lit_bit(b) for rule in wide for b in rule.body)
    if n == 2:
        init = 0
        conditional = []
        for rule in small:
            head = eng.lit_bit(rule.head)
            if rule.body:
                conditional.append((head, eng.mask_of(rule.body)))
            else:
                init |= head
        t_small = eng._close(init, conditional)
        return all(
            not t_small & eng.lit_bit(b)
            for rule in wide
            if not t_small & eng.lit_bit(rule.head)
            for b in rule.body
        )
    if n == 1:
        n_delta = len(eng.delta)
        if n_delta > max_delta:
            raise ResourceCapError("ground defeasible instances", n_delta, max_delta)
        for delta_mask in range(1 << n_delta):
            for h in eng.submasks_ascending(eng.t_pi, max_domain):
                l_mask = eng.phase2(h, delta_mask)
                if eng.phase3(l_mask) & ~(l_mask | eng.t_pi):
                    return False
        return True
    raise ValueError(f"condition number out of range: {n}")


def first_theorem_condition(
    spec: Specification,
    *,
    max_delta: int = DEFAULT_DELTA_CAP,
    max_domain: int = DEFAULT_DOMAIN_CAP,
) -> Optional[int]:
    """The cheapest satisfied condition (4 down to 1), or None."""
    for n in (4, 3, 2, 1):
        if check_theorem_condition(spec, n, max_delta=max_delta, max_domain=max_domain):
            return n
    return None


def find_transitivity_counterexample(
    spec: Specification,
    kind: RelationKind,
    args: Iterable[Argument],
    *,
    minimal: bool = True,
    max_domain: int = DEFAULT_DOMAIN_CAP,
) -> Optional[tuple[Argument, Argument, Argument]]:
    """First triple (a, b, c) in canonical order with a<=b<=c but not a<=c."""
    ordered = sorted(set(args), key=Argument.key)
    cache: dict[tuple[Argument, Argument], bool] = {}

    def rel(x: Argument, y: Argument) -> bool:
        key = (x, y)
        if key not in cache:
            cache[key] = leq(spec, kind, x, y, minimal=minimal, max_domain=max_domain)
        return cache[key]

    for a, b, c in itertools.product(ordered, repeat=3):
        if rel(a, b) and rel(b, c) and not rel(a, c):
            return (a, b, c)
    return None


def find_subset_chain_violation(
    spec: Specification,
    args: Iterable[Argument],
    *,
    minimal: bool = True,
    max_domain: int = DEFAULT_DOMAIN_CAP,
) -> Optional[tuple[Argument, Argument, RelationKind, RelationKind]]:
    """A pair where a finer relation holds but a coarser one does not.

    P3 is contained in P2 is contained in P1; a violating witness comes
    back as (a, b, finer, coarser)."""
    ordered = sorted(set(args), key=Argument.key)
    chain = (RelationKind.P3, RelationKind.P2, RelationKind.P1)
    for a, b in itertools.product(ordered, repeat=2):
        values = [leq(spec, k, a, b, minimal=minimal, max_domain=max_domain) for k in chain]
        for i in range(len(chain) - 1):
            if values[i] and not values[i + 1]:
                return (a, b, chain[i], chain[i + 1])
    return None


def verify_subset_chain(
    spec: Specification,
    args: Iterable[Argument],
    *,
    minimal: bool = True,
    max_domain: int = DEFAULT_DOMAIN_CAP,
) -> bool:
    return find_subset_chain_violation(spec, args, minimal=minimal, max_domain=max_domain) is None
