"""Arguments: ground defeasible supports paired with a derived conclusion.

An argument is a pair of a support set (ground instances of defeasible
rules) and a conclusion literal that the support derives together with the
strict part.  Neither minimality nor consistency is required of a valid
argument; minimality is a separate, optional notion.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import Literal, Rule, Specification
from .engine import DEFAULT_DELTA_CAP, engine_for
from .errors import ForeignRuleError, NotAnArgumentError, ResourceCapError


@dataclass(frozen=True)
class Argument:
    support: frozenset[Rule]
    conclusion: Literal

    def key(self) -> tuple:
        return (
            self.conclusion.key(),
            len(self.support),
            tuple(sorted(r.key() for r in self.support)),
        )

    def __str__(self) -> str:
        rules = "; ".join(str(r) for r in sorted(self.support, key=Rule.key))
        return f"<{{{rules}}}, {self.conclusion}>"


def make_argument(
    spec: Specification, support: Iterable[Rule], conclusion: Literal
) -> Argument:
    """Validate and build an argument.

    Raises ForeignRuleError if a support rule is not a ground instance of a
    defeasible rule of the specification, and NotAnArgumentError if the
    support plus the strict part does not derive the conclusion.
    """
    eng = engine_for(spec)
    support = frozenset(support)
    for rule in support:
        if rule not in eng.delta_pos:
            raise ForeignRuleError(f"not a ground defeasible instance of the program: {rule}")
    lit_bit = eng.lit_bit(conclusion)
    delta_mask = eng.delta_mask_of(support)
    if not lit_bit or not eng.full_closure(delta_mask) & lit_bit:
        raise NotAnArgumentError(
            f"support does not derive {conclusion}: "
            f"{{{'; '.join(str(r) for r in sorted(support, key=Rule.key))}}}"
        )
    return Argument(support, conclusion)


def enumerate_arguments(
    spec: Specification,
    conclusion: Literal,
    minimal_only: bool = True,
    *,
    max_delta: int = DEFAULT_DELTA_CAP,
) -> tuple[Argument, ...]:
    """All arguments for a conclusion, by ascending support cardinality.

    With minimal_only, exactly the inclusion-minimal supports are kept and
    their supersets are skipped without testing.  The search covers the
    powerset of the ground defeasible instances, so the instance count is
    capped (default 20).
    """
    eng = engine_for(spec)
    n = len(eng.delta)
    if n > max_delta:
        raise ResourceCapError("ground defeasible instances", n, max_delta)
    lit_bit = eng.lit_bit(conclusion)
    if not lit_bit:
        return ()
    found: list[int] = []
    out: list[Argument] = []
    for k in range(n + 1):
        for combo in itertools.combinations(range(n), k):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if minimal_only and any(f & mask == f for f in found):
                continue
            if eng.full_closure(mask) & lit_bit:
                found.append(mask)
                out.append(Argument(eng.support_of(mask), conclusion))
    return tuple(sorted(out, key=Argument.key))


def is_minimal(spec: Specification, argument: Argument) -> bool:
    """True iff no proper subset of the support still derives the conclusion."""
    eng = engine_for(spec)
    lit_bit = eng.lit_bit(argument.conclusion)
    mask = eng.delta_mask_of(argument.support)
    # derivability is monotone in the rule set, so dropping one rule at a
    # time covers all proper subsets
    for i in eng.bits(mask):
        if eng.full_closure(mask & ~(1 << i)) & lit_bit:
            return False
    return True


def enumerate_all_arguments(
    spec: Specification,
    *,
    minimal_only: bool = True,
    max_args: int = 64,
    max_delta: int = DEFAULT_DELTA_CAP,
) -> tuple[Argument, ...]:
    """Arguments for every derivable conclusion, canonically ordered.

    The population is truncated at max_args after sorting, so two runs see
    the same prefix.
    """
    eng = engine_for(spec)
    out: list[Argument] = []
    for lit in sorted(eng.literals_of(eng.t_pi_delta), key=Literal.key):
        out.extend(enumerate_arguments(spec, lit, minimal_only, max_delta=max_delta))
    out.sort(key=Argument.key)
    return tuple(out[:max_args])
