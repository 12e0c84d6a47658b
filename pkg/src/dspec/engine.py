"""Interned bit-set evaluation context for one grounded specification.

Every ground literal occurring in the program is interned to a bit
position, so theories, candidate activation sets and defeasible supports
are plain integers.  All phase closures are memoized; the caches are
idempotent, so concurrent readers at worst recompute a value.
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator

from .core import Literal, Rule, Specification, ground_spec
from .errors import ResourceCapError

DEFAULT_DOMAIN_CAP = 22
DEFAULT_DELTA_CAP = 20

_ENGINES: dict[Specification, "Engine"] = {}


def engine_for(spec: Specification) -> "Engine":
    eng = _ENGINES.get(spec)
    if eng is None:
        grounded = spec if spec.is_ground else ground_spec(spec)
        eng = _ENGINES.get(grounded)
        if eng is None:
            eng = Engine(grounded)
            _ENGINES[grounded] = eng
        _ENGINES[spec] = eng
    return eng


def _encode(rules: Iterable[Rule], bit_of: dict[Literal, int]) -> tuple[int, list[tuple[int, int]]]:
    """Split rules into an initial head mask (unconditional) and body rules."""
    init = 0
    conditional: list[tuple[int, int]] = []
    for rule in sorted(rules, key=Rule.key):
        head = 1 << bit_of[rule.head]
        if not rule.body:
            init |= head
        else:
            body = 0
            for b in rule.body:
                body |= 1 << bit_of[b]
            conditional.append((head, body))
    return init, conditional


class Engine:
    def __init__(self, spec: Specification):
        assert spec.is_ground
        self.spec = spec
        lits = {lit for rule in spec.rules() for lit in (rule.head, *rule.body)}
        self.literals: tuple[Literal, ...] = tuple(sorted(lits, key=Literal.key))
        self.bit_of: dict[Literal, int] = {l: i for i, l in enumerate(self.literals)}

        self._strict_init, self._strict_rules = _encode(spec.strict, self.bit_of)
        self._general_init, self._general_rules = _encode(spec.general, self.bit_of)

        self.delta: tuple[Rule, ...] = tuple(sorted(spec.defeasible, key=Rule.key))
        self.delta_pos: dict[Rule, int] = {r: i for i, r in enumerate(self.delta)}
        self._delta_encoded: list[tuple[int, int]] = []
        for rule in self.delta:
            head = 1 << self.bit_of[rule.head]
            body = 0
            for b in rule.body:
                body |= 1 << self.bit_of[b]
            self._delta_encoded.append((head, body))

        self._phase2_cache: dict[tuple[int, int], int] = {}
        self._phase3_cache: dict[int, int] = {}
        self._full_cache: dict[int, int] = {}
        self._minsets_cache: dict[tuple, tuple[int, ...]] = {}

        self.t_pi: int = self._close(self._strict_init, self._strict_rules)
        self.t_pi_delta: int = self.full_closure((1 << len(self.delta)) - 1)

    # -- mask plumbing ----------------------------------------------------

    def mask_of(self, literals: Iterable[Literal]) -> int:
        """Interned literals as a bit mask; literals foreign to the program
        are dropped (they can never feed a rule body or match a conclusion)."""
        mask = 0
        for lit in literals:
            bit = self.bit_of.get(lit)
            if bit is not None:
                mask |= 1 << bit
        return mask

    def literals_of(self, mask: int) -> frozenset[Literal]:
        return frozenset(l for i, l in enumerate(self.literals) if mask >> i & 1)

    def delta_mask_of(self, support: Iterable[Rule]) -> int:
        mask = 0
        for rule in support:
            mask |= 1 << self.delta_pos[rule]
        return mask

    def support_of(self, delta_mask: int) -> frozenset[Rule]:
        return frozenset(r for i, r in enumerate(self.delta) if delta_mask >> i & 1)

    def lit_bit(self, literal: Literal) -> int:
        bit = self.bit_of.get(literal)
        return 0 if bit is None else 1 << bit

    # -- closures ----------------------------------------------------------

    @staticmethod
    def _close(init: int, rules: list[tuple[int, int]]) -> int:
        acc = init
        changed = True
        while changed:
            changed = False
            for head, body in rules:
                if not acc & head and body & ~acc == 0:
                    acc |= head
                    changed = True
        return acc

    def _delta_parts(self, delta_mask: int) -> tuple[int, list[tuple[int, int]]]:
        init = 0
        rules = []
        for i, (head, body) in enumerate(self._delta_encoded):
            if delta_mask >> i & 1:
                if body:
                    rules.append((head, body))
                else:
                    init |= head
        return init, rules

    def phase2(self, h_mask: int, delta_mask: int) -> int:
        """Closure of H with the support rules and the general rules only."""
        key = (h_mask, delta_mask)
        out = self._phase2_cache.get(key)
        if out is None:
            d_init, d_rules = self._delta_parts(delta_mask)
            out = self._close(h_mask | self._general_init | d_init, self._general_rules + d_rules)
            self._phase2_cache[key] = out
        return out

    def phase3(self, l_mask: int) -> int:
        """Closure of a literal set with the whole strict part, facts included."""
        out = self._phase3_cache.get(l_mask)
        if out is None:
            out = self._close(l_mask | self._strict_init, self._strict_rules)
            self._phase3_cache[l_mask] = out
        return out

    def full_closure(self, delta_mask: int) -> int:
        """Theory of the strict part plus the selected defeasible instances."""
        out = self._full_cache.get(delta_mask)
        if out is None:
            d_init, d_rules = self._delta_parts(delta_mask)
            out = self._close(self._strict_init | d_init, self._strict_rules + d_rules)
            self._full_cache[delta_mask] = out
        return out

    # -- activation predicates ----------------------------------------------

    def simplified_activates(self, h_mask: int, delta_mask: int, lit_bit: int) -> bool:
        return bool(self.phase2(h_mask, delta_mask) & lit_bit)

    def activates(self, h_mask: int, delta_mask: int, lit_bit: int) -> bool:
        return bool(self.phase3(self.phase2(h_mask, delta_mask)) & lit_bit)

    # -- subset enumeration --------------------------------------------------

    @staticmethod
    def bits(mask: int) -> list[int]:
        return [i for i in range(mask.bit_length()) if mask >> i & 1]

    def submasks_ascending(self, domain_mask: int, cap: int) -> Iterator[int]:
        """All subsets of the domain, grouped by ascending cardinality."""
        positions = self.bits(domain_mask)
        if len(positions) > cap:
            raise ResourceCapError("activation domain", len(positions), cap)
        for k in range(len(positions) + 1):
            for combo in itertools.combinations(positions, k):
                mask = 0
                for p in combo:
                    mask |= 1 << p
                yield mask

    def minimal_masks(
        self, domain_mask: int, test: Callable[[int], bool], cap: int
    ) -> tuple[int, ...]:
        """Inclusion-minimal subsets of the domain satisfying an upward-closed
        test; supersets of found sets are skipped, never tested."""
        found: list[int] = []
        for mask in self.submasks_ascending(domain_mask, cap):
            if any(f & mask == f for f in found):
                continue
            if test(mask):
                found.append(mask)
        return tuple(found)

    def minimal_activation_masks(
        self, delta_mask: int, lit_bit: int, domain_mask: int, simplified: bool, cap: int
    ) -> tuple[int, ...]:
        size = bin(domain_mask).count("1")
        if size > cap:
            raise ResourceCapError("activation domain", size, cap)
        key = (delta_mask, lit_bit, domain_mask, simplified)
        out = self._minsets_cache.get(key)
        if out is None:
            pred = self.simplified_activates if simplified else self.activates
            out = self.minimal_masks(domain_mask, lambda h: pred(h, delta_mask, lit_bit), cap)
            self._minsets_cache[key] = out
        return out
