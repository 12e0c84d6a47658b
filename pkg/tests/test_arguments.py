from __future__ import annotations

import pytest

from dspec import (
    Atom,
    ForeignRuleError,
    Literal,
    NotAnArgumentError,
    ResourceCapError,
    Rule,
    RuleKind,
    enumerate_arguments,
    ground_spec,
    is_minimal,
    make_argument,
    parse_argument,
    parse_spec,
)

from genspec import random_spec
from oracles import argument_supports_oracle

BIRDS = """
fact bird(tweety).
fact emu(edna).
strict bird(X) <- emu(X).
strict ~flies(X) <- emu(X).
defeasible flies(X) <~ bird(X).
"""


def glit(name: str, *args: str, neg: bool = False) -> Literal:
    from dspec import Constant

    return Literal(Atom(name, tuple(Constant(a) for a in args)), neg)


@pytest.fixture(scope="module")
def birds():
    return ground_spec(parse_spec(BIRDS))


@pytest.fixture(scope="module")
def flies_rule():
    return Rule(glit("flies", "edna"), (glit("bird", "edna"),), RuleKind.DEFEASIBLE)


def test_valid_argument_with_support(birds, flies_rule):
    arg = make_argument(birds, {flies_rule}, glit("flies", "edna"))
    assert arg.support == {flies_rule}


def test_valid_argument_with_empty_support(birds):
    arg = make_argument(birds, set(), glit("flies", "edna", neg=True))
    assert arg.support == frozenset()


def test_underivable_conclusion_is_rejected(birds):
    with pytest.raises(NotAnArgumentError):
        make_argument(birds, set(), glit("flies", "edna"))


def test_foreign_support_rule_is_rejected(birds):
    foreign = Rule(glit("flies", "edna"), (glit("emu", "edna"),), RuleKind.DEFEASIBLE)
    with pytest.raises(ForeignRuleError):
        make_argument(birds, {foreign}, glit("flies", "edna"))


def test_enumerate_minimal_for_defeasible_conclusion(birds, flies_rule):
    found = enumerate_arguments(birds, glit("flies", "edna"), minimal_only=True)
    assert [a.support for a in found] == [frozenset({flies_rule})]


def test_enumerate_minimal_for_strict_conclusion(birds):
    found = enumerate_arguments(birds, glit("flies", "edna", neg=True), minimal_only=True)
    assert [a.support for a in found] == [frozenset()]


def test_enumerate_unknown_conclusion_is_empty(birds):
    assert enumerate_arguments(birds, glit("swims", "edna")) == ()


def test_superset_supports_are_still_arguments(birds, flies_rule):
    tweety = Rule(glit("flies", "tweety"), (glit("bird", "tweety"),), RuleKind.DEFEASIBLE)
    full = enumerate_arguments(birds, glit("flies", "edna"), minimal_only=False)
    assert {a.support for a in full} == {
        frozenset({flies_rule}),
        frozenset({flies_rule, tweety}),
    }


def test_is_minimal(birds, flies_rule):
    assert is_minimal(birds, make_argument(birds, {flies_rule}, glit("flies", "edna")))
    padded = make_argument(birds, {flies_rule}, glit("flies", "edna", neg=True))
    assert not is_minimal(birds, padded)
    assert is_minimal(birds, make_argument(birds, set(), glit("flies", "edna", neg=True)))


def test_argument_text_round_trip(birds):
    arg = parse_argument("<{flies(edna) <~ bird(edna)}, flies(edna)>", birds)
    assert str(arg) == "<{flies(edna) <~ bird(edna)}, flies(edna)>"


def test_delta_cap_raises(birds):
    with pytest.raises(ResourceCapError):
        enumerate_arguments(birds, glit("flies", "edna"), max_delta=1)


@pytest.mark.parametrize("seed", range(0, 40, 4))
def test_enumeration_matches_brute_force(seed):
    spec = random_spec(seed)
    for lit in sorted({r.head for r in spec.defeasible}, key=Literal.key):
        expected = argument_supports_oracle(spec, lit)
        full = enumerate_arguments(spec, lit, minimal_only=False)
        assert {a.support for a in full} == expected
        minimal = enumerate_arguments(spec, lit, minimal_only=True)
        assert {a.support for a in minimal} == {
            s for s in expected if not any(t < s for t in expected)
        }
        for a in minimal:
            make_argument(spec, a.support, a.conclusion)
            assert is_minimal(spec, a)
