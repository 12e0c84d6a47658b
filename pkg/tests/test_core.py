from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dspec import (
    ArityError,
    Atom,
    Constant,
    GroundingError,
    Literal,
    Rule,
    RuleKind,
    Specification,
    Variable,
    complement,
    ground_rule,
    ground_spec,
    herbrand_universe,
    is_instance_of,
    parse_spec,
)

BIRDS = """
fact bird(tweety).
fact emu(edna).
strict bird(X) <- emu(X).
strict ~flies(X) <- emu(X).
defeasible flies(X) <~ bird(X).
"""


def lit(name: str, *args: str, neg: bool = False) -> Literal:
    terms = tuple(Variable(a) if a[0].isupper() else Constant(a) for a in args)
    return Literal(Atom(name, terms), neg)


def test_herbrand_universe_birds():
    spec = parse_spec(BIRDS)
    assert herbrand_universe(spec) == ("edna", "tweety")


def test_herbrand_universe_propositional_is_empty():
    spec = parse_spec("fact thirst. strict drink <- thirst. defeasible beer <~ thirst.")
    assert herbrand_universe(spec) == ()


def test_herbrand_universe_empty_spec():
    assert herbrand_universe(Specification()) == ()


def test_ground_rule_enumerates_all_substitutions():
    rule = Rule(lit("bird", "X"), (lit("emu", "X"),), RuleKind.STRICT)
    ground = ground_rule(rule, {"tweety", "edna"})
    assert ground == {
        Rule(lit("bird", "tweety"), (lit("emu", "tweety"),), RuleKind.STRICT),
        Rule(lit("bird", "edna"), (lit("emu", "edna"),), RuleKind.STRICT),
    }


def test_ground_rule_identity_on_ground_input():
    fact = Rule(lit("emu", "edna"), (), RuleKind.FACT)
    assert ground_rule(fact, {"tweety"}) == {fact}


def test_ground_rule_empty_universe_with_variables_errors():
    rule = Rule(lit("flies", "X"), (lit("bird", "X"),), RuleKind.DEFEASIBLE)
    with pytest.raises(GroundingError):
        ground_rule(rule, set())


def test_ground_rule_unrestricted_head_variable():
    # a head variable missing from the body is still grounded over the universe
    rule = Rule(lit("p", "X"), (lit("q", "c"),), RuleKind.STRICT)
    assert len(ground_rule(rule, {"c", "d"})) == 2


def test_ground_spec_counts_and_idempotence():
    spec = parse_spec(BIRDS)
    grounded = ground_spec(spec)
    assert len(grounded.facts) == 2
    assert len(grounded.general) == 4  # 2 instances of each of the 2 rules
    assert len(grounded.defeasible) == 2
    assert ground_spec(grounded) == grounded
    assert herbrand_universe(grounded) == herbrand_universe(spec)
    assert {r.kind for r in grounded.general} == {RuleKind.STRICT}


def test_ground_spec_schematic_fact():
    spec = parse_spec("fact p(X). fact q(c). fact q(d).")
    grounded = ground_spec(spec)
    assert lit("p", "c") in {r.head for r in grounded.facts}
    assert lit("p", "d") in {r.head for r in grounded.facts}


def test_ground_instances_match_their_source():
    spec = parse_spec(BIRDS)
    universe = herbrand_universe(spec)
    for rule in spec.rules():
        for instance in ground_rule(rule, universe):
            assert is_instance_of(instance, rule)


def test_instance_check_rejects_wrong_constant_pattern():
    schema = Rule(lit("p", "X"), (lit("q", "X"),), RuleKind.DEFEASIBLE)
    mixed = Rule(lit("p", "c"), (lit("q", "d"),), RuleKind.DEFEASIBLE)
    assert not is_instance_of(mixed, schema)
    same = Rule(lit("p", "d"), (lit("q", "d"),), RuleKind.DEFEASIBLE)
    assert is_instance_of(same, schema)


def test_complement_examples():
    assert complement(lit("flies", "edna")) == lit("flies", "edna", neg=True)
    assert complement(lit("flies", "edna", neg=True)) == lit("flies", "edna")
    assert complement(lit("p")) == lit("p", neg=True)


@given(
    st.text(alphabet="pqr", min_size=1, max_size=3),
    st.booleans(),
    st.lists(st.sampled_from("abc"), max_size=3),
)
def test_complement_is_an_involution(name, neg, args):
    literal = lit(name, *args, neg=neg)
    assert complement(complement(literal)) == literal


def test_arity_conflict_is_rejected_at_load_time():
    with pytest.raises(ArityError):
        parse_spec("fact p(a). strict q <- p.")


def test_kind_container_mismatch_is_rejected():
    with pytest.raises(ValueError):
        Specification(facts=frozenset({Rule(lit("p"), (lit("q"),), RuleKind.STRICT)}))


def test_fact_with_body_is_rejected():
    with pytest.raises(ValueError):
        Rule(lit("p"), (lit("q"),), RuleKind.FACT)


def test_body_is_canonical_and_deduplicated():
    a, b = lit("a"), lit("b")
    assert Rule(lit("p"), (b, a, b), RuleKind.STRICT) == Rule(lit("p"), (a, b), RuleKind.STRICT)


def test_strict_property_is_derived():
    spec = parse_spec(BIRDS)
    assert spec.strict == spec.facts | spec.general
