"""Defeasible logic programs and specificity orderings between arguments."""

from .activation import (
    ActivationDomain,
    ActivationQuery,
    is_activation_set,
    is_simplified_activation_set,
    minimal_activation_sets,
)
from .arguments import (
    Argument,
    enumerate_all_arguments,
    enumerate_arguments,
    is_minimal,
    make_argument,
)
from .closure import Theory, contradiction_witness, derives, theory
from .core import (
    Atom,
    Constant,
    Literal,
    Rule,
    RuleKind,
    Specification,
    Term,
    Variable,
    complement,
    ground_rule,
    ground_spec,
    herbrand_universe,
    is_instance_of,
)
from .errors import (
    ArityError,
    DspecError,
    ForeignRuleError,
    GroundingError,
    NotAnArgumentError,
    ResourceCapError,
    SpecSyntaxError,
)
from .specificity import (
    ComparisonOutcome,
    RelationKind,
    check_theorem_condition,
    compare,
    find_subset_chain_violation,
    find_transitivity_counterexample,
    first_theorem_condition,
    leq,
    verify_subset_chain,
)
from .textio import (
    SpecDocument,
    parse_argument,
    parse_document,
    parse_outcome,
    parse_spec,
    render_argument,
    render_document,
    render_outcome,
    render_rule,
    render_spec,
)
from .trees import (
    DerivationTree,
    derivation_trees,
    format_tree,
    paths_of,
    syntactic_leq,
    tree_graph,
    tree_leq,
)

__version__ = "0.1.0"
