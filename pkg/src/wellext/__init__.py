"""Rank decompositions, well extensions and linear extensions of strict partial well orderings."""

from .analysis import (
    InversionReport,
    LinearExtension,
    ZigzagEmbedding,
    all_linear_extensions,
    build_antichain_extension,
    construct_H,
    forced_inversion_scan,
    iter_linear_extensions,
    one_linear_extension,
)
from .extension import (
    ChoiceOrder,
    TotalOrder,
    audit_extension,
    choice_least,
    default_choice,
    extend_to_well_order,
    least_element,
    well_extend_from_well_founded,
)
from .rank import Decomposition, RankFunction, compute_rank, decompose, verify_rank_witness
from .relation import (
    FiniteRelation,
    NotTransitive,
    NotWellFounded,
    ParseError,
    RelationError,
    WitnessChain,
    are_incomparable,
    find_descending_chain,
    is_irreflexive,
    is_totally_unordered,
    is_transitive,
    is_well_founded,
    max_antichain,
    minimal_elements,
    parse_relation,
    transitive_closure,
)
from .tree import (
    Cmp,
    chain_s,
    tree_L_compare,
    tree_level,
    tree_related,
    truncate,
    verify_tree_properties,
)

__version__ = "0.1.0"
