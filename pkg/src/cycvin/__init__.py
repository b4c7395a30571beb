"""Vincular pattern avoidance on cyclic permutations."""

from .perms import CyclicPerm, LinearPerm, all_cyclic_perms, canonicalize, reduce
from .patterns import (
    Pattern,
    PatternSet,
    PatternSyntaxError,
    all_totally_vincular,
    parse_pattern,
    trivial_wilf_orbit,
)
from .matcher import avoids_set, contains_cyclic, contains_linear, occurrences_linear
from .enumeration import (
    BudgetExceededError,
    CountTable,
    count_avoiders,
    count_avoiders_naive,
    count_range,
    count_refined,
    enumerate_avoiders,
)
from .bijections import (
    TotalCyclicOrder,
    count_triple_chain_orders,
    delete_max,
    from_cyclic_order,
    insert_max_chain,
    insert_max_pred,
    to_cyclic_order,
    triple_chain_orders,
)
from .avoidability import (
    AvoidabilityReport,
    ClassificationReport,
    avoidable_up_to,
    blowup_witness,
    classify_minimal_unavoidable,
    find_avoider,
    max_avoidable_set,
    patterns_with_max_at,
    patterns_with_min_at,
    rotation_closure,
    rotation_closure_complement,
    witness_minus_one,
)
from . import formulas

__all__ = [
    "AvoidabilityReport",
    "BudgetExceededError",
    "ClassificationReport",
    "CountTable",
    "CyclicPerm",
    "LinearPerm",
    "Pattern",
    "PatternSet",
    "PatternSyntaxError",
    "TotalCyclicOrder",
    "all_cyclic_perms",
    "all_totally_vincular",
    "avoidable_up_to",
    "avoids_set",
    "blowup_witness",
    "canonicalize",
    "classify_minimal_unavoidable",
    "contains_cyclic",
    "contains_linear",
    "count_avoiders",
    "count_avoiders_naive",
    "count_range",
    "count_refined",
    "count_triple_chain_orders",
    "delete_max",
    "enumerate_avoiders",
    "find_avoider",
    "formulas",
    "from_cyclic_order",
    "insert_max_chain",
    "insert_max_pred",
    "max_avoidable_set",
    "occurrences_linear",
    "parse_pattern",
    "patterns_with_max_at",
    "patterns_with_min_at",
    "reduce",
    "rotation_closure",
    "rotation_closure_complement",
    "to_cyclic_order",
    "trivial_wilf_orbit",
    "triple_chain_orders",
    "witness_minus_one",
]

__version__ = "0.1.0"
