"""Decompose multigraphs into two odd subgraphs, or an even and an odd one."""

from .decompose import (
    EVEN_ODD,
    TWO_EVEN,
    TWO_ODD,
    RBPartition,
    SubsetWitness,
    TwoColoring,
    build_gstar,
    check_ns_condition,
    check_witness,
    decompose,
    decompose_even_odd,
    decompose_two_even,
    decompose_two_odd,
    normalize,
    two_odd_partition,
)
from .errors import NotDecomposable, OddsplitError
from .multigraph import Multigraph, classify_components, from_edge_list
from .oracle import GenSpec, Mode, brute_force, generate, verify_decomposition

__all__ = [
    "EVEN_ODD", "TWO_EVEN", "TWO_ODD", "GenSpec", "Mode", "Multigraph",
    "NotDecomposable", "OddsplitError", "RBPartition", "SubsetWitness",
    "TwoColoring", "brute_force", "build_gstar", "check_ns_condition",
    "check_witness", "classify_components", "decompose", "decompose_even_odd",
    "decompose_two_even", "decompose_two_odd", "from_edge_list", "generate",
    "normalize", "two_odd_partition", "verify_decomposition",
]
