"""Canonical decomposition of factorizable graphs and constructive tight-cut witnesses."""

from .altpaths import AltPath, Arc, Ear, Kind, balanced_path, classify, ear_split, saturated_path, switch_circuit
from .canonical import (CanonicalDecomposition, FactorComponent, build_poset, decompose, factor_components,
                        kl_partition, leq, tag_upper_components, tpath_construct, up_sets)
from .engine import CutWitness, fat_witness
from .errors import (EnumerationBoundError, GraphInputError, NotABrickError, NotFactorizableError,
                     PreconditionError, ProofClaimError, TightCutError)
from .graph import Graph, contract, delete_vertices, induced_subgraph, is_connected, is_three_connected
from .matching import (allowed_edges, find_perfect_matching, is_brick, is_factor_critical, is_factorizable,
                       perfect_matching_avoiding)
from .towers import (Tower, TowerSequence, arc_from_adjacency, arc_from_sequence, borders,
                     extend_to_spanning_sequence, spanning_arc_through, t_adjacency)

__all__ = [
    "AltPath", "Arc", "Ear", "Kind", "balanced_path", "classify", "ear_split", "saturated_path", "switch_circuit",
    "CanonicalDecomposition", "FactorComponent", "build_poset", "decompose", "factor_components",
    "kl_partition", "leq", "tag_upper_components", "tpath_construct", "up_sets",
    "CutWitness", "fat_witness",
    "EnumerationBoundError", "GraphInputError", "NotABrickError", "NotFactorizableError",
    "PreconditionError", "ProofClaimError", "TightCutError",
    "Graph", "contract", "delete_vertices", "induced_subgraph", "is_connected", "is_three_connected",
    "allowed_edges", "find_perfect_matching", "is_brick", "is_factor_critical", "is_factorizable",
    "perfect_matching_avoiding",
    "Tower", "TowerSequence", "arc_from_adjacency", "arc_from_sequence", "borders",
    "extend_to_spanning_sequence", "spanning_arc_through", "t_adjacency",
]
