"""Symmetric isostatic frameworks in the plane under quadrilateral norms."""
from .construct import ExtensionMove, MoveKind, build_chain, hat_graph, replay, w5_base
from .polynorm import (FacetClass, IsometryKind, Placement, QuadNorm, coloring, is_isostatic,
                       isometries, l1_norm, linf_norm, make_quad_norm, rigidity_matrix)
from .placement import (SymmetricPlacement, extend_placement, place_w5, placement_from_trees,
                        synthesize)
from .symcore import Graph, GroupCase, SymmetricGraph, build_symmetric_graph, edge
from .treepack import TreeMode, TreePair, check_admissible, find_tree_pair, is_valid_tree_pair
from .verify import enumerate_admissible, equivalence_experiment, oracle_tree_decomposition

__version__ = "0.1.0"

__all__ = [
    "ExtensionMove", "MoveKind", "build_chain", "hat_graph", "replay", "w5_base",
    "FacetClass", "IsometryKind", "Placement", "QuadNorm", "coloring", "is_isostatic",
    "isometries", "l1_norm", "linf_norm", "make_quad_norm", "rigidity_matrix",
    "SymmetricPlacement", "extend_placement", "place_w5", "placement_from_trees", "synthesize",
    "Graph", "GroupCase", "SymmetricGraph", "build_symmetric_graph", "edge",
    "TreeMode", "TreePair", "check_admissible", "find_tree_pair", "is_valid_tree_pair",
    "enumerate_admissible", "equivalence_experiment", "oracle_tree_decomposition",
]
