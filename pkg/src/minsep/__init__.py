"""Enumerate and count minimal separating sets on closed orientable surfaces."""

from .characters import capacity_estimate, character, frobenius_count
from .engine import RgEntry, SearchTask, brute_force_Rg, enumerate_Rg, is_canonical, run_task
from .graphs import MultiGraph, graph_isomorphic
from .maps import CombinatorialMap, Hypermap, dual, map_from_hypermap, hypermap_from_map
from .perm import Permutation, compose, conjugate, cycle_type, inverse
from .reduce import GenusTable, build_table, count_Lg, graph_of_entry, reduce_to_Cg
from .rules import TypeTriple, admissible_type_triples, check_map_in_Rg, edge_bounds, minsep_genus

__version__ = "0.1.0"

__all__ = [
    "CombinatorialMap", "GenusTable", "Hypermap", "MultiGraph", "Permutation", "RgEntry",
    "SearchTask", "TypeTriple", "admissible_type_triples", "brute_force_Rg", "build_table",
    "capacity_estimate", "character", "check_map_in_Rg", "compose", "conjugate", "count_Lg",
    "cycle_type", "dual", "edge_bounds", "enumerate_Rg", "frobenius_count", "graph_isomorphic",
    "graph_of_entry", "hypermap_from_map", "inverse", "is_canonical", "map_from_hypermap",
    "minsep_genus", "reduce_to_Cg", "run_task",
]
