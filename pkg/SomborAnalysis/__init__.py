"""
SomborAnalysis module

greedy trees, the Sombor index and its minimality among trees with a given
degree sequence: constructions, structural checks, edge-swap descent, an
exhaustive Prufer-code oracle and the recursive T_k decomposition.
"""

from .errors import (DegreeSequenceError, TreeValidationError, TreeFormatError, PruferError, StaleSwapError,
                     NotPendantError, PathConditionError, NoStrippableVertexError, BudgetExceededError,
                     StepLimitError, EnumerationError)

from .weights import edge_weight, edge_weights, g_gap, h_gap, IndexFunction, INDICES, get_index

from .degrees import (DegreeSequence, normalize, parse_degrees, leaf_count, total_vertices, full_degrees,
                      prufer_multiset, sequences_up_to)

from .tree import Tree, validate, sombor, index, canonical_form, internal_degree_sequence, star, path

from .greedy import (RootedTree, root_tree, build_greedy_tree, PathWitness, PredicateResult,
                     iter_path_violations, check_path_condition, check_subtree_property, level_sets,
                     check_level_monotonicity, check_no_valley, check_edge_nesting)

from .swap import EdgeSwap, find_improving_swap, apply_swap, TraceStep, SearchResult, local_search

from .oracle import (prufer_decode, prufer_encode, multiset_permutations, enumeration_count, enumerate_trees,
                     VerificationReport, verify_minimality, random_prufer_code, random_tree,
                     random_tree_with_degrees, SweepResult, sweep, FixedPointSurvey, survey_fixed_points)

from .decomposition import *

from .io import loadtree

from .config import RunConfig
