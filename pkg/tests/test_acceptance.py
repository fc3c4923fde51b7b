'''
exhaustive and randomized end-to-end checks.

the `slow` ones run the full oracle sweeps; deselect them with -m "not slow".
'''

import itertools

import numpy as np
import pytest

from SomborAnalysis.decomposition import base_tree, decompose, iter_decomposition, replay
from SomborAnalysis.degrees import normalize, sequences_up_to
from SomborAnalysis.greedy import build_greedy_tree, check_path_condition
from SomborAnalysis.oracle import (enumerate_trees, enumeration_count, prufer_decode, prufer_encode,
                                   random_prufer_code, random_tree, sweep, verify_minimality)
from SomborAnalysis.swap import apply_swap, default_step_limit, find_improving_swap, local_search


@pytest.mark.slow
def test_greedy_matches_oracle_up_to_11():
    result = sweep(11, workers=2)
    assert not result.skipped
    assert not result.failures
    for report in result.reports:
        assert abs(report.greedy_value - report.oracle_min) <= 1e-9
        assert report.labeled_count == enumeration_count(report.degree_sequence)


@pytest.mark.slow
def test_greedy_matches_oracle_up_to_13_within_budget():
    result = sweep(13, budget=10 ** 6, workers=4)
    assert not result.failures
    assert all(count > 10 ** 6 for _, count in result.skipped)
    assert all(report.n <= 13 for report in result.reports)


def test_swap_soundness_on_random_trees():
    rng = np.random.default_rng(1000)
    checked = 0
    while checked < 1000:
        tree = random_tree(int(rng.integers(4, 21)), rng)
        swap = find_improving_swap(tree)
        if swap is None:
            continue
        after = apply_swap(tree, swap)
        measured = after.sombor() - tree.sombor()
        assert sorted(after.degrees) == sorted(tree.degrees)
        assert len(after.edges) == tree.n - 1
        assert measured < 0
        assert abs(measured - swap.predicted_delta) <= 1e-12
        checked += 1


@pytest.mark.slow
def test_local_search_converges_from_every_tree_up_to_9():
    for D in sequences_up_to(9):
        greedy = build_greedy_tree(D).tree.sombor()
        for tree in enumerate_trees(D):
            result = local_search(tree)
            assert result.steps <= default_step_limit(tree.n)
            assert check_path_condition(result.tree)
            assert result.final_sombor >= greedy - 1e-9


def test_incremental_replay_on_random_greedy_trees():
    rng = np.random.default_rng(500)
    for _ in range(500):
        k = int(rng.integers(1, 9))
        D = normalize(rng.integers(2, 7, size=k).tolist())
        tree = build_greedy_tree(D).tree
        for current, _ in iter_decomposition(tree):
            assert check_path_condition(current)
        steps = decompose(tree)
        base = base_tree(tree)
        totals = replay(steps, base.sombor())
        final = totals[-1] if totals else base.sombor()
        assert abs(final - tree.sombor()) <= 1e-12


def test_prufer_bijection():
    rng = np.random.default_rng(10 ** 4)
    for _ in range(10 ** 4):
        n = int(rng.integers(2, 31))
        code = random_prufer_code(n, rng)
        assert prufer_encode(prufer_decode(code, n)) == code

    for n in range(2, 8):
        seen = set()
        for code in itertools.product(range(n), repeat=n - 2):
            tree = prufer_decode(code, n)
            assert prufer_decode(prufer_encode(tree), n) == tree
            seen.add(tree)
        assert len(seen) == n ** (n - 2)


@pytest.mark.slow
def test_enumeration_cardinality_up_to_11():
    for D in sequences_up_to(11):
        assert sum(1 for _ in enumerate_trees(D)) == enumeration_count(D)


def test_verify_small_sequences_with_classes():
    for D in sequences_up_to(8):
        report = verify_minimality(D)
        assert report.passed, D
        assert 1 <= report.minimizer_classes <= report.isomorphism_classes
