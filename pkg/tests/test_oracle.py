import itertools
import math

import networkx as nx
import pytest
from hypothesis import given

from SomborAnalysis.degrees import DegreeSequence, full_degrees, sequences_up_to
from SomborAnalysis.errors import BudgetExceededError, PruferError
from SomborAnalysis.oracle import (enumerate_trees, enumeration_count, multiset_permutations, prufer_decode,
                                   prufer_encode, random_prufer_code, random_tree, random_tree_with_degrees,
                                   survey_fixed_points, sweep, verify_minimality)
from SomborAnalysis.tree import Tree, star

from conftest import SO_32, SO_332, prufer_codes


def test_decode_examples():
    assert prufer_decode([], 2) == Tree(2, ((0, 1),))
    assert prufer_decode([0, 0], 4) == star(3)
    assert prufer_encode(prufer_decode([1, 0], 5)) == [1, 0]
    assert prufer_encode(Tree(2, ((0, 1),))) == []
    assert prufer_encode(star(3)) == [0, 0]


@pytest.mark.parametrize("code, n", [([0], 2), ([0, 4], 4), ([-1, 0], 4), ([], 1)])
def test_decode_rejects(code, n):
    with pytest.raises(PruferError):
        prufer_decode(code, n)


@given(prufer_codes(max_n=30))
def test_decode_matches_networkx(item):
    code, n = item
    tree = prufer_decode(code, n)
    expected = nx.from_prufer_sequence(code) if n > 2 else nx.Graph([(0, 1)])
    assert set(tree.edges) == {(min(u, v), max(u, v)) for u, v in expected.edges}
    assert prufer_encode(tree) == code
    if n > 2:
        assert nx.to_prufer_sequence(tree.to_networkx()) == code


def test_round_trip_exhaustive_small():
    for n in range(2, 8):
        for code in itertools.product(range(n), repeat=n - 2):
            tree = prufer_decode(code, n)
            assert prufer_encode(tree) == list(code)
            assert prufer_decode(prufer_encode(tree), n) == tree


def test_degree_is_multiplicity_plus_one(rng):
    for _ in range(200):
        n = int(rng.integers(2, 25))
        code = random_prufer_code(n, rng)
        tree = prufer_decode(code, n)
        assert list(tree.degrees) == [1 + code.count(v) for v in range(n)]


def test_multiset_permutations():
    assert list(multiset_permutations([1, 0, 0])) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert list(multiset_permutations([])) == [()]
    items = [0, 0, 1, 2, 2]
    assert list(multiset_permutations(items)) == sorted(set(itertools.permutations(items)))


def test_enumeration_examples():
    trees = list(enumerate_trees((3, 2)))
    assert len(trees) == enumeration_count((3, 2)) == 3
    assert all(t.degrees == (3, 2, 1, 1, 1) for t in trees)

    trees = list(enumerate_trees((2, 2)))
    assert len(trees) == 2
    assert len({t.canonical_form() for t in trees}) == 1

    assert list(enumerate_trees((5,))) == [star(5)]
    assert list(enumerate_trees(())) == [Tree(2, ((0, 1),))]


def test_enumeration_count_matches_iteration():
    for D in sequences_up_to(9):
        trees = list(enumerate_trees(D))
        n = D.total_vertices()
        denominator = math.prod(math.factorial(d - 1) for d in D)
        assert len(trees) == math.factorial(n - 2) // denominator == enumeration_count(D)
        assert len(set(trees)) == len(trees)
        assert all(t.degrees == full_degrees(D) for t in trees)


def test_budget_checked_eagerly():
    with pytest.raises(BudgetExceededError) as err:
        enumerate_trees((2, 2, 2, 2), budget=10)
    assert err.value.count == 24
    assert err.value.budget == 10
    with pytest.raises(BudgetExceededError):
        verify_minimality((3, 3, 2), budget=29)


def test_verify_examples():
    report = verify_minimality((3, 2))
    assert report.passed
    assert report.labeled_count == 3
    assert report.oracle_min == pytest.approx(12.1661672, abs=1e-5)
    assert report.greedy_value == pytest.approx(SO_32, abs=1e-12)
    assert report.isomorphism_classes == 1

    report = verify_minimality((3, 3, 2))
    assert report.passed
    assert report.labeled_count == 30
    assert report.oracle_min == pytest.approx(SO_332, abs=1e-9)
    assert report.isomorphism_classes == 2
    assert report.minimizer_classes == 1
    assert report.argmin.sombor() == report.oracle_min
    assert report.to_dict()["pass"] is True
    assert report.n == 7


def test_verify_trivial():
    report = verify_minimality((2,))
    assert report.passed and report.labeled_count == 1
    report = verify_minimality(())
    assert report.passed and report.oracle_min == math.sqrt(2)


def test_verify_without_classification():
    report = verify_minimality((4, 3, 2), classify=False)
    assert report.passed
    assert report.isomorphism_classes is None and report.minimizer_classes is None


def test_random_tree_with_degrees(rng):
    for _ in range(50):
        tree = random_tree_with_degrees((4, 3, 3, 2), rng)
        assert tree.degrees == full_degrees((4, 3, 3, 2))
    assert random_tree(2, rng) == Tree(2, ((0, 1),))


def test_sweep_small():
    result = sweep(8)
    assert result.all_passed
    assert [item.degree_sequence for item in result.reports] == list(sequences_up_to(8))
    assert result.reports[0].degree_sequence == DegreeSequence(())


def test_sweep_skips_over_budget():
    with pytest.warns(RuntimeWarning, match="skipped"):
        result = sweep(8, budget=100)
    assert result.skipped
    assert not result.failures
    assert not result.all_passed
    assert all(count > 100 for _, count in result.skipped)


def test_sweep_pool_matches_serial():
    serial = sweep(8)
    pooled = sweep(8, workers=2)
    assert [r.to_dict() for r in pooled.reports] == [r.to_dict() for r in serial.reports]


def test_survey_fixed_points():
    survey = survey_fixed_points((3, 3, 2))
    assert survey.starts == 30
    assert survey.below_greedy == 0
    assert survey.all_fixed
    assert survey.at_greedy + survey.above_greedy == 30
    assert survey.greedy_value == pytest.approx(SO_332, abs=1e-12)
