from collections import Counter

import pytest

from SomborAnalysis.errors import StaleSwapError, StepLimitError
from SomborAnalysis.greedy import build_greedy_tree, check_path_condition
from SomborAnalysis.oracle import enumerate_trees, random_tree
from SomborAnalysis.swap import EdgeSwap, apply_swap, default_step_limit, find_improving_swap, local_search
from SomborAnalysis.tree import Tree, path, star

from conftest import SO_32, SO_332, SO_CHAIN


def test_chain_swap(chain_tree):
    swap = find_improving_swap(chain_tree)
    assert swap is not None
    assert swap.removed == ((3, 0), (1, 2))
    assert swap.added == ((3, 1), (0, 2))
    assert swap.predicted_delta < 0
    assert swap.path == (3, 0, 1, 2)

    after = apply_swap(chain_tree, swap)
    assert chain_tree.sombor() == pytest.approx(SO_CHAIN, abs=1e-12)
    assert after.sombor() == pytest.approx(19.5710888, abs=1e-5)
    assert abs(after.sombor() - chain_tree.sombor() - swap.predicted_delta) <= 1e-12
    assert sorted(after.degrees) == sorted(chain_tree.degrees)


def test_no_swap_at_fixed_points(greedy_332):
    assert find_improving_swap(greedy_332) is None
    assert find_improving_swap(path(5)) is None
    assert find_improving_swap(star(4)) is None
    assert find_improving_swap(greedy_332, strategy="best") is None


def test_unknown_strategy(chain_tree):
    with pytest.raises(ValueError):
        find_improving_swap(chain_tree, strategy="steepest")


def test_best_strategy_is_most_negative(rng):
    for _ in range(50):
        tree = random_tree(14, rng)
        first = find_improving_swap(tree, "first")
        best = find_improving_swap(tree, "best")
        assert (first is None) == (best is None)
        if best is not None:
            assert best.predicted_delta <= first.predicted_delta
            assert abs(apply_swap(tree, best).sombor() - tree.sombor() - best.predicted_delta) <= 1e-12


def test_stale_swap(chain_tree, greedy_332):
    swap = find_improving_swap(chain_tree)
    after = apply_swap(chain_tree, swap)
    with pytest.raises(StaleSwapError, match="stale swap"):
        apply_swap(after, swap)

    bogus = EdgeSwap(removed=((0, 5), (1, 2)), added=((0, 1), (5, 2)), predicted_delta=-1.0)
    with pytest.raises(StaleSwapError):
        apply_swap(greedy_332, bogus)


def test_local_search_chain(chain_tree):
    result = local_search(chain_tree)
    assert result.steps == 1
    assert result.final_sombor == pytest.approx(SO_332, abs=1e-12)
    assert result.initial_sombor == pytest.approx(SO_CHAIN, abs=1e-12)
    assert check_path_condition(result.tree)
    assert len(result.trace) == 1
    assert result.trace[0].sombor == result.final_sombor
    assert result.trace[0].to_dict()["removed"] == [[3, 0], [1, 2]]


def test_local_search_greedy_is_fixed(greedy_332):
    result = local_search(greedy_332)
    assert result.steps == 0
    assert result.tree == greedy_332
    assert result.trace == []


def test_local_search_from_every_32_tree():
    trees = list(enumerate_trees((3, 2)))
    assert len(trees) == 3
    for tree in trees:
        result = local_search(tree)
        assert result.final_sombor >= SO_32 - 1e-9
        assert result.final_sombor == pytest.approx(SO_32, abs=1e-9)


@pytest.mark.parametrize("strategy", ["first", "best"])
def test_local_search_random(rng, strategy):
    for _ in range(40):
        tree = random_tree(int(rng.integers(4, 18)), rng)
        result = local_search(tree, strategy=strategy)
        assert check_path_condition(result.tree)
        assert result.tree.internal_degree_sequence() == tree.internal_degree_sequence()
        values = [result.initial_sombor] + [item.sombor for item in result.trace]
        assert all(b < a for a, b in zip(values, values[1:]))
        assert result.steps <= default_step_limit(tree.n)
        greedy = build_greedy_tree(tree.internal_degree_sequence()).tree.sombor()
        assert result.final_sombor >= greedy - 1e-9


def test_step_limit(chain_tree):
    # the chain needs exactly one swap
    assert local_search(chain_tree, step_limit=1).steps == 1
    with pytest.raises(StepLimitError):
        local_search(chain_tree, step_limit=0)


def test_swap_preserves_degree_multiset(rng):
    for _ in range(100):
        tree = random_tree(12, rng)
        swap = find_improving_swap(tree)
        if swap is None:
            continue
        after = apply_swap(tree, swap)
        assert isinstance(after, Tree)
        assert Counter(after.degrees) == Counter(tree.degrees)
        assert after.degrees == tree.degrees
