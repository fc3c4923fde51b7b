import pytest
from hypothesis import given

from SomborAnalysis.degrees import normalize, sequences_up_to
from SomborAnalysis.greedy import (build_greedy_tree, check_edge_nesting, check_level_monotonicity,
                                   check_no_valley, check_path_condition, check_subtree_property,
                                   iter_path_violations, level_sets, root_tree)
from SomborAnalysis.tree import Tree, path, star

from conftest import SO_32, SO_332, degree_sequences


def test_greedy_examples():
    t3 = build_greedy_tree((3,))
    assert t3.tree == star(3)
    assert t3.root == 0

    t32 = build_greedy_tree((3, 2)).tree
    assert t32.sombor() == pytest.approx(12.1661672, abs=1e-5)
    assert t32.sombor() == pytest.approx(SO_32, abs=1e-12)
    assert t32.degrees == (3, 2, 1, 1, 1)

    t332 = build_greedy_tree((3, 3, 2)).tree
    assert t332.sombor() == pytest.approx(19.5710888, abs=1e-5)
    assert t332.sombor() == pytest.approx(SO_332, abs=1e-12)
    assert (0, 1) in t332.edges and (0, 2) in t332.edges


def test_greedy_k2():
    rooted = build_greedy_tree([1, 1])
    assert rooted.tree == Tree(2, ((0, 1),))
    assert rooted.bfs_order == (0, 1)


def test_greedy_labels_follow_bfs():
    rooted = build_greedy_tree((4, 3, 3, 2, 2, 2))
    k = 6
    internal_order = [v for v in rooted.bfs_order if v < k]
    assert internal_order == list(range(k))
    assert all(rooted.parent[v] < v for v in range(1, k))


@given(degree_sequences(max_k=8, max_degree=5))
def test_greedy_realizes_sequence(raw):
    D = normalize(raw)
    rooted = build_greedy_tree(D)
    assert rooted.tree.internal_degree_sequence() == D
    assert rooted.tree.degrees[:D.k] == tuple(D)
    assert build_greedy_tree(D).tree == rooted.tree


def test_greedy_passes_every_predicate():
    for D in sequences_up_to(12):
        tree = build_greedy_tree(D).tree
        assert check_path_condition(tree), D
        assert check_level_monotonicity(tree), D
        assert check_no_valley(tree), D
        assert check_edge_nesting(tree), D
        top = D[0] if D.k else 1
        for d in range(1, top + 1):
            assert check_subtree_property(tree, d), (D, d)


def test_path_condition_chain(chain_tree):
    holds, witness = check_path_condition(chain_tree)
    assert not holds
    assert witness.path == (3, 0, 1, 2)
    assert witness.degrees == (1, 3, 2, 3)
    assert witness.first == 3 and witness.last == 2
    assert witness.second == 0 and witness.penultimate == 1


def test_path_condition_simple_trees():
    assert check_path_condition(path(4))
    assert check_path_condition(path(7))
    assert check_path_condition(star(5))
    assert list(iter_path_violations(path(6))) == []


def test_subtree_property(chain_tree, greedy_332):
    assert check_subtree_property(greedy_332, 3)
    assert not check_subtree_property(chain_tree, 3)
    assert check_subtree_property(chain_tree, 1)
    assert check_subtree_property(chain_tree, 9)


def test_level_sets():
    tree = build_greedy_tree((4, 3, 2)).tree
    levels = level_sets(tree)
    assert sorted(levels[0]) == tree.pendant_vertices()
    assert check_level_monotonicity(tree)
    assert check_level_monotonicity(star(3))
    assert level_sets(star(3)) == [[1, 2, 3], [0]]
    assert check_level_monotonicity(path(6))
    assert [sorted(item) for item in level_sets(path(6))] == [[0, 5], [1, 4], [2, 3]]


def test_level_monotonicity_fails(chain_tree):
    # the degree-2 vertex sits in L_2, both degree-3 vertices in L_1
    levels = level_sets(chain_tree)
    assert levels[2] == [1]
    assert not check_level_monotonicity(chain_tree)


def test_no_valley_chain(chain_tree):
    holds, witness = check_no_valley(chain_tree)
    assert not holds
    assert witness.path == (0, 1, 2)


def test_edge_nesting_fails():
    # edge 1-0 with d = 1, 4 nests around edge 5-6 with d = 2, 3
    tree = Tree(11, ((0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6), (6, 7), (6, 8), (5, 9), (4, 10)))
    deg = tree.degrees
    assert (deg[1], deg[0], deg[4], deg[5]) == (1, 4, 3, 3)
    holds, witness = check_edge_nesting(tree)
    assert not holds
    a, b, c, d = witness
    assert deg[a] < deg[c] <= deg[d] < deg[b]


def test_root_tree():
    rooted = root_tree(path(5))
    assert rooted.root == 1
    assert rooted.bfs_order == (1, 0, 2, 3, 4)
    assert rooted.children(1) == [0, 2]
    assert [rooted.parent[v] for v in (4, 3, 2)] == [3, 2, 1]
    assert root_tree(path(5), root=4).parent[3] == 4
