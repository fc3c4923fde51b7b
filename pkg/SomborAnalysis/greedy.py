"""
greedy trees and the structural predicates of Sombor-minimal trees

the greedy tree puts the largest degree at the root and hands out the
largest remaining degrees level by level, always expanding the labelled
vertex of largest degree first.

the predicates check the path condition (for every path v1..vt, t >= 4,
with d(v1) < d(vt) it holds d(v2) <= d(v_{t-1})) and the properties that
follow from it.
"""

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import networkx as nx

from .degrees import normalize, total_vertices
from .tree import Tree


@dataclass(frozen=True)
class RootedTree:
    '''
    a Tree with a chosen root, BFS parent map and BFS order.

    the parent map excludes the root; bfs_order starts at the root and
    visits level by level, neighbours in increasing label order.
    '''

    tree: Tree
    root: int
    parent: Dict[int, int] = field(compare=False)
    bfs_order: Tuple[int, ...] = field(compare=False)

    def children(self, v):
        return [w for w in self.tree.adjacency[v] if self.parent.get(w) == v]


def root_tree(tree, root=None):
    """root `tree` by BFS; the default root is the maximum-degree vertex with the lowest label."""
    if root is None:
        root = min(range(tree.n), key=lambda v: (-tree.degrees[v], v))

    parent = {}
    order = [root]
    queue = deque([root])
    seen = {root}
    while queue:
        u = queue.popleft()
        for w in tree.adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                order.append(w)
                queue.append(w)
    return RootedTree(tree, root, parent, tuple(order))


def build_greedy_tree(D):
    """build the greedy tree of a degree sequence.

    Syntax: T = build_greedy_tree(D)

    Keyword arguments:
    D -- (DegreeSequence or iterable of int) pendant entries are dropped

    Return:
    T -- (RootedTree) rooted at 0; internal vertex i carries D[i] and the
         internal labels follow assignment order, leaves take k..n-1

    Example:
    >>> build_greedy_tree([3, 2]).tree.sombor()
    12.16617...
    """
    D = normalize(D)
    if D.k == 0:
        return root_tree(Tree._trusted(2, ((0, 1),)), 0)

    degs = list(D)
    k = D.k
    next_internal = 1
    next_leaf = k
    edges = []

    # max-priority on (degree, -label); labels are handed out in
    # non-increasing degree order, so this is also BFS order
    heap = [(-degs[0], 0)]
    while heap:
        _, v = heapq.heappop(heap)
        n_children = degs[v] if v == 0 else degs[v] - 1
        for _ in range(n_children):
            if next_internal < k:
                child = next_internal
                next_internal += 1
                heapq.heappush(heap, (-degs[child], child))
            else:
                child = next_leaf
                next_leaf += 1
            edges.append((v, child))

    return root_tree(Tree._trusted(total_vertices(D), edges), 0)


## path scanning

@dataclass(frozen=True)
class PathWitness:
    """a path v1..vt found by a structural check."""

    path: Tuple[int, ...]
    degrees: Tuple[int, ...]

    @property
    def first(self):
        return self.path[0]

    @property
    def second(self):
        return self.path[1]

    @property
    def penultimate(self):
        return self.path[-2]

    @property
    def last(self):
        return self.path[-1]

    def to_dict(self):
        return {"path": list(self.path), "degrees": list(self.degrees)}


@dataclass(frozen=True)
class PredicateResult:
    '''
    outcome of a structural check: `holds` plus a witness when it fails.

    truthiness follows `holds`, and it unpacks as (holds, witness).
    '''

    holds: bool
    witness: Optional[Any] = None

    def __bool__(self):
        return self.holds

    def __iter__(self):
        return iter((self.holds, self.witness))


def _hop_tables(tree):
    '''
    BFS from every vertex.

    return:
    - dist[s][v]: distance between s and v
    - hop[s][v]: neighbour of v on the path from v to s (-1 for v == s)
    '''
    n = tree.n
    adj = tree.adjacency
    dist = []
    hop = []
    for s in range(n):
        _dist = [-1] * n
        _hop = [-1] * n
        _dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if _dist[w] < 0:
                    _dist[w] = _dist[u] + 1
                    _hop[w] = u
                    queue.append(w)
        dist.append(_dist)
        hop.append(_hop)
    return dist, hop


def _walk(hop, u, w):
    _path = [u]
    while u != w:
        u = hop[w][u]
        _path.append(u)
    return tuple(_path)


def iter_path_violations(tree):
    """yield every path breaking the path condition.

    pairs (v1, vt) are scanned in lexicographic label order; the path between
    them is unique, so v2 and v_{t-1} are its second and second-to-last vertex.
    """
    deg = tree.degrees
    dist, hop = _hop_tables(tree)
    for u in range(tree.n):
        for w in range(tree.n):
            if deg[u] >= deg[w] or dist[w][u] < 3:
                continue
            if deg[hop[w][u]] > deg[hop[u][w]]:
                _path = _walk(hop, u, w)
                yield PathWitness(_path, tuple(deg[v] for v in _path))


def check_path_condition(tree):
    """true iff no path v1..vt (t >= 4) has d(v1) < d(vt) and d(v2) > d(v_{t-1})."""
    for witness in iter_path_violations(tree):
        return PredicateResult(False, witness)
    return PredicateResult(True)


def check_subtree_property(tree, d):
    """true iff the vertices of degree >= d induce a connected subgraph (or none exist)."""
    _nodes = [v for v, dv in enumerate(tree.degrees) if dv >= d]
    if not _nodes:
        return True
    return nx.is_connected(tree.to_networkx().subgraph(_nodes))


def level_sets(tree):
    """L_i: vertices whose minimum distance to a pendant vertex is i."""
    if isinstance(tree, RootedTree):
        tree = tree.tree

    _level = [-1] * tree.n
    queue = deque()
    for v in tree.pendant_vertices():
        _level[v] = 0
        queue.append(v)
    while queue:
        u = queue.popleft()
        for w in tree.adjacency[u]:
            if _level[w] < 0:
                _level[w] = _level[u] + 1
                queue.append(w)

    levels = [[] for _ in range(max(_level) + 1)]
    for v, i in enumerate(_level):
        levels[i].append(v)
    return levels


def check_level_monotonicity(tree):
    """true iff d(u) <= d(v) whenever u in L_i, v in L_j and i < j."""
    if isinstance(tree, RootedTree):
        tree = tree.tree
    deg = tree.degrees
    levels = level_sets(tree)

    _floor = None
    for members in reversed(levels):
        if _floor is not None and max(deg[v] for v in members) > _floor:
            return False
        _low = min(deg[v] for v in members)
        _floor = _low if _floor is None else min(_floor, _low)
    return True


def check_no_valley(tree):
    """true iff no path v1..vt (t >= 3) has both ends of larger degree than an inner vertex."""
    deg = tree.degrees
    dist, hop = _hop_tables(tree)
    for u in range(tree.n):
        for w in range(u + 1, tree.n):
            if dist[u][w] < 2:
                continue
            _path = _walk(hop, u, w)
            if min(deg[v] for v in _path[1:-1]) < min(deg[u], deg[w]):
                return PredicateResult(False, PathWitness(_path, tuple(deg[v] for v in _path)))
    return PredicateResult(True)


def check_edge_nesting(tree):
    """true iff no vertex-disjoint edges v1v2, v3v4 have d(v1) < d(v3) <= d(v4) < d(v2).

    the witness is the tuple (v1, v2, v3, v4).
    """
    deg = tree.degrees
    _oriented = [(u, v) if deg[u] <= deg[v] else (v, u) for u, v in tree.edges]
    for a, b in _oriented:
        for c, d in _oriented:
            if len({a, b, c, d}) < 4:
                continue
            if deg[a] < deg[c] <= deg[d] < deg[b]:
                return PredicateResult(False, (a, b, c, d))
    return PredicateResult(True)
