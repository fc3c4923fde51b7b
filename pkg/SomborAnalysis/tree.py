"""
labeled trees on vertices 0..n-1

a Tree is immutable once validated; every transformation builds a new one.
index values are edge sums of correctly rounded per-edge weights added with
math.fsum, so the result does not depend on edge order or vertex labels.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import networkx as nx
import numpy as np

from .degrees import normalize
from .errors import TreeValidationError
from .weights import edge_weights, INDICES


def _integral(value):
    try:
        _value = int(value)
    except (TypeError, ValueError):
        raise TreeValidationError("label out of range", "%r is not an integer" % (value,))
    if _value != value:
        raise TreeValidationError("label out of range", "%r is not an integer" % (value,))
    return _value


def _normalize_edges(edges):
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def _check_tree(n, edges):
    if n < 2:
        raise TreeValidationError("too few vertices", "n=%d, a tree here needs n >= 2" % n)

    _seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise TreeValidationError("label out of range", "(%d, %d) with n=%d" % (u, v, n))
        if u == v:
            raise TreeValidationError("self-loop", "(%d, %d)" % (u, v))
        if (u, v) in _seen:
            raise TreeValidationError("duplicate edge", "(%d, %d)" % (u, v))
        _seen.add((u, v))

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        pass
    else:
        raise TreeValidationError("cycle detected", " - ".join(str(u) for u, _ in cycle))

    if not nx.is_connected(graph):
        raise TreeValidationError("not connected", "%d components" % nx.number_connected_components(graph))
    if len(edges) != n - 1:
        raise TreeValidationError("wrong edge count", "%d edges for %d vertices" % (len(edges), n))


@dataclass(frozen=True)
class Tree:
    '''
    labeled simple tree over vertices 0..n-1.

    edges are stored as sorted (min, max) pairs, so two trees compare equal
    exactly when they have the same vertex count and edge set.
    construction validates; use `validate(n, edges)` for the functional form.
    '''

    n: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        n = _integral(self.n)
        _edges = _normalize_edges((_integral(u), _integral(v)) for u, v in self.edges)
        _check_tree(n, _edges)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", _edges)

    @classmethod
    def _trusted(cls, n, edges):
        # for builders whose output is a tree by construction
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", int(n))
        object.__setattr__(obj, "edges", _normalize_edges(edges))
        return obj

    ## structure

    @cached_property
    def adjacency(self):
        _adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            _adj[u].append(v)
            _adj[v].append(u)
        return tuple(tuple(sorted(item)) for item in _adj)

    @cached_property
    def degrees(self):
        return tuple(len(item) for item in self.adjacency)

    def is_pendant(self, v):
        return self.degrees[v] == 1

    def pendant_vertices(self):
        return [v for v, d in enumerate(self.degrees) if d == 1]

    def internal_degree_sequence(self):
        return normalize(self.degrees)

    def center(self):
        """one or two central vertices, found by peeling leaves layer by layer."""
        deg = list(self.degrees)
        leaves = [v for v in range(self.n) if deg[v] <= 1]
        remaining = self.n
        while remaining > 2:
            remaining -= len(leaves)
            new_leaves = []
            for u in leaves:
                deg[u] = 0
                for w in self.adjacency[u]:
                    if deg[w] > 0:
                        deg[w] -= 1
                        if deg[w] == 1:
                            new_leaves.append(w)
            leaves = new_leaves
        return tuple(sorted(leaves))

    ## indices

    def sombor(self):
        """sum over edges uv of sqrt(d(u)^2 + d(v)^2)."""
        deg = np.asarray(self.degrees, dtype=np.int64)
        ends = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        return math.fsum(edge_weights(deg[ends[:, 0]], deg[ends[:, 1]]))

    def index(self, weight):
        '''
        generic degree-based index.

        arguments:
        - weight: symmetric callable (d(u), d(v)) -> float, e.g. an
                  IndexFunction from `weights.INDICES` or a lambda.

        return:
        - sum of weight over the edges (float)
        '''
        deg = self.degrees
        return math.fsum(weight(deg[u], deg[v]) for u, v in self.edges)

    def indices(self):
        return {name: self.index(item) for name, item in INDICES.items()}

    ## isomorphism

    def _rooted_code(self, root):
        parent = {root: -1}
        order = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w != parent[u]:
                    parent[w] = u
                    order.append(w)
                    stack.append(w)

        code = {}
        for u in reversed(order):
            _children = sorted(code[w] for w in self.adjacency[u] if w != parent[u])
            code[u] = "(" + "".join(_children) + ")"
        return code[root]

    def canonical_form(self):
        """AHU string rooted at the center; equal strings iff the trees are isomorphic."""
        return min(self._rooted_code(c) for c in self.center())

    ## conversions

    def relabel(self, perm):
        """isomorphic copy with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..%d" % (self.n - 1))
        return Tree._trusted(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self):
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges]}


def validate(n, edges):
    """check a candidate (n, edge set) and return it as a Tree.

    raises TreeValidationError with reason "cycle detected", "not connected",
    "wrong edge count", "duplicate edge", "self-loop", "label out of range"
    or "too few vertices".
    """
    return Tree(n, tuple(edges))


def degrees(tree):
    return list(tree.degrees)


def internal_degree_sequence(tree):
    return tree.internal_degree_sequence()


def sombor(tree):
    return tree.sombor()


def index(tree, weight):
    return tree.index(weight)


def canonical_form(tree):
    return tree.canonical_form()


def star(m):
    """K_{1,m} centred at 0."""
    return Tree._trusted(m + 1, ((0, i) for i in range(1, m + 1)))


def path(n):
    """P_n labeled 0-1-...-(n-1)."""
    return Tree._trusted(n, ((i, i + 1) for i in range(n - 1)))
