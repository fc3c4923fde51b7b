"""
recursive tree sequence T_k -> ... -> T_1

a tree satisfying the path condition, rooted at a maximum-degree vertex,
always has a minimum-degree internal vertex v_k whose children are all
pendant. removing those children gives T_{k-1} with degree sequence
(d_1, ..., d_{k-1}), which again satisfies the path condition. going the
other way, attaching d_t - 1 pendant children to a pendant vertex whose
parent has degree d_p raises the Sombor index by

    (d_t - 1) sqrt(d_t^2 + 1) + sqrt(d_t^2 + d_p^2) - sqrt(d_p^2 + 1).
"""

from dataclasses import dataclass
from typing import Tuple

from ..errors import NoStrippableVertexError, NotPendantError, PathConditionError
from ..greedy import RootedTree, check_path_condition, root_tree
from ..tree import Tree
from ..weights import edge_weight


@dataclass(frozen=True)
class DecompositionStep:
    '''
    one promotion in the sequence, read from T_{t-1} to T_t.

    fields:
    - index_t: t, the number of internal vertices of T_t
    - attached_at: label in T_{t-1} of the pendant vertex promoted to v_t
    - degree: d_t
    - parent_degree: d_p, degree of the promoted vertex's parent
    - added_leaves: d_t - 1
    - removed: labels in T_t of the pendant children of v_t
    - delta: SO(T_t) - SO(T_{t-1})
    '''

    index_t: int
    attached_at: int
    degree: int
    parent_degree: int
    added_leaves: int
    removed: Tuple[int, ...]
    delta: float

    def to_dict(self, running_total=None):
        _dict = {
            "t": self.index_t,
            "attached_at": self.attached_at,
            "d_t": self.degree,
            "d_p": self.parent_degree,
            "added_leaves": self.added_leaves,
            "delta": self.delta,
        }
        if running_total is not None:
            _dict["running_total"] = running_total
        return _dict


def _step_delta(d_t, d_p):
    return (d_t - 1) * edge_weight(d_t, 1) + edge_weight(d_t, d_p) - edge_weight(d_p, 1)


def incremental_sombor(so_prev, d_t, d_p):
    """Sombor index after promoting a pendant vertex with parent degree d_p to degree d_t."""
    if d_t < 2:
        raise ValueError("d_t must be >= 2, got %d" % d_t)
    if d_p < 1:
        raise ValueError("d_p must be >= 1, got %d" % d_p)
    return so_prev + _step_delta(d_t, d_p)


def base_sombor(tree):
    """SO(T_1) for the sequence of `tree`: d_1 sqrt(d_1^2 + 1), or sqrt(2) for K2."""
    d1 = max(tree.degrees)
    return d1 * edge_weight(d1, 1)


def _compact(tree, removed):
    """drop the `removed` vertices and renumber the rest in label order."""
    _removed = set(removed)
    kept = [v for v in range(tree.n) if v not in _removed]
    rank = {v: i for i, v in enumerate(kept)}
    edges = [(rank[u], rank[v]) for u, v in tree.edges if u in rank and v in rank]
    return Tree._trusted(len(kept), edges), rank


def _strip(rooted):
    tree = rooted.tree
    deg = tree.degrees
    internal = [v for v in range(tree.n) if deg[v] > 1]

    if not internal:
        raise NoStrippableVertexError("K2 has no internal vertex to strip")

    if len(internal) == 1:
        centre = internal[0]
        removed = tree.adjacency[centre][1:]
        _tree, rank = _compact(tree, removed)
        return _tree, rank[centre], deg[centre], 1, tuple(removed)

    d_min = min(deg[v] for v in internal)
    position = {v: i for i, v in enumerate(rooted.bfs_order)}
    candidates = [v for v in internal
                  if deg[v] == d_min and v != rooted.root
                  and all(deg[w] == 1 for w in rooted.children(v))]
    if not candidates:
        raise NoStrippableVertexError("no minimum-degree internal vertex has only pendant children")

    # least preferred by the greedy order: smallest parent degree, then deepest
    v = min(candidates, key=lambda c: (deg[rooted.parent[c]], -position[c]))
    removed = tuple(rooted.children(v))
    _tree, rank = _compact(tree, removed)
    return _tree, rank[v], deg[v], deg[rooted.parent[v]], removed


def strip_last(tree):
    '''
    T_{k-1} from T_k: remove the pendant children of v_k.

    arguments:
    - tree: Tree or RootedTree satisfying the path condition; a plain Tree
            is rooted at its maximum-degree vertex (lowest label on ties)

    return:
    - Tree with the remaining vertices renumbered in label order

    raises PathConditionError when the input breaks the path condition and
    NoStrippableVertexError when no vertex qualifies as v_k.
    '''
    rooted = tree if isinstance(tree, RootedTree) else root_tree(tree)
    check = check_path_condition(rooted.tree)
    if not check:
        raise PathConditionError(check.witness)
    return _strip(rooted)[0]


def attach(tree, v, d_t):
    """give the pendant vertex v of `tree` d_t - 1 new pendant children, labeled n, n+1, ..."""
    if d_t < 2:
        raise ValueError("d_t must be >= 2, got %d" % d_t)
    if not tree.is_pendant(v):
        raise NotPendantError("vertex %d has degree %d, not pendant" % (v, tree.degrees[v]))
    n = tree.n
    edges = list(tree.edges) + [(v, n + i) for i in range(d_t - 1)]
    return Tree._trusted(n + d_t - 1, edges)


def iter_decomposition(tree):
    """yield (T_t, step) for t = k, k-1, ..., 2 where step leads from T_{t-1} back to T_t."""
    if isinstance(tree, RootedTree):
        tree = tree.tree
    check = check_path_condition(tree)
    if not check:
        raise PathConditionError(check.witness)

    current = tree
    while sum(1 for d in current.degrees if d > 1) >= 2:
        k = sum(1 for d in current.degrees if d > 1)
        _next, attached_at, d_t, d_p, removed = _strip(root_tree(current))
        yield current, DecompositionStep(k, attached_at, d_t, d_p, d_t - 1, removed, _step_delta(d_t, d_p))
        current = _next


def decompose(tree):
    """steps of the sequence T_k -> ... -> T_2, in stripping order."""
    return [step for _, step in iter_decomposition(tree)]


def base_tree(tree):
    """T_1 (or K2 for k = 0) at the end of the decomposition of `tree`."""
    if isinstance(tree, RootedTree):
        tree = tree.tree
    current = tree
    for _, step in iter_decomposition(tree):
        current, _ = _compact(current, step.removed)
    return current


def replay(steps, base_value):
    """running Sombor totals when the steps are re-applied from T_1 upwards."""
    totals = []
    total = base_value
    for step in reversed(steps):
        total = incremental_sombor(total, step.degree, step.parent_degree)
        totals.append(total)
    return totals


def trace_records(steps, base_value):
    """JSON-ready [{t, d_t, d_p, delta, running_total}, ...] from T_2 up to T_k."""
    totals = replay(steps, base_value)
    return [step.to_dict(total) for step, total in zip(reversed(steps), totals)]


def recompose(base, steps):
    """rebuild the decomposed tree from T_1 and the steps; exact inverse of the labeling."""
    current = base
    for step in reversed(steps):
        n_prev = current.n
        grown = attach(current, step.attached_at, step.degree)
        _removed = set(step.removed)
        kept = [v for v in range(grown.n) if v not in _removed]
        perm = kept[:n_prev] + sorted(step.removed)
        current = grown.relabel(perm)
    return current
