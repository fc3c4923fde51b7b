"""
improving edge swaps and swap descent

for a path v1 v2 ... v_{t-1} vt with d(v1) < d(vt) and d(v2) > d(v_{t-1}),
removing v1v2, v_{t-1}vt and adding v1v_{t-1}, v2vt keeps every degree and
changes the Sombor index by g(d(v_{t-1})) - g(d(v2)) < 0, where
g = g_{d(v1), d(vt)}.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from .errors import StaleSwapError, StepLimitError
from .greedy import iter_path_violations
from .tree import Tree
from .weights import g_gap


Edge = Tuple[int, int]


@dataclass(frozen=True)
class EdgeSwap:
    '''
    two removed edges, two added edges and the predicted change of the
    Sombor index (negative for an improving move).
    '''

    removed: Tuple[Edge, Edge]
    added: Tuple[Edge, Edge]
    predicted_delta: float
    path: Tuple[int, ...] = ()

    @classmethod
    def from_witness(cls, tree, witness):
        v1, v2, vp, vt = witness.first, witness.second, witness.penultimate, witness.last
        deg = tree.degrees
        delta = g_gap(deg[v1], deg[vt], deg[vp]) - g_gap(deg[v1], deg[vt], deg[v2])
        return cls(removed=((v1, v2), (vp, vt)),
                   added=((v1, vp), (v2, vt)),
                   predicted_delta=delta,
                   path=witness.path)

    def to_dict(self):
        return {
            "removed": [list(e) for e in self.removed],
            "added": [list(e) for e in self.added],
            "predicted_delta": self.predicted_delta,
            "path": list(self.path),
        }


def find_improving_swap(tree, strategy="first"):
    """improving swap of `tree`, or None at a fixed point.

    Keyword arguments:
    tree     -- (Tree)
    strategy -- (str) "first": first witness in lexicographic (v1, vt) order;
                "best": most negative predicted delta, ties to the first.
                [default: "first"]
    """
    if strategy == "first":
        for witness in iter_path_violations(tree):
            return EdgeSwap.from_witness(tree, witness)
        return None
    elif strategy == "best":
        best = None
        for witness in iter_path_violations(tree):
            candidate = EdgeSwap.from_witness(tree, witness)
            if best is None or candidate.predicted_delta < best.predicted_delta:
                best = candidate
        return best
    else:
        raise ValueError("unknown `strategy` value: \"%s\"" % strategy)


def apply_swap(tree, swap):
    """the tree after `swap`; raises StaleSwapError if a removed edge is absent."""
    _edges = set(tree.edges)
    for u, v in swap.removed:
        e = (min(u, v), max(u, v))
        if e not in _edges:
            raise StaleSwapError("stale swap: edge (%d, %d) is not in the tree" % e)
        _edges.remove(e)
    for u, v in swap.added:
        _edges.add((min(u, v), max(u, v)))
    return Tree(tree.n, tuple(_edges))


@dataclass(frozen=True)
class TraceStep:
    step: int
    removed: Tuple[Edge, Edge]
    added: Tuple[Edge, Edge]
    delta: float
    sombor: float

    def to_dict(self):
        return {
            "step": self.step,
            "removed": [list(e) for e in self.removed],
            "added": [list(e) for e in self.added],
            "delta": self.delta,
            "sombor": self.sombor,
        }


@dataclass(frozen=True)
class SearchResult:
    tree: Tree
    steps: int
    initial_sombor: float
    final_sombor: float
    trace: List[TraceStep] = field(default_factory=list, compare=False)


def default_step_limit(n):
    return 10 * n * n


def local_search(tree, strategy="first", step_limit=None):
    '''
    apply improving swaps until the path condition holds.

    every step strictly lowers the Sombor index and keeps the degree
    sequence, so the descent ends at a fixed point.

    arguments:
    - tree: start tree

    keyword arguments:
    - strategy: "first" or "best" improvement [default: first]
    - step_limit: guard against runaway descent [default: 10 n^2]

    return:
    - SearchResult with the fixed point, step count and per-step trace
    '''
    limit = default_step_limit(tree.n) if step_limit is None else step_limit
    current = tree
    value = tree.sombor()
    initial = value
    trace = []

    while True:
        swap = find_improving_swap(current, strategy)
        if swap is None:
            break
        if len(trace) >= limit:
            raise StepLimitError("local search exceeded %d steps" % limit)
        current = apply_swap(current, swap)
        value = current.sombor()
        trace.append(TraceStep(len(trace) + 1, swap.removed, swap.added, swap.predicted_delta, value))

    return SearchResult(current, len(trace), initial, value, trace)
