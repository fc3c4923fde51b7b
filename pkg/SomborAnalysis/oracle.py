"""
exhaustive Prufer-code oracle

every labeled tree in which internal vertex i has degree d_i and all other
vertices are leaves corresponds to one distinct permutation of the Prufer
multiset {i repeated d_i - 1 times}. scanning them all gives the exact
minimum Sombor index for a degree sequence at desk scale.
"""

import heapq
import math
import warnings
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from .degrees import DegreeSequence, full_degrees, normalize, prufer_multiset, sequences_up_to, total_vertices
from .errors import BudgetExceededError, EnumerationError, PruferError
from .greedy import build_greedy_tree, check_path_condition
from .swap import local_search
from .tree import Tree


DEFAULT_BUDGET = 10 ** 7
DEFAULT_TOLERANCE = 1e-9


## Prufer codes

def _check_code(code, n):
    if n < 2:
        raise PruferError("n must be >= 2, got %d" % n)
    if len(code) != n - 2:
        raise PruferError("code of length %d cannot describe a tree on %d vertices" % (len(code), n))
    for label in code:
        if not 0 <= label < n:
            raise PruferError("label %d out of range 0..%d" % (label, n - 1))


def prufer_edges(code, n):
    """edges of the tree with Prufer code `code`, smallest-leaf-first convention."""
    degree = [1] * n
    for label in code:
        degree[label] += 1

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for label in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, label))
        degree[label] -= 1
        if degree[label] == 1:
            heapq.heappush(leaves, label)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def prufer_decode(code, n):
    """the unique labeled tree on 0..n-1 whose Prufer code is `code`."""
    code = [int(label) for label in code]
    _check_code(code, n)
    return Tree._trusted(n, prufer_edges(code, n))


def prufer_encode(tree):
    """Prufer code of `tree`; inverse of prufer_decode."""
    n = tree.n
    degree = list(tree.degrees)
    removed = [False] * n
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)

    code = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        removed[leaf] = True
        neighbour = next(w for w in tree.adjacency[leaf] if not removed[w])
        code.append(neighbour)
        degree[neighbour] -= 1
        if degree[neighbour] == 1:
            heapq.heappush(leaves, neighbour)
    return code


## enumeration

def multiset_permutations(items):
    """distinct permutations of a multiset in lexicographic order."""
    a = sorted(items)
    yield tuple(a)
    while True:
        i = len(a) - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(a) - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])
        yield tuple(a)


def enumeration_count(D):
    """(n-2)! / prod (d_i - 1)!, the number of labeled trees enumerate_trees yields."""
    D = normalize(D)
    count = math.factorial(sum(d - 1 for d in D))
    for d in D:
        count //= math.factorial(d - 1)
    return count


def _check_budget(D, budget):
    count = enumeration_count(D)
    if count > budget:
        raise BudgetExceededError(count, budget)
    return count


def _iter_codes(D):
    expected = enumeration_count(D)
    count = 0
    for code in multiset_permutations(prufer_multiset(D)):
        count += 1
        yield code
    if count != expected:
        raise EnumerationError("enumerated %d codes, expected %d" % (count, expected))


def enumerate_trees(D, budget=DEFAULT_BUDGET):
    """every labeled tree realizing D with internal labels 0..k-1 in the order of D.

    the budget is checked before the first tree is produced.
    """
    D = normalize(D)
    _check_budget(D, budget)
    n = total_vertices(D)
    return (Tree._trusted(n, prufer_edges(code, n)) for code in _iter_codes(D))


## verification

@dataclass(frozen=True)
class VerificationReport:
    '''
    result of comparing the greedy tree against the exhaustive minimum.

    isomorphism_classes and minimizer_classes are None when the scan ran
    without classification.
    '''

    degree_sequence: DegreeSequence
    greedy_value: float
    oracle_min: float
    argmin: Tree
    labeled_count: int
    isomorphism_classes: Optional[int]
    minimizer_classes: Optional[int]
    passed: bool
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def n(self):
        return self.argmin.n

    def to_dict(self):
        return {
            "degree_sequence": self.degree_sequence.to_list(),
            "n": self.n,
            "greedy_value": self.greedy_value,
            "oracle_min": self.oracle_min,
            "argmin": self.argmin.to_dict(),
            "labeled_count": self.labeled_count,
            "isomorphism_classes": self.isomorphism_classes,
            "minimizer_classes": self.minimizer_classes,
            "pass": self.passed,
        }


def _scan(D, classify):
    n = total_vertices(D)
    deg = full_degrees(D)
    top = max(deg) + 1
    weight = [[math.sqrt(x * x + y * y) for y in range(top)] for x in range(top)]

    count = 0
    best_value = math.inf
    best_code = None
    classes = {}
    for code in _iter_codes(D):
        count += 1
        edges = prufer_edges(code, n)
        value = math.fsum(weight[deg[u]][deg[v]] for u, v in edges)
        if value < best_value:
            best_value = value
            best_code = code
        if classify:
            classes.setdefault(Tree._trusted(n, edges).canonical_form(), value)
    return count, best_value, best_code, classes


def verify_minimality(D, budget=DEFAULT_BUDGET, tolerance=DEFAULT_TOLERANCE, classify=True):
    """compare the greedy tree of D with the minimum over all labeled trees realizing D.

    Syntax: report = verify_minimality(D, budget, tolerance, classify)

    Keyword arguments:
    D         -- (DegreeSequence or iterable of int)
    budget    -- (int) largest enumeration allowed [default: 10^7]
    tolerance -- (float) absolute tolerance of the comparison [default: 1e-9]
    classify  -- (bool) count isomorphism classes via canonical forms
                 [default: True]

    Return:
    report    -- (VerificationReport)
    """
    D = normalize(D)
    _check_budget(D, budget)
    greedy_value = build_greedy_tree(D).tree.sombor()
    count, oracle_min, best_code, classes = _scan(D, classify)

    n = total_vertices(D)
    if classify:
        n_classes = len(classes)
        n_minimizers = sum(1 for value in classes.values() if value <= oracle_min + tolerance)
    else:
        n_classes = n_minimizers = None

    passed = abs(greedy_value - oracle_min) <= tolerance and greedy_value <= oracle_min + tolerance
    return VerificationReport(
        degree_sequence=D,
        greedy_value=greedy_value,
        oracle_min=oracle_min,
        argmin=prufer_decode(best_code, n),
        labeled_count=count,
        isomorphism_classes=n_classes,
        minimizer_classes=n_minimizers,
        passed=passed,
        tolerance=tolerance,
    )


## random instances

def random_prufer_code(n, rng):
    return [int(label) for label in rng.integers(0, n, size=max(n - 2, 0))]


def random_tree(n, rng):
    """uniformly random labeled tree on n vertices."""
    return prufer_decode(random_prufer_code(n, rng), n)


def random_tree_with_degrees(D, rng):
    """random labeled tree realizing D, internal labels 0..k-1 in the order of D."""
    D = normalize(D)
    code = rng.permutation(np.asarray(prufer_multiset(D), dtype=np.int64))
    return prufer_decode(code.tolist(), total_vertices(D))


## sweep

@dataclass
class SweepResult:
    reports: List[VerificationReport] = field(default_factory=list)
    skipped: List[Tuple[DegreeSequence, int]] = field(default_factory=list)

    @property
    def failures(self):
        return [item for item in self.reports if not item.passed]

    @property
    def all_passed(self):
        return not self.failures and not self.skipped


def _step_verify(_input):
    degs, budget, tolerance, classify = _input
    D = DegreeSequence(degs)
    try:
        return verify_minimality(D, budget=budget, tolerance=tolerance, classify=classify)
    except BudgetExceededError as err:
        return (D, err.count)


def sweep(max_n, budget=DEFAULT_BUDGET, tolerance=DEFAULT_TOLERANCE,
          workers=1, classify=False, verbose=False):
    '''
    verify_minimality for every sequence with total_vertices <= max_n.

    arguments:
    - max_n: vertex bound

    keyword arguments:
    - budget: per-sequence enumeration budget; larger sequences are skipped
    - tolerance: comparison tolerance
    - workers: processes in the pool, 1 runs in-process [default: 1]
    - classify: count isomorphism classes (slow) [default: False]
    - verbose: progress bar [default: False]

    return:
    - SweepResult, reports in lexicographic sequence order
    '''
    map_args = [(tuple(D), budget, tolerance, classify) for D in sequences_up_to(max_n)]

    if workers > 1:
        with Pool(processes=workers) as p:
            outcomes = list(tqdm(p.imap(_step_verify, map_args), total=len(map_args), disable=not verbose))
    else:
        outcomes = [_step_verify(item) for item in tqdm(map_args, disable=not verbose)]

    result = SweepResult()
    for item in outcomes:
        if isinstance(item, VerificationReport):
            result.reports.append(item)
        else:
            warnings.warn("sequence %s skipped: %d labeled trees exceed budget %d" % (item[0], item[1], budget),
                          RuntimeWarning)
            result.skipped.append(item)
    return result


## fixed points of the swap descent

@dataclass(frozen=True)
class FixedPointSurvey:
    degree_sequence: DegreeSequence
    greedy_value: float
    starts: int
    max_steps: int
    fixed_point_values: Tuple[float, ...]
    at_greedy: int
    above_greedy: int
    below_greedy: int
    all_fixed: bool

    def to_dict(self):
        return {
            "degree_sequence": self.degree_sequence.to_list(),
            "greedy_value": self.greedy_value,
            "starts": self.starts,
            "max_steps": self.max_steps,
            "fixed_point_values": list(self.fixed_point_values),
            "at_greedy": self.at_greedy,
            "above_greedy": self.above_greedy,
            "below_greedy": self.below_greedy,
            "all_fixed": self.all_fixed,
        }


def survey_fixed_points(D, budget=DEFAULT_BUDGET, tolerance=DEFAULT_TOLERANCE,
                        strategy="first", verbose=False):
    """run local_search from every labeled tree realizing D and tally where it ends."""
    D = normalize(D)
    trees = enumerate_trees(D, budget)
    greedy_value = build_greedy_tree(D).tree.sombor()

    starts = max_steps = at_greedy = above = below = 0
    values = set()
    all_fixed = True
    for tree in tqdm(trees, total=enumeration_count(D), disable=not verbose):
        result = local_search(tree, strategy=strategy)
        starts += 1
        max_steps = max(max_steps, result.steps)
        values.add(round(result.final_sombor, 9))
        all_fixed = all_fixed and check_path_condition(result.tree).holds
        if result.final_sombor < greedy_value - tolerance:
            below += 1
        elif result.final_sombor > greedy_value + tolerance:
            above += 1
        else:
            at_greedy += 1

    if above:
        warnings.warn("%d of %d descents from %s stop above the greedy value" % (above, starts, D),
                      RuntimeWarning)
    return FixedPointSurvey(D, greedy_value, starts, max_steps, tuple(sorted(values)),
                            at_greedy, above, below, all_fixed)
