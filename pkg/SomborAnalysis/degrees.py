"""
internal-vertex degree sequences

a tree's degree sequence is written non-increasing with the pendant
vertices omitted, so (3, 2) stands for the full degrees (3, 2, 1, 1, 1).
the empty sequence stands for K2, the only tree with no internal vertex.
"""

import re
from dataclasses import dataclass
from typing import Tuple

from .errors import DegreeSequenceError


@dataclass(frozen=True)
class DegreeSequence:
    '''
    validated internal degrees, every entry >= 2, sorted non-increasing.

    use `normalize` to build one from raw degrees that may contain 1s or
    come unsorted.
    '''

    internal_degrees: Tuple[int, ...] = ()

    def __post_init__(self):
        _raw = tuple(self.internal_degrees)
        try:
            _degs = tuple(int(d) for d in _raw)
        except (TypeError, ValueError):
            raise DegreeSequenceError("degrees must be integers: %r" % (_raw,))
        if _degs != _raw:
            raise DegreeSequenceError("degrees must be integers: %r" % (_raw,))
        object.__setattr__(self, "internal_degrees", _degs)

        if any(d < 2 for d in _degs):
            raise DegreeSequenceError("internal degrees must be >= 2: %r" % (_degs,))
        if any(_degs[i] < _degs[i + 1] for i in range(len(_degs) - 1)):
            raise DegreeSequenceError("internal degrees must be non-increasing: %r" % (_degs,))

    def __len__(self):
        return len(self.internal_degrees)

    def __iter__(self):
        return iter(self.internal_degrees)

    def __getitem__(self, idx):
        return self.internal_degrees[idx]

    def __str__(self):
        return "(%s)" % ", ".join(str(d) for d in self.internal_degrees)

    @property
    def k(self):
        return len(self.internal_degrees)

    def leaf_count(self):
        return leaf_count(self)

    def total_vertices(self):
        return total_vertices(self)

    def to_list(self):
        return list(self.internal_degrees)


def normalize(raw):
    """drop the pendant entries and sort the rest non-increasing.

    Syntax: D = normalize(raw)

    Keyword arguments:
    raw -- (iterable of int) vertex degrees, every entry >= 1

    Return:
    D   -- (DegreeSequence)

    Example:
    >>> normalize([2, 3, 1, 1, 3])
    DegreeSequence(internal_degrees=(3, 3, 2))
    """
    if isinstance(raw, DegreeSequence):
        return raw

    _raw = []
    for item in raw:
        try:
            value = int(item)
        except (TypeError, ValueError):
            raise DegreeSequenceError("not an integer degree: %r" % (item,))
        if value != item:
            raise DegreeSequenceError("not an integer degree: %r" % (item,))
        if value <= 0:
            raise DegreeSequenceError("degrees must be positive, got %d" % value)
        _raw.append(value)

    return DegreeSequence(tuple(sorted((d for d in _raw if d > 1), reverse=True)))


def parse_degrees(text):
    '''parse "4,3,3,2" or "4 3 3 2" into a normalized DegreeSequence.'''
    _text = text.strip()
    if not _text:
        return DegreeSequence(())

    _items = [item for item in re.split(r"[,\s]+", _text) if item]
    try:
        values = [int(item) for item in _items]
    except ValueError:
        raise DegreeSequenceError("cannot parse degree sequence: \"%s\"" % text)
    return normalize(values)


def leaf_count(D):
    """number of pendant vertices of any tree realizing D: sum(d) - 2k + 2."""
    D = normalize(D)
    if D.k == 0:
        raise DegreeSequenceError("the empty sequence has no internal vertex (K2 convention)")
    return sum(D) - 2 * D.k + 2


def total_vertices(D):
    D = normalize(D)
    if D.k == 0:
        return 2
    return D.k + leaf_count(D)


def full_degrees(D):
    '''
    per-label degrees of a tree realizing D.

    internal vertices take labels 0..k-1 in the order of D,
    leaves take k..n-1.
    '''
    D = normalize(D)
    if D.k == 0:
        return (1, 1)
    return tuple(D) + (1,) * leaf_count(D)


def prufer_multiset(D):
    """label i repeated d_i - 1 times, in increasing label order."""
    D = normalize(D)
    return tuple(label for label, d in enumerate(D) for _ in range(d - 1))


def _partitions(m, largest):
    if m == 0:
        yield ()
        return
    for part in range(min(m, largest), 0, -1):
        for rest in _partitions(m - part, part):
            yield (part,) + rest


def sequences_up_to(max_n):
    """every valid sequence with total_vertices <= max_n, in lexicographic order.

    total_vertices(D) = 2 + sum(d_i - 1), so the sequences with n vertices are
    the integer partitions of n - 2 with every part shifted up by one.
    """
    if max_n < 2:
        return

    _all = []
    for m in range(max_n - 1):
        for parts in _partitions(m, m):
            _all.append(tuple(p + 1 for p in parts))

    for degs in sorted(_all):
        yield DegreeSequence(degs)
