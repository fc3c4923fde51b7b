"""
degree-based edge weights

the Sombor weight f(x, y) = sqrt(x^2 + y^2), the gap functions
g_{a,b}(x) = f(x, a) - f(x, b) and h_a(x) = f(a, x) - f(x, 1), plus the
family of degree-based indices computed by the same edge-sum.

all degrees are positive integers, so x*x + y*y is exact and a single
correctly rounded sqrt is the only rounding per edge.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np


def _check_degree(value, name="degree"):
    if value < 1 or int(value) != value:
        raise ValueError("%s must be a positive integer, got %r" % (name, value))
    return int(value)


def edge_weight(x, y):
    """Sombor weight of an edge whose ends have degrees x and y.

    Syntax: w = edge_weight(x, y)

    Keyword arguments:
    x, y -- (int) vertex degrees, both >= 1

    Return:
    w    -- (float) sqrt(x^2 + y^2), symmetric in x and y
    """
    x = _check_degree(x, "x")
    y = _check_degree(y, "y")
    return math.sqrt(x * x + y * y)


def edge_weights(xs, ys):
    """vectorised edge_weight over integer arrays; element-wise identical to it."""
    _xs = np.asarray(xs)
    _ys = np.asarray(ys)
    xs = _xs.astype(np.int64)
    ys = _ys.astype(np.int64)
    if np.any(xs != _xs) or np.any(ys != _ys):
        raise ValueError("degrees must be positive integers")
    if xs.size and (xs.min() < 1 or ys.min() < 1):
        raise ValueError("degrees must be positive integers")
    return np.sqrt(xs * xs + ys * ys)


def g_gap(a, b, x):
    """g_{a,b}(x) = f(x, a) - f(x, b), defined for b > a >= 1.

    Always negative, strictly increasing in x.
    """
    a = _check_degree(a, "a")
    b = _check_degree(b, "b")
    x = _check_degree(x, "x")
    if b <= a:
        raise ValueError("g_gap needs b > a, got a=%d, b=%d" % (a, b))
    return math.sqrt(x * x + a * a) - math.sqrt(x * x + b * b)


def h_gap(a, x):
    """h_a(x) = f(a, x) - f(x, 1), defined for a > 1.

    Positive and strictly decreasing in x; h_a(x) == -g_gap(1, a, x).
    """
    a = _check_degree(a, "a")
    x = _check_degree(x, "x")
    if a <= 1:
        raise ValueError("h_gap needs a > 1, got a=%d" % a)
    return math.sqrt(a * a + x * x) - math.sqrt(x * x + 1)


## index presets

@dataclass(frozen=True)
class IndexFunction:
    """a symmetric edge weight w(d(u), d(v)) summed over the edges of a graph."""

    name: str
    weight: Callable[[int, int], float]
    description: str = ""

    def __call__(self, x, y):
        return self.weight(x, y)


INDICES = {
    item.name: item for item in (
        IndexFunction("sombor", edge_weight, "sqrt(x^2 + y^2)"),
        IndexFunction("reduced_sombor",
                      lambda x, y: math.sqrt((x - 1) ** 2 + (y - 1) ** 2),
                      "sqrt((x-1)^2 + (y-1)^2)"),
        IndexFunction("first_zagreb", lambda x, y: float(x + y), "x + y"),
        IndexFunction("second_zagreb", lambda x, y: float(x * y), "x * y"),
        IndexFunction("randic", lambda x, y: 1.0 / math.sqrt(x * y), "1 / sqrt(x*y)"),
        IndexFunction("harmonic", lambda x, y: 2.0 / (x + y), "2 / (x + y)"),
        IndexFunction("geometric_arithmetic",
                      lambda x, y: 2.0 * math.sqrt(x * y) / (x + y),
                      "2 sqrt(x*y) / (x + y)"),
        IndexFunction("atom_bond_connectivity",
                      lambda x, y: math.sqrt((x + y - 2) / (x * y)),
                      "sqrt((x + y - 2) / (x*y))"),
        IndexFunction("edge_count", lambda x, y: 1.0, "1"),
    )
}


def get_index(name):
    try:
        return INDICES[name]
    except KeyError:
        raise ValueError("unknown index: \"%s\" (known: %s)" % (name, ", ".join(sorted(INDICES))))
