import math

import numpy as np
import pytest
from hypothesis import strategies as st

from SomborAnalysis.greedy import build_greedy_tree
from SomborAnalysis.tree import Tree


SQ = math.sqrt

SO_32 = SQ(13) + 2 * SQ(10) + SQ(5)                # 12.1661746...
SO_332 = SQ(18) + SQ(13) + 3 * SQ(10) + SQ(5)      # 19.5710929...
SO_CHAIN = 2 * SQ(13) + 4 * SQ(10)                 # 19.8602132...


@pytest.fixture
def chain_tree():
    '''
    realization of (3, 3, 2) with the degree-2 vertex between the two
    degree-3 vertices: 3 - 0(3) - 1(2) - 2(3) - 5, leaves 3, 4 on 0 and 5, 6 on 2.
    '''
    return Tree(7, ((0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)))


@pytest.fixture
def greedy_332():
    return build_greedy_tree((3, 3, 2)).tree


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


def degree_sequences(max_k=6, max_degree=6):
    """hypothesis strategy of raw degree lists that normalize to k >= 1 internal vertices."""
    return st.lists(st.integers(min_value=2, max_value=max_degree), min_size=1, max_size=max_k)


def prufer_codes(min_n=2, max_n=12):
    """hypothesis strategy of (code, n) pairs."""
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda n: st.tuples(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2), st.just(n)))
