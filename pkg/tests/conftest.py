import numpy as np
import pytest

from sfmst.graph import build_graph

# The 6-node, 9-edge worked example (ids shifted to 0-based). Weights are
# chosen to reproduce the documented sorted order, the equal-weight pair
# {(0,1), (1,2)}, and a minimum tree weight of 22.
FIG3_EDGES = [
    (4, 5, 2),
    (1, 2, 3),
    (0, 1, 3),
    (3, 4, 5),
    (3, 5, 6),
    (2, 4, 9),
    (0, 2, 10),
    (1, 4, 11),
    (1, 3, 12),
]
FIG3_MST = {(0, 1), (1, 2), (2, 4), (3, 4), (4, 5)}
FIG3_WEIGHT = 22.0

# Small 4-node graph: the path 0-1-2-3 is the unique MST (weight 3) and the
# cut ({0,1,2}, {3}) is crossed by (1,3) and (2,3) with (2,3) the candidate.
FIG2_EDGES = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (1, 3, 2)]


@pytest.fixture
def fig3_graph():
    return build_graph(6, FIG3_EDGES)


@pytest.fixture
def fig2_graph():
    return build_graph(4, FIG2_EDGES)


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)])


def random_connected_graph(rng, n, max_extra=4, distinct=False, w_lo=1, w_hi=5):
    """Random spanning tree plus extra edges; integer weights.

    With ``distinct=True`` the weights are a permutation of 1..M, so the
    MST is unique.
    """
    edges = {(int(rng.integers(0, i)), i) for i in range(1, n)}
    rest = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    if rest and max_extra:
        k = int(rng.integers(0, min(max_extra, len(rest)) + 1))
        picks = rng.choice(len(rest), size=k, replace=False)
        edges |= {rest[i] for i in picks}
    edges = sorted(edges)
    if distinct:
        weights = rng.permutation(len(edges)) + 1
    else:
        weights = rng.integers(w_lo, w_hi + 1, size=len(edges))
    return build_graph(n, [(a, b, int(w)) for (a, b), w in zip(edges, weights)])
