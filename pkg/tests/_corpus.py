"""Shared fixtures and seeded random-graph corpora for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from overlapdense.generators import cycle, disjoint_cliques, gnm
from overlapdense.graph import Graph

TRIANGLE_PENDANT = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
K4_ISOLATED = Graph.from_edges(5, list(combinations(range(4), 2)))
K4_K4 = disjoint_cliques([4, 4])
K4_K3 = disjoint_cliques([4, 3])
MATCHING6 = disjoint_cliques([2, 2, 2])
C7 = cycle(7)
GNM_7_12 = gnm(7, 12, seed=1)

NAMED = {
    "triangle_pendant": TRIANGLE_PENDANT,
    "k4_isolated": K4_ISOLATED,
    "k4_k3": K4_K3,
    "matching6": MATCHING6,
    "c7": C7,
    "gnm_7_12": GNM_7_12,
    "path3": Graph.from_edges(3, [(0, 1), (1, 2)]),
    "edgeless3": Graph.from_edges(3, []),
    "k5": disjoint_cliques([5]),
    "single": Graph.from_edges(1, []),
}


def random_graph(rng: random.Random, n: int) -> Graph:
    # density drawn per graph so the corpus spans sparse to near-complete
    p = rng.random()
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_graphs(seed: int, count: int, n_min: int, n_max: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(n_min, n_max)) for _ in range(count)]


def all_subsets(n: int) -> list[tuple[int, ...]]:
    return [tuple(v for v in range(n) if mask >> v & 1) for mask in range(1, 1 << n)]
