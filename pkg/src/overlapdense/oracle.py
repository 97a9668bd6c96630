"""Brute-force ground truth over all vertex subsets, for small graphs only."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .densest import DensestResult
from .errors import BudgetExceeded, ContractError, InfeasibleError
from .graph import Graph, VertexSet, canonical_key, distance, make_collection
from .solvers import SolveReport, build_report


@dataclass(frozen=True)
class OracleBudget:
    # None: 16 for single-subgraph queries; top-k uses 7 when k <= 3, else 5
    max_vertices: int | None = None
    max_collections: int = 400_000

    def vertex_cap(self, k: int | None = None) -> int:
        if self.max_vertices is not None:
            return self.max_vertices
        if k is None:
            return 16
        return 7 if k <= 3 else 5


DEFAULT_BUDGET = OracleBudget()


def _check_vertices(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise BudgetExceeded(f"oracle limited to n <= {cap}, got n = {g.n}")
    if g.n < 1:
        raise ContractError("graph has no vertices")


def subset_edge_counts(g: Graph) -> list[int]:
    """``counts[mask]`` = edges induced by the vertex bitmask ``mask``."""
    nbr = [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]
    counts = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        counts[mask] = counts[rest] + bin(nbr[low] & rest).count("1")
    return counts


def _mask_to_set(mask: int) -> VertexSet:
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


def _best_subset(g: Graph, skip: set[VertexSet]) -> DensestResult:
    counts = subset_edge_counts(g)
    best: tuple[Fraction, tuple[int, VertexSet]] | None = None
    for mask in range(1, 1 << g.n):
        s = _mask_to_set(mask)
        if s in skip:
            continue
        d = Fraction(counts[mask], len(s))
        key = canonical_key(s)
        if best is None or d > best[0] or (d == best[0] and key < best[1]):
            best = (d, key)
    if best is None:
        raise InfeasibleError("every non-empty subset is excluded")
    return DensestResult(best[1][1], best[0])


def oracle_densest(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> DensestResult:
    _check_vertices(g, budget.vertex_cap())
    return _best_subset(g, set())


def oracle_densest_distinct(
    g: Graph, w: Sequence[Sequence[int]], budget: OracleBudget = DEFAULT_BUDGET
) -> DensestResult:
    _check_vertices(g, budget.vertex_cap())
    coll = make_collection(g, w, max_k=2**g.n - 1)
    return _best_subset(g, set(coll))


def oracle_constrained(
    g: Graph, include: Sequence[int], exclude: Sequence[int], budget: OracleBudget = DEFAULT_BUDGET
) -> DensestResult:
    """Densest subset containing ``include`` and avoiding ``exclude``, by enumeration."""
    _check_vertices(g, budget.vertex_cap())
    inc, exc = set(include), set(exclude)
    subsets = (_mask_to_set(mask) for mask in range(1, 1 << g.n))
    skip = {s for s in subsets if not inc.issubset(s) or not exc.isdisjoint(s)}
    return _best_subset(g, skip)


@lru_cache(maxsize=8)
def _subsets_in_order(n: int) -> tuple[VertexSet, ...]:
    subsets = [_mask_to_set(mask) for mask in range(1, 1 << n)]
    subsets.sort(key=canonical_key)
    return tuple(subsets)


@lru_cache(maxsize=8)
def _distance_table(n: int) -> np.ndarray:
    """Float pairwise distances between all subsets, in canonical order."""
    subsets = _subsets_in_order(n)
    member = np.array([[v in s for v in range(n)] for s in subsets], dtype=float)
    inter = member @ member.T
    sizes = member.sum(axis=1)
    dist = 2.0 - inter**2 / np.outer(sizes, sizes)
    np.fill_diagonal(dist, 0.0)
    return dist


@lru_cache(maxsize=8)
def _combinations(count: int, k: int) -> np.ndarray:
    return np.array(list(combinations(range(count), k)), dtype=np.int32).reshape(-1, k)


@lru_cache(maxsize=4)
def _pair_distance_sums(n: int, k: int) -> np.ndarray:
    """Sum of pairwise float distances for every k-combination; graph-independent."""
    dist = _distance_table(n)
    combos = _combinations(2**n - 1, k)
    total = np.zeros(len(combos))
    for a, b in combinations(range(k), 2):
        total += dist[combos[:, a], combos[:, b]]
    return total


def _exact_r(g_counts: list[int], subsets: Sequence[VertexSet], idx: Sequence[int], lam: Fraction) -> Fraction:
    chosen = [subsets[i] for i in idx]
    dens = sum(
        (Fraction(g_counts[sum(1 << v for v in s)], len(s)) for s in chosen), Fraction(0)
    )
    dist = sum((distance(a, b) for a, b in combinations(chosen, 2)), Fraction(0))
    return dens + lam * dist


def oracle_topk(
    g: Graph, k: int, lam: Fraction | int, budget: OracleBudget = DEFAULT_BUDGET
) -> SolveReport:
    """Exhaustive maximum of the top-k objective over all k-sets of distinct subsets.

    Scores are screened in floating point; every collection within a safety
    margin of the float maximum is then rescored exactly, so the reported
    optimum and its tie-break are exact.
    """
    started = time.perf_counter()
    lam = Fraction(lam)
    if lam <= 0:
        raise ContractError("lambda must be positive")
    if not 1 <= k < g.n:
        raise ContractError(f"k must satisfy 1 <= k < |V| (k={k}, |V|={g.n})")
    _check_vertices(g, budget.vertex_cap(k))
    subsets = _subsets_in_order(g.n)
    total = comb(len(subsets), k)
    if total > budget.max_collections:
        raise BudgetExceeded(f"{total} collections exceed the budget of {budget.max_collections}")

    counts = subset_edge_counts(g)
    dens = np.array(
        [counts[sum(1 << v for v in s)] / len(s) for s in subsets], dtype=float
    )
    combos = _combinations(len(subsets), k)
    score = dens[combos].sum(axis=1)
    if k > 1:
        score += float(lam) * _pair_distance_sums(g.n, k)
    top = float(score.max())
    margin = 1e-9 * max(1.0, abs(top))
    candidates = np.nonzero(score >= top - margin)[0]

    best_r: Fraction | None = None
    best_idx: tuple[int, ...] = ()
    for c in candidates:  # ascending = lexicographic collection order
        idx = tuple(int(i) for i in combos[c])
        r = _exact_r(counts, subsets, idx, lam)
        if best_r is None or r > best_r:
            best_r, best_idx = r, idx
    collection = tuple(subsets[i] for i in best_idx)
    report = build_report(g, collection, lam, "exact_oracle", started=started)
    assert report.r_value == best_r
    return report
