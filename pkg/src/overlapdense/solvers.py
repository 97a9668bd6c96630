"""Approximation algorithms for the top-k overlapping densest subgraphs problem."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from decimal import Context, Decimal
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .densest import densest_subgraph
from .distinct import densest_distinct_constant_k, densest_distinct_no_crossing, has_crossing_pair
from .errors import ContractError, InfeasibleError
from .graph import Collection, Graph, VertexSet, canonical_key, density, distance, objective
from .maxflow import count_flows

ALGORITHMS = ("constant_k", "general", "singleton", "exact_oracle", "partition")
MODES = ("auto", "constant_k", "general", "oracle")

_DECIMAL = Context(prec=25)


def decimal_string(x: Fraction) -> str:
    return str(_DECIMAL.divide(Decimal(x.numerator), Decimal(x.denominator)))


@dataclass(frozen=True)
class PhaseTiming:
    phase: str
    seconds: float
    flow_calls: int


@dataclass(frozen=True)
class SolveReport:
    algorithm_id: str
    collection: Collection
    densities: tuple[Fraction, ...]
    pair_distances: tuple[tuple[int, int, Fraction], ...]
    r_value: Fraction
    lam: Fraction
    phase_boundary: int | None = None
    wall_time: float = 0.0
    dispatched: str | None = None
    # objective of the losing candidate when a maximum of two solutions was taken
    competing_r: Fraction | None = None
    trace: tuple[PhaseTiming, ...] = field(default=(), compare=False)

    @property
    def k(self) -> int:
        return len(self.collection)

    @property
    def r_value_float(self) -> str:
        return decimal_string(self.r_value)


def build_report(
    g: Graph,
    collection: Sequence[VertexSet],
    lam: Fraction,
    algorithm_id: str,
    *,
    started: float | None = None,
    phase_boundary: int | None = None,
    dispatched: str | None = None,
    competing_r: Fraction | None = None,
    trace: Sequence[PhaseTiming] = (),
) -> SolveReport:
    collection = tuple(collection)
    densities = tuple(density(g, s) for s in collection)
    pairs = tuple(
        (i, j, distance(collection[i], collection[j]))
        for i, j in combinations(range(len(collection)), 2)
    )
    r = sum(densities, Fraction(0)) + lam * sum((d for _, _, d in pairs), Fraction(0))
    elapsed = 0.0 if started is None else time.perf_counter() - started
    return SolveReport(
        algorithm_id,
        collection,
        densities,
        pairs,
        r,
        lam,
        phase_boundary,
        elapsed,
        dispatched or algorithm_id,
        competing_r,
        tuple(trace),
    )


def _check_instance(g: Graph, k: int, lam: Fraction, min_n: int = 6) -> None:
    if lam <= 0:
        raise ContractError("lambda must be positive")
    if not 1 <= k < g.n:
        raise ContractError(f"k must satisfy 1 <= k < |V| (k={k}, |V|={g.n})")
    if g.n < min_n:
        raise ContractError(f"approximation algorithms assume |V| > 5 (got {g.n}); use the oracle")


class _Tracer:
    def __init__(self) -> None:
        self.rows: list[PhaseTiming] = []

    def run(self, phase: str, fn, *args):
        t0 = time.perf_counter()
        with count_flows() as stats:
            out = fn(*args)
        self.rows.append(PhaseTiming(phase, time.perf_counter() - t0, stats.calls))
        return out


def singleton_solution(g: Graph, k: int) -> Collection:
    """The first ``k`` singletons: density 0, every pair at distance 2."""
    if not 1 <= k < g.n:
        raise ContractError(f"k must satisfy 1 <= k < |V| (k={k}, |V|={g.n})")
    return tuple((v,) for v in range(k))


def iterative_distinct_collection(g: Graph, k: int, _tracer: _Tracer | None = None) -> Collection:
    """A densest subgraph followed by ``k - 1`` optimal densest-distinct subgraphs."""
    tracer = _tracer or _Tracer()
    w = [tracer.run("densest", densest_subgraph, g).set]
    while len(w) < k:
        w.append(tracer.run(f"distinct_{len(w) + 1}", densest_distinct_constant_k, g, w).set)
    return tuple(w)


def solve_constant_k(g: Graph, k: int, lam: Fraction | int) -> SolveReport:
    """Better of the iterative densest-distinct collection and ``k`` singletons (2/3-approx)."""
    started = time.perf_counter()
    lam = Fraction(lam)
    _check_instance(g, k, lam)
    tracer = _Tracer()
    dense = iterative_distinct_collection(g, k, tracer)
    singles = singleton_solution(g, k)
    r_dense, r_single = objective(g, dense, lam), objective(g, singles, lam)
    if r_dense >= r_single:
        chosen, algo, other = dense, "constant_k", r_single
    else:
        chosen, algo, other = singles, "singleton", r_dense
    return build_report(
        g, chosen, lam, algo, started=started, dispatched="constant_k", competing_r=other, trace=tracer.rows
    )


def phase_two_pool(g: Graph, w: Sequence[VertexSet], pair: tuple[int, int]) -> list[VertexSet]:
    """Completion candidates around a crossing pair, densest first, minus members of ``w``."""
    wi, wj = w[pair[0]], w[pair[1]]
    common = set(wi) & set(wj)
    pool: set[VertexSet] = set()
    for base in (wi, wj):
        members = set(base)
        pool.update(tuple(sorted(members | {v})) for v in range(g.n) if v not in members)
    if len(common) >= 4:
        pool.update(tuple(v for v in wj if v != x) for x in common)
    pool.difference_update(w)
    scored = [(density(g, s), s) for s in pool]
    scored.sort(key=lambda item: (-item[0], canonical_key(item[1])))
    return [s for _, s in scored]


def general_collection(g: Graph, k: int, _tracer: _Tracer | None = None) -> tuple[Collection, int, tuple[int, int] | None]:
    """Two-phase construction; returns ``(collection, phase_boundary, crossing_pair)``."""
    tracer = _tracer or _Tracer()
    w = [tracer.run("densest", densest_subgraph, g).set]
    pair = None
    while len(w) < k:
        pair = has_crossing_pair(w)
        if pair is not None:
            break
        w.append(tracer.run(f"distinct_{len(w) + 1}", densest_distinct_no_crossing, g, w).set)
    boundary = len(w)
    if len(w) < k:
        assert pair is not None
        t0 = time.perf_counter()
        pool = phase_two_pool(g, w, pair)
        if len(pool) < k - len(w):
            raise InfeasibleError("completion pool smaller than the number of missing subgraphs")
        w.extend(pool[: k - len(w)])
        tracer.rows.append(PhaseTiming("completion", time.perf_counter() - t0, 0))
    return tuple(w), boundary, pair


def solve_general(g: Graph, k: int, lam: Fraction | int) -> SolveReport:
    """Two-phase 1/2-approximation for any ``k < |V|``."""
    started = time.perf_counter()
    lam = Fraction(lam)
    _check_instance(g, k, lam)
    tracer = _Tracer()
    w, boundary, _ = general_collection(g, k, tracer)
    return build_report(
        g, w, lam, "general", started=started, phase_boundary=boundary, dispatched="general", trace=tracer.rows
    )


def route(n: int, k: int, mode: str = "auto", constant_k_max: int = 4) -> str:
    if mode not in MODES:
        raise ContractError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    if mode != "auto":
        return mode
    if n <= 5 or (n <= 7 and k <= 3):
        return "oracle"
    return "constant_k" if k <= constant_k_max else "general"


def solve(
    g: Graph, k: int, lam: Fraction | int, mode: str = "auto", *, constant_k_max: int = 4, budget=None
) -> SolveReport:
    from .oracle import DEFAULT_BUDGET, oracle_topk

    lam = Fraction(lam)
    if not 1 <= k < g.n:
        raise ContractError(f"k must satisfy 1 <= k < |V| (k={k}, |V|={g.n})")
    target = route(g.n, k, mode, constant_k_max)
    if target == "oracle":
        return oracle_topk(g, k, lam, budget or DEFAULT_BUDGET)
    if target == "constant_k":
        return solve_constant_k(g, k, lam)
    return solve_general(g, k, lam)
