"""Exact densest subgraph via min-cut, with inclusion/exclusion constraints.

For a density guess ``g`` the auxiliary network has arcs ``s->v`` of capacity
``deg(v)``, ``v->t`` of capacity ``2g`` and unit arcs both ways along every
edge. The cut with source side ``S`` costs ``2m - 2|E(S)| + 2g|S|``, so a cut
cheaper than ``2m`` exists exactly when some ``S`` has density above ``g``.
Capacities are scaled by the denominator of ``g`` to stay integral.

Among several maximum-density sets the result is the one with the fewest
vertices, then the lexicographically smallest id sequence.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContractError, InfeasibleError
from .graph import Graph, VertexSet, canonical_key, induced_edge_count
from .maxflow import ResidualGraph


@dataclass(frozen=True)
class DensestResult:
    set: VertexSet
    dens: Fraction
    # final (lo, hi) density bracket; lo == dens
    cut_certificate: tuple[Fraction, Fraction] | None = None


@dataclass(frozen=True)
class FlowNetwork:
    """Auxiliary network for one density guess.

    Node ``i < len(vertices)`` stands for graph vertex ``vertices[i]``; the
    last two nodes are the source and the sink. Arc capacities are
    ``capacities[i] / scale``.
    """

    vertices: VertexSet
    tails: tuple[int, ...]
    heads: tuple[int, ...]
    capacities: tuple[int, ...]
    scale: int

    @property
    def source(self) -> int:
        return len(self.vertices)

    @property
    def sink(self) -> int:
        return len(self.vertices) + 1

    @property
    def node_count(self) -> int:
        return len(self.vertices) + 2

    def capacity(self, arc: int) -> Fraction:
        return Fraction(self.capacities[arc], self.scale)


def _check_constraints(g: Graph, include: Iterable[int], exclude: Iterable[int]) -> tuple[VertexSet, VertexSet]:
    inc = tuple(sorted(set(include)))
    exc = tuple(sorted(set(exclude)))
    for v in inc + exc:
        if not 0 <= v < g.n:
            raise ContractError(f"vertex {v} out of range for n={g.n}")
    if set(inc) & set(exc):
        raise ContractError("include and exclude sets overlap")
    if len(exc) == g.n:
        raise InfeasibleError("every vertex is excluded")
    return inc, exc


def build_network(
    g: Graph, guess: Fraction | int, include: Iterable[int] = (), exclude: Iterable[int] = ()
) -> FlowNetwork:
    guess = Fraction(guess)
    if guess < 0:
        raise ContractError("density guess must be non-negative")
    inc, exc = _check_constraints(g, include, exclude)
    excluded = set(exc)
    vertices = tuple(v for v in range(g.n) if v not in excluded)
    local = {v: i for i, v in enumerate(vertices)}
    forced = {local[v] for v in inc}
    q, p = guess.denominator, guess.numerator
    s, t = len(vertices), len(vertices) + 1

    tails: list[int] = []
    heads: list[int] = []
    caps: list[int] = []
    source_arcs: list[int] = []
    for i, v in enumerate(vertices):
        deg = sum(1 for u in g.adjacency[v] if u not in excluded)
        source_arcs.append(len(caps))
        tails += (s, i)
        heads += (i, t)
        caps += (deg * q, 2 * p)
    for u, v in g.edges():
        if u in local and v in local:
            a, b = local[u], local[v]
            tails += (a, b)
            heads += (b, a)
            caps += (q, q)
    infinite = sum(caps) + 1
    for i in forced:
        caps[source_arcs[i]] = infinite
    return FlowNetwork(vertices, tuple(tails), tuple(heads), tuple(caps), q)


def min_cut_source_side(net: FlowNetwork) -> VertexSet:
    """Original vertices reachable from the source after a maximum flow."""
    rg = ResidualGraph(net.node_count)
    for a, b, c in zip(net.tails, net.heads, net.capacities):
        rg.add_arc(a, b, c)
    rg.max_flow(net.source, net.sink)
    reach = rg.source_side(net.source)
    return tuple(v for i, v in enumerate(net.vertices) if reach[i])


@dataclass
class _Cut:
    excess: int  # flow - 2mq; negative iff a strictly denser feasible set exists
    min_side: list[int]
    graph: ResidualGraph

    def max_side(self) -> list[int]:
        n = self.graph.n - 2
        reach_t = self.graph.sink_side(n + 1)
        return [i for i in range(n) if not reach_t[i]]


class CutModel:
    """Reusable auxiliary-network structure for ``g`` minus a set of excluded vertices."""

    def __init__(self, g: Graph, exclude: Iterable[int] = ()) -> None:
        excluded = set(exclude)
        self.graph = g
        self.vertices: VertexSet = tuple(v for v in range(g.n) if v not in excluded)
        local = {v: i for i, v in enumerate(self.vertices)}
        self.local = local
        n = len(self.vertices)
        edges = [(local[u], local[v]) for u, v in g.edges() if u in local and v in local]
        self.m = len(edges)
        self.deg = [0] * n
        rg = ResidualGraph(n + 2)
        for a, b in edges:
            rg.add_arc(a, b, 0)
            self.deg[a] += 1
            self.deg[b] += 1
        s, t = n, n + 1
        for i in range(n):
            rg.add_arc(s, i, 0)
            rg.add_arc(i, t, 0)
        self._adj = rg.adj
        self._to = rg.to

    def density(self, local_set: Sequence[int]) -> Fraction:
        return Fraction(
            induced_edge_count(self.graph, tuple(self.vertices[i] for i in local_set)), len(local_set)
        )

    def cut(self, guess: Fraction, forced: Iterable[int] = ()) -> _Cut:
        n = len(self.vertices)
        q, p = guess.denominator, guess.numerator
        m2 = 2 * self.m
        caps = [q] * m2
        for d in self.deg:
            caps += (d * q, 0, 2 * p, 0)
        infinite = m2 * q + 2 * self.m * q + 2 * p * n + 1
        for i in forced:
            caps[m2 + 4 * i] = infinite
        rg = ResidualGraph.__new__(ResidualGraph)
        rg.n, rg.adj, rg.to, rg.cap = n + 2, self._adj, self._to, caps
        flow = rg.max_flow(n, n + 1)
        reach = rg.source_side(n)
        return _Cut(flow - m2 * q, [i for i in range(n) if reach[i]], rg)

    def _canonical_free(self, dens: Fraction) -> list[int]:
        """Canonical maximum-density set at known optimum ``dens``, nothing forced."""
        if dens == 0:
            return [0]
        # min_side with i forced is the smallest optimal set containing i; every
        # inclusion-minimal optimal set arises this way from any of its members
        best: list[int] | None = None
        for i in self.cut(dens).max_side():
            side = self.cut(dens, (i,)).min_side
            if best is None or (len(side), side) < (len(best), best):
                best = side
        assert best is not None
        return best

    def search(self, include: Sequence[int] = (), floor: Fraction | None = None) -> DensestResult | None:
        """Maximum density over sets containing local ids ``include``.

        With ``floor`` set, returns ``None`` unless the optimum reaches ``floor``.
        """
        n = len(self.vertices)
        if n == 0:
            raise InfeasibleError("no vertices left after exclusion")
        inc = sorted(include)
        if floor is not None:
            cut = self.cut(floor, inc)
            if cut.excess > 0:
                return None
            if cut.excess == 0:
                if inc:
                    return self._result(cut.min_side, floor, floor)
                if not cut.max_side():
                    return None
                return self._result(self._canonical_free(floor), floor, floor)
            best = cut.min_side
        else:
            best = inc if inc else [0]
        lo = self.density(best)
        hi = Fraction(n - 1, 2)
        if n > 1:
            gap = Fraction(1, n * (n - 1))
            while hi - lo >= gap:
                mid = (lo + hi) / 2
                cut = self.cut(mid, inc)
                if cut.excess < 0:
                    best = cut.min_side
                    lo = self.density(best)
                else:
                    hi = mid
        # separation gap: no other subgraph density fits in [lo, hi], so lo is optimal
        if inc:
            final = self.cut(lo, inc)
            assert final.excess == 0
            return self._result(final.min_side, lo, hi)
        return self._result(self._canonical_free(lo), lo, hi)

    def _result(self, local_set: list[int], lo: Fraction, hi: Fraction) -> DensestResult:
        s = tuple(self.vertices[i] for i in local_set)
        dens = Fraction(induced_edge_count(self.graph, s), len(s))
        assert dens == lo
        return DensestResult(s, dens, (lo, hi))


def solve_constrained(
    g: Graph,
    include: Iterable[int] = (),
    exclude: Iterable[int] = (),
    *,
    floor: Fraction | None = None,
    models: dict[VertexSet, CutModel] | None = None,
) -> DensestResult | None:
    """Constrained densest subgraph with optional pruning ``floor`` and model cache."""
    inc, exc = _check_constraints(g, include, exclude)
    if models is None:
        model = CutModel(g, exc)
    else:
        model = models.get(exc)
        if model is None:
            model = models[exc] = CutModel(g, exc)
    return model.search([model.local[v] for v in inc], floor)


def constrained_densest_subgraph(
    g: Graph, include: Iterable[int] = (), exclude: Iterable[int] = ()
) -> DensestResult:
    """Densest subgraph containing every vertex of ``include`` and none of ``exclude``."""
    result = solve_constrained(g, include, exclude)
    assert result is not None
    return result


def densest_subgraph(g: Graph) -> DensestResult:
    if g.n < 1:
        raise ContractError("graph has no vertices")
    return constrained_densest_subgraph(g)


def greedy_peel(g: Graph) -> DensestResult:
    """Min-degree peeling; returns the densest suffix seen (1/2-approximation)."""
    if g.n < 1:
        raise ContractError("graph has no vertices")
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    edges, size = g.m, g.n
    best_dens, best_size = Fraction(edges, size), size
    order: list[int] = []
    while size > 1:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != deg[v]:
            continue
        alive[v] = False
        order.append(v)
        edges -= d
        size -= 1
        for u in g.adjacency[v]:
            if alive[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
        dens = Fraction(edges, size)
        if dens >= best_dens:
            best_dens, best_size = dens, size
    removed = set(order[: g.n - best_size])
    s = tuple(v for v in range(g.n) if v not in removed)
    return DensestResult(s, best_dens)


def canonical_best(results: Iterable[DensestResult]) -> DensestResult | None:
    """Highest density, then fewest vertices, then lexicographically smallest."""
    best: DensestResult | None = None
    for r in results:
        if best is None or r.dens > best.dens or (
            r.dens == best.dens and canonical_key(r.set) < canonical_key(best.set)
        ):
            best = r
    return best
