"""Densest subgraph that differs from every member of a given collection.

A subgraph ``Z`` differs from ``W_i`` iff some vertex lies in ``Z`` but not in
``W_i`` or in ``W_i`` but not in ``Z``. A *witness* ``(include, exclude)``
certifies distinctness from the whole collection: no member contains all of
``include`` while avoiding all of ``exclude``. Maximizing density under each
witness's constraints and keeping the best result yields the optimum.

Only inclusion-minimal witnesses are solved: relaxing a witness can only
enlarge its feasible family, and every member of that family is still
distinct from the collection, so minimal witnesses already reach the optimum
(and the same canonical set).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .densest import CutModel, DensestResult, canonical_best, solve_constrained
from .errors import ContractError, InfeasibleError
from .graph import Graph, VertexSet, are_crossing, make_collection


@dataclass(frozen=True)
class DistinctnessWitness:
    include: VertexSet
    exclude: VertexSet

    @property
    def size(self) -> int:
        return len(self.include) + len(self.exclude)

    def sort_key(self) -> tuple[int, VertexSet, VertexSet]:
        return (self.size, self.include, self.exclude)


def is_witness(w: Sequence[VertexSet], include: Sequence[int], exclude: Sequence[int]) -> bool:
    """True iff no member of ``w`` contains ``include`` and avoids ``exclude``."""
    inc, exc = set(include), set(exclude)
    if inc & exc:
        return False
    return not any(inc.issubset(s) and exc.isdisjoint(s) for s in w)


def has_crossing_pair(w: Sequence[VertexSet]) -> tuple[int, int] | None:
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if are_crossing(w[i], w[j]):
                return (i, j)
    return None


def enumerate_witnesses(
    n: int,
    w: Sequence[VertexSet],
    max_size: int,
    max_include: int | None = None,
    max_exclude: int | None = None,
) -> list[DistinctnessWitness]:
    """All inclusion-minimal witnesses within the given size caps, in canonical order.

    Search branches on the first member not yet defeated, trying every vertex
    that would defeat it; every minimal witness is reached this way.
    """
    max_include = max_size if max_include is None else max_include
    max_exclude = max_size if max_exclude is None else max_exclude
    members = [frozenset(s) for s in w]
    found: set[tuple[frozenset[int], frozenset[int]]] = set()
    visited: set[tuple[frozenset[int], frozenset[int]]] = set()

    def undefeated(inc: frozenset[int], exc: frozenset[int]) -> frozenset[int] | None:
        for s in members:
            if inc <= s and exc.isdisjoint(s):
                return s
        return None

    def grow(inc: frozenset[int], exc: frozenset[int]) -> None:
        if (inc, exc) in visited:
            return
        visited.add((inc, exc))
        target = undefeated(inc, exc)
        if target is None:
            found.add((inc, exc))
            return
        if len(inc) + len(exc) >= max_size:
            return
        if len(inc) < max_include:
            for u in range(n):
                if u not in target and u not in exc:
                    grow(inc | {u}, exc)
        if len(exc) < max_exclude:
            for u in sorted(target):
                if u not in inc:
                    grow(inc, exc | {u})

    grow(frozenset(), frozenset())

    def minimal(inc: frozenset[int], exc: frozenset[int]) -> bool:
        return all(undefeated(inc - {u}, exc) is not None for u in inc) and all(
            undefeated(inc, exc - {u}) is not None for u in exc
        )

    witnesses = [
        DistinctnessWitness(tuple(sorted(inc)), tuple(sorted(exc)))
        for inc, exc in found
        if minimal(inc, exc)
    ]
    witnesses.sort(key=DistinctnessWitness.sort_key)
    return witnesses


def _best_over(g: Graph, witnesses: list[DistinctnessWitness]) -> DensestResult:
    models: dict[VertexSet, CutModel] = {}
    best: DensestResult | None = None
    for wit in witnesses:
        if len(wit.exclude) == g.n:
            continue
        res = solve_constrained(
            g, wit.include, wit.exclude, floor=None if best is None else best.dens, models=models
        )
        if res is not None:
            best = canonical_best([best, res] if best is not None else [res])
    if best is None:
        raise InfeasibleError("no subgraph is distinct from every member of the collection")
    return best


def _check_collection(g: Graph, w: Sequence[Sequence[int]]) -> tuple[VertexSet, ...]:
    if not w:
        raise ContractError("collection must contain at least one subgraph")
    coll = make_collection(g, w, max_k=2**g.n - 1)
    if len(coll) >= 2**g.n - 1:
        raise InfeasibleError("collection already contains every non-empty subset")
    return coll


def densest_distinct_constant_k(g: Graph, w: Sequence[Sequence[int]]) -> DensestResult:
    """Optimal densest subgraph distinct from all of ``w``; witnesses up to ``|w|`` vertices."""
    coll = _check_collection(g, w)
    return _best_over(g, enumerate_witnesses(g.n, coll, len(coll)))


def densest_distinct_no_crossing(g: Graph, w: Sequence[Sequence[int]]) -> DensestResult:
    """Optimal densest distinct subgraph when no two members of ``w`` cross.

    Then witnesses need at most two included vertices and one excluded vertex.
    """
    coll = _check_collection(g, w)
    pair = has_crossing_pair(coll)
    if pair is not None:
        raise ContractError(f"members {pair[0]} and {pair[1]} of the collection are crossing")
    return _best_over(g, enumerate_witnesses(g.n, coll, 3, max_include=2, max_exclude=1))
