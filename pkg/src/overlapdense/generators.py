"""Deterministic graph generators for test corpora and benchmarks."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .errors import ContractError
from .graph import Graph

KINDS = ("gnm", "complete", "disjoint-cliques", "planted-partition", "path", "cycle", "matching")


def gnm(n: int, m: int, seed: int = 0) -> Graph:
    pairs = list(combinations(range(n), 2))
    if n < 1 or not 0 <= m <= len(pairs):
        raise ContractError(f"gnm needs n >= 1 and 0 <= m <= {len(pairs)}")
    return Graph.from_edges(n, random.Random(seed).sample(pairs, m))


def complete(n: int) -> Graph:
    if n < 1:
        raise ContractError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def disjoint_cliques(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise ContractError("clique sizes must be positive")
    edges: list[tuple[int, int]] = []
    start = 0
    for s in sizes:
        edges += combinations(range(start, start + s), 2)
        start += s
    return Graph.from_edges(start, edges)


def planted_partition(sizes: Sequence[int], p_in: float, p_out: float, seed: int = 0) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise ContractError("block sizes must be positive")
    if not (0 <= p_in <= 1 and 0 <= p_out <= 1):
        raise ContractError("edge probabilities must lie in [0, 1]")
    rng = random.Random(seed)
    block = [b for b, s in enumerate(sizes) for _ in range(s)]
    n = len(block)
    edges = [
        (u, v)
        for u, v in combinations(range(n), 2)
        if rng.random() < (p_in if block[u] == block[v] else p_out)
    ]
    return Graph.from_edges(n, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise ContractError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ContractError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def matching(pairs: int) -> Graph:
    return disjoint_cliques([2] * pairs)


def generate_graph(
    kind: str,
    *,
    n: int | None = None,
    m: int | None = None,
    sizes: Sequence[int] | None = None,
    p_in: float = 0.8,
    p_out: float = 0.05,
    seed: int = 0,
) -> Graph:
    """Dispatch on ``kind``; output is a pure function of the arguments."""
    if not 0 <= seed < 2**64:
        raise ContractError("seed must be a 64-bit unsigned integer")

    def need(value, name):
        if value is None:
            raise ContractError(f"{kind} graphs need {name}")
        return value

    if kind == "gnm":
        return gnm(need(n, "n"), need(m, "m"), seed)
    if kind == "complete":
        return complete(need(n, "n"))
    if kind == "disjoint-cliques":
        return disjoint_cliques(need(sizes, "sizes"))
    if kind == "planted-partition":
        return planted_partition(need(sizes, "sizes"), p_in, p_out, seed)
    if kind == "path":
        return path(need(n, "n"))
    if kind == "cycle":
        return cycle(need(n, "n"))
    if kind == "matching":
        return matching(need(n, "n") // 2)
    raise ContractError(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")
