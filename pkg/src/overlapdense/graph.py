"""Graph representation and the scoring primitives of the top-k problem.

Vertex sets are plain tuples of strictly increasing vertex ids; a collection
of subgraphs is a tuple of such tuples. All scores are exact ``Fraction``s.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, TextIO

from .errors import ContractError, ParseError

log = logging.getLogger(__name__)

VertexSet = tuple[int, ...]
Collection = tuple[VertexSet, ...]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``;
    ``labels[v]`` is the external name of ``v``.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)
    _neighbor_sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n or len(self.labels) != self.n:
            raise ContractError("adjacency and labels must have one entry per vertex")
        index = {label: v for v, label in enumerate(self.labels)}
        if len(index) != self.n:
            raise ContractError("vertex labels must be unique")
        for v, nbrs in enumerate(self.adjacency):
            if any(b <= a for a, b in zip(nbrs, nbrs[1:])):
                raise ContractError(f"adjacency of vertex {v} is not strictly sorted")
            for u in nbrs:
                if u == v:
                    raise ContractError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise ContractError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_neighbor_sets", tuple(frozenset(a) for a in self.adjacency))

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        if n < 0:
            raise ContractError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ContractError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is None:
            labels = [str(v) for v in range(n)]
        return cls(n, tuple(tuple(sorted(a)) for a in nbrs), tuple(labels))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def vertex_id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ContractError(f"unknown vertex label {label!r}") from None

    def label_set(self, s: VertexSet) -> list[str]:
        return [self.labels[v] for v in s]


def parse_edge_list_report(text: str | TextIO | Iterable[str]) -> tuple[Graph, int]:
    """Parse an edge list and also return the number of duplicate edges dropped."""
    lines = text.splitlines() if isinstance(text, str) else text
    index: dict[str, int] = {}
    labels: list[str] = []
    edges: set[tuple[int, int]] = set()
    duplicates = 0

    def vid(token: str) -> int:
        if token not in index:
            index[token] = len(labels)
            labels.append(token)
        return index[token]

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, found {len(tokens)}", lineno)
        a, b = tokens
        if a == b:
            raise ParseError(f"self-loop on {a!r}", lineno)
        u, v = vid(a), vid(b)
        key = (u, v) if u < v else (v, u)
        if key in edges:
            duplicates += 1
        else:
            edges.add(key)
    return Graph.from_edges(len(labels), edges, labels), duplicates


def parse_edge_list(text: str | TextIO | Iterable[str]) -> Graph:
    """Build a graph from ``"u v"`` lines; ids follow first appearance."""
    graph, duplicates = parse_edge_list_report(text)
    if duplicates:
        log.warning("collapsed %d duplicate edge(s)", duplicates)
    return graph


def format_edge_list(g: Graph) -> str:
    return "".join(f"{g.labels[u]} {g.labels[v]}\n" for u, v in g.edges())


def vertex_set(ids: Iterable[int], g: Graph | None = None) -> VertexSet:
    """Canonicalize ``ids`` into a sorted, deduplicated, non-empty vertex set."""
    s = tuple(sorted(set(ids)))
    if not s:
        raise ContractError("vertex sets must be non-empty")
    if g is not None and (s[0] < 0 or s[-1] >= g.n):
        raise ContractError(f"vertex set {s} out of range for n={g.n}")
    return s


def canonical_key(s: VertexSet) -> tuple[int, VertexSet]:
    """Tie-break order on vertex sets: fewer vertices first, then lexicographic."""
    return (len(s), s)


def make_collection(g: Graph, members: Iterable[Iterable[int]], *, max_k: int | None = None) -> Collection:
    """Validate a solution collection: non-empty, pairwise distinct sets, ``1 <= k < n``.

    ``max_k`` overrides the upper bound (used for partial collections).
    """
    w = tuple(vertex_set(s, g) for s in members)
    if len(set(w)) != len(w):
        raise ContractError("collection members must be pairwise distinct")
    limit = g.n - 1 if max_k is None else max_k
    if not 1 <= len(w) <= limit:
        raise ContractError(f"collection size {len(w)} outside [1, {limit}]")
    return w


def induced_edge_count(g: Graph, s: VertexSet) -> int:
    members = set(s)
    return sum(1 for v in s for u in g.adjacency[v] if u > v and u in members)


def density(g: Graph, s: VertexSet) -> Fraction:
    if not s:
        raise ContractError("density of an empty vertex set is undefined")
    return Fraction(induced_edge_count(g, s), len(s))


def distance(u: VertexSet, z: VertexSet) -> Fraction:
    if u == z:
        return Fraction(0)
    common = len(set(u).intersection(z))
    return 2 - Fraction(common * common, len(u) * len(z))


def are_crossing(u: VertexSet, z: VertexSet) -> bool:
    a, b = set(u), set(z)
    return bool(a & b) and bool(a - b) and bool(b - a)


def distance_sum(w: Sequence[VertexSet]) -> Fraction:
    return sum((distance(a, b) for a, b in combinations(w, 2)), Fraction(0))


def objective(g: Graph, w: Sequence[VertexSet], lam: Fraction | int) -> Fraction:
    """Total density of ``w`` plus ``lam`` times the sum of pairwise distances."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ContractError("lambda must be positive")
    if len(set(w)) != len(w):
        raise ContractError("collection members must be pairwise distinct")
    total_density = sum((density(g, s) for s in w), Fraction(0))
    return total_density + lam * distance_sum(w)
