"""Top-3 instances built from 3-clique-partition graphs, with both certificate directions.

A graph whose vertices split into three cliques scores at least the
threshold ``(n - 3)/2 + 18 n^3`` with ``lambda = 3 n^3`` by taking the three
cliques; conversely any top-3 collection reaching the threshold must be such
a partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .errors import CertificationRefused, ContractError, ValidationError
from .graph import Graph, VertexSet, objective, vertex_set
from .solvers import SolveReport, build_report


@dataclass(frozen=True)
class HardnessInstance:
    graph: Graph
    lam: Fraction
    threshold: Fraction
    k: int = 3


@dataclass(frozen=True)
class CliquePartition:
    parts: tuple[VertexSet, VertexSet, VertexSet]


def hardness_lambda(n: int) -> Fraction:
    return Fraction(3 * n**3)


def hardness_threshold(n: int) -> Fraction:
    return Fraction(n - 3, 2) + 18 * n**3


def build_hardness_instance(gp: Graph) -> HardnessInstance:
    if gp.n < 1:
        raise ContractError("graph has no vertices")
    return HardnessInstance(gp, hardness_lambda(gp.n), hardness_threshold(gp.n))


def validate_clique_partition(g: Graph, parts: Sequence[Sequence[int]]) -> CliquePartition:
    """Raise ``ValidationError`` naming the first violated partition condition."""
    if len(parts) != 3:
        raise ValidationError(f"expected 3 parts, got {len(parts)}")
    canon = []
    for i, part in enumerate(parts):
        if not part:
            raise ValidationError(f"part {i} is empty")
        if len(set(part)) != len(part):
            raise ValidationError(f"part {i} repeats a vertex")
        canon.append(vertex_set(part, g))
    for i, j in combinations(range(3), 2):
        shared = set(canon[i]) & set(canon[j])
        if shared:
            raise ValidationError(f"parts {i} and {j} overlap on vertex {min(shared)}")
    missing = set(range(g.n)).difference(*canon)
    if missing:
        raise ValidationError(f"vertex {min(missing)} is not covered")
    for i, part in enumerate(canon):
        for u, v in combinations(part, 2):
            if not g.has_edge(u, v):
                raise ValidationError(f"part {i} is not a clique: missing edge {u}-{v}")
    return CliquePartition((canon[0], canon[1], canon[2]))


def verify_partition_to_solution(gp: Graph, parts: Sequence[Sequence[int]]) -> SolveReport:
    """Turn a clique partition into a top-3 solution and check it meets the threshold."""
    partition = validate_clique_partition(gp, parts)
    inst = build_hardness_instance(gp)
    report = build_report(gp, partition.parts, inst.lam, "partition")
    if report.r_value < inst.threshold:
        raise AssertionError(f"clique partition scored {report.r_value} below {inst.threshold}")
    return report


def extract_partition_from_solution(
    gp: Graph, w: Sequence[Sequence[int]], threshold: Fraction | None = None
) -> CliquePartition:
    """Read a clique partition off a top-3 collection scoring at least ``threshold``."""
    if len(w) != 3:
        raise ContractError(f"expected 3 subgraphs, got {len(w)}")
    inst = build_hardness_instance(gp)
    threshold = inst.threshold if threshold is None else Fraction(threshold)
    sets = [vertex_set(s, gp) for s in w]
    r = objective(gp, sets, inst.lam)
    if r < threshold:
        raise CertificationRefused(f"r = {r} is below the threshold {threshold}; no partition certified")
    try:
        return validate_clique_partition(gp, sets)
    except ValidationError as exc:
        raise AssertionError(f"collection reaches the threshold but is not a clique partition: {exc}") from exc


def find_clique_partition(g: Graph) -> CliquePartition | None:
    """Exhaustive search over all 3-colourings of the vertices (small graphs only)."""
    for labels in product(range(3), repeat=g.n):
        if labels and labels[0] != 0:
            break
        parts = [[v for v in range(g.n) if labels[v] == c] for c in range(3)]
        if any(not p for p in parts):
            continue
        if all(g.has_edge(u, v) for p in parts for u, v in combinations(p, 2)):
            return CliquePartition(tuple(tuple(p) for p in parts))
    return None
