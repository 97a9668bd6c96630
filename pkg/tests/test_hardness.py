from __future__ import annotations

from fractions import Fraction

import pytest

from overlapdense.errors import CertificationRefused, ContractError, ValidationError
from overlapdense.generators import disjoint_cliques
from overlapdense.graph import Graph
from overlapdense.hardness import (
    build_hardness_instance,
    extract_partition_from_solution,
    find_clique_partition,
    hardness_lambda,
    hardness_threshold,
    validate_clique_partition,
    verify_partition_to_solution,
)
from overlapdense.oracle import oracle_topk

from _corpus import C7, MATCHING6, random_graphs


def test_instance_constants():
    inst = build_hardness_instance(MATCHING6)
    assert (inst.k, inst.lam, inst.threshold) == (3, 648, Fraction(7779, 2))
    assert (hardness_lambda(7), hardness_threshold(7)) == (1029, 6176)
    assert (hardness_lambda(1), hardness_threshold(1)) == (3, 17)


def test_matching_round_trip():
    parts = [(0, 1), (2, 3), (4, 5)]
    report = verify_partition_to_solution(MATCHING6, parts)
    assert report.r_value == Fraction(7779, 2)
    assert report.algorithm_id == "partition"
    assert extract_partition_from_solution(MATCHING6, report.collection).parts == tuple(parts)


def test_overlapping_parts():
    with pytest.raises(ValidationError, match="overlap"):
        verify_partition_to_solution(MATCHING6, [(0, 1), (1, 2), (4, 5)])


def test_non_clique_part():
    with pytest.raises(ValidationError, match="not a clique"):
        verify_partition_to_solution(MATCHING6, [(0, 1, 2), (3,), (4, 5)])


def test_uncovered_vertex():
    with pytest.raises(ValidationError, match="not covered"):
        verify_partition_to_solution(MATCHING6, [(0, 1), (2, 3), (4,)])


def test_c7_refused():
    inst = build_hardness_instance(C7)
    best = oracle_topk(C7, 3, inst.lam)
    assert best.r_value == Fraction(18527, 3)
    assert best.r_value < inst.threshold
    with pytest.raises(CertificationRefused):
        extract_partition_from_solution(C7, best.collection)


def test_wrong_collection_size():
    with pytest.raises(ContractError):
        extract_partition_from_solution(MATCHING6, [(0, 1), (2, 3)])


def test_threshold_met_without_partition_is_an_internal_error():
    with pytest.raises(AssertionError):
        extract_partition_from_solution(MATCHING6, [(0, 1), (2, 3), (4,)], threshold=0)


@pytest.mark.parametrize("sizes", [[1, 2, 3], [2, 2, 2], [1, 1, 5], [3, 3, 1]])
def test_yes_instances(sizes):
    g = disjoint_cliques(sizes)
    partition = find_clique_partition(g)
    assert partition is not None
    report = verify_partition_to_solution(g, partition.parts)
    assert report.r_value >= hardness_threshold(g.n)
    assert extract_partition_from_solution(g, report.collection) == validate_clique_partition(g, partition.parts)
    assert oracle_topk(g, 3, hardness_lambda(g.n)).r_value >= hardness_threshold(g.n)


def test_no_instances_stay_below_threshold():
    checked = 0
    for g in random_graphs(seed=41, count=30, n_min=4, n_max=6):
        if find_clique_partition(g) is None:
            checked += 1
            assert oracle_topk(g, 3, hardness_lambda(g.n)).r_value < hardness_threshold(g.n)
    assert checked > 0


def test_find_partition_on_cycle():
    assert find_clique_partition(C7) is None
    assert find_clique_partition(Graph.from_edges(3, [])) is not None
