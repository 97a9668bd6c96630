from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from overlapdense.errors import ContractError, ParseError
from overlapdense.graph import (
    Graph,
    are_crossing,
    density,
    distance,
    format_edge_list,
    induced_edge_count,
    make_collection,
    objective,
    parse_edge_list,
    parse_edge_list_report,
    vertex_set,
)

from _corpus import K4_K4, TRIANGLE_PENDANT

SETTINGS = settings(max_examples=150, deadline=None)


@st.composite
def graphs(draw, max_n: int = 7) -> Graph:
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@st.composite
def graph_and_set(draw):
    g = draw(graphs())
    s = draw(st.lists(st.integers(0, g.n - 1), min_size=1, unique=True))
    return g, vertex_set(s, g)


vertex_sets = st.lists(st.integers(0, 6), min_size=1, max_size=7, unique=True).map(vertex_set)


class TestParse:
    def test_simple_path(self):
        g = parse_edge_list("a b\nb c")
        assert (g.n, g.m) == (3, 2)
        assert g.labels == ("a", "b", "c")
        assert g.edges() == [(0, 1), (1, 2)]

    def test_duplicates_collapse(self, caplog):
        g, dups = parse_edge_list_report("a b\na b")
        assert (g.n, g.m, dups) == (2, 1, 1)
        with caplog.at_level(logging.WARNING):
            parse_edge_list("a b\nb a\n")
        assert "1 duplicate" in caplog.text

    def test_self_loop_names_line(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_edge_list("a a")

    def test_token_count(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_edge_list("# header\na b\na b c\n")

    def test_comments_and_blanks(self):
        g = parse_edge_list("# comment\n\n x  y \n\n# more\ny z\n")
        assert g.labels == ("x", "y", "z")
        assert g.m == 2

    def test_round_trip(self):
        text = "a b\nb c\nc a\nc d\n"
        g = parse_edge_list(text)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_unknown_label(self):
        with pytest.raises(ContractError):
            parse_edge_list("a b").vertex_id("zz")


class TestGraphInvariants:
    def test_rejects_asymmetric(self):
        with pytest.raises(ContractError):
            Graph(2, ((1,), ()), ("0", "1"))

    def test_rejects_self_loop(self):
        with pytest.raises(ContractError):
            Graph.from_edges(2, [(1, 1)])

    @SETTINGS
    @given(graphs())
    def test_symmetric_and_m(self, g):
        assert all(u in g.adjacency[v] for u in range(g.n) for v in g.adjacency[u])
        assert 2 * g.m == sum(len(a) for a in g.adjacency)


class TestScoring:
    def test_induced_counts(self):
        k4 = Graph.from_edges(4, combinations(range(4), 2))
        assert induced_edge_count(k4, (0, 1, 2, 3)) == 6
        assert induced_edge_count(TRIANGLE_PENDANT, (2,)) == 0
        assert induced_edge_count(TRIANGLE_PENDANT, (0, 1, 3)) == 1

    def test_density_examples(self):
        for n in range(1, 7):
            kn = Graph.from_edges(n, combinations(range(n), 2))
            assert density(kn, tuple(range(n))) == Fraction(n - 1, 2)
        assert density(TRIANGLE_PENDANT, (3,)) == 0
        assert density(TRIANGLE_PENDANT, (0, 1, 2, 3)) == 1

    def test_density_of_empty_set(self):
        with pytest.raises(ContractError):
            density(TRIANGLE_PENDANT, ())

    def test_distance_examples(self):
        assert distance((0, 1, 2), (0, 1, 2)) == 0
        assert distance((0,), (1,)) == 2
        assert distance((0, 1), (1, 2)) == Fraction(7, 4)

    def test_crossing_examples(self):
        assert are_crossing((0, 1), (1, 2))
        assert not are_crossing((4, 5, 6, 7, 8), (4, 5, 6, 7, 8, 9))
        assert not are_crossing((0,), (1,))

    def test_objective_examples(self):
        g = Graph.from_edges(2, [])
        assert objective(g, [(0,), (1,)], 1) == 2
        assert objective(K4_K4, [(0, 1, 2, 3), (4, 5, 6, 7)], 1) == 5

    def test_objective_rejects_bad_input(self):
        with pytest.raises(ContractError):
            objective(K4_K4, [(0, 1, 2), (0, 1, 2)], 1)
        with pytest.raises(ContractError):
            objective(K4_K4, [(0,)], 0)
        with pytest.raises(ContractError):
            make_collection(K4_K4, [(0, 1, 2), (2, 1, 0)])

    def test_collection_size_bounds(self):
        with pytest.raises(ContractError):
            make_collection(Graph.from_edges(2, []), [(0,), (1,)])
        with pytest.raises(ContractError):
            vertex_set([])
        with pytest.raises(ContractError):
            vertex_set([5], Graph.from_edges(3, []))

    @SETTINGS
    @given(graph_and_set())
    def test_density_bounds(self, gs):
        g, s = gs
        d = density(g, s)
        assert 0 <= d <= Fraction(len(s) - 1, 2)
        complete = all(g.has_edge(u, v) for u, v in combinations(s, 2))
        assert (d == Fraction(len(s) - 1, 2)) == complete

    @SETTINGS
    @given(vertex_sets, vertex_sets)
    def test_distance_range(self, u, z):
        d = distance(u, z)
        assert d == distance(z, u)
        assert 0 <= d <= 2
        assert (d == 0) == (u == z)
        if u != z:
            assert d > 1
        assert Fraction(d.numerator, d.denominator) == d

    @SETTINGS
    @given(graphs(), st.data())
    def test_objective_decomposes(self, g, data):
        subsets = [tuple(v for v in range(g.n) if m >> v & 1) for m in range(1, 1 << g.n)]
        w = data.draw(st.lists(st.sampled_from(subsets), min_size=1, max_size=4, unique=True))
        lam = data.draw(st.fractions(min_value=Fraction(1, 1000), max_value=100))
        forward = objective(g, w, lam)
        dens = sum((density(g, s) for s in reversed(w)), Fraction(0))
        dist = sum((distance(w[j], w[i]) for i, j in combinations(range(len(w)), 2)), Fraction(0))
        assert forward == dens + lam * dist
