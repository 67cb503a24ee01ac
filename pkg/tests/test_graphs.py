from __future__ import annotations

import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdreg.corpus import corpus_graphs
from pdreg.graphs import (
    BipartiteGraph,
    Graph,
    build_family,
    canonical_form,
    girth,
    is_bipartite_isomorphic,
    is_chordal,
    is_cochordal,
    is_isomorphic,
    join,
    recognize_subdivision,
    square,
    subdivision,
)

from oracles import to_nx


@st.composite
def graphs(draw, max_n: int = 8) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


SMALL = corpus_graphs("builtin:graphs7, n<=6")


def edge_set(*pairs: str) -> frozenset:
    return frozenset((int(p[0]), int(p[1])) for p in pairs)


# --- construction -----------------------------------------------------------------------

def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError, match="loop"):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError, match="outside"):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(ValueError):
        Graph(-1)


def test_edges_normalize_orientation_and_duplicates():
    g = Graph(3, frozenset({(1, 0), (0, 1), (2, 1)}))
    assert g.edges == edge_set("01", "12")


def test_build_family_examples():
    assert build_family("path", [4]).edges == edge_set("01", "12", "23")
    assert build_family("cycle", [3]) == build_family("complete", [3])
    w = build_family("whisker-complete", [3])
    assert (w.n, w.m) == (6, 6)
    assert w.edges == edge_set("01", "02", "12", "03", "14", "25")


@pytest.mark.parametrize("kind,params", [("cycle", [2]), ("path", [0]), ("nonsense", [3]), ("complete", [-1])])
def test_build_family_rejects(kind, params):
    with pytest.raises(ValueError):
        build_family(kind, params)


def test_complete_bipartite_and_star():
    k = build_family("complete-bipartite", [2, 3])
    assert nx.is_isomorphic(to_nx(k), nx.complete_bipartite_graph(2, 3))
    assert nx.is_isomorphic(to_nx(build_family("star", [4])), nx.star_graph(4))


# --- subdivision, square, join ------------------------------------------------------------

def test_subdivision_examples():
    p2, p3 = build_family("path", [2]), build_family("path", [3])
    assert is_isomorphic(subdivision(p2).graph, p3)
    assert is_isomorphic(subdivision(build_family("cycle", [4])).graph, build_family("cycle", [8]))
    assert is_isomorphic(subdivision(build_family("complete", [3])).graph, build_family("cycle", [6]))


def test_subdivision_sides():
    g = build_family("path", [4])
    s = subdivision(g)
    assert s.part(0) == [0, 1, 2, 3]
    for v in s.part(1):
        assert s.graph.degree(v) == 2


@given(graphs())
def test_subdivision_size(g):
    s = subdivision(g)
    assert s.graph.n == g.n + g.m
    assert s.graph.m == 2 * g.m


def test_square_examples():
    p4 = square(build_family("path", [4]))
    assert p4.edges == edge_set("01", "12", "23", "02", "13")
    # six cycle edges plus six distance-2 chords; only the 3 antipodal pairs stay non-adjacent
    c6 = square(build_family("cycle", [6]))
    assert c6.m == 12
    assert c6.complement().edges == edge_set("03", "14", "25")
    k5 = build_family("complete", [5])
    assert square(k5) == k5


@given(graphs())
def test_square_matches_reference_power(g):
    sq = square(g)
    assert sq.edges >= g.edges
    assert square(sq).edges >= sq.edges
    ref = nx.power(to_nx(g), 2)
    assert sq.edges == frozenset((min(u, v), max(u, v)) for u, v in ref.edges)


@given(graphs(5), graphs(5))
def test_join_adds_all_cross_edges(g, h):
    j = join(g, h)
    assert j.n == g.n + h.n
    assert j.m == g.m + h.m + g.n * h.n


def test_join_examples():
    k1 = build_family("complete", [1])
    assert join(k1, k1) == build_family("complete", [2])
    e2, e3 = build_family("edgeless", [2]), build_family("edgeless", [3])
    assert is_isomorphic(join(e2, e3), build_family("complete-bipartite", [2, 3]))
    k2 = build_family("complete", [2])
    assert join(k2, k2) == build_family("complete", [4])


# --- recognition ---------------------------------------------------------------------------

def test_chordal_examples():
    assert not is_chordal(build_family("cycle", [4]))
    assert is_chordal(build_family("path", [6]))
    for n in (3, 4, 5):
        assert is_cochordal(build_family("whisker-complete", [n]))


@settings(max_examples=200)
@given(graphs())
def test_chordal_agrees_with_reference(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))
    assert is_cochordal(g) == nx.is_chordal(nx.complement(to_nx(g)))


def test_girth_examples():
    assert girth(build_family("cycle", [5])) == 5
    assert girth(build_family("path", [5])) == math.inf
    assert girth(subdivision(build_family("complete", [4])).graph) == 6


@given(graphs())
def test_girth_agrees_with_reference(g):
    assert girth(g) == nx.girth(to_nx(g))


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}m{g.m}")
def test_subdivision_girth_bound(g):
    gs = girth(subdivision(g).graph)
    assert gs == (math.inf if girth(g) == math.inf else 2 * girth(g))
    assert gs >= 6


def test_recognize_subdivision_examples():
    c8 = BipartiteGraph.from_graph(build_family("cycle", [8]))
    assert is_isomorphic(recognize_subdivision(c8), build_family("cycle", [4]))
    p3 = BipartiteGraph.from_graph(build_family("path", [3]))
    assert is_isomorphic(recognize_subdivision(p3), build_family("path", [2]))
    c4 = BipartiteGraph.from_graph(build_family("cycle", [4]))
    assert recognize_subdivision(c4) is None


def test_recognize_subdivision_round_trip_exhaustive():
    for g in corpus_graphs("builtin:graphs7, no-isolated"):
        got = recognize_subdivision(subdivision(g))
        assert got is not None and is_isomorphic(got, g), g


# --- isomorphism -----------------------------------------------------------------------------

@settings(max_examples=150)
@given(graphs(7), st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g) == canonical_form(g.relabel(perm))


@settings(max_examples=150)
@given(graphs(6), graphs(6))
def test_isomorphism_agrees_with_reference(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_bipartite_isomorphism_respects_sides():
    star = BipartiteGraph.from_graph(build_family("star", [2]))
    assert is_bipartite_isomorphic(star, star)
    assert not is_bipartite_isomorphic(star, star.swapped())


def test_graph_atlas_counts_per_order():
    counts = [0] * 8
    for g in corpus_graphs("builtin:graphs7, connected"):
        counts[g.n] += 1
    # connected unlabeled graphs on 1..7 vertices
    assert counts[1:] == [1, 1, 2, 6, 21, 112, 853]


def test_bipartite_packaged_corpus_is_connected_bipartite_and_distinct():
    gs = corpus_graphs("builtin:bipartite10")
    assert len(gs) == 5016
    assert all(g.is_connected() and g.is_bipartite() for g in gs)
    assert len({canonical_form(g) for g in gs}) == len(gs)
