from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given

from flowmra.compose import isomorphic
from flowmra.fixtures import REFERENCE_SUBGRAPH_LABELS, chain, nonplanar_stretch_graph
from flowmra.flowgraph import FlowGraphError, validate_flow_graph
from flowmra.graph_core import LGraph
from flowmra.stretch import stretch, stretch_case, stretch_sese_correspondence
from reference_values import STRETCHED_SUBGRAPH as STRETCHED_H
from strategies import flow_graphs



def test_reference_subgraph_stretch(H):
    res = stretch(H)
    labels = REFERENCE_SUBGRAPH_LABELS
    assert tuple(labels[o - 1] for o in res.origin) == (8, 10, 11, 11, 12, 12, 12, 14, 15, 15, 16, 16, 19)
    assert res.graph.n == 13
    assert res.graph.pairs() == STRETCHED_H
    assert res.graph.loops == {6}


def test_nonplanar_fixture_splits_only_vertex_6():
    res = stretch(nonplanar_stretch_graph())
    assert res.origin == (1, 2, 3, 4, 5, 6, 6, 7)
    assert res.graph.pairs() == [
        (1, 2), (2, 3), (2, 5), (2, 6), (3, 4), (4, 5), (4, 6), (5, 8), (6, 7), (7, 3), (7, 5),
    ]


@pytest.mark.parametrize(
    "pairs, v, case",
    [
        ([(1, 2), (2, 3)], 2, 0),
        ([(1, 2), (2, 2), (2, 3), (2, 4), (3, 5), (4, 5)], 2, 1),
        ([(1, 2), (1, 3), (2, 4), (3, 4), (4, 4), (4, 5)], 4, 2),
        ([(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 7), (6, 7)], 4, 3),
        ([(1, 2), (1, 3), (2, 4), (3, 4), (4, 4), (4, 5), (4, 6), (5, 7), (6, 7)], 4, 4),
    ],
)
def test_stretch_cases(pairs, v, case):
    n = max(max(p) for p in pairs)
    assert stretch_case(LGraph.from_pairs(n, pairs), v) == case


def test_case_layouts():
    # case 1: the loop stays on the first copy
    g = LGraph.from_pairs(6, [(1, 2), (2, 2), (2, 3), (2, 4), (3, 5), (4, 5), (5, 6)])
    res = stretch(validate_flow_graph(g))
    assert res.origin[:3] == (1, 2, 2)
    assert 2 in res.graph.loops and (2, 3) in res.graph.edges
    # case 4: a middle vertex carries the loop
    g = LGraph.from_pairs(8, [(1, 2), (1, 3), (2, 4), (3, 4), (4, 4), (4, 5), (4, 6), (5, 7), (6, 7), (7, 8)])
    g = LGraph(9, frozenset({(a + 1, b + 1) for a, b in g.edges} | {(1, 2)}), frozenset({5}))
    res = stretch(g)
    assert res.preimages(5) == [5, 6, 7]
    assert res.graph.loops == {6}
    assert {(5, 6), (6, 7)} <= res.graph.edges


def test_unchanged_chain():
    res = stretch(chain(4))
    assert res.graph == chain(4)
    assert res.origin == (1, 2, 3, 4, 5)


def test_stretch_requires_flow_graph(diamond):
    with pytest.raises(FlowGraphError):
        stretch(diamond)


def test_reference_loop_correspondence(FG, H):
    report = stretch_sese_correspondence(H)
    assert report.ok
    (c,) = report.loops
    assert (c.vertex, c.image) == (4, 6)
    assert (c.region.e1, c.region.e2) == ((5, 6), (6, 7))
    report = stretch_sese_correspondence(FG)
    assert report.ok
    assert [c.vertex for c in report.loops] == [7, 12]


def test_loop_free_correspondence_is_empty():
    assert stretch_sese_correspondence(chain(3)).loops == ()


@given(flow_graphs())
def test_stretch_is_idempotent(fg):
    once = stretch(fg)
    twice = stretch(once.graph)
    assert twice.graph == once.graph
    assert all(stretch_case(once.graph, v) == 0 for v in once.graph.vertices)


@given(flow_graphs())
def test_stretch_order_independence(fg):
    up, down = stretch(fg), stretch(fg, order="descending")
    assert Counter(up.origin) == Counter(down.origin)
    assert isomorphic(up.graph, down.graph) is not None


@given(flow_graphs())
def test_stretch_edge_conservation_and_origin(fg):
    res = stretch(fg)
    added = sum({1: 1, 2: 1, 3: 1, 4: 2}.get(stretch_case(fg.graph, v), 0) for v in fg.graph.vertices)
    assert len(res.graph.edges) == len(fg.edges) + added
    counts = Counter(res.origin)
    assert set(counts) == set(fg.graph.vertices)
    assert set(counts.values()) <= {1, 2, 3}
    assert len(res.graph.loops) == len(fg.loops)
    validate_flow_graph(res.graph)


@given(flow_graphs())
def test_loops_become_minimal_regions(fg):
    assert stretch_sese_correspondence(fg).ok
