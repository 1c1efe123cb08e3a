from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from flowmra.dominance import (
    dominator_matrix,
    dominator_tree,
    dominators_dataflow,
    edge_dominates,
    postdominator_matrix,
)
from flowmra.flowgraph import validate_flow_graph
from flowmra.graph_core import GraphError, LGraph, reachable
from flowmra.oracle import brute_dominators, brute_edge_dominance, brute_edge_postdominance
from strategies import digraphs, flow_graphs


def test_dataflow_examples(diamond, G):
    chain = LGraph.from_pairs(3, [(1, 2), (2, 3)])
    assert dominators_dataflow(chain, 1)[3] == {1, 2, 3}
    assert dominators_dataflow(diamond, 1)[4] == {1, 4}
    assert 2 in dominators_dataflow(G, 1)[19]


def test_unreachable_vertices_keep_top():
    g = LGraph.from_pairs(3, [(1, 2)])
    assert dominators_dataflow(g, 1)[3] == {1, 2, 3}
    D = dominator_matrix(g, 1)
    assert D.D[:, 3].sum() == 0 and D.D[3, :].sum() == 0


def test_matrix_examples(diamond, G):
    chain = LGraph.from_pairs(3, [(1, 2), (2, 3)])
    D = dominator_matrix(chain, 1)
    assert all(D(j, k) == (j <= k) for j in range(1, 4) for k in range(1, 4))
    Dd = dominator_matrix(diamond, 1)
    assert not Dd(2, 4) and Dd(1, 4)
    assert dominator_matrix(G, 1)(2, 19)
    assert dominator_matrix(G, 1).dominators_of(19) == {1, 2, 3, 4, 8, 12, 16, 19}


def test_postdominator_examples(diamond, G):
    chain = LGraph.from_pairs(3, [(1, 2), (2, 3)])
    assert postdominator_matrix(chain, 3)(3, 1)
    assert postdominator_matrix(diamond, 4)(4, 2)
    assert postdominator_matrix(G, 20)(19, 2)


def test_dominator_tree(G):
    idom = dominator_tree(G, 1)
    assert idom[2] == 1
    assert idom[19] == 16
    assert idom[12] == 8
    assert set(idom) == set(range(2, 21))


@given(digraphs(max_vertices=7))
def test_dataflow_matches_deletion_oracle(g):
    live = reachable(g, 1)
    fast = dominators_dataflow(g, 1)
    assert {k: fast[k] for k in live} == brute_dominators(g, 1)


@given(digraphs(max_vertices=7))
def test_dominance_is_a_partial_order_with_chains(g):
    D = dominator_matrix(g, 1)
    live = sorted(reachable(g, 1))
    for j, k in itertools.product(live, repeat=2):
        if j != k and D(j, k):
            assert not D(k, j)
        for m in live:
            if D(j, k) and D(k, m):
                assert D(j, m)
    for k in live:
        doms = sorted(D.dominators_of(k))
        for a, b in itertools.combinations(doms, 2):
            assert D(a, b) or D(b, a)


def test_edge_dominance_examples(FG, G):
    D = dominator_matrix(G, 1)
    assert edge_dominates(G, D, (1, 2), (19, 20))
    assert edge_dominates(G, D, (2, 3), (3, 4))
    assert edge_dominates(G, D, (5, 2), (5, 2))
    assert edge_dominates(G, D, (2, 3), (8, 12))
    assert not edge_dominates(G, D, (8, 7), (8, 12))
    assert not edge_dominates(G, D, (8, 12), (8, 7))
    with pytest.raises(GraphError):
        edge_dominates(G, D, (1, 3), (2, 3))


@given(flow_graphs())
def test_edge_dominance_matches_walk_oracle(fg):
    D = dominator_matrix(fg.graph, fg.source)
    for e1, e2 in itertools.product(sorted(fg.edges), repeat=2):
        assert edge_dominates(fg.graph, D, e1, e2) == brute_edge_dominance(fg, e1, e2)


@given(flow_graphs())
def test_edge_dominance_chain_property(fg):
    edges = sorted(fg.edges)
    dom = {(a, b): brute_edge_dominance(fg, a, b) for a in edges for b in edges}
    for e1, e2, e3 in itertools.permutations(edges, 3):
        if dom[e1, e3] and dom[e2, e3]:
            assert dom[e1, e2] or dom[e2, e1]


def _walks(fg, max_len):
    """Every source-to-target walk with at most ``max_len`` edges."""
    out = []
    stack = [(fg.source, ())]
    while stack:
        v, walk = stack.pop()
        if v == fg.target:
            out.append(walk)
            continue
        if len(walk) == max_len:
            continue
        for w in fg.graph.successors(v):
            stack.append((w, walk + ((v, w),)))
    return out


@given(flow_graphs(max_vertices=6))
def test_cycle_property(fg):
    """Mutual dominance and postdominance force every walk through e2 to revisit e1."""
    edges = sorted(fg.edges)
    walks = _walks(fg, 2 * len(edges) + 2)
    for e1, e2 in itertools.permutations(edges, 2):
        if brute_edge_dominance(fg, e1, e2) and brute_edge_postdominance(fg, e1, e2):
            for w in walks:
                if e2 in w:
                    assert w.count(e1) >= 2


def test_cycle_property_witness():
    # 1 -> 2 -> 3 -> 2 loop body: (2,3) dominates and postdominates (3,2)
    fg = validate_flow_graph(LGraph.from_pairs(4, [(1, 2), (2, 3), (3, 2), (2, 4)]))
    assert brute_edge_dominance(fg, (2, 3), (3, 2))
    assert not brute_edge_postdominance(fg, (2, 3), (3, 2))
    fg = validate_flow_graph(LGraph.from_pairs(5, [(1, 2), (2, 3), (3, 4), (4, 2), (3, 5)]))
    assert brute_edge_dominance(fg, (2, 3), (4, 2))
    assert brute_edge_postdominance(fg, (2, 3), (4, 2))
