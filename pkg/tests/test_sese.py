from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from flowmra.fixtures import chain, unit
from flowmra.flowgraph import FlowGraphError, validate_flow_graph
from flowmra.graph_core import LGraph
from flowmra.oracle import sese_pairs_oracle
from flowmra.sese import (
    SeseRegion,
    analyze,
    find_closure_violation,
    is_transitive_tournament,
    locally_maximal_regions,
    minimal_region_edges,
    minimal_regions,
    pst,
    region_interior,
    sese_boundaries,
    subregion_closure_check,
    _weak_components,
)
from reference_values import REFERENCE_BDRY, REFERENCE_MSR, REFERENCE_PST
from strategies import flow_graphs


@pytest.mark.parametrize("brackets", ["oriented", "matrix"])
@pytest.mark.parametrize("descending", [False, True])
def test_reference_boundaries(FG, brackets, descending):
    rows = [r.row() for r in sese_boundaries(FG, descending=descending, brackets=brackets)]
    assert rows == REFERENCE_BDRY


def test_reference_msr_and_pst(FG):
    assert minimal_regions(FG) == REFERENCE_MSR
    assert pst(FG) == REFERENCE_PST


def test_chain_regions():
    fg = chain(3)
    assert [r.row() for r in sese_boundaries(fg)] == [(1, 2, 2, 3), (1, 2, 3, 4), (2, 3, 3, 4)]
    assert minimal_regions(fg) == [(1, 4), (2, 2), (3, 3)]
    assert pst(fg) == [(1, 2), (1, 3)]
    assert [r.row() for r in locally_maximal_regions(fg)] == [(1, 2, 3, 4)]


def test_single_edge_regions():
    fg = unit()
    assert sese_boundaries(fg) == []
    assert minimal_regions(fg) == [(1, 2)]
    assert pst(fg) == []
    assert locally_maximal_regions(fg) == []


def test_reference_locally_maximal(FG):
    rows = {r.row() for r in locally_maximal_regions(FG)}
    assert {(2, 3, 4, 8), (8, 7, 6, 9), (19, 18, 13, 9)} <= rows


def test_reference_closure(FG):
    regions = sese_boundaries(FG)
    assert subregion_closure_check(regions)
    assert SeseRegion((2, 3), (4, 8)) in regions


def test_closure_violations_are_reported():
    a, b, c = (1, 2), (2, 3), (3, 4)
    broken = [SeseRegion(a, b), SeseRegion(b, c)]
    kind, r1, r2 = find_closure_violation(broken)
    assert kind == "transitivity" and (r1, r2) == (SeseRegion(a, b), SeseRegion(b, c))
    assert not subregion_closure_check(broken)


def test_region_type():
    r = SeseRegion((2, 3), (4, 8))
    assert r.vertex_pair == (3, 4)
    assert r.row() == (2, 3, 4, 8)
    assert SeseRegion.from_row(r.row()) == r
    assert not r.degenerate
    assert SeseRegion((1, 2), (1, 2)).degenerate


def test_invalid_input_is_rejected(diamond):
    with pytest.raises(FlowGraphError):
        sese_boundaries(diamond)


def test_reference_s_relation_components_are_tournaments(FG):
    info = analyze(FG)
    for comp in _weak_components(info.s_relation):
        assert is_transitive_tournament(comp, set(info.s_relation))


def test_tournament_rejects_non_transitive():
    a, b, c = (1, 2), (2, 3), (3, 4)
    assert is_transitive_tournament({a, b, c}, {(a, b), (b, c), (a, c)})
    assert not is_transitive_tournament({a, b, c}, {(a, b), (b, c)})
    assert not is_transitive_tournament({a, b, c}, {(a, b), (b, c), (c, a)})


def test_oriented_brackets_fix_reverse_twins():
    # s -> a, a <-> b, a -> t: the literal bracket comparison cannot tell
    # (a, b) from (b, a) apart and reports a pair the definition rejects
    fg = validate_flow_graph(LGraph.from_pairs(4, [(1, 2), (2, 3), (3, 2), (2, 4)]))
    oracle = sese_pairs_oracle(fg)
    oriented = {(r.e1, r.e2) for r in sese_boundaries(fg)}
    literal = {(r.e1, r.e2) for r in sese_boundaries(fg, brackets="matrix")}
    assert oriented == oracle
    assert oracle - literal == {((2, 3), (3, 2))}
    assert literal <= oracle


def test_unknown_bracket_mode(FG):
    with pytest.raises(ValueError):
        sese_boundaries(FG, brackets="compact")


@given(flow_graphs(max_vertices=10))
def test_boundaries_match_definitional_oracle(fg):
    found = {(r.e1, r.e2) for r in sese_boundaries(fg)}
    assert found == sese_pairs_oracle(fg)


@given(flow_graphs())
def test_dfs_order_independence(fg):
    up = {(r.e1, r.e2) for r in sese_boundaries(fg)}
    down = {(r.e1, r.e2) for r in sese_boundaries(fg, descending=True)}
    assert up == down


@given(flow_graphs())
def test_closure_holds_on_random_graphs(fg):
    assert find_closure_violation(sese_boundaries(fg)) is None


@given(flow_graphs())
def test_s_relation_components_are_tournaments(fg):
    info = analyze(fg)
    pairs = set(info.s_relation)
    comps = _weak_components(pairs)
    for comp in comps:
        assert is_transitive_tournament(comp, pairs)
    lm = locally_maximal_regions(fg)
    assert len(lm) == len(comps)


@given(flow_graphs())
def test_minimal_regions_nest(fg):
    regions = minimal_region_edges(fg)
    inner = [frozenset(region_interior(fg, r)) for r in regions]
    for a, b in itertools.combinations(inner, 2):
        assert not (a & b) or a <= b or b <= a


@given(flow_graphs())
def test_pst_is_a_tree(fg):
    tree = pst(fg)
    msr = minimal_regions(fg)
    labels = {v for v, _ in msr}
    root = fg.source
    children = [c for _, c in tree]
    assert len(children) == len(set(children))
    assert root not in children
    assert {p for p, _ in tree} | set(children) <= labels
    # every node walks up to the root
    parent = {c: p for p, c in tree}
    for v in children:
        seen = set()
        while v in parent:
            assert v not in seen
            seen.add(v)
            v = parent[v]
        assert v == root
