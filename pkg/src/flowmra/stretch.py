"""Stretching: split vertices so that loops and multi-way joins/forks become SESE-visible.

A vertex is split according to its (in-degree, out-degree, loop) profile,
with ``>1`` meaning "more than one":

====  ==========  =====================================================
case  profile     replacement (incoming edges enter the first new
                  vertex, outgoing edges leave the last)
====  ==========  =====================================================
1     (1, >1, 1)  ``v_s -> v_t`` with the loop kept on ``v_s``
2     (>1, 1, 1)  ``v_s -> v_t`` with the loop moved to ``v_t``
3     (>1, >1, 0) ``v_s -> v_t``
4     (>1, >1, 1) ``v_s -> v' -> v_t`` with the loop on ``v'``
====  ==========  =====================================================

New vertices take consecutive positions starting at the old position of
``v``; everything after shifts right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .flowgraph import FlowGraph, as_flow_graph, interior
from .graph_core import LGraph, degrees
from .sese import SeseRegion, analyze

# profile hash 4*(in>1) + 2*(out>1) + loop  ->  case number
_CASE_OF_HASH = {3: 1, 5: 2, 6: 3, 7: 4}

# For each case: number of new vertices, internal edges, and internal loop
# positions, all as offsets from the first new vertex.
_BLOCKS = {
    1: (2, [(0, 1)], [0]),
    2: (2, [(0, 1)], [1]),
    3: (2, [(0, 1)], []),
    4: (3, [(0, 1), (1, 2)], [1]),
}


def stretch_case(G: LGraph, v: int) -> int:
    """Case number 1-4 for ``v``, or 0 when ``v`` is left alone."""
    dp, dm, d0 = degrees(G, v)
    return _CASE_OF_HASH.get(4 * (dp > 1) + 2 * (dm > 1) + d0, 0)


@dataclass(frozen=True)
class StretchResult:
    """``origin[i - 1]`` is the input vertex that new vertex ``i`` came from."""

    graph: LGraph
    origin: tuple[int, ...]

    def preimages(self, v: int) -> list[int]:
        return [i for i, o in enumerate(self.origin, start=1) if o == v]


def stretch(FG: FlowGraph | LGraph, order: Literal["ascending", "descending"] = "ascending") -> StretchResult:
    """Stretch a flow graph.

    Cases are decided once on the input.  Pending vertices are split one
    at a time, lowest position first (or highest with
    ``order="descending"``); the result is the same up to relabelling.
    """
    FG = as_flow_graph(FG)
    G = FG.graph
    pending = [stretch_case(G, v) for v in G.vertices]
    origin = list(G.vertices)
    edges = set(G.edges)
    loops = set(G.loops)

    while any(pending):
        idx = [i for i, c in enumerate(pending) if c]
        i = idx[0] if order == "ascending" else idx[-1]
        v = i + 1
        size, inner, inner_loops = _BLOCKS[pending[i]]
        shift = size - 1

        def moved(u: int) -> int:
            return u + shift if u > v else u

        new_edges = set()
        for a, b in edges:
            if a == v:
                new_edges.add((v + shift, moved(b)))
            elif b == v:
                new_edges.add((moved(a), v))
            else:
                new_edges.add((moved(a), moved(b)))
        new_edges.update((v + p, v + q) for p, q in inner)
        new_loops = {moved(u) for u in loops if u != v}
        new_loops.update(v + p for p in inner_loops)

        edges, loops = new_edges, new_loops
        origin[i:i + 1] = [origin[i]] * size
        pending[i:i + 1] = [0] * size

    return StretchResult(LGraph(len(origin), frozenset(edges), frozenset(loops)), tuple(origin))


@dataclass(frozen=True)
class LoopCorrespondence:
    vertex: int  # loop-carrying vertex of the input
    image: int  # loop-carrying vertex of the stretching
    region: SeseRegion  # its enclosing region in the stretching
    is_region: bool
    is_minimal: bool


@dataclass(frozen=True)
class CorrespondenceReport:
    """Loop-to-region matches plus, for every region of the stretching,
    the set of input vertices its interior maps onto."""

    loops: tuple[LoopCorrespondence, ...]
    region_images: tuple[tuple[SeseRegion, frozenset[int]], ...]

    @property
    def ok(self) -> bool:
        return all(c.is_region and c.is_minimal for c in self.loops)


def stretch_sese_correspondence(FG: FlowGraph | LGraph) -> CorrespondenceReport:
    FG = as_flow_graph(FG)
    res = stretch(FG)
    S = as_flow_graph(res.graph)
    info = analyze(S)
    rows = {(r.e1, r.e2) for r in info.bdry}
    msr = set(info.msr)
    matches = []
    for v in sorted(FG.loops):
        (x,) = [u for u in res.preimages(v) if u in S.loops]
        (p,) = S.graph.predecessors(x)
        (q,) = S.graph.successors(x)
        region = SeseRegion((p, x), (x, q))
        matches.append(
            LoopCorrespondence(v, x, region, (region.e1, region.e2) in rows, (x, x) in msr)
        )
    images = []
    for r in info.bdry:
        inner = interior(S, r.e1, r.e2)
        images.append((r, frozenset(res.origin[u - 1] for u in inner)))
    return CorrespondenceReport(tuple(matches), tuple(images))
