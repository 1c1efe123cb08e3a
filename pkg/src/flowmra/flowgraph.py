"""Encapsulation, flow-graph validation and region interiors."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .graph_core import Edge, GraphError, LGraph, reachable, reverse

log = logging.getLogger(__name__)

# Warning texts emitted by the reference encapsulation routine.
NO_SOURCE = "no original source vertices"
SOURCE_NOT_FIRST = "original source vertex not at index 1"
NO_ENTRY_EDGE = "no original single entry edge"
MANY_SOURCES = "more than one original source vertex"
NO_TARGET = "no original target vertices"
TARGET_NOT_LAST = "original target vertex not at last index"
NO_EXIT_EDGE = "no original single exit edge"
MANY_TARGETS = "more than one original target vertex"


@dataclass(frozen=True)
class Notice:
    """A machine-readable warning: ``code`` is stable, ``message`` is for humans."""

    code: str
    message: str


@dataclass(frozen=True)
class EncapsulationResult:
    """``index[i - 1]`` is the original vertex at new position ``i`` (0 if added)."""

    graph: LGraph
    index: tuple[int, ...]
    notices: tuple[Notice, ...]

    @property
    def is_identity(self) -> bool:
        return self.index == tuple(range(1, len(self.index) + 1))


class _Builder:
    """Mutable edge list over a vertex sequence; positions are list indices."""

    def __init__(self, G: LGraph) -> None:
        self.index = list(G.vertices)
        # vertex identity is the original label; added vertices get negative ids
        self.edges = set(G.edges)
        self.loops = set(G.loops)
        self.fresh = 0

    def new_vertex(self) -> int:
        self.fresh -= 1
        return self.fresh

    def indeg(self, v: int) -> int:
        return sum(1 for _, w in self.edges if w == v)

    def outdeg(self, v: int) -> int:
        return sum(1 for u, _ in self.edges if u == v)


def encapsulate(G: LGraph) -> EncapsulationResult:
    """Extend ``G`` to a graph with one source, one target and unique entry/exit edges.

    Source side, in order of precedence: a lone source with one outgoing
    edge and no loop is moved to position 1; a lone source failing that
    gets a new vertex in front of it; several sources get a collector
    vertex plus a super-source feeding it; no source at all gets a new
    vertex with an edge into the first vertex.  The target side mirrors
    this at the end of the order, drawing the no-target edge from the last
    vertex.
    """
    if G.n == 0:
        raise GraphError("cannot encapsulate an empty graph")
    b = _Builder(G)
    order = list(G.vertices)  # vertex ids in positional order
    notices: list[Notice] = []

    def note(code: str) -> None:
        notices.append(Notice(code, code))
        log.info(code)

    srcs = [v for v in order if b.indeg(v) == 0]
    if not srcs:
        s = b.new_vertex()
        b.edges.add((s, order[0]))
        order.insert(0, s)
        note(NO_SOURCE)
    elif len(srcs) == 1:
        v = srcs[0]
        if b.outdeg(v) == 1 and v not in b.loops:
            if order[0] != v:
                order.remove(v)
                order.insert(0, v)
                note(SOURCE_NOT_FIRST)
        else:
            s = b.new_vertex()
            b.edges.add((s, v))
            order.insert(0, s)
            note(NO_ENTRY_EDGE)
    else:
        c = b.new_vertex()
        b.edges.update((c, v) for v in srcs)
        order.insert(0, c)
        s = b.new_vertex()
        b.edges.add((s, c))
        order.insert(0, s)
        note(MANY_SOURCES)

    tgts = [v for v in order if b.outdeg(v) == 0]
    if not tgts:
        t = b.new_vertex()
        b.edges.add((order[-1], t))
        order.append(t)
        note(NO_TARGET)
    elif len(tgts) == 1:
        v = tgts[0]
        if b.indeg(v) == 1 and v not in b.loops:
            if order[-1] != v:
                order.remove(v)
                order.append(v)
                note(TARGET_NOT_LAST)
        else:
            t = b.new_vertex()
            b.edges.add((v, t))
            order.append(t)
            note(NO_EXIT_EDGE)
    else:
        c = b.new_vertex()
        b.edges.update((v, c) for v in tgts)
        order.append(c)
        t = b.new_vertex()
        b.edges.add((c, t))
        order.append(t)
        note(MANY_TARGETS)

    pos = {v: i for i, v in enumerate(order, start=1)}
    graph = LGraph(
        len(order),
        frozenset((pos[u], pos[v]) for u, v in b.edges),
        frozenset(pos[v] for v in b.loops),
    )
    index = tuple(v if v > 0 else 0 for v in order)
    return EncapsulationResult(graph, index, tuple(notices))


class FlowGraphError(GraphError):
    """A flow-graph axiom is violated; ``axiom`` names which one."""

    def __init__(self, axiom: str, message: str) -> None:
        super().__init__(message)
        self.axiom = axiom


@dataclass(frozen=True)
class FlowGraph:
    graph: LGraph
    entry: Edge
    exit: Edge
    source: int
    target: int

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> frozenset[Edge]:
        return self.graph.edges

    @property
    def loops(self) -> frozenset[int]:
        return self.graph.loops


def validate_flow_graph(G: LGraph) -> FlowGraph:
    """Check the flow-graph axioms and return the typed graph.

    Raises :class:`FlowGraphError` naming the first violated axiom.  The
    source and target may sit at any position; the analysis routines read
    them from the returned value.
    """
    if G.n == 0:
        raise FlowGraphError("empty", "graph is empty")
    srcs = [v for v in G.vertices if not G.predecessors(v)]
    tgts = [v for v in G.vertices if not G.successors(v)]
    if not srcs:
        raise FlowGraphError("no_source", "graph has no source vertex")
    if len(srcs) > 1:
        raise FlowGraphError("multiple_sources", f"multiple sources {srcs}")
    if not tgts:
        raise FlowGraphError("no_target", "graph has no target vertex")
    if len(tgts) > 1:
        raise FlowGraphError("multiple_targets", f"multiple targets {tgts}")
    s, t = srcs[0], tgts[0]
    if len(G.successors(s)) != 1:
        raise FlowGraphError(
            "entry_edge",
            "multiple outgoing edges at source"
            if G.successors(s)
            else "source has no outgoing edge",
        )
    if len(G.predecessors(t)) != 1:
        raise FlowGraphError(
            "exit_edge",
            "multiple incoming edges at target"
            if G.predecessors(t)
            else "target has no incoming edge",
        )
    if s in G.loops:
        raise FlowGraphError("source_loop", f"loop at source {s}")
    if t in G.loops:
        raise FlowGraphError("target_loop", f"loop at target {t}")
    fwd = reachable(G, s)
    if len(fwd) != G.n:
        missing = sorted(set(G.vertices) - fwd)
        raise FlowGraphError("unreachable", f"vertices {missing} unreachable from source")
    back = reachable(reverse(G), t)
    if len(back) != G.n:
        missing = sorted(set(G.vertices) - back)
        raise FlowGraphError("not_coreachable", f"vertices {missing} cannot reach target")
    entry = (s, G.successors(s)[0])
    exit_ = (G.predecessors(t)[0], t)
    return FlowGraph(G, entry, exit_, s, t)


def as_flow_graph(G: LGraph | FlowGraph) -> FlowGraph:
    return G if isinstance(G, FlowGraph) else validate_flow_graph(G)


def _graph_of(G: LGraph | FlowGraph) -> LGraph:
    return G.graph if isinstance(G, FlowGraph) else G


def interior(G: LGraph | FlowGraph, e1: Edge, e2: Edge) -> set[int]:
    """``t(e1)`` plus everything reachable from it once ``e1`` and ``e2`` are deleted."""
    g = _graph_of(G)
    e1, e2 = tuple(e1), tuple(e2)
    g.check_edge(e1)
    g.check_edge(e2)
    return reachable(g.without_edges(e1, e2), e1[1])


def boundary(FG: FlowGraph) -> tuple[int, int]:
    return FG.entry[0], FG.exit[1]
