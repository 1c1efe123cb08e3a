"""Operadic edge substitution, series and parallel tensors, sub-flow graphs, isomorphism.

Labelling convention for every construction here: the vertices of the
first operand keep their relative order (its target moves to the very
end when the construction gives it a new role), fresh vertices from
later operands follow in operand order, and the result is compacted to
``1..n``.  With flow graphs whose source is 1 and target is ``n`` this
makes the unit laws hold as exact equalities, not just isomorphisms.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .flowgraph import FlowGraph, FlowGraphError, Notice, as_flow_graph, interior, validate_flow_graph
from .graph_core import Edge, LGraph
from .sese import sese_boundaries

log = logging.getLogger(__name__)

MAX_ISOMORPHISM_VERTICES = 32
DEGENERATE_TENSOR = "degenerate parallel tensor: smaller factor collapsed"


def unit_graph() -> FlowGraph:
    """The flow graph ``e`` with a single edge."""
    return validate_flow_graph(LGraph(2, frozenset({(1, 2)})))


def _build(order: list, edges, loops) -> FlowGraph:
    """Relabel arbitrary hashable vertex keys to positions in ``order`` and validate."""
    pos = {v: i for i, v in enumerate(order, start=1)}
    return validate_flow_graph(
        LGraph(
            len(order),
            frozenset((pos[a], pos[b]) for a, b in edges),
            frozenset(pos[v] for v in loops),
        )
    )


# --- operad -------------------------------------------------------------------


@dataclass(frozen=True)
class OrderedFlowGraph:
    """A flow graph with a total order on its (non-loop) edges."""

    fg: FlowGraph
    edge_order: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not self.edge_order:
            object.__setattr__(self, "edge_order", tuple(sorted(self.fg.edges)))
        if sorted(self.edge_order) != sorted(self.fg.edges) or len(set(self.edge_order)) != len(self.edge_order):
            raise ValueError("edge_order must list every edge exactly once")

    @classmethod
    def of(cls, G: FlowGraph | LGraph, edge_order: Sequence[Edge] = ()) -> OrderedFlowGraph:
        return cls(as_flow_graph(G), tuple(tuple(e) for e in edge_order))

    @property
    def arity(self) -> int:
        return len(self.edge_order)


def operad_compose(G: OrderedFlowGraph, parts: Sequence[OrderedFlowGraph]) -> OrderedFlowGraph:
    """Replace the ``j``-th edge of ``G`` by ``parts[j]``.

    The part's source is glued to the tail of the edge and its target to
    the head; the part's other vertices are fresh.  The new edge order
    lists the parts' edges block by block.
    """
    if len(parts) != G.arity:
        raise ValueError(f"expected {G.arity} parts, got {len(parts)}")
    base = G.fg
    order: list = [("g", v) for v in base.graph.vertices if v != base.target]
    edges: list = []
    loops = {("g", v) for v in base.loops}
    for j, ((u, v), part) in enumerate(zip(G.edge_order, parts)):
        P = part.fg

        def key(x: int, j: int = j, u: int = u, v: int = v, P: FlowGraph = P):
            if x == P.source:
                return ("g", u)
            if x == P.target:
                return ("g", v)
            return ("p", j, x)

        order.extend(key(x) for x in P.graph.vertices if x not in (P.source, P.target))
        edges.extend((key(a), key(b)) for a, b in part.edge_order)
        loops.update(key(x) for x in P.loops)
    order.append(("g", base.target))
    fg = _build(order, edges, loops)
    pos = {k: i for i, k in enumerate(order, start=1)}
    return OrderedFlowGraph(fg, tuple((pos[a], pos[b]) for a, b in edges))


# --- series tensor ------------------------------------------------------------


def series_tensor(G: FlowGraph | LGraph, H: FlowGraph | LGraph) -> FlowGraph:
    """Glue the exit edge of ``G`` onto the entry edge of ``H``."""
    G, H = as_flow_graph(G), as_flow_graph(H)
    a, b = G.exit
    glue = {H.entry[0]: ("g", a), H.entry[1]: ("g", b)}

    def key(x: int):
        return glue.get(x, ("h", x))

    order = [("g", v) for v in G.graph.vertices]
    order.extend(key(x) for x in H.graph.vertices if x not in glue)
    edges = [(("g", u), ("g", v)) for u, v in G.edges if (u, v) != G.exit]
    edges.extend((key(u), key(v)) for u, v in H.edges)
    loops = {("g", v) for v in G.loops} | {key(x) for x in H.loops}
    # the target of G is now interior; keep the combined target last
    if order[-1] != key(H.target):
        order.remove(key(H.target))
        order.append(key(H.target))
    return _build(order, edges, loops)


# --- parallel tensor ----------------------------------------------------------

S_PLUS, T_PLUS, S_MINUS, T_MINUS = "s+", "t+", "s-", "t-"


def _adjacent(G: FlowGraph) -> bool:
    return G.entry[1] == G.exit[0]


def _identical(G: FlowGraph) -> bool:
    return G.entry == G.exit


def nondegenerate(G: FlowGraph) -> bool:
    """Entry and exit edges are neither identical nor adjacent."""
    return not _adjacent(G) and not _identical(G)


def phi(G: FlowGraph, side: int = 0) -> dict[int, object]:
    """Vertex map sending the entry/exit edges onto two abstract edges.

    When entry and exit coincide or touch, everything past the entry edge
    goes to the head of the first abstract edge.  Other vertices map to
    ``(side, j)`` so that the two factors of a tensor stay disjoint.
    """
    (se, te), (st, tt) = G.entry, G.exit
    out: dict[int, object] = {}
    for j in G.graph.vertices:
        if j == se:
            out[j] = S_PLUS
        elif j == te or (te == st and j == tt):
            out[j] = T_PLUS
        elif te != st and G.entry != G.exit and j == st:
            out[j] = S_MINUS
        elif te != st and G.entry != G.exit and j == tt:
            out[j] = T_MINUS
        else:
            out[j] = (side, j)
    return out


@dataclass(frozen=True)
class ParallelGluing:
    """Everything the parallel quotient is decided by."""

    phi: dict = field(hash=False)
    phi_prime: dict = field(hash=False)
    star: bool
    star_prime: bool
    star_j: dict = field(hash=False)
    star_jp: dict = field(hash=False)


def parallel_gluing(G: FlowGraph, H: FlowGraph) -> ParallelGluing:
    f, fp = phi(G, 0), phi(H, 1)
    star = nondegenerate(H)
    star_p = nondegenerate(G)

    def cond(F: FlowGraph, x: int, conclusion: bool) -> bool:
        hyp = _adjacent(F) and x in (F.entry[1], F.exit[1])
        return (not hyp) or conclusion

    sj = {x: cond(G, x, star) for x in G.graph.vertices}
    sjp = {x: cond(H, x, star_p) for x in H.graph.vertices}
    return ParallelGluing(f, fp, star, star_p, sj, sjp)


def _quotient(G: FlowGraph, H: FlowGraph, glue: ParallelGluing):
    nodes = [(0, x) for x in G.graph.vertices] + [(1, x) for x in H.graph.vertices]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            # keep the earliest node as representative
            if nodes.index(rb) < nodes.index(ra):
                ra, rb = rb, ra
            parent[rb] = ra

    gv, hv = list(G.graph.vertices), list(H.graph.vertices)
    for j in gv:
        for k in gv:
            if j < k and glue.phi[j] == glue.phi[k] and glue.star:
                union((0, j), (0, k))
    for j in hv:
        for k in hv:
            if j < k and glue.phi_prime[j] == glue.phi_prime[k] and glue.star_prime:
                union((1, j), (1, k))
    for j in gv:
        for k in hv:
            if glue.phi[j] == glue.phi_prime[k] and glue.star_j[j] and glue.star_jp[k]:
                union((0, j), (1, k))

    edges, loops = set(), set()
    for tag, F in ((0, G), (1, H)):
        for a, b in F.edges:
            ra, rb = find((tag, a)), find((tag, b))
            if ra == rb:
                continue  # diagonal images are dropped
            edges.add((ra, rb))
        loops.update(find((tag, x)) for x in F.loops)
    classes = []
    for v in nodes:
        r = find(v)
        if r not in classes:
            classes.append(r)
    return classes, edges, loops


def parallel_tensor(
    G: FlowGraph | LGraph, H: FlowGraph | LGraph, notices: list[Notice] | None = None
) -> FlowGraph:
    """Put ``G`` and ``H`` side by side, sharing entry and exit edges.

    Raises :class:`FlowGraphError` if the quotient is not a flow graph.
    When both factors are degenerate (entry and exit identical or
    adjacent) and not both are the unit, the quotient would have two
    targets; the smaller factor is collapsed instead (the first factor
    wins ties) and a notice is appended to ``notices``.
    """
    G, H = as_flow_graph(G), as_flow_graph(H)
    if not nondegenerate(G) and not nondegenerate(H) and not (_identical(G) and _identical(H)):
        keep = G if G.n >= H.n else H
        msg = Notice(DEGENERATE_TENSOR, f"{DEGENERATE_TENSOR} ({G.n} vs {H.n} vertices)")
        log.info(msg.message)
        if notices is not None:
            notices.append(msg)
        return keep
    classes, edges, loops = _quotient(G, H, parallel_gluing(G, H))
    s = [c for c in classes if not any(b == c for _, b in edges)]
    t = [c for c in classes if not any(a == c for a, _ in edges)]
    if len(s) == 1 and len(t) == 1:
        order = [s[0]] + [c for c in classes if c not in (s[0], t[0])] + [t[0]]
    else:
        order = classes
    try:
        return _build(order, edges, loops)
    except FlowGraphError as exc:
        raise FlowGraphError(exc.axiom, f"parallel quotient is not a flow graph: {exc}") from exc


# --- sub-flow graphs ----------------------------------------------------------


def subflow_vertices(G: FlowGraph | LGraph, e1: Edge, e2: Edge) -> tuple[int, ...] | None:
    """Vertices of the sub-flow graph in output order, or ``None`` if ``(e1, e2)`` is not a region."""
    G = as_flow_graph(G)
    e1, e2 = tuple(e1), tuple(e2)
    G.graph.check_edge(e1)
    G.graph.check_edge(e2)
    if e1 == e2:
        return e1
    if not any(r.e1 == e1 and r.e2 == e2 for r in sese_boundaries(G)):
        return None
    inner = sorted(interior(G, e1, e2) - {e1[0], e2[1]})
    return (e1[0], *inner, e2[1])


def subflow(G: FlowGraph | LGraph, e1: Edge, e2: Edge) -> FlowGraph | None:
    """The flow graph with entry edge ``e1`` and exit edge ``e2`` inside ``G``.

    ``e1 == e2`` gives the unit graph; a pair that is not a SESE region gives ``None``.
    """
    G = as_flow_graph(G)
    verts = subflow_vertices(G, e1, e2)
    if verts is None:
        return None
    e1, e2 = tuple(e1), tuple(e2)
    if e1 == e2:
        return unit_graph()
    # the boundary vertices get their own keys: in a region such as
    # ((a, b), (b, a)) the entry tail and the exit head are the same vertex
    src, tgt = ("source", e1[0]), ("target", e2[1])
    inner = list(verts[1:-1])
    inside = set(inner)
    edges = [e for e in G.edges if e[0] in inside and e[1] in inside]
    edges += [(src, e1[1]), (e2[0], tgt)]
    loops = [v for v in G.loops if v in inside]
    return _build([src, *inner, tgt], edges, loops)


# --- isomorphism --------------------------------------------------------------


def _nx(G: LGraph) -> nx.DiGraph:
    D = nx.DiGraph()
    for v in G.vertices:
        D.add_node(v, loop=v in G.loops)
    D.add_edges_from(G.edges)
    return D


def isomorphic(G: FlowGraph | LGraph, H: FlowGraph | LGraph) -> dict[int, int] | None:
    """A vertex bijection ``G -> H`` preserving edges and loops, or ``None``."""
    G = G.graph if isinstance(G, FlowGraph) else G
    H = H.graph if isinstance(H, FlowGraph) else H
    if max(G.n, H.n) > MAX_ISOMORPHISM_VERTICES:
        raise ValueError(f"isomorphism test limited to {MAX_ISOMORPHISM_VERTICES} vertices")
    if G.n != H.n or len(G.edges) != len(H.edges) or len(G.loops) != len(H.loops):
        return None
    m = DiGraphMatcher(_nx(G), _nx(H), node_match=lambda a, b: a["loop"] == b["loop"])
    for mapping in m.isomorphisms_iter():
        return dict(sorted(mapping.items()))
    return None
