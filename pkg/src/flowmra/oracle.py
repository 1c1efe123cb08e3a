"""Brute-force reference implementations.

Everything here is written for obviousness rather than speed and shares
no helper with the fast modules beyond :class:`LGraph` itself (the graph
generator, which is test plumbing rather than an oracle, uses the
encapsulation routine).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import networkx as nx

from .flowgraph import FlowGraph, encapsulate, validate_flow_graph
from .graph_core import Edge, LGraph

MAX_CYCLE_VERTICES = 12


class OracleSizeError(ValueError):
    """The input exceeds an oracle's size guard."""


class GeneratorError(RuntimeError):
    """The generator could not produce a valid graph within its retry budget."""


def _successor_lists(G: LGraph) -> dict[int, list[int]]:
    succ: dict[int, list[int]] = {v: [] for v in G.vertices}
    for u, w in G.edges:
        succ[u].append(w)
    return succ


def _reach(
    G: LGraph,
    start: int,
    skip_vertex: int = 0,
    skip_edges: frozenset = frozenset(),
    succ: dict[int, list[int]] | None = None,
) -> set[int]:
    if start == skip_vertex:
        return set()
    if succ is None:
        succ = _successor_lists(G)
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in succ[v]:
            if w != skip_vertex and (v, w) not in skip_edges and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def brute_dominators(G: LGraph, root: int) -> dict[int, frozenset[int]]:
    """Dominator sets of the vertices reachable from ``root``, by vertex deletion."""
    G.check_vertex(root)
    succ = _successor_lists(G)
    live = _reach(G, root, succ=succ)
    doms = {k: {k, root} for k in live}
    for j in live - {root}:
        without_j = _reach(G, root, skip_vertex=j, succ=succ)
        for k in live - without_j:
            doms[k].add(j)
    return {k: frozenset(d) for k, d in doms.items()}


def path_count_dominators(G: LGraph, root: int) -> dict[int, frozenset[int]]:
    """Dominators on a DAG from path counts: ``j`` dominates ``k`` iff
    ``N[root][k] == N[root][j] * N[j][k]`` with ``N[root][k] > 0``.
    """
    order: list[int] = []
    indeg = {v: 0 for v in G.vertices}
    for _, w in G.edges:
        indeg[w] += 1
    ready = sorted(v for v, d in indeg.items() if d == 0)
    while ready:
        v = ready.pop()
        order.append(v)
        for u, w in sorted(G.edges):
            if u == v:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
    if len(order) != G.n or G.loops:
        raise ValueError("path-count criterion needs an acyclic graph")

    def counts_from(j: int) -> dict[int, int]:
        c = {v: 0 for v in G.vertices}
        c[j] = 1
        for v in order:
            for u, w in G.edges:
                if u == v:
                    c[w] += c[v]
        return c

    N = {j: counts_from(j) for j in G.vertices}
    out = {}
    for k in G.vertices:
        if N[root][k] == 0:
            continue
        out[k] = frozenset(j for j in G.vertices if N[root][k] == N[root][j] * N[j][k])
    return out


def _walk_avoids(G: LGraph, start: int, avoid: Edge, goal: Edge, max_len: int) -> bool:
    """Is there a walk of at most ``max_len`` edges from ``start`` whose last
    edge is ``goal`` and which never uses ``avoid`` before it?"""
    frontier = {start}
    seen_layers = [frontier]
    for _ in range(max_len - 1):
        nxt = {w for v in frontier for (u, w) in G.edges if u == v and (u, w) != avoid}
        if nxt == frontier or nxt in seen_layers:
            break
        seen_layers.append(nxt)
        frontier = nxt
    return any(goal[0] in layer for layer in seen_layers)


def brute_edge_dominance(FG: FlowGraph, e1: Edge, e2: Edge) -> bool:
    """Every walk from the source that traverses ``e2`` traverses ``e1`` no later.

    Walks are enumerated layer by layer up to length ``2 |E|``.
    """
    G = FG.graph
    e1, e2 = tuple(e1), tuple(e2)
    for e in (e1, e2):
        if e not in G.edges:
            raise ValueError(f"edge {e} is not in the graph")
    if e1 == e2:
        return True
    return not _walk_avoids(G, FG.source, e1, e2, 2 * len(G.edges))


def brute_edge_postdominance(FG: FlowGraph, e1: Edge, e2: Edge) -> bool:
    """``e1`` postdominates ``e2``: every walk from ``e2`` to the target traverses ``e1``."""
    G = FG.graph
    e1, e2 = tuple(e1), tuple(e2)
    for e in (e1, e2):
        if e not in G.edges:
            raise ValueError(f"edge {e} is not in the graph")
    if e1 == e2:
        return True
    R = LGraph(G.n, frozenset((w, u) for u, w in G.edges), G.loops)
    return not _walk_avoids(R, FG.target, (e1[1], e1[0]), (e2[1], e2[0]), 2 * len(G.edges))


def enumerate_simple_cycles(G: LGraph, max_vertices: int = MAX_CYCLE_VERTICES) -> list[tuple[Edge, ...]]:
    """All simple directed cycles as edge sequences; a loop is the cycle ``((v, v),)``.

    ``max_vertices`` is the size guard; raise it deliberately for sparse
    fixtures whose cycle count is known to be small.
    """
    if G.n > max_vertices:
        raise OracleSizeError(f"cycle enumeration limited to {max_vertices} vertices, got {G.n}")
    D = nx.DiGraph()
    D.add_nodes_from(G.vertices)
    D.add_edges_from(G.edges)
    D.add_edges_from((v, v) for v in G.loops)
    cycles = []
    for nodes in nx.simple_cycles(D):
        k = len(nodes)
        cycles.append(tuple((nodes[i], nodes[(i + 1) % k]) for i in range(k)))
    return sorted(cycles)


def _cycle_condition(cycles: list[tuple[Edge, ...]], e1: Edge, e2: Edge) -> bool:
    return all((e1 in c) == (e2 in c) for c in cycles)


def is_sese_oracle(
    FG: FlowGraph,
    e1: Edge,
    e2: Edge,
    cycles: list | None = None,
    max_vertices: int = MAX_CYCLE_VERTICES,
) -> bool:
    """Definitional SESE test: ``e1 dom e2``, ``e2 pdom e1`` and the cycle condition."""
    e1, e2 = tuple(e1), tuple(e2)
    if e1 == e2:
        return True
    if cycles is None:
        cycles = enumerate_simple_cycles(FG.graph, max_vertices)
    return (
        brute_edge_dominance(FG, e1, e2)
        and brute_edge_postdominance(FG, e2, e1)
        and _cycle_condition(cycles, e1, e2)
    )


def sese_pairs_oracle(FG: FlowGraph, max_vertices: int = MAX_CYCLE_VERTICES) -> set[tuple[Edge, Edge]]:
    """Every ordered pair of distinct edges that passes :func:`is_sese_oracle`."""
    cycles = enumerate_simple_cycles(FG.graph, max_vertices)
    edges = sorted(FG.graph.edges)
    return {
        (a, b)
        for a in edges
        for b in edges
        if a != b and is_sese_oracle(FG, a, b, cycles)
    }


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    max_vertices: int = 10
    edge_density: float = 0.25
    loop_probability: float = 0.15
    max_attempts: int = 1000

    def __post_init__(self) -> None:
        if self.max_vertices < 2:
            raise ValueError("max_vertices must be at least 2")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be positive")
        for name in ("edge_density", "loop_probability"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")


def _prune(G: LGraph) -> LGraph | None:
    srcs = [v for v in G.vertices if not G.predecessors(v)]
    tgts = [v for v in G.vertices if not G.successors(v)]
    s, t = srcs[0], tgts[0]
    fwd = _reach(G, s)
    R = LGraph(G.n, frozenset((w, u) for u, w in G.edges), G.loops)
    keep = fwd & _reach(R, t)
    if t not in fwd:
        return None
    sub, _ = G.induced(keep)
    return sub


def generate_flow_graph(cfg: GeneratorConfig) -> FlowGraph:
    """Deterministic random flow graph with at most ``cfg.max_vertices`` vertices."""
    rng = random.Random(cfg.seed)
    for _ in range(cfg.max_attempts):
        n0 = rng.randint(1, max(1, cfg.max_vertices - 2))
        edges = frozenset(
            (u, v)
            for u in range(1, n0 + 1)
            for v in range(1, n0 + 1)
            if u != v and rng.random() < cfg.edge_density
        )
        G = encapsulate(LGraph(n0, edges)).graph
        G = _prune(G)
        if G is None:
            continue
        G = encapsulate(G).graph
        if G.n > cfg.max_vertices:
            continue
        FG = validate_flow_graph(G)
        inner = [v for v in G.vertices if v not in (FG.source, FG.target)]
        loops = frozenset(v for v in inner if rng.random() < cfg.loop_probability)
        return validate_flow_graph(LGraph(G.n, G.edges, loops))
    raise GeneratorError(f"no valid flow graph after {cfg.max_attempts} attempts (seed {cfg.seed})")
