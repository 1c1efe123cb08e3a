"""Absorption and the coarsening operator.

Coarsening collapses every leaf of the program structure tree: the
interior of the leaf's region is absorbed into the tail of its entry
edge, so the region shrinks to a single edge.  The coarsened graph is
kept on the original vertex set (absorbed vertices become isolated);
:func:`compact` drops them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .flowgraph import FlowGraph, as_flow_graph, interior
from .graph_core import LGraph, path_counts
from .sese import analyze


def identify(G: LGraph, j: int, k: int) -> LGraph:
    """Identify ``k`` with ``j`` on the same vertex set; ``k`` becomes isolated.

    Edges into or out of ``k`` are redirected to ``j``; an edge between
    ``j`` and ``k`` or a loop at ``k`` becomes a loop at ``j``.
    """
    G.check_vertex(j)
    G.check_vertex(k)
    if j == k:
        return G
    f = {v: v for v in G.vertices}
    f[k] = j
    edges, loops = set(), {f[v] for v in G.loops}
    for a, b in G.edges:
        fa, fb = f[a], f[b]
        if fa == fb:
            loops.add(fa)
        else:
            edges.add((fa, fb))
    return LGraph(G.n, frozenset(edges), frozenset(loops))


def absorb(G: LGraph, j: int, U) -> LGraph:
    """Absorb every vertex of ``U`` into ``j``, annihilating the loop at ``j`` after each step."""
    U = sorted(set(U))
    if j in U:
        raise ValueError(f"cannot absorb vertex {j} into itself")
    for k in U:
        H = identify(G, j, k)
        G = LGraph(H.n, H.edges, H.loops - {j})
    return G


@dataclass(frozen=True)
class CoarsenResult:
    """One round of coarsening.

    ``M`` and ``N`` are padded ``(n + 1, n + 1)`` arrays: ``M[v, k] == 1``
    when ``v`` is absorbed toward ``k`` and ``N = (I - M)^{-1}``.
    ``labels[i - 1]`` is the label (in the very first input) of vertex
    ``i`` of this round's input.
    """

    graph: LGraph
    J: tuple[int, ...]
    K: tuple[int, ...]
    L: tuple[int, ...]
    M: np.ndarray = field(repr=False)
    N: np.ndarray = field(repr=False)
    labels: tuple[int, ...] = ()

    def m_pairs(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(self.M)
        return sorted(zip(rows.tolist(), cols.tolist()))

    def absorbed_into(self, k: int) -> list[int]:
        """``L_k``: every vertex whose absorption chain ends at ``k``."""
        col = self.N[:, k].copy()
        col[k] = 0
        return [int(v) for v in np.nonzero(col)[0]]

    @property
    def is_trivial(self) -> bool:
        return not self.L


def _leaf_regions(FG: FlowGraph):
    info = analyze(FG)
    children = {c for _, c in info.pst}
    parents = {p for p, _ in info.pst}
    leaves = sorted(children - parents)
    whole = (FG.entry[1], FG.exit[0])
    out = []
    for te1 in leaves:
        exits = [w for v, w in info.msr if v == te1]
        if len(exits) != 1:
            raise RuntimeError(f"PST leaf {te1} has {len(exits)} minimal exits")
        se2 = exits[0]
        if (te1, se2) == whole:
            # the region spanning the whole graph is never collapsed
            continue
        (row,) = [r for r in info.bdry if r.vertex_pair == (te1, se2)]
        out.append(row)
    return out


def coarsen(FG: FlowGraph | LGraph, labels: tuple[int, ...] | None = None) -> CoarsenResult:
    FG = as_flow_graph(FG)
    G = FG.graph
    n = G.n
    M = np.zeros((n + 1, n + 1), dtype=np.int8)
    for row in _leaf_regions(FG):
        head = row.e1[0]
        for v in interior(FG, row.e1, row.e2):
            if v == head:
                raise RuntimeError(f"region {row} contains its own entry tail")
            M[v, head] = 1

    out_m = M[1:, 1:].sum(axis=1)
    in_m = M[1:, 1:].sum(axis=0)
    K = tuple(v for v in G.vertices if out_m[v - 1] == 0 and in_m[v - 1] > 0)
    L = tuple(v for v in G.vertices if out_m[v - 1] > 0)
    J = tuple(v for v in G.vertices if v not in K and v not in L)

    forest = LGraph(n, frozenset(zip(*[a.tolist() for a in np.nonzero(M)])))
    N = path_counts(forest)

    A = G.adjacency()
    A2 = A.copy()
    Jl = list(J)
    blocks = {}
    for k in K:
        col = N[:, k].copy()
        col[k] = 0
        blocks[k] = [k] + [int(v) for v in np.nonzero(col)[0]]
    for k in K:
        Lkp = blocks[k]
        if Jl:
            A2[Jl, k] = A[np.ix_(Jl, Lkp)].max(axis=1)
            A2[k, Jl] = A[np.ix_(Lkp, Jl)].max(axis=0)
        for k2 in K:
            if k2 != k:
                A2[k, k2] = A[np.ix_(Lkp, blocks[k2])].max()
        A2[k, k] = 0
    if L:
        A2[:, list(L)] = 0
        A2[list(L), :] = 0

    labels = tuple(G.vertices) if labels is None else tuple(labels)
    return CoarsenResult(LGraph.from_adjacency(A2), J, K, L, M, N, labels)


def coarsen_by_absorption(FG: FlowGraph | LGraph) -> LGraph:
    """Same graph as :func:`coarsen`, built by absorbing each ``L_k`` into ``k`` one vertex at a time."""
    res = coarsen(FG)
    G = as_flow_graph(FG).graph
    for k in res.K:
        G = absorb(G, k, res.absorbed_into(k))
    return G


def compact(res: CoarsenResult) -> tuple[LGraph, tuple[int, ...]]:
    """Drop the absorbed vertices; returns the graph on ``J | K`` and its original labels."""
    keep = sorted(res.J + res.K)
    sub, local = res.graph.induced(keep)
    return sub, tuple(res.labels[v - 1] for v in local)


def coarsen_to_fixpoint(FG: FlowGraph | LGraph, max_rounds: int = 1000) -> list[CoarsenResult]:
    """Coarsen repeatedly, compacting between rounds, until a round absorbs nothing.

    A round that absorbs nothing returns its input unchanged and is the
    last entry of the list; any other round strictly shrinks the graph.
    """
    FG = as_flow_graph(FG)
    G, labels = FG.graph, tuple(FG.graph.vertices)
    rounds = []
    for _ in range(max_rounds):
        res = coarsen(G, labels)
        rounds.append(res)
        if res.is_trivial:
            return rounds
        G, labels = compact(res)
    raise RuntimeError(f"no fixpoint within {max_rounds} rounds")


def fixpoint_graph(FG: FlowGraph | LGraph) -> LGraph:
    """The compacted graph at which coarsening stabilises."""
    return compact(coarsen_to_fixpoint(FG)[-1])[0]
