"""Dominance and postdominance by iterative dataflow."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_core import Edge, LGraph, reachable, reverse


def dominators_dataflow(G: LGraph, root: int) -> dict[int, frozenset[int]]:
    """Dominator set of every vertex by round-robin fixed-point iteration.

    Solves ``out(B) = {B} | intersection(out(P) for P in preds(B))`` with
    ``out(root) = {root}``, sweeping vertices in ascending order until a
    full sweep changes nothing.  Vertices unreachable from ``root`` keep
    the top element (all vertices); mask them out before use.
    """
    G.check_vertex(root)
    top = frozenset(G.vertices)
    out = {v: top for v in G.vertices}
    out[root] = frozenset({root})
    changed = True
    while changed:
        changed = False
        for b in G.vertices:
            if b == root:
                continue
            acc = top
            for p in G.predecessors(b):
                acc = acc & out[p]
            new = acc | {b}
            if new != out[b]:
                out[b] = new
                changed = True
    return out


def dominator_tree(G: LGraph, root: int) -> dict[int, int]:
    """Immediate dominator of every reachable vertex other than ``root``.

    The immediate dominator of ``k`` is the strict dominator with the
    largest dominator set of its own (dominators of ``k`` form a chain).
    """
    sets = dominators_dataflow(G, root)
    live = reachable(G, root)
    idom = {}
    for k in sorted(live - {root}):
        strict = sets[k] - {k}
        idom[k] = max(strict, key=lambda j: len(sets[j]))
    return idom


@dataclass(frozen=True)
class DominatorMatrix:
    """0/1 dominance relation; ``D[j, k] == 1`` iff ``j`` dominates ``k``.

    ``D`` has shape ``(n + 1, n + 1)`` with row/column 0 unused.  Rows and
    columns of vertices unreachable from ``root`` are zero.
    """

    D: np.ndarray
    root: int

    def __call__(self, j: int, k: int) -> bool:
        return bool(self.D[j, k])

    def dominators_of(self, k: int) -> set[int]:
        return {int(j) for j in np.nonzero(self.D[:, k])[0]}


def dominator_matrix(G: LGraph, root: int) -> DominatorMatrix:
    sets = dominators_dataflow(G, root)
    live = reachable(G, root)
    D = np.zeros((G.n + 1, G.n + 1), dtype=np.int8)
    for k in live:
        for j in sets[k]:
            D[j, k] = 1
    return DominatorMatrix(D, root)


def postdominator_matrix(G: LGraph, root_of_reverse: int) -> DominatorMatrix:
    """Dominance in the reversed graph.

    ``P[k, j] == 1`` iff ``k`` postdominates ``j``, i.e. every path from
    ``j`` to ``root_of_reverse`` passes through ``k``.
    """
    return dominator_matrix(reverse(G), root_of_reverse)


def edge_dominates(G: LGraph, D: DominatorMatrix, e1: Edge, e2: Edge) -> bool:
    """Whether every walk from the root that traverses ``e2`` crosses ``e1`` first.

    ``D`` supplies a cheap necessary condition (both ends of ``e1`` must
    dominate the tail of ``e2``); the decision itself is a reachability
    check with both edges removed.
    """
    e1, e2 = tuple(e1), tuple(e2)
    G.check_edge(e1)
    G.check_edge(e2)
    if e1 == e2:
        return True
    a, b = e1
    c = e2[0]
    if not (D(a, c) and D(b, c)):
        return False
    if c == D.root:
        return False
    return c not in reachable(G.without_edges(e1, e2), D.root)
