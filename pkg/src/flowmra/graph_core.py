"""Digraphs with distinguished loops.

Vertices are the integers ``1..n``.  Ordinary edges and loops are stored
separately: a loop at ``v`` never appears in the edge set, so in- and
out-degrees count only ordinary edges.  Matrix views are returned with
shape ``(n + 1, n + 1)`` and an unused row/column 0, so that ``A[j, k]``
addresses vertices ``j`` and ``k`` directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

Edge = tuple[int, int]

INT64_MAX = np.iinfo(np.int64).max


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertices."""


class CyclicGraphError(GraphError):
    """Raised when an operation that needs a DAG receives a cyclic graph."""


@dataclass(frozen=True)
class LGraph:
    """A finite digraph whose loops are kept apart from its edges."""

    n: int
    edges: frozenset[Edge] = frozenset()
    loops: frozenset[int] = frozenset()
    _succ: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _pred: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        succ: list[list[int]] = [[] for _ in range(n + 1)]
        pred: list[list[int]] = [[] for _ in range(n + 1)]
        edges = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"edge ({u},{v}) is a loop; pass it in `loops`")
            if not (0 < u <= n and 0 < v <= n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 1..{n}")
            edges.append((u, v))
            succ[u].append(v)
            pred[v].append(u)
        loops = frozenset(int(v) for v in self.loops)
        for v in loops:
            if not 0 < v <= n:
                raise GraphError(f"loop at {v} outside 1..{n}")
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "loops", loops)
        object.__setattr__(self, "_succ", tuple(tuple(sorted(x)) for x in succ))
        object.__setattr__(self, "_pred", tuple(tuple(sorted(x)) for x in pred))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Edge]) -> LGraph:
        """Build from ``(u, v)`` pairs where ``(v, v)`` denotes a loop."""
        edges, loops = set(), set()
        for u, v in pairs:
            if u == v:
                loops.add(v)
            else:
                edges.add((u, v))
        return cls(n, frozenset(edges), frozenset(loops))

    @classmethod
    def from_adjacency(cls, A: np.ndarray, padded: bool = True) -> LGraph:
        """Inverse of :meth:`adjacency`.  Set ``padded=False`` for a plain n x n array."""
        A = np.asarray(A)
        if padded:
            A = A[1:, 1:]
        n = A.shape[0]
        rows, cols = np.nonzero(A)
        return cls.from_pairs(n, ((int(j) + 1, int(k) + 1) for j, k in zip(rows, cols)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"vertex {v} outside 1..{self.n}")

    def check_edge(self, e: Edge) -> None:
        if tuple(e) not in self.edges:
            raise GraphError(f"edge {tuple(e)} is not in the graph")

    def successors(self, v: int) -> tuple[int, ...]:
        """Out-neighbours of ``v`` in ascending order, loop excluded."""
        return self._succ[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._pred[v]

    def has_loop(self, v: int) -> bool:
        return v in self.loops

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def pairs(self) -> list[Edge]:
        """Edges and loops as one sorted list, loops written ``(v, v)``."""
        return sorted(self.edges | {(v, v) for v in self.loops})

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n + 1, self.n + 1), dtype=np.int64)
        for u, v in self.edges:
            A[u, v] = 1
        for v in self.loops:
            A[v, v] = 1
        return A

    def without_edges(self, *remove: Edge) -> LGraph:
        return LGraph(self.n, self.edges - {tuple(e) for e in remove}, self.loops)

    def induced(self, keep: Iterable[int]) -> tuple[LGraph, tuple[int, ...]]:
        """Induced subgraph on ``keep`` relabelled to ``1..m`` in ascending order.

        Returns the subgraph and the tuple of original labels.
        """
        labels = tuple(sorted(set(keep)))
        new = {v: i for i, v in enumerate(labels, start=1)}
        edges = {(new[u], new[v]) for u, v in self.edges if u in new and v in new}
        loops = {new[v] for v in self.loops if v in new}
        return LGraph(len(labels), frozenset(edges), frozenset(loops)), labels

    def relabel(self, mapping: dict[int, int], n: int | None = None) -> LGraph:
        """Apply an injective vertex map."""
        n = self.n if n is None else n
        edges = {(mapping[u], mapping[v]) for u, v in self.edges}
        loops = {mapping[v] for v in self.loops}
        return LGraph(n, frozenset(edges), frozenset(loops))

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)


def degrees(G: LGraph, v: int) -> tuple[int, int, int]:
    """``(in-degree, out-degree, loop count)`` with the loop excluded from both degrees."""
    G.check_vertex(v)
    return len(G.predecessors(v)), len(G.successors(v)), int(v in G.loops)


def sources(G: LGraph) -> set[int]:
    return {v for v in G.vertices if not G.predecessors(v)}


def targets(G: LGraph) -> set[int]:
    return {v for v in G.vertices if not G.successors(v)}


def reverse(G: LGraph) -> LGraph:
    return LGraph(G.n, frozenset((v, u) for u, v in G.edges), G.loops)


@dataclass(frozen=True)
class DfsRecord:
    """Depth-first search bookkeeping, indexed by vertex (slot 0 unused).

    ``discover`` and ``finish`` share one clock starting at 1; unreached
    vertices keep 0 in both.  ``pred`` is the tree parent, 0 for the root
    and for unreached vertices.  ``depth`` is the tree depth, -1 if unreached.
    """

    root: int
    discover: tuple[int, ...]
    finish: tuple[int, ...]
    pred: tuple[int, ...]
    depth: tuple[int, ...]

    def order(self) -> list[int]:
        """Reached vertices in discovery order."""
        reached = [v for v in range(1, len(self.discover)) if self.discover[v]]
        return sorted(reached, key=lambda v: self.discover[v])

    def reached(self, v: int) -> bool:
        return self.discover[v] > 0

    def is_descendant(self, v: int, t: int) -> bool:
        """True when ``v`` lies in the DFS subtree rooted at ``t`` (``t`` included)."""
        return (
            self.discover[v] >= self.discover[t]
            and self.finish[v] <= self.finish[t]
            and self.reached(v)
        )

    def ancestors(self, t: int) -> list[int]:
        """Proper ancestors of ``t``, root first."""
        out = []
        cur = self.pred[t]
        while cur:
            out.append(cur)
            cur = self.pred[cur]
        return out[::-1]


def dfs(
    G: LGraph,
    root: int,
    undirected: bool = False,
    descending: bool = False,
) -> DfsRecord:
    """Deterministic depth-first search from ``root``.

    Neighbours are tried in ascending vertex order (descending when asked).
    With ``undirected`` the symmetrised adjacency is traversed.  Loops are
    ignored.
    """
    G.check_vertex(root)
    n = G.n
    if undirected:
        nbrs = [sorted(set(G.successors(v)) | set(G.predecessors(v))) for v in range(n + 1)]
    else:
        nbrs = [list(G.successors(v)) for v in range(n + 1)]
    if descending:
        nbrs = [nb[::-1] for nb in nbrs]

    discover = [0] * (n + 1)
    finish = [0] * (n + 1)
    pred = [0] * (n + 1)
    depth = [-1] * (n + 1)
    clock = 1
    discover[root] = clock
    depth[root] = 0
    stack = [(root, iter(nbrs[root]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if not discover[w]:
                clock += 1
                discover[w] = clock
                pred[w] = v
                depth[w] = depth[v] + 1
                stack.append((w, iter(nbrs[w])))
                break
        else:
            clock += 1
            finish[v] = clock
            stack.pop()
    return DfsRecord(root, tuple(discover), tuple(finish), tuple(pred), tuple(depth))


def reachable(G: LGraph, start: int, banned: frozenset[int] | set[int] = frozenset()) -> set[int]:
    """Vertices reachable from ``start`` along edges, never entering ``banned``."""
    if start in banned:
        return set()
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in G.successors(v):
            if w not in seen and w not in banned:
                seen.add(w)
                stack.append(w)
    return seen


def topological_order(G: LGraph) -> list[int]:
    """Kahn's algorithm; raises :class:`CyclicGraphError` on a cycle.

    Loops count as cycles here, since a loop makes the adjacency matrix
    non-nilpotent.
    """
    if G.loops:
        raise CyclicGraphError("graph is cyclic")
    indeg = [0] + [len(G.predecessors(v)) for v in G.vertices]
    ready = [v for v in G.vertices if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in G.successors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != G.n:
        raise CyclicGraphError("graph is cyclic")
    return order


def path_counts(G: LGraph) -> np.ndarray:
    """Number of directed paths between every ordered vertex pair of a DAG.

    This is ``(I - A)^{-1}`` computed exactly by dynamic programming over a
    topological order; ``N[j, j] == 1``.  Counts that do not fit in int64
    raise :class:`OverflowError` rather than wrapping.
    """
    order = topological_order(G)
    n = G.n
    counts = [[0] * (n + 1) for _ in range(n + 1)]
    for j in G.vertices:
        row = counts[j]
        row[j] = 1
        start = order.index(j)
        for v in order[start:]:
            if row[v]:
                for w in G.successors(v):
                    row[w] += row[v]
    N = np.zeros((n + 1, n + 1), dtype=np.int64)
    for j in G.vertices:
        for k in G.vertices:
            c = counts[j][k]
            if c > INT64_MAX:
                raise OverflowError(f"path count from {j} to {k} exceeds int64")
            N[j, k] = c
    return N
