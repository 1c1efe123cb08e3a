"""Reference graphs with hand-checked analyses, used by tests and demos."""

from __future__ import annotations

from .graph_core import LGraph

# 26 edges and 2 loops (at 7 and 12) on 20 vertices.
_REFERENCE_PAIRS = [
    (1, 2), (5, 2), (2, 3), (3, 4), (9, 5), (7, 6), (7, 7), (8, 7), (4, 8),
    (6, 9), (13, 9), (11, 10), (12, 11), (14, 11), (8, 12), (12, 12), (15, 12),
    (16, 12), (17, 13), (10, 14), (11, 15), (14, 15), (12, 16), (15, 16),
    (18, 17), (19, 18), (16, 19), (19, 20),
]

# original labels of the vertices kept in the reduced reference subgraph
REFERENCE_SUBGRAPH_LABELS = (8, 10, 11, 12, 14, 15, 16, 19)


def reference_graph() -> LGraph:
    """A 20-vertex flow graph with nested loops, branches and two self-loops."""
    return LGraph.from_pairs(20, _REFERENCE_PAIRS)


def reference_subgraph() -> LGraph:
    """The reference graph restricted to :data:`REFERENCE_SUBGRAPH_LABELS`, relabelled 1..8."""
    sub, _ = reference_graph().induced(REFERENCE_SUBGRAPH_LABELS)
    return sub


def nonplanar_stretch_graph() -> LGraph:
    """Seven vertices where only vertex 6 has both in- and out-degree above one."""
    return LGraph.from_pairs(
        7,
        [(1, 2), (2, 3), (2, 5), (2, 6), (3, 4), (4, 5), (4, 6), (5, 7), (6, 3), (6, 5)],
    )


def chain(k: int) -> LGraph:
    """Path with ``k`` edges on vertices ``1..k+1``."""
    return LGraph(k + 1, frozenset((i, i + 1) for i in range(1, k + 1)))


def unit() -> LGraph:
    """The single edge ``1 -> 2``."""
    return chain(1)
