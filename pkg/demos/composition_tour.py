"""Build flow graphs from smaller ones and take them apart again.

Run with ``python3 demos/composition_tour.py``.
"""

from __future__ import annotations

from flowmra import (
    LGraph,
    OrderedFlowGraph,
    fixpoint_graph,
    isomorphic,
    operad_compose,
    parallel_tensor,
    reference_graph,
    series_tensor,
    subflow,
    unit_graph,
    validate_flow_graph,
)
from flowmra.fixtures import chain


def show(title: str, g) -> None:
    print(f"{title}: n={g.n}, edges={g.graph.pairs()}")


def main() -> None:
    e = unit_graph()
    branch = validate_flow_graph(LGraph.from_pairs(6, [(1, 2), (2, 3), (2, 4), (3, 5), (4, 5), (5, 6)]))
    path = validate_flow_graph(chain(4))

    show("series branch * path", series_tensor(branch, path))
    show("parallel branch x path", parallel_tensor(branch, path))

    # Substitute a small looping graph for each edge of a base graph, then
    # coarsen the result back down.  This recovers the base only when the
    # base is loop-free and no interior vertex has exactly one edge in and
    # one edge out; a plain path is the simplest base where it fails.
    body = LGraph(4, frozenset({(1, 2), (2, 3), (3, 4)}), frozenset({3}))
    for title, pairs in [
        ("two-vertex cycle base", [(1, 2), (2, 3), (3, 2), (3, 4)]),
        ("path base", [(1, 2), (2, 3)]),
    ]:
        base = OrderedFlowGraph.of(validate_flow_graph(LGraph.from_pairs(max(map(max, pairs)), pairs)))
        composed = operad_compose(base, [OrderedFlowGraph.of(body)] * base.arity)
        back = fixpoint_graph(composed.fg)
        print(f"{title}: composite has {composed.fg.n} vertices;"
              f" coarsening recovers the base: {isomorphic(back, base.fg) is not None}")

    # A sub-flow graph is the piece of a graph between a region's two edges.
    fg = validate_flow_graph(reference_graph())
    show("sub-flow (8,12)..(16,19)", subflow(fg, (8, 12), (16, 19)))
    print("unit laws hold exactly:", series_tensor(e, fg).graph == fg.graph == series_tensor(fg, e).graph)


if __name__ == "__main__":
    main()
