"""Walk through region analysis, stretching and coarsening on the reference graph.

Run with ``python3 demos/regions_walkthrough.py``.
"""

from __future__ import annotations

from flowmra import (
    analyze,
    coarsen_to_fixpoint,
    compact,
    locally_maximal_regions,
    reference_graph,
    reference_subgraph,
    stretch,
    stretch_sese_correspondence,
    validate_flow_graph,
)
from flowmra.fixtures import REFERENCE_SUBGRAPH_LABELS


def main() -> None:
    fg = validate_flow_graph(reference_graph())
    print(f"reference graph: {fg.n} vertices, {len(fg.edges)} edges, loops at {sorted(fg.loops)}")

    info = analyze(fg)
    print(f"\n{len(info.bdry)} nondegenerate SESE regions (entry edge, exit edge):")
    for r in info.bdry:
        print(f"  {r.e1} -> {r.e2}")
    print(f"minimal regions as (t(e1), s(e2)): {list(info.msr)}")
    print(f"program structure tree edges: {list(info.pst)}")
    print("locally maximal regions:", [r.row() for r in locally_maximal_regions(fg)])

    # Stretching splits vertex 12 of the subgraph three ways so that its
    # loop sits inside a region of its own.
    res = stretch(reference_subgraph())
    labels = REFERENCE_SUBGRAPH_LABELS
    print(f"\nstretched subgraph has {res.graph.n} vertices; origin map:")
    print("  ", tuple(labels[o - 1] for o in res.origin))
    for c in stretch_sese_correspondence(reference_subgraph()).loops:
        print(f"   loop at {labels[c.vertex - 1]} -> region {c.region.e1}..{c.region.e2}, minimal={c.is_minimal}")

    # Coarsening collapses leaf regions until nothing changes.
    rounds = coarsen_to_fixpoint(fg)
    print(f"\ncoarsening reaches a fixpoint after {len(rounds)} rounds")
    for i, r in enumerate(rounds, start=1):
        g, orig = compact(r)
        edges = sorted((orig[a - 1], orig[b - 1]) for a, b in g.pairs())
        print(f"  round {i}: absorbed {[r.labels[v - 1] for v in r.L]}, result edges {edges}")


if __name__ == "__main__":
    main()
