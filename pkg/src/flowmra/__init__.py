"""Multiresolution analysis of flow graphs.

Dominance, single-entry/single-exit regions and the program structure
tree, stretching, coarsening, and operadic/series/parallel composition,
each paired with a brute-force oracle in :mod:`flowmra.oracle`.
"""

from .coarsen import CoarsenResult, absorb, coarsen, coarsen_to_fixpoint, compact, fixpoint_graph
from .compose import (
    OrderedFlowGraph,
    isomorphic,
    operad_compose,
    parallel_tensor,
    series_tensor,
    subflow,
    unit_graph,
)
from .dominance import (
    DominatorMatrix,
    dominator_matrix,
    dominator_tree,
    dominators_dataflow,
    edge_dominates,
    postdominator_matrix,
)
from .flowgraph import (
    FlowGraph,
    FlowGraphError,
    boundary,
    encapsulate,
    interior,
    validate_flow_graph,
)
from .fixtures import chain, reference_graph, reference_subgraph
from .graph_core import CyclicGraphError, GraphError, LGraph, degrees, dfs, path_counts, reverse
from .sese import (
    SeseRegion,
    analyze,
    locally_maximal_regions,
    minimal_regions,
    pst,
    sese_boundaries,
    subregion_closure_check,
)
from .stretch import StretchResult, stretch, stretch_sese_correspondence

__version__ = "0.1.0"

__all__ = [
    "CoarsenResult", "absorb", "coarsen", "coarsen_to_fixpoint", "compact", "fixpoint_graph",
    "OrderedFlowGraph", "isomorphic", "operad_compose", "parallel_tensor", "series_tensor",
    "subflow", "unit_graph",
    "DominatorMatrix", "dominator_matrix", "dominator_tree", "dominators_dataflow",
    "edge_dominates", "postdominator_matrix",
    "FlowGraph", "FlowGraphError", "boundary", "encapsulate", "interior", "validate_flow_graph",
    "chain", "reference_graph", "reference_subgraph",
    "CyclicGraphError", "GraphError", "LGraph", "degrees", "dfs", "path_counts", "reverse",
    "SeseRegion", "analyze", "locally_maximal_regions", "minimal_regions", "pst",
    "sese_boundaries", "subregion_closure_check",
    "StretchResult", "stretch", "stretch_sese_correspondence",
]
