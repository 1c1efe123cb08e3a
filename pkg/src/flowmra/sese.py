"""Single-entry/single-exit regions and the program structure tree.

Regions are found by cycle equivalence in the undirected multigraph of
the flow graph plus a return edge ``target -> source``: every tree edge of
a depth-first spanning tree gets a *bracket* (the back edges spanning it),
two tree edges are equivalent when their brackets coincide, and a tree
edge pairs with a back edge when that back edge is its only bracket.
Equivalent pairs are then ordered by dominance.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Literal

from .dominance import dominator_matrix
from .flowgraph import FlowGraph, as_flow_graph, interior
from .graph_core import Edge, LGraph, dfs

BracketMode = Literal["oriented", "matrix"]


class SeseError(RuntimeError):
    """Internal inconsistency in the region pipeline."""


@dataclass(frozen=True, order=True)
class SeseRegion:
    e1: Edge
    e2: Edge

    @property
    def degenerate(self) -> bool:
        return self.e1 == self.e2

    @property
    def vertex_pair(self) -> tuple[int, int]:
        """``(t(e1), s(e2))``, which names a nondegenerate region unambiguously."""
        return self.e1[1], self.e2[0]

    def row(self) -> tuple[int, int, int, int]:
        return (*self.e1, *self.e2)

    @classmethod
    def from_row(cls, row: Iterable[int]) -> SeseRegion:
        a, b, c, d = row
        return cls((a, b), (c, d))


def _sort_rows(regions: list[SeseRegion]) -> list[SeseRegion]:
    # stable, keyed on (t(e1), s(e2)) only
    return sorted(regions, key=lambda r: r.vertex_pair)


def sese_boundaries(
    FG: FlowGraph | LGraph,
    descending: bool = False,
    brackets: BracketMode = "oriented",
) -> list[SeseRegion]:
    """All nondegenerate SESE regions, sorted by ``(t(e1), s(e2))``.

    ``descending`` flips the neighbour order of the spanning DFS; the
    region set does not depend on it.

    ``brackets="matrix"`` reproduces the bracket matrices of the classic dense
    reference procedure, which weight each back edge by the directed
    adjacency in *both* orientations.  When a tree edge and a back edge join
    the same two vertices in opposite directions, that double counting
    hides a tree edge whose only bracket is its reverse twin, so regions
    like ``((a, b), (b, a))`` are lost.  The default ``"oriented"`` mode
    counts each back edge once, in its own direction.
    """
    if brackets not in ("oriented", "matrix"):
        raise ValueError(f"unknown bracket mode {brackets!r}")
    FG = as_flow_graph(FG)
    G = FG.graph
    s, t = FG.source, FG.target
    n = G.n
    S = set(G.edges) | {(t, s)}
    mult: Counter[frozenset[int]] = Counter(frozenset(e) for e in S)

    U = LGraph(n, frozenset(S))
    rec = dfs(U, s, undirected=True, descending=descending)
    D = dominator_matrix(G, s)

    tree_children = [v for v in G.vertices if v != s]
    tree_pairs = [(rec.pred[v], v) for v in tree_children]
    back = Counter(mult)
    for p, v in tree_pairs:
        back[frozenset((p, v))] -= 1

    # lower-triangle scan in column-major order, repeated by multiplicity
    back_pairs: list[tuple[int, int]] = []
    for key in sorted(back, key=lambda k: (min(k), max(k))):
        lo, hi = min(key), max(key)
        back_pairs.extend([(hi, lo)] * back[key])

    # orient every undirected edge against the directed multiset S
    remaining = Counter(S)
    oriented: list[Edge] = []
    for a, b in tree_pairs + back_pairs:
        if remaining[(a, b)] > 0:
            e = (a, b)
        elif remaining[(b, a)] > 0:
            e = (b, a)
        else:
            raise SeseError(f"cannot orient undirected edge {{{a},{b}}}")
        remaining[e] -= 1
        oriented.append(e)
    n_tree = len(tree_pairs)
    tree_edges = oriented[:n_tree]
    back_edges = oriented[n_tree:]

    def bracket_of(child: int) -> frozenset:
        anc = set(rec.ancestors(child))
        desc = {v for v in G.vertices if rec.is_descendant(v, child)}
        if brackets == "oriented":
            crossing = Counter(
                e
                for e in back_edges
                if (e[0] in anc and e[1] in desc) or (e[1] in anc and e[0] in desc)
            )
        else:
            crossing = Counter()
            for key, m in back.items():
                if m <= 0:
                    continue
                a, d = tuple(key)
                if a in desc and d in anc:
                    a, d = d, a
                if a in anc and d in desc:
                    for e in ((a, d), (d, a)):
                        if e in S:
                            crossing[e] += m
        return frozenset(crossing.items())

    bracket = [bracket_of(v) for v in tree_children]

    # equivalent pairs as (earlier index, later index) into `oriented`
    ce: list[tuple[int, int]] = []
    for i in range(n_tree):
        for j in range(i + 1, n_tree):
            if bracket[i] == bracket[j]:
                ce.append((i, j))
    for i in range(n_tree):
        br = bracket[i]
        if len(br) == 1:
            (e, m), = br
            if m == 1:
                hits = [n_tree + k for k, b in enumerate(back_edges) if b == e]
                if len(hits) != 1:
                    raise SeseError(f"bracket {e} matches {len(hits)} back edges")
                ce.append((i, hits[0]))
    # column-major order of the sparse equivalence matrix
    ce.sort(key=lambda p: (p[1], p[0]))

    rows: list[SeseRegion] = []
    for i, j in ce:
        f1, f2 = oriented[i], oriented[j]
        if D(f1[0], f2[0]):
            if f2[1] != s:
                rows.append(SeseRegion(f1, f2))
        elif D(f2[0], f1[0]):
            if f1[1] != s:
                rows.append(SeseRegion(f2, f1))
        else:
            raise SeseError(f"edges {f1} and {f2} are cycle equivalent but unordered by dominance")
    return _sort_rows(rows)


def _discovery_rank(FG: FlowGraph) -> dict[int, int]:
    rec = dfs(FG.graph, FG.source)
    return {v: i for i, v in enumerate(rec.order(), start=1)}


def minimal_regions(FG: FlowGraph | LGraph, bdry: list[SeseRegion] | None = None) -> list[tuple[int, int]]:
    """Vertex pairs ``(t(e1), s(e2))`` of the minimal regions, sorted.

    For each entry-edge target the exit whose tail is discovered first by
    a directed DFS from the source is kept.  The pair ``(source, target)``
    stands for the phantom region around the whole graph.
    """
    FG = as_flow_graph(FG)
    bdry = sese_boundaries(FG) if bdry is None else bdry
    rank = _discovery_rank(FG)
    out = {(FG.source, FG.target)}
    exits: dict[int, list[int]] = {}
    for r in bdry:
        exits.setdefault(r.e1[1], []).append(r.e2[0])
    for v, ws in exits.items():
        best = min(rank[w] for w in ws)
        out.update((v, w) for w in ws if rank[w] == best)
    return sorted(out)


def minimal_region_edges(FG: FlowGraph | LGraph, bdry: list[SeseRegion] | None = None) -> list[SeseRegion]:
    """The rows of ``bdry`` whose vertex pair is a minimal region."""
    FG = as_flow_graph(FG)
    bdry = sese_boundaries(FG) if bdry is None else bdry
    pairs = set(minimal_regions(FG, bdry))
    return [r for r in bdry if r.vertex_pair in pairs]


def pst(FG: FlowGraph | LGraph, bdry: list[SeseRegion] | None = None) -> list[tuple[int, int]]:
    """Program structure tree as sorted ``(parent, child)`` label pairs.

    A node is labelled by the target of its region's entry edge; the
    root is the source vertex.  One directed DFS assigns each vertex its
    innermost enclosing region (``current``) and that region's parent.
    """
    FG = as_flow_graph(FG)
    bdry = sese_boundaries(FG) if bdry is None else bdry
    entries = {r.e1 for r in bdry}
    exits = {r.e2 for r in bdry}
    rec = dfs(FG.graph, FG.source)
    s = FG.source
    parent = {v: 0 for v in FG.graph.vertices}
    current = {v: 0 for v in FG.graph.vertices}
    current[s] = s
    for v in rec.order()[1:]:
        u = rec.pred[v]
        entering = (u, v) in entries
        exiting = (u, v) in exits
        if entering and exiting:
            parent[v] = parent[u]
            current[v] = v
        elif entering:
            parent[v] = current[u]
            current[v] = v
        elif exiting:
            parent[v] = parent[parent[u] or s]
            current[v] = parent[u]
        else:
            parent[v] = parent[u]
            current[v] = current[u]
    tree = {
        (parent[v], current[v])
        for v in FG.graph.vertices
        if v not in (s, FG.target) and parent[v]
    }
    return sorted(tree)


@dataclass(frozen=True)
class SeseAnalysis:
    """Everything the region pipeline produces for one flow graph.

    ``s_relation`` holds the edge pairs ``(e1, e2)`` of nondegenerate
    regions, i.e. the support of the 0/1 region matrix over edges.
    """

    bdry: tuple[SeseRegion, ...]
    msr: tuple[tuple[int, int], ...]
    pst: tuple[tuple[int, int], ...]
    s_relation: frozenset[tuple[Edge, Edge]]

    def rows(self) -> list[tuple[int, int, int, int]]:
        return [r.row() for r in self.bdry]


def analyze(FG: FlowGraph | LGraph) -> SeseAnalysis:
    FG = as_flow_graph(FG)
    bdry = sese_boundaries(FG)
    return SeseAnalysis(
        tuple(bdry),
        tuple(minimal_regions(FG, bdry)),
        tuple(pst(FG, bdry)),
        frozenset((r.e1, r.e2) for r in bdry),
    )


def _weak_components(pairs: Iterable[tuple[Edge, Edge]]) -> list[set[Edge]]:
    adj: dict[Edge, set[Edge]] = {}
    for a, b in pairs:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen: set[Edge] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def is_transitive_tournament(nodes: set[Edge], pairs: set[tuple[Edge, Edge]]) -> bool:
    """Exactly one arc between each node pair, no self-arcs, and transitive."""
    for a in nodes:
        if (a, a) in pairs:
            return False
        for b in nodes:
            if a < b and ((a, b) in pairs) == ((b, a) in pairs):
                return False
    for a, b in pairs:
        for c in nodes:
            if (b, c) in pairs and (a, c) not in pairs:
                return False
    return True


def locally_maximal_regions(FG: FlowGraph | LGraph, bdry: list[SeseRegion] | None = None) -> list[SeseRegion]:
    """One region per weak component of the region relation over edges.

    Each component is a transitive tournament; its unique source edge and
    unique sink edge delimit the region.
    """
    FG = as_flow_graph(FG)
    bdry = sese_boundaries(FG) if bdry is None else bdry
    pairs = {(r.e1, r.e2) for r in bdry}
    out = []
    for comp in _weak_components(pairs):
        indeg = {e: 0 for e in comp}
        outdeg = {e: 0 for e in comp}
        for a, b in pairs:
            if a in comp:
                outdeg[a] += 1
                indeg[b] += 1
        first = [e for e in comp if indeg[e] == 0]
        last = [e for e in comp if outdeg[e] == 0]
        if len(first) != 1 or len(last) != 1:
            raise SeseError(f"region component {sorted(comp)} is not a tournament")
        out.append(SeseRegion(first[0], last[0]))
    return _sort_rows(sorted(out))


def find_closure_violation(regions: Iterable[SeseRegion]) -> tuple | None:
    """First counterexample to region transitivity or chain decomposition.

    Returns ``None`` when ``(a, b), (b, c)`` regions always imply ``(a, c)``
    and every region splits into a chain of minimal regions, where a
    region is minimal if no edge sits strictly between its ends.
    Otherwise returns ``("transitivity", r1, r2)`` or
    ``("decomposition", r)``.
    """
    regions = [r for r in regions if not r.degenerate]
    pairs = {(r.e1, r.e2) for r in regions}
    by_entry: dict[Edge, list[Edge]] = {}
    for a, b in pairs:
        by_entry.setdefault(a, []).append(b)
    for a, b in sorted(pairs):
        for c in sorted(by_entry.get(b, [])):
            if c != a and (a, c) not in pairs:
                return ("transitivity", SeseRegion(a, b), SeseRegion(b, c))
    edges = {x for p in pairs for x in p}
    minimal = {
        (a, b)
        for a, b in pairs
        if not any((a, m) in pairs and (m, b) in pairs for m in edges if m not in (a, b))
    }
    step: dict[Edge, set[Edge]] = {}
    for a, b in minimal:
        step.setdefault(a, set()).add(b)
    for a, b in sorted(pairs):
        frontier, seen = [a], {a}
        while frontier:
            x = frontier.pop()
            for y in step.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if b not in seen:
            return ("decomposition", SeseRegion(a, b))
    return None


def subregion_closure_check(regions: Iterable[SeseRegion]) -> bool:
    return find_closure_violation(regions) is None


def region_interior(FG: FlowGraph | LGraph, region: SeseRegion) -> set[int]:
    return interior(FG, region.e1, region.e2)
