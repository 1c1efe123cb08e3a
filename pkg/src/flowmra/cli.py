"""Command-line front end.

Every subcommand reads one or more graphs (edge list or JSON document),
runs an analysis and writes a single JSON document (sorted keys) or a
dot file to standard output.  Exit codes: 0 success, 1 invalid input
graph or failed analysis precondition, 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .coarsen import CoarsenResult, coarsen, coarsen_to_fixpoint
from .compose import OrderedFlowGraph, operad_compose, parallel_tensor, series_tensor, subflow, subflow_vertices
from .dominance import dominator_matrix, dominator_tree
from .flowgraph import FlowGraphError, encapsulate, validate_flow_graph
from .graph_core import GraphError, LGraph
from .oracle import GeneratorConfig, generate_flow_graph
from .sese import analyze, locally_maximal_regions
from .stretch import stretch

COMMANDS = ("encapsulate", "validate", "dominators", "sese", "pst", "stretch", "coarsen", "compose", "subflow")
GRAPH_COMMANDS = {"encapsulate", "stretch", "coarsen", "compose", "subflow"}


class UsageError(Exception):
    pass


# --- formats ------------------------------------------------------------------


def parse_edgelist(text: str) -> LGraph:
    """Parse ``u v`` lines (1-based; ``v v`` is a loop; ``#`` starts a comment).

    An optional ``n <count>`` line fixes the vertex count, which otherwise
    is the largest index seen.
    """
    pairs: set[tuple[int, int]] = set()
    n_header = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            n_header = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two vertex indices, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 1 or v < 1:
            raise GraphError(f"line {lineno}: vertex index below 1 in {raw!r}")
        pairs.add((u, v))
    top = max((max(p) for p in pairs), default=0)
    n = top if n_header is None else n_header
    if n < top:
        raise GraphError(f"header declares {n} vertices but index {top} appears")
    return LGraph.from_pairs(n, pairs)


def serialize_edgelist(G: LGraph) -> str:
    lines = [f"n {G.n}"] + [f"{u} {v}" for u, v in G.pairs()]
    return "\n".join(lines) + "\n"


def graph_document(G: LGraph) -> dict:
    return {
        "n": G.n,
        "edges": [list(e) for e in G.sorted_edges()],
        "loops": sorted(G.loops),
    }


def parse_document(text: str) -> LGraph:
    try:
        doc = json.loads(text)
        n = int(doc["n"])
        edges = frozenset((int(u), int(v)) for u, v in doc.get("edges", []))
        loops = frozenset(int(v) for v in doc.get("loops", []))
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph document: {exc}") from None
    return LGraph(n, edges, loops)


def serialize_document(G: LGraph) -> str:
    return dump(graph_document(G))


def dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def to_dot(G: LGraph, name: str = "G") -> str:
    out = [f"digraph {name} {{"]
    out += [f"  {v};" for v in G.vertices]
    out += [f"  {u} -> {v};" for u, v in G.pairs()]
    out.append("}")
    return "\n".join(out) + "\n"


# --- command implementations --------------------------------------------------


def _pairs(xs) -> list[list[int]]:
    return [list(x) for x in xs]


def _coarsen_doc(res: CoarsenResult) -> dict:
    lab = res.labels

    def up(v: int) -> int:
        return lab[v - 1]

    return {
        "A": sorted([up(a), up(b)] for a, b in res.graph.pairs()),
        "J": [up(v) for v in res.J],
        "K": [up(v) for v in res.K],
        "L": [up(v) for v in res.L],
        "M": sorted([up(a), up(b)] for a, b in res.m_pairs()),
    }


def _edge_arg(text: str | None, flag: str) -> tuple[int, int]:
    if text is None:
        raise UsageError(f"{flag} U,V is required")
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} expects U,V, got {text!r}") from None
    return u, v


def _execute(args: argparse.Namespace, graphs: list[LGraph], err: io.StringIO) -> tuple[dict | None, LGraph | None]:
    """Returns a JSON document and, for graph-valued commands, the graph for dot output."""
    cmd = args.command
    G = graphs[0]
    if cmd == "encapsulate":
        res = encapsulate(G)
        for note in res.notices:
            err.write(f"notice: {note.message}\n")
        doc = graph_document(res.graph)
        doc["index"] = list(res.index)
        doc["notices"] = [note.message for note in res.notices]
        return doc, res.graph
    if cmd == "validate":
        FG = validate_flow_graph(G)
        return {
            "valid": True,
            "source": FG.source,
            "target": FG.target,
            "entry": list(FG.entry),
            "exit": list(FG.exit),
        }, None
    if cmd == "dominators":
        root = args.root
        if root is None:
            root = validate_flow_graph(G).source
        G.check_vertex(root)
        D = dominator_matrix(G, root)
        pairs = [[j, k] for j in G.vertices for k in G.vertices if D(j, k)]
        idom = dominator_tree(G, root)
        return {"root": root, "D": pairs, "idom": [[k, idom[k]] for k in sorted(idom)]}, None
    if cmd in ("sese", "pst"):
        FG = validate_flow_graph(G)
        info = analyze(FG)
        doc = {"bdry": _pairs(info.rows()), "msr": _pairs(info.msr), "pst": _pairs(info.pst)}
        if cmd == "sese":
            doc["locally_maximal"] = [list(r.row()) for r in locally_maximal_regions(FG, list(info.bdry))]
        return doc, None
    if cmd == "stretch":
        res = stretch(validate_flow_graph(G))
        return {"A": _pairs(res.graph.pairs()), "n": res.graph.n, "ofgv": list(res.origin)}, res.graph
    if cmd == "coarsen":
        FG = validate_flow_graph(G)
        if args.iterate:
            rounds = coarsen_to_fixpoint(FG)
            return {"rounds": [_coarsen_doc(r) for r in rounds]}, rounds[-1].graph
        res = coarsen(FG)
        return _coarsen_doc(res), res.graph
    if cmd == "compose":
        op = args.op or "series"
        fgs = [validate_flow_graph(g) for g in graphs]
        if op in ("series", "parallel"):
            if len(fgs) != 2:
                raise UsageError(f"--op {op} needs exactly two --input graphs")
            notices: list = []
            if op == "series":
                R = series_tensor(fgs[0], fgs[1])
            else:
                R = parallel_tensor(fgs[0], fgs[1], notices)
            for note in notices:
                err.write(f"notice: {note.message}\n")
            doc = graph_document(R.graph)
            doc["notices"] = [note.message for note in notices]
            return doc, R.graph
        base = OrderedFlowGraph.of(fgs[0])
        parts = [OrderedFlowGraph.of(g) for g in fgs[1:]]
        if len(parts) != base.arity:
            raise UsageError(f"--op operad needs {base.arity} part graphs after the first, got {len(parts)}")
        R = operad_compose(base, parts)
        doc = graph_document(R.fg.graph)
        doc["edge_order"] = _pairs(R.edge_order)
        return doc, R.fg.graph
    if cmd == "subflow":
        e1 = _edge_arg(args.entry, "--entry")
        e2 = _edge_arg(args.exit, "--exit")
        FG = validate_flow_graph(G)
        sub = subflow(FG, e1, e2)
        if sub is None:
            raise FlowGraphError("not_sese", f"({e1}, {e2}) is not a SESE region")
        doc = graph_document(sub.graph)
        doc["labels"] = list(subflow_vertices(FG, e1, e2))
        return doc, sub.graph
    raise UsageError(f"unknown command {cmd}")


# --- entry points -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route usage errors through run()
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="flowmra", description="Flow-graph multiresolution analysis.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", action="append", default=[], metavar="PATH", help="graph file, '-' for stdin; repeat for compose")
    p.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    p.add_argument("--output", choices=("json", "dot"), default="json")
    p.add_argument("--root", type=int)
    p.add_argument("--iterate", action="store_true", help="coarsen until a round absorbs nothing")
    p.add_argument("--op", choices=("series", "parallel", "operad"))
    p.add_argument("--entry", metavar="U,V")
    p.add_argument("--exit", metavar="U,V")
    p.add_argument("--seed", type=int, help="use a generated flow graph instead of --input")
    return p


@dataclass(frozen=True)
class CliResult:
    code: int
    stdout: str
    stderr: str


def run(argv: Sequence[str], stdin: str | None = None) -> CliResult:
    out, err = io.StringIO(), io.StringIO()
    args = None
    try:
        args = build_parser().parse_args(list(argv))
        graphs = _load_inputs(args, stdin)
        doc, graph = _execute(args, graphs, err)
        if args.output == "dot":
            if graph is None:
                raise UsageError(f"--output dot is only available for {sorted(GRAPH_COMMANDS)}")
            out.write(to_dot(graph))
        else:
            out.write(dump(doc))
        return CliResult(0, out.getvalue(), err.getvalue())
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return CliResult(2, "", err.getvalue())
    except FlowGraphError as exc:
        err.write(f"invalid flow graph ({exc.axiom}): {exc}\n")
        if getattr(args, "command", None) == "validate":
            out.write(dump({"valid": False, "axiom": exc.axiom, "message": str(exc)}))
        return CliResult(1, out.getvalue(), err.getvalue())
    except (GraphError, ValueError, RuntimeError) as exc:
        err.write(f"error: {exc}\n")
        return CliResult(1, "", err.getvalue())


def _load_inputs(args: argparse.Namespace, stdin: str | None) -> list[LGraph]:
    if args.seed is not None:
        if args.input:
            raise UsageError("--seed and --input are mutually exclusive")
        return [generate_flow_graph(GeneratorConfig(args.seed)).graph]
    if not args.input:
        raise UsageError("--input is required")
    graphs = []
    for path in args.input:
        if path == "-":
            text = sys.stdin.read() if stdin is None else stdin
        else:
            try:
                text = Path(path).read_text()
            except OSError as exc:
                raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        graphs.append(parse_edgelist(text) if args.format == "edgelist" else parse_document(text))
    return graphs


def main(argv: Sequence[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.stdout)
    sys.stderr.write(res.stderr)
    return res.code


if __name__ == "__main__":
    raise SystemExit(main())
