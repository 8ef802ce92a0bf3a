"""Plain-text graph files.

Format: a header line ``n m`` followed by exactly m lines ``u v`` with 0-based
vertices. Blank lines and lines starting with ``#`` are skipped.
"""
from __future__ import annotations

from pathlib import Path

from .errors import BLBettiError, GraphError
from .graphs import Graph, MultiGraph


class GraphFileError(BLBettiError, ValueError):
    pass


def _ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFileError(f"line {lineno}: expected two integers, got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFileError(f"line {lineno}: expected two integers, got {line!r}") from None


def parse_graph(text: str, *, multigraph: bool = False) -> Graph | MultiGraph:
    rows = [(no, ln.strip()) for no, ln in enumerate(text.split("\n"), start=1)]
    rows = [(no, ln) for no, ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise GraphFileError("missing header line 'n m'")
    n, m = _ints(rows[0][1], rows[0][0])
    if n < 0 or m < 0:
        raise GraphFileError("n and m must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise GraphFileError(f"header announces {m} edges, found {len(body)} edge lines")
    edges = [_ints(ln, no) for no, ln in body]
    try:
        if multigraph:
            return MultiGraph(n, tuple(edges))
        return Graph.from_edges(n, edges, strict=True)
    except GraphError as exc:
        raise GraphFileError(str(exc)) from None


def read_graph(path: str | Path, *, multigraph: bool = False) -> Graph | MultiGraph:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFileError(f"cannot read {path}: {exc}") from None
    return parse_graph(text, multigraph=multigraph)


def format_graph(graph: Graph | MultiGraph, sep: str = " ") -> str:
    edges = graph.sorted_edges() if isinstance(graph, Graph) else list(graph.edges)
    lines = [f"{graph.n}{sep}{len(edges)}"] + [f"{u}{sep}{v}" for u, v in edges]
    return "\n".join(lines) + "\n"
