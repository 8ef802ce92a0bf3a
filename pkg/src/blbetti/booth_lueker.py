"""Booth-Lueker graphs of graphs and multigraphs, and the edge-move rewrite.

BL(G) has the n original vertices 0..n-1 on the left, made into a clique, and
one right vertex n+k per edge k of G (in input edge order) joined to the two
endpoints of that edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GraphError
from .graphs import Edge, Graph, MultiGraph, complement


@dataclass(frozen=True)
class BLGraph:
    underlying: Graph
    left_size: int
    right_size: int
    provenance: tuple[Edge, ...]  # provenance[k] is the source edge of right vertex left_size + k

    def right_vertex(self, k: int) -> int:
        return self.left_size + k

    def check(self) -> None:
        """Raise GraphError unless the split structure holds."""
        g, n = self.underlying, self.left_size
        if g.n != n + self.right_size or len(self.provenance) != self.right_size:
            raise GraphError("inconsistent BL vertex counts")
        adj = g.adjacency
        left_mask = (1 << n) - 1
        for u in range(n):
            if adj[u] & left_mask != left_mask & ~(1 << u):
                raise GraphError(f"left vertex {u} is not joined to the whole left clique")
        for k, (a, b) in enumerate(self.provenance):
            if adj[n + k] != (1 << a) | (1 << b):
                raise GraphError(f"right vertex {n + k} is not attached exactly to {a} and {b}")


def _as_multigraph(graph: Graph | MultiGraph) -> MultiGraph:
    return MultiGraph.from_graph(graph) if isinstance(graph, Graph) else graph


def bl(graph: Graph | MultiGraph) -> BLGraph:
    """Booth-Lueker graph. Simple graphs are read in sorted edge order."""
    mg = _as_multigraph(graph)
    n = mg.n
    edges = set(combinations(range(n), 2))
    for k, (u, v) in enumerate(mg.edges):
        edges.add((u, n + k))
        edges.add((v, n + k))
    return BLGraph(Graph(n + mg.m, frozenset(edges)), n, mg.m, mg.edges)


def bl_complement(graph: Graph | MultiGraph) -> Graph:
    """Complement of BL(G), built directly.

    Left vertices become independent, right vertices form a clique, and the right
    vertex of edge uv is joined to the n-2 left vertices other than u and v.
    """
    mg = _as_multigraph(graph)
    n, m = mg.n, mg.m
    edges = {(n + a, n + b) for a, b in combinations(range(m), 2)}
    for k, (u, v) in enumerate(mg.edges):
        edges.update((w, n + k) for w in range(n) if w != u and w != v)
    return Graph(n + m, frozenset(edges))


def pineapple(n: int, m: int) -> MultiGraph:
    """Multigraph on n vertices whose m edges all join vertices 0 and 1."""
    if n < 2 and m > 0:
        raise GraphError("the pineapple needs two vertices to carry its edges")
    if n < 0 or m < 0:
        raise GraphError("n and m must be non-negative")
    return MultiGraph(n, ((0, 1),) * m)


def move_edge(graph: MultiGraph, u: int, v: int, w: int) -> MultiGraph:
    """Replace one copy of edge uv by an edge uw (u stays fixed)."""
    if len({u, v, w}) != 3:
        raise GraphError("u, v, w must be distinct")
    if not all(0 <= x < graph.n for x in (u, v, w)):
        raise GraphError("vertex out of range")
    target = (min(u, v), max(u, v))
    try:
        k = graph.edges.index(target)
    except ValueError:
        raise GraphError(f"no edge {u}{v} to move") from None
    edges = list(graph.edges)
    edges[k] = (min(u, w), max(u, w))
    return MultiGraph(graph.n, tuple(edges))


def valid_moves(graph: MultiGraph) -> list[tuple[int, int, int]]:
    """Every (u, v, w) accepted by :func:`move_edge`, without repeats."""
    moves = []
    for a, b in sorted(set(graph.edges)):
        for u, v in ((a, b), (b, a)):
            moves.extend((u, v, w) for w in range(graph.n) if w != u and w != v)
    return moves


def toward_pineapple(graph: MultiGraph) -> list[MultiGraph]:
    """A chain of edge moves from ``graph`` to the pineapple (all edges on 0-1).

    Each edge not touching 0 is first swung to 0, then its far end to 1.
    """
    if graph.n < 2:
        return [graph]
    chain = [graph]
    current = graph
    while True:
        bad = next((e for e in current.edges if e != (0, 1)), None)
        if bad is None:
            return chain
        a, b = bad
        if a == 0:
            current = move_edge(current, 0, b, 1)
        elif b == 0:
            current = move_edge(current, 0, a, 1)
        elif a == 1 or b == 1:
            other = b if a == 1 else a
            current = move_edge(current, 1, other, 0)
        else:
            # neither end is 0 or 1: keep a, move b to 0
            current = move_edge(current, a, b, 0)
        chain.append(current)


def complement_matches(graph: Graph | MultiGraph) -> bool:
    """bl_complement agrees with complementing bl."""
    return bl_complement(graph) == complement(bl(graph).underlying)
