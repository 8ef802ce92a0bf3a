"""Simple graphs and multigraphs on vertices 0..n-1.

Vertices are 0-indexed. Degree vectors are returned 0-indexed by degree, which
coincides with the (d_0, ..., d_{n-1}) convention used by the formulas.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int, n: int) -> Edge:
    u, v = int(u), int(v)
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph. ``edges`` is stored as a frozenset of (min, max) pairs."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        object.__setattr__(self, "edges", frozenset(_norm_edge(u, v, self.n) for u, v in self.edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], *, strict: bool = True) -> "Graph":
        """Build a graph; with ``strict`` duplicate edges are an error instead of being merged."""
        normed = [_norm_edge(u, v, n) for u, v in edges]
        if strict and len(set(normed)) != len(normed):
            dup = next(e for i, e in enumerate(normed) if e in normed[:i])
            raise GraphError(f"duplicate edge {dup}")
        return cls(n, frozenset(normed))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmask per vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex map i -> perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph without loops. Edge order is kept; it fixes the labels of BL right vertices."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        object.__setattr__(self, "edges", tuple(_norm_edge(u, v, self.n) for u, v in self.edges))

    @classmethod
    def from_graph(cls, graph: Graph) -> "MultiGraph":
        return cls(graph.n, tuple(graph.sorted_edges()))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def to_graph(self) -> Graph:
        if not self.is_simple():
            raise GraphError("multigraph has parallel edges")
        return Graph(self.n, frozenset(self.edges))

    def canonical_key(self) -> tuple[int, tuple[Edge, ...]]:
        """Labelled identity ignoring edge order (not an isomorphism invariant)."""
        return self.n, tuple(sorted(self.edges))


def degree_vector(graph: Graph | MultiGraph) -> tuple[int, ...]:
    """Entry i counts vertices of degree exactly i; the length is exactly n."""
    counts = [0] * graph.n
    for deg in graph.degrees():
        if deg >= graph.n:
            raise GraphError(f"degree {deg} does not fit a degree vector of length {graph.n}")
        counts[deg] += 1
    return tuple(counts)


def complement(graph: Graph) -> Graph:
    return Graph(graph.n, frozenset(e for e in combinations(range(graph.n), 2) if e not in graph.edges))


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled 0..k-1 in increasing vertex order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < graph.n:
            raise GraphError(f"vertex {v} outside [0, {graph.n})")
    index = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), frozenset(
        (index[u], index[v]) for u, v in graph.edges if u in index and v in index))


def connected_components(graph: Graph) -> int:
    """Number of connected components (0 for the graph with no vertices)."""
    adj = graph.adjacency
    unseen = (1 << graph.n) - 1
    count = 0
    while unseen:
        frontier = unseen & -unseen
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~comp
        unseen &= ~comp
        count += 1
    return count


def max_cardinality_search(graph: Graph) -> list[int]:
    """Vertex visit order of maximum cardinality search (ties broken by smallest label)."""
    adj = graph.adjacency
    weight = [0] * graph.n
    visited = [False] * graph.n
    order = []
    for _ in range(graph.n):
        best = max((v for v in range(graph.n) if not visited[v]), key=lambda v: (weight[v], -v))
        visited[best] = True
        order.append(best)
        nbrs = adj[best]
        while nbrs:
            low = nbrs & -nbrs
            w = low.bit_length() - 1
            if not visited[w]:
                weight[w] += 1
            nbrs ^= low
    return order


def perfect_elimination_ordering(graph: Graph) -> list[int] | None:
    """A perfect elimination ordering, or None if the graph is not chordal.

    The reverse MCS order is checked directly: every vertex's neighbours that
    come later in the elimination order must form a clique.
    """
    visit = max_cardinality_search(graph)
    adj = graph.adjacency
    earlier = 0
    for v in visit:
        later_nbrs = adj[v] & earlier
        rest = later_nbrs
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            if (later_nbrs & ~low) & ~adj[u]:
                return None
            rest ^= low
        earlier |= 1 << v
    return visit[::-1]


def is_chordal(graph: Graph) -> bool:
    return perfect_elimination_ordering(graph) is not None


# --- small named graphs used by tests, docs and the CLI ---------------------

def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges: set[Edge] = set()
    offset = 0
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def all_graphs(n: int) -> Iterable[Graph]:
    """Every labelled simple graph on n vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
