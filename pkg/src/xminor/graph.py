"""Immutable simple undirected graphs with integer vertex ids.

Every operation returns a new :class:`Graph`; nothing is mutated in place, so
contraction traces and certificates can keep references to historical graphs.
Iteration is always in increasing id order, which makes every "pick any"
choice in the higher layers reproducible.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping

from .errors import InvalidArgument

VertexId = int
Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple graph stored as a map from vertex id to a frozenset of neighbours."""

    __slots__ = ("_adj", "_next_id", "_hash")

    def __init__(self, adjacency: Mapping[int, Iterable[int]] | None = None, next_id: int | None = None):
        adj: dict[int, frozenset[int]] = {}
        for v, nbrs in (adjacency or {}).items():
            adj[v] = frozenset(nbrs)
        for v, nbrs in adj.items():
            if v in nbrs:
                raise InvalidArgument(f"loop at vertex {v}")
            for w in nbrs:
                if w not in adj or v not in adj[w]:
                    raise InvalidArgument(f"adjacency not symmetric on edge {v}-{w}")
        self._adj = adj
        floor = max(adj, default=-1) + 1
        self._next_id = floor if next_id is None else max(next_id, floor)
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls(adj)

    @classmethod
    def _trusted(cls, adj: dict[int, frozenset[int]], next_id: int) -> "Graph":
        g = cls.__new__(cls)
        g._adj = adj
        g._next_id = next_id
        g._hash = None
        return g

    # ------------------------------------------------------------------ queries
    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def edges(self) -> list[Edge]:
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    @property
    def next_id(self) -> int:
        return self._next_id

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise InvalidArgument(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self._adj.values()), default=0)

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self._adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj.get(u)
        return nbrs is not None and v in nbrs

    def is_complete_on(self, s: Iterable[int]) -> bool:
        s = list(s)
        return all(self.has_edge(u, v) for i, u in enumerate(s) for v in s[i + 1 :])

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    # ---------------------------------------------------------------- builders
    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Return a copy with the given edges added (existing ones are ignored)."""
        adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            if u not in adj or v not in adj:
                raise InvalidArgument(f"edge {u}-{v} has an unknown endpoint")
            adj[u].add(v)
            adj[v].add(u)
        return Graph._trusted({v: frozenset(n) for v, n in adj.items()}, self._next_id)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        for u, v in edges:
            if not self.has_edge(u, v):
                raise InvalidArgument(f"{u}-{v} is not an edge")
            adj[u].discard(v)
            adj[v].discard(u)
        return Graph._trusted({v: frozenset(n) for v, n in adj.items()}, self._next_id)

    def new_vertex(self, neighbors: Iterable[int] = ()) -> tuple["Graph", int]:
        """Add a fresh vertex (id never used before in this lineage) joined to ``neighbors``."""
        vid = self._next_id
        nbrs = frozenset(neighbors)
        for w in nbrs:
            if w not in self._adj:
                raise InvalidArgument(f"unknown vertex {w}")
        adj = dict(self._adj)
        adj[vid] = nbrs
        for w in nbrs:
            adj[w] = adj[w] | {vid}
        return Graph._trusted(adj, vid + 1), vid

    # ------------------------------------------------------------------ dunder
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((v, nbrs) for v, nbrs in self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_subset(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    unknown = s - g.vertex_set
    if unknown:
        raise InvalidArgument(f"unknown vertices {sorted(unknown)}")
    return s


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    keep = _check_subset(g, s)
    adj = {v: g.neighbors(v) & keep for v in keep}
    return Graph._trusted(adj, g.next_id)


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    drop = _check_subset(g, s)
    return induced_subgraph(g, g.vertex_set - drop)


def contract_edge(g: Graph, x: int, y: int) -> Graph:
    """Contract ``xy`` into ``x``: ``y`` disappears and its other neighbours join ``x``."""
    if not g.has_edge(x, y):
        raise InvalidArgument(f"{x}-{y} is not an edge")
    adj = dict(g._adj)
    ny = adj.pop(y)
    gained = ny - {x} - adj[x]
    adj[x] = (adj[x] - {y}) | gained
    for z in ny:
        if z == x:
            continue
        nz = adj[z] - {y}
        if z in gained:
            nz = nz | {x}
        adj[z] = nz
    return Graph._trusted(adj, g.next_id)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their least vertex id."""
    seen: set[int] = set()
    out: list[frozenset[int]] = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def shortest_path(g: Graph, source: int, targets: Iterable[int], within: Iterable[int] | None = None) -> list[int] | None:
    """Shortest path from ``source`` to the nearest vertex of ``targets``.

    Only vertices in ``within`` (default: all) may be used. Ties are broken by
    lexicographically least vertex sequence: BFS expands neighbours in id order
    and each vertex keeps the first parent that reaches it.
    """
    targets = set(targets)
    allowed = g.vertex_set if within is None else frozenset(within)
    if source not in allowed:
        raise InvalidArgument(f"source {source} not in the allowed region")
    if source in targets:
        return [source]
    parent = {source: source}
    frontier = [source]
    while frontier:
        nxt: list[int] = []
        # frontier is kept in lexicographic order of the paths that reach it
        for v in frontier:
            for w in sorted(g.neighbors(v)):
                if w in parent or w not in allowed:
                    continue
                parent[w] = v
                nxt.append(w)
        hits = [w for w in nxt if w in targets]
        if hits:
            path = [hits[0]]
            while path[-1] != source:
                path.append(parent[path[-1]])
            return path[::-1]
        frontier = nxt
    return None


def path_edges(path: list[int], closed: bool = False) -> list[Edge]:
    edges = [norm_edge(a, b) for a, b in zip(path, path[1:])]
    if closed and len(path) > 2:
        edges.append(norm_edge(path[-1], path[0]))
    return edges


def edge_subgraph(edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Graph:
    return Graph.from_edges(edges, vertices)
