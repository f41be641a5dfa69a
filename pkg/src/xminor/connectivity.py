"""Local connectivity of a root set and the separator/fragment calculus around it.

``kappa_x`` is computed pairwise: for every nonadjacent pair of roots, the
number of internally disjoint paths is a unit-vertex-capacity max flow on the
split graph (each inner vertex ``v`` becomes ``v_in -> v_out``). The value is
then capped at ``|X| - 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InvalidArgument
from .graph import Graph, components, delete_vertices, induced_subgraph


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    roots: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "roots", frozenset(self.roots))
        if not self.roots:
            raise InvalidArgument("root set must be nonempty")
        unknown = self.roots - self.graph.vertex_set
        if unknown:
            raise InvalidArgument(f"roots {sorted(unknown)} are not vertices of the graph")

    @property
    def sorted_roots(self) -> list[int]:
        return sorted(self.roots)

    def with_graph(self, g: Graph) -> "RootedGraph":
        return RootedGraph(g, self.roots)


@dataclass(frozen=True)
class Separator:
    vertices: frozenset[int]
    witnesses: tuple[int, int] | None = None

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Fragment:
    """A union of components of ``host - separator``; ``rooted`` tells whether it meets X."""

    vertices: frozenset[int]
    separator: frozenset[int]
    host: Graph
    rooted: bool = False

    def complement(self, roots: Iterable[int] = ()) -> "Fragment":
        rest = self.host.vertex_set - self.separator - self.vertices
        return Fragment(rest, self.separator, self.host, bool(rest & frozenset(roots)))


# --------------------------------------------------------------------- flows
class SplitNetwork:
    """Unit-vertex-capacity flow network of a graph, reusable across source/sink pairs.

    Vertex ``v`` becomes ``in(v) -> out(v)`` with capacity 1; each edge ``uv``
    becomes ``out(u) -> in(v)`` and ``out(v) -> in(u)`` with unbounded capacity.
    Arc ``i ^ 1`` is the reverse of arc ``i``.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.index = {v: i for i, v in enumerate(g.vertices)}
        n = len(self.index)
        big = n + 1
        self.to: list[int] = []
        self.base: list[int] = []
        self.out_arcs: list[list[int]] = [[] for _ in range(2 * n)]
        self.vertex_arc: list[int] = []
        for v, i in self.index.items():
            self.vertex_arc.append(len(self.to))
            self._arc(2 * i, 2 * i + 1, 1)
        for u, v in g.edges:
            iu, iv = self.index[u], self.index[v]
            self._arc(2 * iu + 1, 2 * iv, big)
            self._arc(2 * iv + 1, 2 * iu, big)

    def _arc(self, a: int, b: int, c: int) -> None:
        self.out_arcs[a].append(len(self.to))
        self.to.append(b)
        self.base.append(c)
        self.out_arcs[b].append(len(self.to))
        self.to.append(a)
        self.base.append(0)

    def flow(self, s: int, t: int, cap: int | None = None,
             removed: Iterable[int] = ()) -> tuple[int, frozenset[int]]:
        """Number of internally disjoint s-t paths avoiding ``removed``, and the cut nearest ``s``.

        The cut is only meaningful when the value is below ``cap``.
        """
        res = self.base[:]
        for v in removed:
            res[self.vertex_arc[self.index[v]]] = 0
        to, out_arcs = self.to, self.out_arcs
        source, sink = 2 * self.index[s] + 1, 2 * self.index[t]
        size = len(out_arcs)
        limit = cap if cap is not None else size
        flow = 0
        while flow < limit:
            via = [-1] * size
            via[source] = -2
            queue = [source]
            head = 0
            found = False
            while head < len(queue) and not found:
                a = queue[head]
                head += 1
                for arc in out_arcs[a]:
                    if res[arc] > 0:
                        b = to[arc]
                        if via[b] == -1:
                            via[b] = arc
                            if b == sink:
                                found = True
                                break
                            queue.append(b)
            if not found:
                verts = self.graph.vertices
                cut = frozenset(
                    verts[node // 2] for node in queue
                    if node % 2 == 0 and via[node + 1] == -1 and node != sink
                )
                return flow, cut
            b = sink
            while b != source:
                arc = via[b]
                res[arc] -= 1
                res[arc ^ 1] += 1
                b = to[arc ^ 1]
            flow += 1
        return flow, frozenset()


def _max_flow(g: Graph, s: int, t: int, cap: int | None = None,
              removed: frozenset[int] = frozenset()) -> tuple[int, frozenset[int]]:
    return SplitNetwork(g).flow(s, t, cap, removed)


def local_connectivity(g: Graph, x: int, y: int, cap: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint x-y paths (x, y nonadjacent)."""
    if x not in g or y not in g:
        raise InvalidArgument(f"unknown endpoint in ({x}, {y})")
    if x == y:
        raise InvalidArgument("endpoints must differ")
    if g.has_edge(x, y):
        raise InvalidArgument(f"{x} and {y} are adjacent")
    return _max_flow(g, x, y, cap)[0]


def min_vertex_cut(g: Graph, x: int, y: int, removed: Iterable[int] = ()) -> frozenset[int]:
    """A minimum x-y vertex cut, the one closest to ``x``."""
    if g.has_edge(x, y):
        raise InvalidArgument(f"{x} and {y} are adjacent")
    return _max_flow(g, x, y, removed=frozenset(removed))[1]


def _nonadjacent_root_pairs(rg: RootedGraph) -> list[tuple[int, int]]:
    g = rg.graph
    return [(a, b) for a, b in combinations(rg.sorted_roots, 2) if not g.has_edge(a, b)]


def kappa_x(rg: RootedGraph, cap: int | None = None) -> int:
    """Local connectivity of the root set.

    With ``cap`` set, the answer is exact below ``cap`` and equals ``cap``
    otherwise; flows stop as soon as they reach it.
    """
    best = len(rg.roots) - 1
    if cap is not None:
        best = min(best, cap)
    net: SplitNetwork | None = None
    for a, b in _nonadjacent_root_pairs(rg):
        if best == 0:
            break
        net = net or SplitNetwork(rg.graph)
        best = min(best, net.flow(a, b, best)[0])
    return best


def kappa_at_least(rg: RootedGraph, k: int, hint: list[tuple[int, int]] | None = None) -> bool:
    """Whether kappa_x >= k, stopping at the first root pair that falls short.

    ``hint`` is a most-recently-failed list of pairs; the failing pair is moved
    to its front so that repeated checks on similar graphs fail fast.
    """
    if len(rg.roots) - 1 < k:
        return False
    pairs = _nonadjacent_root_pairs(rg)
    if hint:
        known = set(pairs)
        pairs = [p for p in hint if p in known] + [p for p in pairs if p not in set(hint)]
    net: SplitNetwork | None = None
    for a, b in pairs:
        net = net or SplitNetwork(rg.graph)
        if net.flow(a, b, k)[0] < k:
            if hint is not None:
                if (a, b) in hint:
                    hint.remove((a, b))
                hint.insert(0, (a, b))
            return False
    return True


def min_x_separator(rg: RootedGraph) -> Separator | None:
    """A minimum X-separator with the root pair it separates, or None if G[X] is complete."""
    best: Separator | None = None
    net: SplitNetwork | None = None
    for a, b in _nonadjacent_root_pairs(rg):
        net = net or SplitNetwork(rg.graph)
        bound = None if best is None else len(best)
        value, cut = net.flow(a, b, bound)
        if best is None or value < len(best):
            best = Separator(cut, (a, b))
    return best


def is_x_separator(rg: RootedGraph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    if not s < rg.graph.vertex_set:
        return False
    rest = delete_vertices(rg.graph, s)
    return sum(1 for comp in components(rest) if comp & rg.roots) >= 2


def x_fragments(rg: RootedGraph, s: Separator) -> list[Fragment]:
    """Per-component fragments of ``G - S``, each flagged by whether it contains a root."""
    if not is_x_separator(rg, s.vertices):
        raise InvalidArgument("not an X-separator of this rooted graph")
    rest = delete_vertices(rg.graph, s.vertices)
    return [Fragment(comp, s.vertices, rg.graph, bool(comp & rg.roots)) for comp in components(rest)]


def clique_completion_reduce(rg: RootedGraph, s: Separator | Iterable[int], f: Fragment | Iterable[int]) -> RootedGraph:
    """Drop an X-free fragment behind ``S`` and make ``S`` a clique.

    ``kappa_x`` of the result is never smaller than that of ``rg``.
    """
    sep = s.vertices if isinstance(s, Separator) else frozenset(s)
    frag = f.vertices if isinstance(f, Fragment) else frozenset(f)
    g = rg.graph
    if frag & rg.roots:
        raise InvalidArgument("fragment is not X-free")
    if frag & sep:
        raise InvalidArgument("fragment meets the separator")
    if not frag:
        raise InvalidArgument("fragment is empty")
    # F must be a union of components of G - S, and not all of them
    rest = delete_vertices(g, sep)
    for comp in components(rest):
        if comp & frag and not comp <= frag:
            raise InvalidArgument("fragment is not a union of components of G - S")
    if frag == rest.vertex_set:
        raise InvalidArgument("fragment must leave at least one component")
    keep = g.vertex_set - frag
    h = induced_subgraph(g, keep)
    h = h.add_edges(combinations(sorted(sep), 2))
    return RootedGraph(h, rg.roots)


def cross_separator(f: Fragment, fp: Fragment) -> frozenset[int]:
    """T(F, F') = (F & S') | (S' & S) | (S & F')."""
    if f.host != fp.host:
        raise InvalidArgument("fragments live in different graphs")
    return (f.vertices & fp.separator) | (fp.separator & f.separator) | (f.separator & fp.vertices)


# ------------------------------------------------------- global connectivity
def min_separator(g: Graph, cap: int | None = None) -> frozenset[int] | None:
    """A minimum vertex separator of ``g`` (Even's scheme), or None if ``g`` is complete.

    With ``cap``, the search only looks for separators smaller than ``cap`` and
    returns None when there is none.
    """
    order = g.vertices
    n = len(order)
    best = n - 1 if cap is None else min(n - 1, cap)
    best_cut: frozenset[int] | None = None
    net = SplitNetwork(g)
    for i, v in enumerate(order):
        if i > best:
            break
        for w in order:
            if w == v or g.has_edge(v, w):
                continue
            value, cut = net.flow(v, w, best)
            if value < best:
                best, best_cut = value, cut
                if best == 0:
                    return best_cut
    return best_cut


def vertex_connectivity(g: Graph, cap: int | None = None) -> int:
    """kappa(G), using the convention kappa(K_n) = n - 1; capped if ``cap`` is given."""
    cut = min_separator(g, cap)
    if cut is not None:
        return len(cut)
    full = max(g.n - 1, 0)
    return full if cap is None else min(full, cap)


def is_k_connected(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    if g.n < k + 1 or g.min_degree() < k:
        return False
    # a separator of size < k misses one of any k vertices
    order = g.vertices
    net = SplitNetwork(g)
    for v in order[:k]:
        for w in order:
            if w != v and not g.has_edge(v, w) and net.flow(v, w, k)[0] < k:
                return False
    return True
