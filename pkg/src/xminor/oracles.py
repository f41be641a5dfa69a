"""Exhaustive ground truth for small graphs.

Every search here is exponential and guarded: inputs over the size limit raise
``ResourceLimit`` instead of running unbounded. These functions exist to check
the polynomial machinery, never to replace it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .connectivity import RootedGraph
from .errors import InvalidArgument, ResourceLimit
from .graph import Edge, Graph, components, delete_vertices, induced_subgraph, is_connected, norm_edge, path_edges
from .structures import DegreeBoundedTree, is_subgraph, is_two_connected

KAPPA_GUARD = 14
SEARCH_GUARD = 14
TUTTE_GUARD = 12
MINOR_GUARD = 12
PATTERN_GUARD = 7


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ResourceLimit(f"{what}: {n} vertices exceeds the limit of {limit}")


# ------------------------------------------------------------------ kappa
def kappa_x_brute(rg: RootedGraph) -> int:
    """min(|X| - 1, smallest X-separator), trying vertex subsets in increasing size."""
    g = rg.graph
    _guard(g.n, KAPPA_GUARD, "kappa_x_brute")
    cap = len(rg.roots) - 1
    for size in range(cap):
        for s in combinations(g.vertices, size):
            rest = delete_vertices(g, s)
            if sum(1 for comp in components(rest) if comp & rg.roots) >= 2:
                return size
    return max(cap, 0)


def is_k_connected(g: Graph, k: int) -> bool:
    """|V| >= k + 1 and every separator has at least k vertices (by enumeration)."""
    if k <= 0:
        return True
    if g.n < k + 1:
        return False
    return kappa_x_brute(RootedGraph(g, g.vertex_set)) >= k


# --------------------------------------------------------------- bridges
@dataclass(frozen=True)
class Bridge:
    inner: frozenset[int]
    attachments: frozenset[int]

    def edges(self, g: Graph) -> set[Edge]:
        return {norm_edge(v, w) for v in self.inner for w in g.neighbors(v)}


@dataclass
class BridgeDecomposition:
    host: Graph
    anchor: Graph
    bridges: list[Bridge]
    trivial_bridges: list[Edge]

    def bridge_of_edge(self, e: Edge) -> Bridge | Edge | None:
        """The bridge containing ``e``, or None for edges of the anchor itself."""
        e = norm_edge(*e)
        for b in self.bridges:
            if e[0] in b.inner or e[1] in b.inner:
                return b
        return e if e in self.trivial_bridges else None


def bridges(g: Graph, h: Graph) -> BridgeDecomposition:
    if not is_subgraph(h, g):
        raise InvalidArgument("anchor is not a subgraph of the host")
    rest = delete_vertices(g, h.vertex_set)
    found = []
    for comp in components(rest):
        att = frozenset(w for v in comp for w in g.neighbors(v) if w not in comp)
        found.append(Bridge(comp, att))
    trivial = [e for e in g.edges if e[0] in h and e[1] in h and not h.has_edge(*e)]
    return BridgeDecomposition(g, h, found, trivial)


def _path_graph(g: Graph, p: list[int]) -> Graph:
    if len(p) < 2 or len(set(p)) != len(p):
        raise InvalidArgument("a path needs at least two distinct vertices")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise InvalidArgument(f"{a}-{b} is not an edge")
    return Graph.from_edges(path_edges(p), vertices=p)


def is_tutte_path(g: Graph, p: list[int], anchor: Graph | None = None) -> bool:
    """Every bridge of P has at most 3 attachments; bridges meeting the anchor have exactly 2."""
    dec = bridges(g, _path_graph(g, p))
    anchor_edges = set(anchor.edges) if anchor is not None else set()
    for b in dec.bridges:
        if len(b.attachments) > 3:
            return False
        if anchor_edges and b.edges(g) & anchor_edges and len(b.attachments) != 2:
            return False
    # a trivial bridge has two attachments, so it can never violate either rule
    return True


def _simple_paths(g: Graph, y: int, z: int, through: Edge | None) -> Iterator[list[int]]:
    through = norm_edge(*through) if through else None
    path = [y]
    on_path = {y}

    def extend() -> Iterator[list[int]]:
        v = path[-1]
        if v == z:
            if through is None or through in set(path_edges(path)):
                yield list(path)
            return
        for w in sorted(g.neighbors(v)):
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            yield from extend()
            path.pop()
            on_path.discard(w)

    yield from extend()


def tutte_paths(g: Graph, y: int, z: int, e: Edge | None = None,
                anchor: Graph | None = None) -> Iterator[list[int]]:
    """All y-z Tutte paths through ``e`` (anchor-constrained if given), in DFS order."""
    _guard(g.n, TUTTE_GUARD, "tutte_paths")
    for p in _simple_paths(g, y, z, e):
        if is_tutte_path(g, p, anchor):
            yield p


def find_tutte_path_brute(g: Graph, y: int, z: int, e: Edge, anchor: Graph | None = None) -> list[int] | None:
    _guard(g.n, TUTTE_GUARD, "find_tutte_path_brute")
    if y == z or y not in g or z not in g:
        raise InvalidArgument("endpoints must be two distinct vertices")
    if not g.has_edge(*e):
        raise InvalidArgument(f"{e} is not an edge")
    return next(tutte_paths(g, y, z, e, anchor), None)


# ---------------------------------------------------------- spanning trees
def spanning_tree_with_caps(g: Graph, caps: dict[int, int]) -> list[Edge] | None:
    """A spanning tree of ``g`` with deg(v) <= caps[v], by include/exclude backtracking."""
    verts = g.vertices
    if len(verts) <= 1:
        return []
    if not is_connected(g) or any(caps[v] < 1 for v in verts):
        return None
    start = verts[0]
    in_tree = {start}
    deg = {v: 0 for v in verts}
    chosen: list[Edge] = []
    excluded: set[Edge] = set()

    def reachable() -> bool:
        # every outside vertex must be reachable from a tree vertex with spare degree
        seen = set()
        stack = [v for v in in_tree if deg[v] < caps[v]]
        while stack:
            v = stack.pop()
            if v not in in_tree and caps[v] < 2:
                continue
            for w in g.neighbors(v):
                if w in in_tree or w in seen or norm_edge(v, w) in excluded:
                    continue
                seen.add(w)
                stack.append(w)
        return len(seen) + len(in_tree) == len(verts)

    def search() -> bool:
        if len(in_tree) == len(verts):
            return True
        if not reachable():
            return False
        # branch on the outside vertex with the fewest available tree edges
        best: tuple[int, int, int] | None = None
        for b in verts:
            if b in in_tree:
                continue
            opts = [a for a in sorted(g.neighbors(b))
                    if a in in_tree and deg[a] < caps[a] and norm_edge(a, b) not in excluded]
            if opts and (best is None or len(opts) < best[0]):
                best = (len(opts), opts[0], b)
        if best is None:
            return False
        _, a, b = best
        e = norm_edge(a, b)
        in_tree.add(b)
        deg[a] += 1
        deg[b] += 1
        chosen.append(e)
        if search():
            return True
        chosen.pop()
        deg[a] -= 1
        deg[b] -= 1
        in_tree.discard(b)
        excluded.add(e)
        if search():
            return True
        excluded.discard(e)
        return False

    return sorted(chosen) if search() else None


def exists_x_spanning_tree(rg: RootedGraph, t: int,
                           leaf_roots: Iterable[int] | None = None) -> DegreeBoundedTree | None:
    """A tree through X with max degree <= t (designated roots as leaves), or None."""
    g = rg.graph
    _guard(g.n, SEARCH_GUARD, "exists_x_spanning_tree")
    if t < 1:
        raise InvalidArgument("degree bound must be positive")
    leaves = frozenset(leaf_roots or ())
    if not leaves <= rg.roots:
        raise InvalidArgument("leaf constraints must name roots")
    others = [v for v in g.vertices if v not in rg.roots]
    for size in range(len(others) + 1):
        for extra in combinations(others, size):
            keep = rg.roots | frozenset(extra)
            sub = induced_subgraph(g, keep)
            if not is_connected(sub):
                continue
            if len(keep) == 1:
                return DegreeBoundedTree(sub, t)
            caps = {v: (1 if v in leaves else t) for v in keep}
            edges = spanning_tree_with_caps(sub, caps)
            if edges is not None:
                return DegreeBoundedTree(Graph.from_edges(edges, vertices=keep), t)
    return None


# ------------------------------------------------------- paths and cycles
def _reaches_all(g: Graph, start: int, blocked: set[int], needed: Iterable[int]) -> bool:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return all(x in seen for x in needed)


def exists_x_spanning_path(rg: RootedGraph, x1: int, x2: int,
                           forced: Iterable[Edge] = ()) -> list[int] | None:
    """A path from x1 to x2 through every root containing the forced edges, or None."""
    g, roots = rg.graph, rg.roots
    _guard(g.n, SEARCH_GUARD, "exists_x_spanning_path")
    forced = [norm_edge(*e) for e in forced]
    if x1 == x2 or x1 not in roots or x2 not in roots:
        raise InvalidArgument("x1 and x2 must be two distinct roots")
    if len(forced) > 1:
        raise InvalidArgument("at most one forced edge")
    for e in forced:
        if not (g.has_edge(*e) and e[0] in roots and e[1] in roots):
            raise InvalidArgument(f"forced edge {e} is not an edge of G[X]")
        if e == norm_edge(x1, x2):
            raise InvalidArgument("the forced edge may not be x1x2")
    partner = {}
    for a, b in forced:
        partner[a] = b
        partner[b] = a
    path = [x1]
    on_path = {x1}

    def extend() -> bool:
        v = path[-1]
        if v == x2:
            used = set(path_edges(path))
            return roots <= on_path and all(e in used for e in forced)
        pred = path[-2] if len(path) > 1 else None
        must = None
        if v in partner and partner[v] != pred:
            if partner[v] in on_path:
                return False
            must = partner[v]
        missing = [x for x in roots if x not in on_path]
        if not _reaches_all(g, v, on_path - {v}, missing):
            return False
        for w in sorted(g.neighbors(v)):
            if w in on_path or (must is not None and w != must):
                continue
            if w == x2 and len(missing) > 1:
                continue
            path.append(w)
            on_path.add(w)
            if extend():
                return True
            path.pop()
            on_path.discard(w)
        return False

    return list(path) if extend() else None


def exists_x_spanning_cycle(rg: RootedGraph, avoid: Iterable[int] = ()) -> list[int] | None:
    """A cycle of G - avoid through every root outside ``avoid``, or None."""
    g = rg.graph
    _guard(g.n, SEARCH_GUARD, "exists_x_spanning_cycle")
    avoid = frozenset(avoid)
    if len(avoid) > 2:
        raise InvalidArgument("at most two avoided vertices")
    if not avoid <= g.vertex_set:
        raise InvalidArgument("avoided vertices must belong to the graph")
    h = delete_vertices(g, avoid)
    need = rg.roots - avoid
    starts = [min(need)] if need else h.vertices
    for s in starts:
        cyc = _cycle_through(h, s, need)
        if cyc is not None:
            return cyc
    return None


def _cycle_through(h: Graph, s: int, need: frozenset[int]) -> list[int] | None:
    path = [s]
    on_path = {s}

    def extend() -> bool:
        v = path[-1]
        missing = [x for x in need if x not in on_path]
        if len(path) >= 3 and not missing and h.has_edge(v, s):
            return True
        # the remaining roots and the way back to s must stay reachable
        if not _reaches_all(h, v, on_path - {v, s}, missing + [s]):
            return False
        for w in sorted(h.neighbors(v)):
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            if extend():
                return True
            path.pop()
            on_path.discard(w)
        return False

    return list(path) if extend() else None


def two_connected_spanning_subgraph(rg: RootedGraph, max_degree: int) -> Graph | None:
    """A 2-connected subgraph through X with max degree <= ``max_degree``, or None.

    A cycle through X is tried first; otherwise edges are removed greedily with
    backtracking from each 2-connected induced subgraph containing X.
    """
    g = rg.graph
    _guard(g.n, SEARCH_GUARD, "two_connected_spanning_subgraph")
    if max_degree >= 2:
        cyc = exists_x_spanning_cycle(rg) if len(rg.roots) >= 1 else None
        if cyc is not None:
            return Graph.from_edges(path_edges(cyc, closed=True), vertices=cyc)
    others = [v for v in g.vertices if v not in rg.roots]
    for size in range(len(others) + 1):
        for extra in combinations(others, size):
            sub = induced_subgraph(g, rg.roots | frozenset(extra))
            if not is_two_connected(sub):
                continue
            found = _thin(sub, max_degree)
            if found is not None:
                return found
    return None


def _thin(h: Graph, max_degree: int) -> Graph | None:
    if h.max_degree() <= max_degree:
        return h
    v = max(h.vertices, key=lambda u: (h.degree(u), -u))
    for w in sorted(h.neighbors(v)):
        smaller = h.remove_edges([(v, w)])
        if is_two_connected(smaller):
            found = _thin(smaller, max_degree)
            if found is not None:
                return found
    return None


# ------------------------------------------------------------------ minors
def _twin_classes(p: Graph) -> dict[int, int]:
    cls: dict[int, int] = {}
    for v in p.vertices:
        twin = next((u for u in p.vertices
                     if u < v and p.neighbors(u) - {v} == p.neighbors(v) - {u}), None)
        cls[v] = v if twin is None else cls[twin]
    return cls


def has_minor_brute(g: Graph, pattern: Graph) -> bool:
    """Whether ``pattern`` is a minor of ``g``, by search over bag partitions.

    For a connected pattern each component of ``g`` is tried on its own, and
    every vertex of it is assigned to some bag: leftover vertices can always be
    merged into an adjacent bag without breaking the model.
    """
    _guard(g.n, MINOR_GUARD, "has_minor_brute")
    _guard(pattern.n, PATTERN_GUARD, "has_minor_brute pattern")
    if pattern.n == 0:
        return True
    if pattern.n > g.n or pattern.m > g.m:
        return False
    relabel = {v: i for i, v in enumerate(pattern.vertices)}
    p = Graph.from_edges([(relabel[a], relabel[b]) for a, b in pattern.edges], vertices=range(pattern.n))
    if is_connected(p):
        return any(_model_search(induced_subgraph(g, comp), p, allow_delete=False)
                   for comp in components(g) if len(comp) >= p.n)
    return _model_search(g, p, allow_delete=True)


def _model_search(g: Graph, p: Graph, allow_delete: bool) -> bool:
    # vertices are handled in BFS order and stored as bit positions in that order
    k = p.n
    order = _bfs_order(g)
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    nbr = [sum(1 << pos[w] for w in g.neighbors(v)) for v in order]
    full = (1 << n) - 1
    cls = _twin_classes(p)
    earlier_twins = [[u for u in range(lab) if cls[u] == cls[lab]] for lab in range(k)]
    p_nbrs = [sorted(p.neighbors(i)) for i in range(k)]
    bags = [0] * k

    def hood(mask: int) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= nbr[low.bit_length() - 1]
            mask ^= low
        return out

    def bag_ok(lab: int, done: int) -> bool:
        bag = bags[lab]
        if not bag:
            return True
        free = full ^ ((1 << done) - 1)
        region = bag | free
        reach = bag & -bag
        while True:
            grown = (reach | hood(reach)) & region
            if grown == reach:
                break
            reach = grown
        if bag & ~reach:
            return False
        around = hood(bag)
        # a closed bag has no unassigned neighbours left, so its adjacencies are final
        if not around & free:
            return all(around & bags[other] for other in p_nbrs[lab])
        return True

    def assign(i: int) -> bool:
        if i == n:
            return all(bags) and all(bag_ok(lab, n) for lab in range(k))
        if sum(1 for b in bags if not b) > n - i:
            return False
        bit = 1 << i
        for lab in range(k):
            # twins are interchangeable: open them in index order
            if not bags[lab] and any(not bags[u] for u in earlier_twins[lab]):
                continue
            bags[lab] |= bit
            if all(bag_ok(b, i + 1) for b in range(k)) and assign(i + 1):
                return True
            bags[lab] ^= bit
        if allow_delete and all(bag_ok(b, i + 1) for b in range(k)) and assign(i + 1):
            return True
        return False

    return assign(0)


def _bfs_order(g: Graph) -> list[int]:
    order: list[int] = []
    seen: set[int] = set()
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for v in queue:
            order.append(v)
            for w in sorted(g.neighbors(v)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order
